// Python bindings for the chip-firing toolkit. Configurations cross the
// boundary as plain dicts {site: count}; posets are returned as small
// structs of labels and cover pairs.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chipfire/builder.hpp"
#include "chipfire/firing.hpp"
#include "chipfire/io.hpp"
#include "chipfire/linelab.hpp"
#include "chipfire/poset.hpp"
#include "chipfire/system.hpp"

namespace py = pybind11;
using namespace chipfire;

namespace {

ChipConfig to_config(const std::map<Site, Count>& entries) {
    return ChipConfig(SparseMap(entries.begin(), entries.end()));
}

std::map<Site, Count> from_config(const ChipConfig& c) {
    return {c.entries().begin(), c.entries().end()};
}

std::map<Site, Count> from_mv(const MoveVector& mv) {
    return {mv.counts().begin(), mv.counts().end()};
}

Policy to_policy(const std::string& name) {
    if (name == "lowest") return Policy::LowestFirst;
    if (name == "highest") return Policy::HighestFirst;
    if (name == "random") return Policy::SeededRandom;
    throw py::value_error("policy must be 'lowest', 'highest' or 'random'");
}

struct PyPoset {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;  // (upper, lower) indices
    bool lattice = false;
    bool distributive = false;
    bool uld = false;
};

PyPoset summarize(const FinitePoset& p) {
    PyPoset out;
    out.labels = p.labels();
    out.covers = p.covers();
    auto lat = p.is_lattice();
    out.lattice = lat.ok;
    if (lat.ok) {
        out.distributive = p.is_distributive().ok;
        out.uld = p.is_uld().ok;
    }
    return out;
}

FiringSystem make_system(const py::object& graph) {
    if (graph.is_none()) return FiringSystem::line();
    return py::cast<FiringSystem>(graph);
}

}  // namespace

PYBIND11_MODULE(_chipfire, m) {
    m.doc() = "chip-firing games, configuration posets and move posets";

    // Translators run most-recent first, so the subclass must be
    // registered after the base to take precedence.
    py::register_exception<Error>(m, "ChipFireError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<FiringSystem>(m, "FiringSystem")
        .def_static("line", &FiringSystem::line)
        .def_static(
            "multigraph",
            [](int vertex_count, const std::vector<std::tuple<int, int, Count>>& edges,
               const std::vector<int>& sinks) {
                return FiringSystem::multigraph(vertex_count, edges,
                                                {sinks.begin(), sinks.end()});
            },
            py::arg("vertex_count"), py::arg("edges"), py::arg("sinks") = std::vector<int>{})
        .def_property_readonly("is_line", &FiringSystem::is_line)
        .def_property_readonly("vertex_count", &FiringSystem::vertex_count)
        .def("degree", &FiringSystem::degree)
        .def("is_sink", &FiringSystem::is_sink);

    py::class_<PyPoset>(m, "Poset")
        .def_readonly("labels", &PyPoset::labels)
        .def_readonly("covers", &PyPoset::covers)
        .def_readonly("lattice", &PyPoset::lattice)
        .def_readonly("distributive", &PyPoset::distributive)
        .def_readonly("uld", &PyPoset::uld)
        .def("__len__", [](const PyPoset& p) { return p.labels.size(); });

    m.def(
        "stabilize",
        [](const std::map<Site, Count>& config, const py::object& graph,
           const std::string& policy, std::uint64_t seed, std::uint64_t step_cap) {
            auto [final_cfg, odometer] = stabilize(make_system(graph), to_config(config),
                                                   to_policy(policy), seed, step_cap);
            return py::make_tuple(from_config(final_cfg), from_mv(odometer));
        },
        py::arg("config"), py::arg("graph") = py::none(), py::arg("policy") = "lowest",
        py::arg("seed") = 0, py::arg("step_cap") = kDefaultStepCap,
        "Fire until stable; returns (final_config, odometer).");

    m.def(
        "fire",
        [](const std::map<Site, Count>& config, Site site, const py::object& graph) {
            return from_config(fire(make_system(graph), to_config(config), site));
        },
        py::arg("config"), py::arg("site"), py::arg("graph") = py::none());

    m.def(
        "replay",
        [](const std::map<Site, Count>& config, const std::vector<Site>& sites,
           const py::object& graph) {
            return from_config(replay(make_system(graph), to_config(config), sites));
        },
        py::arg("config"), py::arg("sites"), py::arg("graph") = py::none());

    m.def(
        "available_sites",
        [](const std::map<Site, Count>& config, const py::object& graph) {
            return available_sites(make_system(graph), to_config(config));
        },
        py::arg("config"), py::arg("graph") = py::none());

    m.def(
        "config_poset",
        [](const std::map<Site, Count>& config, const py::object& graph,
           std::uint64_t state_cap) {
            return summarize(
                build_config_poset(make_system(graph), to_config(config), state_cap).poset);
        },
        py::arg("config"), py::arg("graph") = py::none(),
        py::arg("state_cap") = kDefaultStateCap,
        "Reachable configurations ordered by reachability, root first.");

    m.def(
        "move_poset",
        [](const std::map<Site, Count>& config, const py::object& graph,
           std::uint64_t state_cap) {
            MovePoset mp =
                build_move_poset(make_system(graph), to_config(config), state_cap);
            PyPoset p = summarize(mp.poset);
            std::vector<std::pair<Site, Count>> moves;
            for (const FiringMove& mv : mp.moves) moves.emplace_back(mv.site, mv.index);
            return py::make_tuple(p, moves);
        },
        py::arg("config"), py::arg("graph") = py::none(),
        py::arg("state_cap") = kDefaultStateCap,
        "Firing moves ordered by forced precedence; returns (poset, moves).");

    m.def(
        "join_irreducibles",
        [](const std::map<Site, Count>& config, const py::object& graph) {
            ConfigPoset cp = build_config_poset(make_system(graph), to_config(config));
            std::vector<std::string> out;
            for (int e : cp.poset.join_irreducibles()) out.push_back(cp.poset.label(e));
            return out;
        },
        py::arg("config"), py::arg("graph") = py::none());

    m.def(
        "only_move_config",
        [](const std::map<Site, Count>& config, Site site, Count index,
           const py::object& graph) {
            return from_config(
                only_move_config(make_system(graph), to_config(config), site, index));
        },
        py::arg("config"), py::arg("site"), py::arg("index"),
        py::arg("graph") = py::none(),
        "The unique configuration whose only available move is the index-th fire at site.");

    m.def(
        "verify_join_theorem",
        [](const std::map<Site, Count>& config, const py::object& graph) {
            JoinTheoremReport r =
                verify_join_theorem(make_system(graph), to_config(config));
            py::dict d;
            d["config_count"] = r.config_count;
            d["join_irreducible_count"] = r.join_irreducible_count;
            d["move_count"] = r.move_count;
            d["lattice"] = r.lattice;
            d["bijection"] = r.bijection;
            d["order_isomorphic"] = r.order_isomorphic;
            d["passed"] = r.passed();
            return d;
        },
        py::arg("config"), py::arg("graph") = py::none());

    m.def("verify_endgame", [](int m_max) {
        py::list out;
        for (const EndgameReport& r : verify_endgame_lattice(m_max)) {
            py::dict d;
            d["m"] = r.m;
            d["config_count"] = r.config_count;
            d["ideal_count"] = r.ideal_count;
            d["lattice"] = r.lattice;
            d["mv_min_max"] = r.mv_min_max;
            d["distributive"] = r.distributive;
            d["ideal_isomorphism"] = r.ideal_isomorphism;
            d["passed"] = r.passed();
            out.append(d);
        }
        return out;
    });

    m.def("counterexample", [](Count n) {
        CounterexampleTranscript t = reproduce_counterexample(n);
        return py::make_tuple(t.rows, t.violates_distributivity);
    });

    m.def("invalid_extension_demo", [](Count n) {
        ExtensionDemo d = invalid_extension_demo(n);
        py::dict out;
        out["extension_count"] = d.extension_count;
        out["valid_count"] = d.valid_count;
        out["invalid_sites"] = d.invalid_sites;
        out["fail_index"] = d.fail_index;
        return out;
    });

    m.def(
        "labeled_run",
        [](Count n, std::uint64_t seed) {
            LabeledRun r = labeled_fire_run(n, seed);
            return py::make_tuple(std::map<Site, std::vector<int>>(r.final_config.begin(),
                                                                   r.final_config.end()),
                                  r.sorted());
        },
        py::arg("n"), py::arg("seed") = 0);

    m.def("parse_config", [](const std::string& text, bool line) {
        return from_config(
            parse_config(text, line ? ConfigKind::Line : ConfigKind::Graph));
    }, py::arg("text"), py::arg("line") = true);

    m.def("format_config", [](const std::map<Site, Count>& config) {
        return format_config(to_config(config));
    });
}
