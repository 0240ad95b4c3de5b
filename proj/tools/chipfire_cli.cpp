#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "chipfire/builder.hpp"
#include "chipfire/firing.hpp"
#include "chipfire/io.hpp"
#include "chipfire/linelab.hpp"

namespace {

using namespace chipfire;

struct SystemOpts {
    bool line = false;
    std::string graph_file;
    std::string config_text;

    void attach(CLI::App* cmd, bool need_config = true) {
        auto* lf = cmd->add_flag("--line", line, "chip-firing on the integer line");
        auto* gf = cmd->add_option("--graph", graph_file, "multigraph description file");
        lf->excludes(gf);
        gf->excludes(lf);
        auto* cf = cmd->add_option("--config", config_text,
                                   "initial configuration (site:count tokens or compact "
                                   "line form like 10_3_01)");
        if (need_config) cf->required();
    }

    FiringSystem system() const {
        if (line) return FiringSystem::line();
        if (graph_file.empty()) throw CLI::ValidationError("pick --line or --graph FILE");
        return load_graph_file(graph_file);
    }

    ChipConfig config() const {
        return parse_config(config_text, line ? ConfigKind::Line : ConfigKind::Graph);
    }
};

Policy parse_policy(const std::string& name) {
    if (name == "lowest") return Policy::LowestFirst;
    if (name == "highest") return Policy::HighestFirst;
    if (name == "random") return Policy::SeededRandom;
    throw CLI::ValidationError("policy must be lowest, highest or random");
}

PosetFormat parse_format(const std::string& name) {
    if (name == "text") return PosetFormat::Text;
    if (name == "dot") return PosetFormat::Dot;
    if (name == "tikz") return PosetFormat::Tikz;
    throw CLI::ValidationError("format must be text, dot or tikz");
}

int run(int argc, char** argv) {
    CLI::App app{"chip-firing games, configuration posets and move posets"};
    app.require_subcommand(1);

    SystemOpts sys_stab, sys_cfg, sys_mv, sys_ji, sys_check, sys_jt;
    std::string policy = "lowest", format = "text";
    std::uint64_t seed = 0, step_cap = kDefaultStepCap, state_cap = kDefaultStateCap;
    bool oracle = false;
    bool check_lattice = false, check_distributive = false, check_uld = false;
    int m_max = 6;
    Count repro_n = 5;
    Count labeled_n = 10;
    std::uint64_t labeled_seed = 0;

    auto* stab = app.add_subcommand("stabilize", "fire to completion, print the result");
    sys_stab.attach(stab);
    stab->add_option("--policy", policy, "lowest|highest|random");
    stab->add_option("--seed", seed, "seed for the random policy");
    stab->add_option("--step-cap", step_cap, "abort after this many firings");

    auto* cfgp = app.add_subcommand("config-poset", "enumerate reachable configurations");
    sys_cfg.attach(cfgp);
    cfgp->add_option("--state-cap", state_cap, "maximum number of configurations");
    cfgp->add_option("--format", format, "text|dot|tikz");

    auto* mvp = app.add_subcommand("move-poset", "build the firing-move poset");
    sys_mv.attach(mvp);
    mvp->add_option("--format", format, "text|dot|tikz");
    mvp->add_flag("--oracle", oracle,
                  "also enumerate all firing sequences and diff the raw move order");

    auto* ji = app.add_subcommand("join-irreducibles",
                                  "configurations with exactly one available move");
    sys_ji.attach(ji);

    auto* check = app.add_subcommand("check", "structural checks on the configuration poset");
    sys_check.attach(check);
    check->add_flag("--lattice", check_lattice);
    check->add_flag("--distributive", check_distributive);
    check->add_flag("--uld", check_uld);

    auto* verify = app.add_subcommand("verify", "verify the structural correspondences");
    verify->require_subcommand(1);
    auto* vjt = verify->add_subcommand("join-theorem",
                                       "join-irreducibles form the move poset");
    sys_jt.attach(vjt);
    auto* vend = verify->add_subcommand("endgame", "endgame lattice checks");
    vend->add_option("--m-max", m_max, "check endgames for m = 1..m-max");

    auto* repro = app.add_subcommand("repro", "reproduce published counterexamples");
    repro->require_subcommand(1);
    auto* rc = repro->add_subcommand("counterexample", "distributivity counterexample");
    rc->add_option("--n", repro_n, "5 or 8")->required()->check(CLI::IsMember({5, 8}));
    auto* rie = repro->add_subcommand("invalid-extension",
                                      "linear extension that is not a firing sequence");
    rie->add_option("--n", repro_n, "5 or 8")->required()->check(CLI::IsMember({5, 8}));

    auto* lrun = app.add_subcommand("labeled-run", "random labeled chip-firing run");
    lrun->add_option("--n", labeled_n, "number of labeled chips (even)")->required();
    lrun->add_option("--seed", labeled_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (stab->parsed()) {
        auto [final_cfg, odometer] =
            stabilize(sys_stab.system(), sys_stab.config(), parse_policy(policy), seed,
                      step_cap);
        std::cout << "final " << format_config(final_cfg) << "\n";
        std::cout << "odometer " << format_sparse(odometer) << "\n";
        std::cout << "moves " << odometer.total() << "\n";
        return 0;
    }
    if (cfgp->parsed()) {
        ConfigPoset cp = build_config_poset(sys_cfg.system(), sys_cfg.config(), state_cap);
        std::cout << emit_poset(cp.poset, parse_format(format));
        std::cout << "elements " << cp.poset.size() << " covers " << cp.poset.covers().size()
                  << "\n";
        return 0;
    }
    if (mvp->parsed()) {
        FiringSystem system = sys_mv.system();
        ChipConfig root = sys_mv.config();
        MovePoset mp = build_move_poset(system, root, state_cap);
        std::cout << emit_poset(mp.poset, parse_format(format));
        std::cout << "elements " << mp.poset.size() << " covers " << mp.poset.covers().size()
                  << "\n";
        if (oracle) {
            BruteForceOrder bf = brute_force_move_order(system, root);
            bool same = bf.moves == mp.moves;
            if (same)
                for (int a = 0; a < mp.poset.size() && same; ++a)
                    for (int b = 0; b < mp.poset.size(); ++b)
                        if (bf.geq(a, b) != mp.poset.geq(a, b)) {
                            same = false;
                            std::cout << "oracle differs on " << mp.moves[a].str() << " vs "
                                      << mp.moves[b].str() << "\n";
                            break;
                        }
            std::cout << "oracle sequences " << bf.sequence_count << " agreement "
                      << (same ? "yes" : "no") << "\n";
            return same ? 0 : 1;
        }
        return 0;
    }
    if (ji->parsed()) {
        ConfigPoset cp = build_config_poset(sys_ji.system(), sys_ji.config(), state_cap);
        for (int e : cp.poset.join_irreducibles()) std::cout << cp.poset.label(e) << "\n";
        return 0;
    }
    if (check->parsed()) {
        if (check_lattice + check_distributive + check_uld != 1)
            throw CLI::ValidationError("pick exactly one of --lattice/--distributive/--uld");
        ConfigPoset cp = build_config_poset(sys_check.system(), sys_check.config(), state_cap);
        if (check_lattice) {
            auto r = cp.poset.is_lattice();
            std::cout << "lattice: " << (r.ok ? "true" : "false") << "\n";
            if (!r.ok)
                std::cout << "witness: " << cp.poset.label(r.failing.first) << ", "
                          << cp.poset.label(r.failing.second) << "\n";
            return r.ok ? 0 : 1;
        }
        if (check_distributive) {
            auto r = cp.poset.is_distributive();
            std::cout << "distributive: " << (r.ok ? "true" : "false") << "\n";
            if (!r.ok)
                std::cout << "witness: x=" << cp.poset.label(r.witness[0])
                          << " y=" << cp.poset.label(r.witness[1])
                          << " z=" << cp.poset.label(r.witness[2]) << "\n";
            return r.ok ? 0 : 1;
        }
        auto r = cp.poset.is_uld();
        std::cout << "uld: " << (r.ok ? "true" : "false") << "\n";
        if (!r.ok) std::cout << "witness: " << cp.poset.label(r.witness) << "\n";
        return r.ok ? 0 : 1;
    }
    if (vjt->parsed()) {
        JoinTheoremReport report =
            verify_join_theorem(sys_jt.system(), sys_jt.config(), state_cap);
        std::cout << report.summary() << "\n";
        return report.passed() ? 0 : 1;
    }
    if (vend->parsed()) {
        bool ok = true;
        for (const EndgameReport& r : verify_endgame_lattice(m_max)) {
            std::cout << r.summary() << "\n";
            ok = ok && r.passed();
        }
        return ok ? 0 : 1;
    }
    if (rc->parsed()) {
        CounterexampleTranscript t = reproduce_counterexample(repro_n);
        std::cout << t.text();
        return t.violates_distributivity ? 0 : 1;
    }
    if (rie->parsed()) {
        ExtensionDemo demo = invalid_extension_demo(repro_n);
        std::cout << demo.text();
        return demo.invalid_sites.empty() ? 1 : 0;
    }
    if (lrun->parsed()) {
        LabeledRun run = labeled_fire_run(labeled_n, labeled_seed);
        for (const auto& [site, labels] : run.final_config) {
            std::cout << site << ":";
            for (int l : labels) std::cout << " " << l;
            std::cout << "\n";
        }
        std::cout << "sorted: " << (run.sorted() ? "true" : "false") << "\n";
        return run.sorted() ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const chipfire::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const chipfire::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
