#include "chipfire/linelab.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>

#include "chipfire/io.hpp"

namespace chipfire {

ChipConfig origin_config(Count n) {
    if (n < 1) throw Error("need at least one chip");
    return ChipConfig({{0, n}});
}

ChipConfig endgame_config(Count n) {
    if (n < 2 || n % 2 != 0) throw OddChipCount("endgame configuration needs even n >= 2");
    Count m = n / 2;
    SparseMap entries{{0, 2}};
    for (Count i = 1; i < m; ++i) {
        entries[i] = 1;
        entries[-i] = 1;
    }
    return ChipConfig(entries);
}

std::string EndgameReport::summary() const {
    std::ostringstream s;
    s << "m=" << m << " configs=" << config_count << " moves=" << move_count
      << " ideals=" << ideal_count << " lattice=" << (lattice ? "yes" : "no")
      << " mv-min-max=" << (mv_min_max ? "yes" : "no")
      << " distributive=" << (distributive ? "yes" : "no")
      << " order-ideal-iso=" << (ideal_isomorphism ? "yes" : "no") << " => "
      << (passed() ? "PASS" : "FAIL");
    return s.str();
}

EndgameReport verify_endgame_lattice_one(int m) {
    EndgameReport report;
    report.m = m;
    FiringSystem line = FiringSystem::line();
    ChipConfig root = endgame_config(2 * static_cast<Count>(m));
    ConfigPoset cp = build_config_poset(line, root);
    report.config_count = cp.poset.size();
    report.lattice = cp.poset.is_lattice().ok;
    if (!report.lattice) return report;

    // meets union the move sets, joins intersect them
    report.mv_min_max = true;
    int n = cp.poset.size();
    for (int x = 0; x < n && report.mv_min_max; ++x)
        for (int y = x + 1; y < n; ++y) {
            auto mt = cp.poset.meet(x, y);
            auto jn = cp.poset.join(x, y);
            const MoveVector& mx = cp.mv[static_cast<std::size_t>(x)];
            const MoveVector& my = cp.mv[static_cast<std::size_t>(y)];
            if (cp.mv[static_cast<std::size_t>(mt.element)] !=
                    MoveVector::componentwise_max(mx, my) ||
                cp.mv[static_cast<std::size_t>(jn.element)] !=
                    MoveVector::componentwise_min(mx, my)) {
                report.mv_min_max = false;
                break;
            }
        }

    report.distributive = cp.poset.is_distributive().ok;

    MovePoset mp = build_move_poset(line, root);
    report.move_count = static_cast<int>(mp.moves.size());
    IdealEnumeration ideals = order_ideals(mp.poset);
    report.ideal_count = static_cast<int>(ideals.ideals.size());
    if (report.ideal_count != report.config_count) return report;

    // canonical map: an ideal's complement is the performed move set
    MoveVector odometer;
    for (const FiringMove& mv : mp.moves) odometer.bump(mv.site);
    std::unordered_map<std::string, int> by_mv;
    for (int i = 0; i < n; ++i) {
        std::ostringstream key;
        for (const auto& [k, v] : cp.mv[static_cast<std::size_t>(i)].counts())
            key << k << ':' << v << ';';
        by_mv.emplace(key.str(), i);
    }
    std::vector<int> mapping;
    for (const Bitset& ideal : ideals.ideals) {
        MoveVector performed = odometer;
        ideal.for_each([&](std::size_t e) { performed.bump(mp.moves[e].site, -1); });
        std::ostringstream key;
        for (const auto& [k, v] : performed.counts()) key << k << ':' << v << ';';
        auto it = by_mv.find(key.str());
        if (it == by_mv.end()) return report;
        mapping.push_back(it->second);
    }
    report.ideal_isomorphism = embed_check(ideals.lattice, cp.poset, mapping);
    return report;
}

std::vector<EndgameReport> verify_endgame_lattice(int m_max) {
    std::vector<EndgameReport> out;
    for (int m = 1; m <= m_max; ++m) out.push_back(verify_endgame_lattice_one(m));
    return out;
}

std::string CounterexampleTranscript::text() const {
    std::ostringstream out;
    out << "distributivity counterexample, n=" << n << "\n";
    for (const auto& [name, value] : rows) out << "  " << name << " = " << value << "\n";
    out << "  x ^ (y v z) " << (violates_distributivity ? "!=" : "==")
        << " (x ^ y) v (x ^ z)\n";
    return out.str();
}

CounterexampleTranscript reproduce_counterexample(Count n) {
    static const std::unordered_map<Count, std::array<const char*, 3>> pinned = {
        {5, {"10_3_01", "11_0_3", "3_0_11"}},
        {8, {"20_3_21", "21_0_5", "13_0_31"}},
    };
    auto it = pinned.find(n);
    if (it == pinned.end()) throw Error("counterexamples are pinned for n=5 and n=8 only");

    FiringSystem line = FiringSystem::line();
    ConfigPoset cp = build_config_poset(line, origin_config(n));
    int x = cp.require(parse_config(it->second[0], ConfigKind::Line));
    int y = cp.require(parse_config(it->second[1], ConfigKind::Line));
    int z = cp.require(parse_config(it->second[2], ConfigKind::Line));

    auto op = [&](const FinitePoset::BoundResult& r, const char* what) {
        if (r.status != FinitePoset::BoundStatus::Found)
            throw Error(std::string("missing ") + what + " in configuration lattice");
        return r.element;
    };
    int y_or_z = op(cp.poset.join(y, z), "join");
    int lhs = op(cp.poset.meet(x, y_or_z), "meet");
    int x_and_y = op(cp.poset.meet(x, y), "meet");
    int x_and_z = op(cp.poset.meet(x, z), "meet");
    int rhs = op(cp.poset.join(x_and_y, x_and_z), "join");

    CounterexampleTranscript t;
    t.n = n;
    auto lbl = [&](int e) { return cp.poset.label(e); };
    t.rows = {{"x", lbl(x)},
              {"y", lbl(y)},
              {"z", lbl(z)},
              {"y v z", lbl(y_or_z)},
              {"x ^ (y v z)", lbl(lhs)},
              {"x ^ y", lbl(x_and_y)},
              {"x ^ z", lbl(x_and_z)},
              {"(x ^ y) v (x ^ z)", lbl(rhs)}};
    t.violates_distributivity = lhs != rhs;
    return t;
}

std::string ExtensionDemo::text() const {
    std::ostringstream out;
    out << "linear extensions of the move poset, n=" << n << "\n";
    out << "  extensions: " << extension_count
        << (enumerated ? " (enumerated)" : " (counted)") << "\n";
    out << "  replay-valid: " << valid_count << "\n";
    if (!invalid_sites.empty()) {
        out << "  invalid extension, sites (";
        for (std::size_t i = 0; i < invalid_sites.size(); ++i)
            out << (i ? "," : "") << invalid_sites[i];
        out << "), replay fails at index " << fail_index << "\n";
    } else {
        out << "  every extension is a legal firing sequence\n";
    }
    return out.str();
}

namespace {

// Number of complete firing sequences = maximal chains of the
// configuration poset, saturating at UINT64_MAX.
std::uint64_t count_firing_sequences(const ConfigPoset& cp) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    auto n = static_cast<std::size_t>(cp.poset.size());
    std::vector<std::uint64_t> memo(n, 0);
    // children have larger depth, so process by descending depth
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cp.poset.depth(a) > cp.poset.depth(b); });
    for (int i : order) {
        auto ii = static_cast<std::size_t>(i);
        if (cp.fired[ii].empty()) {
            memo[ii] = 1;
        } else {
            std::uint64_t total = 0;
            for (const auto& [child, site] : cp.fired[ii]) {
                std::uint64_t sub = memo[static_cast<std::size_t>(child)];
                total = (total > kMax - sub) ? kMax : total + sub;
            }
            memo[ii] = total;
        }
    }
    return memo[0];
}

}  // namespace

ExtensionDemo invalid_extension_demo(Count n, std::size_t enum_cap) {
    FiringSystem line = FiringSystem::line();
    ChipConfig root = origin_config(n);
    MovePoset mp = build_move_poset(line, root);
    ConfigPoset cp = build_config_poset(line, root);

    ExtensionDemo demo;
    demo.n = n;
    demo.extension_count = count_linear_extensions(mp.poset);
    demo.valid_count = count_firing_sequences(cp);

    auto sites_of = [&](const std::vector<int>& ext) {
        std::vector<Site> sites;
        sites.reserve(ext.size());
        for (int e : ext) sites.push_back(mp.moves[static_cast<std::size_t>(e)].site);
        return sites;
    };
    auto replay_fail_index = [&](const std::vector<Site>& sites) -> std::optional<std::size_t> {
        try {
            replay(line, root, sites);
            return std::nullopt;
        } catch (const IllegalFiring& e) {
            return e.index;
        }
    };

    if (demo.extension_count <= enum_cap) {
        demo.enumerated = true;
        std::uint64_t valid = 0;
        std::vector<Site> first_invalid;
        std::size_t first_fail = 0;
        const std::vector<Site> pinned{0, 0, 0, 1, -1};  // the published n=5 witness
        bool pinned_seen = false;
        std::size_t pinned_fail = 0;
        linear_extensions(mp.poset, enum_cap, [&](const std::vector<int>& ext) {
            std::vector<Site> sites = sites_of(ext);
            auto fail = replay_fail_index(sites);
            if (!fail) {
                ++valid;
            } else {
                if (first_invalid.empty()) {
                    first_invalid = sites;
                    first_fail = *fail;
                }
                if (sites == pinned) {
                    pinned_seen = true;
                    pinned_fail = *fail;
                }
            }
            return true;
        });
        if (valid != demo.valid_count)
            throw Error("replay-valid extension count disagrees with sequence count");
        if (pinned_seen) {
            demo.invalid_sites = pinned;
            demo.fail_index = pinned_fail;
        } else {
            demo.invalid_sites = first_invalid;
            demo.fail_index = first_fail;
        }
        return demo;
    }

    // too many extensions to enumerate: construct one greedily, taking
    // origin moves whenever the partial order allows them
    auto np = static_cast<std::size_t>(mp.poset.size());
    std::vector<Bitset> above(np, Bitset(np));
    for (std::size_t x = 0; x < np; ++x)
        mp.poset.down(static_cast<int>(x)).for_each([&](std::size_t y) {
            if (y != x) above[y].set(x);
        });
    Bitset placed(np);
    std::vector<int> ext;
    while (ext.size() < np) {
        int pick = -1;
        for (std::size_t e = 0; e < np; ++e) {
            if (placed.test(e) || !above[e].is_subset_of(placed)) continue;
            if (mp.moves[e].site == 0) {
                pick = static_cast<int>(e);
                break;
            }
            if (pick < 0) pick = static_cast<int>(e);
        }
        placed.set(static_cast<std::size_t>(pick));
        ext.push_back(pick);
    }
    std::vector<Site> sites = sites_of(ext);
    auto fail = replay_fail_index(sites);
    if (fail) {
        demo.invalid_sites = sites;
        demo.fail_index = *fail;
    }
    return demo;
}

bool LabeledRun::sorted() const {
    int prev = 0;
    for (const auto& [site, labels] : final_config) {
        for (int l : labels) {
            if (l <= prev) return false;
            prev = l;
        }
    }
    return true;
}

LabeledRun labeled_fire_run(Count n, std::uint64_t seed) {
    if (n % 2 != 0) throw OddChipCount("labeled runs are defined for even n");
    if (n < 2) throw Error("need at least two chips");
    LabeledRun run;
    LabeledConfig cfg;
    for (int l = 1; l <= n; ++l) cfg[0].push_back(l);

    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<Site> ready;
        for (const auto& [site, labels] : cfg)
            if (labels.size() >= 2) ready.push_back(site);
        if (ready.empty()) break;
        Site k = ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)];
        auto& here = cfg[k];
        std::size_t i = std::uniform_int_distribution<std::size_t>(0, here.size() - 1)(rng);
        std::size_t j = std::uniform_int_distribution<std::size_t>(0, here.size() - 2)(rng);
        if (j >= i) ++j;
        int a = here[i], b = here[j];
        auto erase_label = [&](int l) { here.erase(std::find(here.begin(), here.end(), l)); };
        erase_label(a);
        erase_label(b);
        if (here.empty()) cfg.erase(k);
        cfg[k - 1].push_back(std::min(a, b));
        cfg[k + 1].push_back(std::max(a, b));
        run.odometer.bump(k);
    }
    for (auto& [site, labels] : cfg) std::sort(labels.begin(), labels.end());
    run.final_config = std::move(cfg);
    return run;
}

}  // namespace chipfire
