#include "chipfire/builder.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "chipfire/io.hpp"

namespace chipfire {

int ConfigPoset::index_of(const ChipConfig& c) const {
    auto it = index_.find(c.key());
    return it == index_.end() ? -1 : it->second;
}

int ConfigPoset::require(const ChipConfig& c) const {
    int i = index_of(c);
    if (i < 0) throw ConfigNotFound("configuration " + format_config(c) + " not in poset");
    return i;
}

ConfigPoset build_config_poset(const FiringSystem& sys, const ChipConfig& root,
                               std::uint64_t state_cap) {
    stabilize(sys, root);  // rejects non-terminating games up front

    ConfigPoset cp;
    cp.configs.push_back(root);
    cp.mv.emplace_back();
    cp.fired.emplace_back();
    cp.index_.emplace(root.key(), 0);
    std::vector<std::pair<int, int>> covers;

    for (std::size_t head = 0; head < cp.configs.size(); ++head) {
        ChipConfig cur = cp.configs[head];  // copy: vector may reallocate
        for (Site k : available_sites(sys, cur)) {
            ChipConfig next = fire(sys, cur, k);
            MoveVector next_mv = cp.mv[head];
            next_mv.bump(k);
            auto [it, inserted] = cp.index_.emplace(next.key(),
                                                    static_cast<int>(cp.configs.size()));
            if (inserted) {
                if (cp.configs.size() >= state_cap)
                    throw StateCapExceeded("more than " + std::to_string(state_cap) +
                                           " configurations");
                cp.configs.push_back(std::move(next));
                cp.mv.push_back(next_mv);
                cp.fired.emplace_back();
            } else if (cp.mv[static_cast<std::size_t>(it->second)] != next_mv) {
                // the odometer to a configuration is path-independent; two
                // paths disagreeing means the firing rule is broken
                throw Error("odometer mismatch between firing paths");
            }
            covers.emplace_back(static_cast<int>(head), it->second);
            cp.fired[head].emplace_back(it->second, k);
        }
    }

    // transitions are exactly the cover pairs: each one raises the move
    // count by one, so no transitive shortcuts exist
    std::vector<std::string> labels;
    labels.reserve(cp.configs.size());
    for (const ChipConfig& c : cp.configs) labels.push_back(format_config(c));
    cp.poset = FinitePoset::from_covers(std::move(labels), std::move(covers));
    return cp;
}

MoveVector mv_vector(const ConfigPoset& cp, const ChipConfig& c0, const ChipConfig& c1) {
    int i0 = cp.require(c0);
    int i1 = cp.require(c1);
    if (!cp.poset.geq(i0, i1))
        throw Unreachable(format_config(c1) + " is not reachable from " + format_config(c0));
    MoveVector diff;
    for (const auto& [k, v] : cp.mv[static_cast<std::size_t>(i1)].counts()) {
        Count d = v - cp.mv[static_cast<std::size_t>(i0)].at(k);
        if (d > 0) diff.bump(k, d);
    }
    return diff;
}

ChipConfig only_move_config(const FiringSystem& sys, const ChipConfig& root, Site k, Count j,
                            Policy policy, std::uint64_t seed, std::uint64_t step_cap) {
    auto [stable, odometer] = stabilize(sys, root, Policy::LowestFirst, 0, step_cap);
    if (j < 1 || j > odometer.at(k))
        throw IndexTooLarge("move " + FiringMove{k, j}.str() + " exceeds the odometer (" +
                            std::to_string(odometer.at(k)) + " fires at that site)");

    std::mt19937_64 rng(seed);
    auto choose = [&](const std::vector<Site>& av) {
        switch (policy) {
            case Policy::LowestFirst: return av.front();
            case Policy::HighestFirst: return av.back();
            default:
                return av[std::uniform_int_distribution<std::size_t>(0, av.size() - 1)(rng)];
        }
    };

    // phase 1: any complete firing sequence, cut right after the (j-1)-th
    // fire at k
    ChipConfig cur = root;
    Count fired_at_k = 0;
    std::uint64_t steps = 0;
    while (fired_at_k < j - 1) {
        std::vector<Site> av = available_sites(sys, cur);
        if (av.empty()) throw Error("game stabilized before reaching the requested move");
        Site s = choose(av);
        cur = fire(sys, cur, s);
        if (s == k) ++fired_at_k;
        if (++steps > step_cap) throw StepCapExceeded("step cap during only-move replay");
    }
    // phase 2: exhaust every site other than k
    for (;;) {
        std::vector<Site> av = available_sites(sys, cur);
        std::erase(av, k);
        if (av.empty()) break;
        cur = fire(sys, cur, choose(av));
        if (++steps > step_cap) throw StepCapExceeded("step cap during only-move replay");
    }
    if (available_sites(sys, cur) != std::vector<Site>{k})
        throw Error("only-move construction did not isolate site " + std::to_string(k));
    return cur;
}

std::pair<FiringSystem, ChipConfig> augmented_system(const FiringSystem& graph,
                                                     const ChipConfig& c, int k, Count j) {
    if (graph.kind() != FiringSystem::Kind::Multigraph)
        throw Error("augmentation requires a finite multigraph");
    if (k < 0 || k >= graph.vertex_count()) throw Error("vertex out of range");
    if (j < 1) throw Error("move index must be positive");

    int v = graph.vertex_count();
    Count big = c.total() + 1;  // any value above the chip total works
    std::vector<std::tuple<int, int, Count>> edges;
    for (int u = 0; u < v; ++u)
        for (int w = u + 1; w < v; ++w) {
            Count m = graph.multiplicity(u, w);
            if (m > 0) edges.emplace_back(u, w, m);
        }
    edges.emplace_back(k, v, big);          // k -- v1
    edges.emplace_back(v, v + 1, big * j);  // v1 -- v2
    FiringSystem augmented = FiringSystem::multigraph(v + 2, edges, graph.sinks());

    ChipConfig chips = c;
    chips.add(k, big * (j - 1));
    return {std::move(augmented), std::move(chips)};
}

ChipConfig LineEmbedding::embed(const ChipConfig& line_cfg) const {
    ChipConfig out;
    for (const auto& [k, v] : line_cfg.entries()) {
        int vert = to_vertex(k);
        if (vert <= 0 || vert >= length - 1)
            throw Error("line configuration exceeds the embedding window");
        out.add(vert, v);
    }
    return out;
}

ChipConfig LineEmbedding::restrict_to_line(const ChipConfig& path_cfg) const {
    ChipConfig out;
    for (const auto& [vert, v] : path_cfg.entries()) {
        if (vert >= length) continue;  // augmentation vertices
        if (vert == 0 || vert == length - 1)
            throw Error("chips reached the path boundary; embedding window too small");
        out.add(to_line(static_cast<int>(vert)), v);
    }
    return out;
}

LineEmbedding embed_line_on_path(const ConfigPoset& line_poset, int margin) {
    Site lo = 0, hi = 0;
    for (const ChipConfig& c : line_poset.configs)
        for (const auto& [k, v] : c.entries()) {
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
    lo -= margin;
    hi += margin;
    int length = static_cast<int>(hi - lo + 1);
    std::vector<std::tuple<int, int, Count>> edges;
    for (int i = 0; i + 1 < length; ++i) edges.emplace_back(i, i + 1, 1);
    return {FiringSystem::multigraph(length, edges), lo, length};
}

int MovePoset::index_of(FiringMove m) const {
    auto it = std::find(moves.begin(), moves.end(), m);
    return it == moves.end() ? -1 : static_cast<int>(it - moves.begin());
}

MovePoset build_move_poset(const FiringSystem& sys, const ChipConfig& root,
                           std::uint64_t state_cap) {
    auto [stable, odometer] = stabilize(sys, root);
    MovePoset mp;
    for (const auto& [site, fires] : odometer.counts())
        for (Count j = 1; j <= fires; ++j) mp.moves.push_back({site, j});

    ConfigPoset cp = build_config_poset(sys, root, state_cap);
    mp.only_move_cfgs.reserve(mp.moves.size());
    std::vector<int> cfg_index;
    for (const FiringMove& m : mp.moves) {
        mp.only_move_cfgs.push_back(only_move_config(sys, root, m.site, m.index));
        cfg_index.push_back(cp.require(mp.only_move_cfgs.back()));
    }

    // k^j >= k'^j' iff c(k'^j') is reachable from c(k^j)
    std::vector<std::pair<int, int>> pairs;
    int n = static_cast<int>(mp.moves.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && cp.poset.geq(cfg_index[static_cast<std::size_t>(a)],
                                       cfg_index[static_cast<std::size_t>(b)]))
                pairs.emplace_back(a, b);

    std::vector<std::string> labels;
    labels.reserve(mp.moves.size());
    for (const FiringMove& m : mp.moves) labels.push_back(m.str());
    mp.poset = FinitePoset::from_relation(std::move(labels), pairs);
    return mp;
}

bool BruteForceOrder::geq(int a, int b) const {
    if (a == b) return true;
    return std::binary_search(strict_geq.begin(), strict_geq.end(), std::make_pair(a, b));
}

BruteForceOrder brute_force_move_order(const FiringSystem& sys, const ChipConfig& root,
                                       std::uint64_t seq_cap) {
    auto [stable, odometer] = stabilize(sys, root);
    BruteForceOrder out;
    std::map<Site, int> base;
    for (const auto& [site, fires] : odometer.counts()) {
        base[site] = static_cast<int>(out.moves.size());
        for (Count j = 1; j <= fires; ++j) out.moves.push_back({site, j});
    }
    auto n = out.moves.size();
    std::vector<char> before(n * n, 0);  // before[a*n+b]: a strictly before b somewhere

    std::vector<int> seq;
    MoveVector fired;
    auto rec = [&](auto&& self, const ChipConfig& cur) -> void {
        std::vector<Site> av = available_sites(sys, cur);
        if (av.empty()) {
            if (++out.sequence_count > seq_cap)
                throw SeqCapExceeded("more than " + std::to_string(seq_cap) +
                                     " firing sequences");
            for (std::size_t p = 0; p < seq.size(); ++p)
                for (std::size_t q = p + 1; q < seq.size(); ++q)
                    before[static_cast<std::size_t>(seq[p]) * n +
                           static_cast<std::size_t>(seq[q])] = 1;
            return;
        }
        for (Site k : av) {
            int move = base.at(k) + static_cast<int>(fired.at(k));
            fired.bump(k);
            seq.push_back(move);
            self(self, fire(sys, cur, k));
            seq.pop_back();
            fired.bump(k, -1);
        }
    };
    rec(rec, root);

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && !before[b * n + a])
                out.strict_geq.emplace_back(static_cast<int>(a), static_cast<int>(b));
    std::sort(out.strict_geq.begin(), out.strict_geq.end());
    return out;
}

std::string JoinTheoremReport::summary() const {
    std::ostringstream s;
    s << "configs=" << config_count << " join-irreducibles=" << join_irreducible_count
      << " moves=" << move_count << " lattice=" << (lattice ? "yes" : "no")
      << " bijection=" << (bijection ? "yes" : "no")
      << " order-isomorphic=" << (order_isomorphic ? "yes" : "no") << " => "
      << (passed() ? "PASS" : "FAIL");
    return s.str();
}

JoinTheoremReport verify_join_theorem(const FiringSystem& sys, const ChipConfig& root,
                                      std::uint64_t state_cap) {
    JoinTheoremReport report;
    ConfigPoset cp = build_config_poset(sys, root, state_cap);
    report.config_count = cp.poset.size();
    report.lattice = cp.poset.is_lattice().ok;
    if (!report.lattice) return report;

    std::vector<int> ji = cp.poset.join_irreducibles();
    report.join_irreducible_count = static_cast<int>(ji.size());
    MovePoset mp = build_move_poset(sys, root, state_cap);
    report.move_count = static_cast<int>(mp.moves.size());

    // each join-irreducible has a single available move; it must be the
    // unique only-move configuration of that move
    report.bijection = ji.size() == mp.moves.size();
    std::vector<int> mapping;
    std::vector<bool> hit(mp.moves.size(), false);
    for (int e : ji) {
        const ChipConfig& cfg = cp.configs[static_cast<std::size_t>(e)];
        std::vector<Site> av = available_sites(sys, cfg);
        if (av.size() != 1) {
            report.bijection = false;
            break;
        }
        FiringMove move{av[0], cp.mv[static_cast<std::size_t>(e)].at(av[0]) + 1};
        int mi = mp.index_of(move);
        if (mi < 0 || hit[static_cast<std::size_t>(mi)] ||
            mp.only_move_cfgs[static_cast<std::size_t>(mi)] != cfg) {
            report.bijection = false;
            break;
        }
        hit[static_cast<std::size_t>(mi)] = true;
        mapping.push_back(mi);
    }
    if (!report.bijection) return report;

    report.order_isomorphic = embed_check(cp.poset.restrict(ji), mp.poset, mapping);
    return report;
}

}  // namespace chipfire
