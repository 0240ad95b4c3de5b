#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chipfire/builder.hpp"
#include "chipfire/io.hpp"
#include "chipfire/linelab.hpp"

using namespace chipfire;

namespace {

ConfigPoset line_poset(Count n) {
    return build_config_poset(FiringSystem::line(), origin_config(n));
}

std::set<std::string> label_set(const FinitePoset& p) {
    return {p.labels().begin(), p.labels().end()};
}

// Cover pairs as (upper label, lower label).
std::set<std::pair<std::string, std::string>> cover_labels(const FinitePoset& p) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, l] : p.covers()) out.emplace(p.label(u), p.label(l));
    return out;
}

}  // namespace

TEST_CASE("configuration posets of the small line games") {
    ConfigPoset cp5 = line_poset(5);
    CHECK(cp5.poset.size() == 9);
    CHECK(cp5.poset.covers().size() == 11);
    CHECK(cp5.poset.label(0) == "_5_");  // element 0 is the root, the maximum
    CHECK(cp5.poset.depth(0) == 0);

    ConfigPoset cp6 = line_poset(6);
    CHECK(cp6.poset.size() == 29);
    CHECK(cp6.poset.covers().size() == 44);

    // A stable start yields the one-element poset.
    ConfigPoset stable = build_config_poset(FiringSystem::line(),
                                            ChipConfig({{0, 1}, {4, 1}}));
    CHECK(stable.poset.size() == 1);

    CHECK(line_poset(7).poset.size() == 47);
    CHECK(line_poset(8).poset.size() == 144);
}

TEST_CASE("transitions are exactly the cover pairs") {
    // Each firing drops the move count by exactly one, so the reachability
    // order is graded and every edge of the firing graph is a cover.
    ConfigPoset cp = line_poset(6);
    std::set<std::pair<std::string, std::string>> covers = cover_labels(cp.poset);
    std::size_t fired_edges = 0;
    for (int i = 0; i < cp.poset.size(); ++i)
        for (auto [child, site] : cp.fired[i]) {
            ++fired_edges;
            CHECK(covers.count({cp.poset.label(i), cp.poset.label(child)}) == 1);
            CHECK(cp.mv[child].total() == cp.mv[i].total() + 1);
            CHECK(fire(FiringSystem::line(), cp.configs[i], site) == cp.configs[child]);
        }
    CHECK(fired_edges >= covers.size());
}

TEST_CASE("state cap aborts enumeration") {
    CHECK_THROWS_AS(build_config_poset(FiringSystem::line(), origin_config(8), 50),
                    StateCapExceeded);
}

TEST_CASE("mv_vector measures reachability distance") {
    ConfigPoset cp = line_poset(5);
    ChipConfig root = origin_config(5);
    CHECK(mv_vector(cp, root, root) == MoveVector());
    CHECK(mv_vector(cp, root, parse_config("2_1_2", ConfigKind::Line)) ==
          MoveVector({{0, 2}}));
    CHECK(mv_vector(cp, root, parse_config("11_1_11", ConfigKind::Line)) ==
          MoveVector({{-1, 1}, {0, 3}, {1, 1}}));
    // From an intermediate configuration downwards.
    CHECK(mv_vector(cp, parse_config("1_3_1", ConfigKind::Line),
                    parse_config("2_1_2", ConfigKind::Line)) == MoveVector({{0, 1}}));
    CHECK_THROWS_AS(mv_vector(cp, parse_config("11_0_3", ConfigKind::Line),
                              parse_config("3_0_11", ConfigKind::Line)),
                    Unreachable);
    CHECK_THROWS_AS(mv_vector(cp, root, ChipConfig({{9, 5}})), ConfigNotFound);
}

TEST_CASE("mv containment coincides with reachability") {
    ConfigPoset cp = line_poset(6);
    for (int i = 0; i < cp.poset.size(); ++i)
        for (int j = 0; j < cp.poset.size(); ++j)
            CHECK(cp.poset.geq(i, j) == cp.mv[i].leq(cp.mv[j]));
}

TEST_CASE("only-move configurations of the five-chip game") {
    FiringSystem line = FiringSystem::line();
    ChipConfig root = origin_config(5);
    CHECK(format_compact(only_move_config(line, root, 0, 1)) == "_5_");
    CHECK(format_compact(only_move_config(line, root, 0, 2)) == "1_3_1");
    CHECK(format_compact(only_move_config(line, root, 0, 3)) == "10_3_01");
    CHECK(format_compact(only_move_config(line, root, 1, 1)) == "11_0_3");
    CHECK(format_compact(only_move_config(line, root, -1, 1)) == "3_0_11");
    CHECK_THROWS_AS(only_move_config(line, root, 0, 4), IndexTooLarge);
    CHECK_THROWS_AS(only_move_config(line, root, 2, 1), IndexTooLarge);

    // The result indeed has exactly one available move, and firing it
    // performs the j-th move at k.
    ChipConfig c = only_move_config(line, root, 0, 3);
    CHECK(available_sites(line, c) == std::vector<Site>{0});
    CHECK(mv_vector(line_poset(5), root, c).at(0) == 2);
}

TEST_CASE("only-move configurations are policy independent") {
    FiringSystem line = FiringSystem::line();
    ChipConfig root = origin_config(6);
    auto odometer = stabilize(line, root).odometer;
    for (const auto& [k, total] : odometer.counts())
        for (Count j = 1; j <= total; ++j) {
            ChipConfig low = only_move_config(line, root, k, j, Policy::LowestFirst);
            CHECK(only_move_config(line, root, k, j, Policy::HighestFirst) == low);
            CHECK(only_move_config(line, root, k, j, Policy::SeededRandom, 7) == low);
            CHECK(available_sites(line, low) == std::vector<Site>{k});
        }
}

TEST_CASE("augmented graph forces the j-th move at k") {
    // Host the five-chip line game on a path, then check that stabilizing
    // the augmented graph and restricting recovers the only-move state.
    ConfigPoset cp = line_poset(5);
    LineEmbedding emb = embed_line_on_path(cp);
    ChipConfig root = emb.embed(origin_config(5));

    auto [aug, start] = augmented_system(emb.graph, root, emb.to_vertex(0), 3);
    // Two fresh vertices with the prescribed multiplicities: N = 6 chips+1...
    Count n_mult = aug.multiplicity(emb.to_vertex(0), emb.graph.vertex_count());
    CHECK(n_mult == 6);
    CHECK(aug.multiplicity(emb.graph.vertex_count(), emb.graph.vertex_count() + 1) == 18);
    // ...and N*(j-1) = 12 extra chips at k.
    CHECK(start.total() == root.total() + 12);

    auto [stable, od] = stabilize(aug, start);
    ChipConfig restricted;
    for (auto [v, c] : stable.entries())
        if (v < emb.graph.vertex_count()) restricted.add(v, c);
    CHECK(emb.restrict_to_line(restricted) ==
          only_move_config(FiringSystem::line(), origin_config(5), 0, 3));

    // j = 1 adds no chips at all.
    auto [aug1, start1] = augmented_system(emb.graph, root, emb.to_vertex(0), 1);
    CHECK(start1.total() == root.total());
}

TEST_CASE("move posets of the small line games") {
    MovePoset mp5 = build_move_poset(FiringSystem::line(), origin_config(5));
    CHECK(mp5.poset.size() == 5);
    CHECK(cover_labels(mp5.poset) ==
          std::set<std::pair<std::string, std::string>>{
              {"0^1", "0^2"}, {"0^2", "0^3"}, {"0^2", "-1^1"}, {"0^2", "1^1"}});
    CHECK(mp5.moves[mp5.index_of({0, 2})].str() == "0^2");
    CHECK(format_compact(mp5.only_move_cfgs[mp5.index_of({0, 3})]) == "10_3_01");

    MovePoset mp6 = build_move_poset(FiringSystem::line(), origin_config(6));
    CHECK(mp6.poset.size() == 14);

    // Each game's move count equals its odometer total.
    for (Count n = 2; n <= 8; ++n) {
        MovePoset mp = build_move_poset(FiringSystem::line(), origin_config(n));
        CHECK(static_cast<Count>(mp.moves.size()) ==
              stabilize(FiringSystem::line(), origin_config(n)).odometer.total());
    }
}

TEST_CASE("same-site moves form chains; opposite first moves are incomparable") {
    MovePoset mp = build_move_poset(FiringSystem::line(), origin_config(6));
    for (const FiringMove& a : mp.moves)
        for (const FiringMove& b : mp.moves)
            if (a.site == b.site && a.index < b.index)
                CHECK(mp.poset.geq(mp.index_of(a), mp.index_of(b)));
    int left = mp.index_of({-1, 1});
    int right = mp.index_of({1, 1});
    CHECK(!mp.poset.geq(left, right));
    CHECK(!mp.poset.geq(right, left));
}

TEST_CASE("brute-force sequence enumeration agrees with the move poset") {
    for (Count n = 2; n <= 6; ++n) {
        FiringSystem line = FiringSystem::line();
        ChipConfig root = origin_config(n);
        MovePoset mp = build_move_poset(line, root);
        BruteForceOrder bf = brute_force_move_order(line, root);
        REQUIRE(bf.moves == mp.moves);
        for (int a = 0; a < mp.poset.size(); ++a)
            for (int b = 0; b < mp.poset.size(); ++b)
                CHECK(bf.geq(a, b) == mp.poset.geq(a, b));
    }
    CHECK(brute_force_move_order(FiringSystem::line(), origin_config(4)).sequence_count == 2);
    CHECK(brute_force_move_order(FiringSystem::line(), origin_config(5)).sequence_count == 4);
    CHECK(brute_force_move_order(FiringSystem::line(), origin_config(6)).sequence_count ==
          252);
    CHECK_THROWS_AS(brute_force_move_order(FiringSystem::line(), origin_config(6), 100),
                    SeqCapExceeded);
}

TEST_CASE("join-irreducible correspondence on line games") {
    for (Count n = 2; n <= 7; ++n) {
        JoinTheoremReport r =
            verify_join_theorem(FiringSystem::line(), origin_config(n));
        CHECK(r.passed());
        CHECK(r.join_irreducible_count == r.move_count);
    }
    JoinTheoremReport r5 = verify_join_theorem(FiringSystem::line(), origin_config(5));
    CHECK(r5.config_count == 9);
    CHECK(r5.move_count == 5);
    CHECK(!r5.summary().empty());
}

TEST_CASE("join-irreducible correspondence on a multigraph with a sink") {
    FiringSystem g = FiringSystem::multigraph(
        4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}}, {3});
    JoinTheoremReport r = verify_join_theorem(g, ChipConfig({{0, 5}, {1, 1}}));
    CHECK(r.passed());
}
