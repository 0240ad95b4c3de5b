#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include "chipfire/builder.hpp"
#include "chipfire/io.hpp"
#include "chipfire/linelab.hpp"

using namespace chipfire;

TEST_CASE("compact line notation round-trips") {
    ChipConfig c = parse_config("10_3_01", ConfigKind::Line);
    CHECK(c == ChipConfig({{-2, 1}, {0, 3}, {2, 1}}));
    CHECK(format_compact(c) == "10_3_01");

    CHECK(parse_config("_5_", ConfigKind::Line) == ChipConfig({{0, 5}}));
    CHECK(format_compact(ChipConfig()) == "_0_");
    CHECK(format_compact(ChipConfig({{3, 2}})) == "_0_002");
    CHECK(format_compact(ChipConfig({{-1, 4}})) == "4_0_");

    CHECK_THROWS_AS(parse_config("1_23_1", ConfigKind::Line), ParseError);
    CHECK_THROWS_AS(parse_config("10_3", ConfigKind::Line), ParseError);
    CHECK_THROWS_AS(parse_config("1a_3_1", ConfigKind::Line), ParseError);
    CHECK_THROWS_AS(parse_config("_5_", ConfigKind::Graph), ParseError);
    CHECK_THROWS_AS(format_compact(ChipConfig({{0, 12}})), Error);
    CHECK(!compact_representable(ChipConfig({{0, 12}})));

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        SparseMap m;
        for (int i = 0; i < 3; ++i) m[static_cast<Site>(rng() % 9) - 4] += rng() % 4;
        ChipConfig orig(m);
        CHECK(parse_config(format_compact(orig), ConfigKind::Line) == orig);
    }
}

TEST_CASE("sparse configuration text") {
    CHECK(parse_config("0:5", ConfigKind::Graph) == ChipConfig({{0, 5}}));
    CHECK(parse_config("-2:1 0:3  2:1", ConfigKind::Line) ==
          ChipConfig({{-2, 1}, {0, 3}, {2, 1}}));
    CHECK(parse_config("1:2 1:3", ConfigKind::Graph) == ChipConfig({{1, 5}}));

    CHECK_THROWS_AS(parse_config("0:-2", ConfigKind::Line), ParseError);
    CHECK_THROWS_AS(parse_config("-1:2", ConfigKind::Graph), ParseError);
    CHECK_THROWS_AS(parse_config("zebra", ConfigKind::Line), ParseError);
    CHECK_THROWS_AS(parse_config("", ConfigKind::Line), ParseError);
    try {
        parse_config("0:1 nope:2", ConfigKind::Line);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 5);
    }

    CHECK(format_sparse(ChipConfig({{-2, 1}, {0, 3}})) == "-2:1 0:3");
    CHECK(format_sparse(MoveVector({{0, 3}, {1, 1}})) == "0:3 1:1");
    CHECK(format_config(ChipConfig({{0, 12}})) == "0:12");
    CHECK(format_config(ChipConfig({{0, 3}, {1, 1}})) == "_3_1");
}

TEST_CASE("graph files parse into firing systems") {
    std::istringstream in(
        "# a square with a doubled edge and one sink\n"
        "graph 4\n"
        "edge 0 1 2\n"
        "edge 1 2 1\n"
        "edge 2 3 1\n"
        "edge 3 0 1\n"
        "edge 0 1 1   # duplicates sum\n"
        "sink 3\n");
    FiringSystem g = parse_graph_file(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.multiplicity(0, 1) == 3);
    CHECK(g.degree(0) == 4);
    CHECK(g.is_sink(3));
    CHECK(!g.is_sink(0));
}

TEST_CASE("graph file errors carry line numbers") {
    auto expect_error_on_line = [](const std::string& text, std::size_t line) {
        std::istringstream in(text);
        try {
            parse_graph_file(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error_on_line("graph 2\nedge 0 5 1\n", 2);
    expect_error_on_line("graph 2\nedge 0 0 1\n", 2);
    expect_error_on_line("graph 2\nedge 0 1 0\n", 2);
    expect_error_on_line("edge 0 1 1\n", 1);
    expect_error_on_line("graph 2\nwormhole 0 1\n", 2);
    expect_error_on_line("graph 2\nsink 7\n", 2);
    expect_error_on_line("", 0);
}

TEST_CASE("text poset output is sorted and deterministic") {
    ConfigPoset cp = build_config_poset(FiringSystem::line(), origin_config(5));
    std::string text = emit_poset(cp.poset, PosetFormat::Text);
    CHECK(text == emit_poset(cp.poset, PosetFormat::Text));
    CHECK(text.find("elements 9\n") == 0);
    CHECK(text.find("covers 11\n") != std::string::npos);
    CHECK(text.find("10_3_01 > 11_1_11") != std::string::npos);
    CHECK(text.find("_5_") != std::string::npos);

    // 14 lines: header, 9 labels... actually 1 + 9 + 1 + 11 lines.
    CHECK(std::count(text.begin(), text.end(), '\n') == 22);
}

TEST_CASE("dot and tikz outputs are well formed") {
    ConfigPoset cp = build_config_poset(FiringSystem::line(), origin_config(4));
    std::string dot = emit_poset(cp.poset, PosetFormat::Dot);
    CHECK(dot.find("digraph poset {") == 0);
    CHECK(dot.find("rank=same") != std::string::npos);
    CHECK(dot.find("\"_4_\" -> ") != std::string::npos);
    CHECK(dot.rfind("}\n") == dot.size() - 2);

    std::string tikz = emit_poset(cp.poset, PosetFormat::Tikz);
    CHECK(tikz.find("\\begin{tikzpicture}") == 0);
    CHECK(tikz.find("\\end{tikzpicture}") != std::string::npos);
    CHECK(std::count(tikz.begin(), tikz.end(), '\n') ==
          2 + cp.poset.size() + static_cast<long>(cp.poset.covers().size()));

    std::string empty = emit_poset(FinitePoset(), PosetFormat::Text);
    CHECK(empty == "elements 0\ncovers 0\n");
}

TEST_CASE("move poset of the ten-chip endgame emits the published sizes") {
    MovePoset mp = build_move_poset(FiringSystem::line(), endgame_config(10));
    std::string text = emit_poset(mp.poset, PosetFormat::Text);
    CHECK(text.find("elements 25\n") == 0);
    CHECK(text.find("covers 40\n") != std::string::npos);
}
