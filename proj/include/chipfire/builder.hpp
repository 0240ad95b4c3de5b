#ifndef CHIPFIRE_BUILDER_HPP
#define CHIPFIRE_BUILDER_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chipfire/core.hpp"
#include "chipfire/firing.hpp"
#include "chipfire/poset.hpp"
#include "chipfire/system.hpp"

namespace chipfire {

inline constexpr std::uint64_t kDefaultStateCap = 1'000'000;

// The poset of configurations reachable from a root configuration,
// ordered by reachability (root = unique maximum). Element 0 is the root.
struct ConfigPoset {
    FinitePoset poset;
    std::vector<ChipConfig> configs;    // index-aligned with poset elements
    std::vector<MoveVector> mv;         // odometer from the root, per element
    std::vector<std::vector<std::pair<int, Site>>> fired;  // i -> [(child, site)]

    int index_of(const ChipConfig& c) const;  // -1 if absent
    int require(const ChipConfig& c) const;   // throws ConfigNotFound

private:
    friend ConfigPoset build_config_poset(const FiringSystem&, const ChipConfig&,
                                          std::uint64_t);
    std::unordered_map<std::string, int> index_;
};

// Breadth-first closure over firing transitions. Runs stabilize first to
// reject non-terminating games. Throws StateCapExceeded past state_cap.
ConfigPoset build_config_poset(const FiringSystem& sys, const ChipConfig& root,
                               std::uint64_t state_cap = kDefaultStateCap);

// Per-site firing counts along any path c0 -> c1; path-independent.
// Throws Unreachable if c1 is not reachable from c0.
MoveVector mv_vector(const ConfigPoset& cp, const ChipConfig& c0, const ChipConfig& c1);

// Runs a complete firing sequence until j-1 fires at k have happened,
// then fires everything except k to exhaustion. The result has exactly
// one available site, k, and its next fire is k^j.
ChipConfig only_move_config(const FiringSystem& sys, const ChipConfig& root, Site k,
                            Count j, Policy policy = Policy::LowestFirst,
                            std::uint64_t seed = 0,
                            std::uint64_t step_cap = kDefaultStepCap);

// Graph-surgery variant of the same construction: adds v1 and v2 with N
// parallel edges k-v1 and N*j edges v1-v2, where N = total chips + 1, and
// N*(j-1) extra chips at k. Stabilizing the result and restricting to the
// original vertices recovers only_move_config(k, j).
std::pair<FiringSystem, ChipConfig> augmented_system(const FiringSystem& graph,
                                                     const ChipConfig& c, int k, Count j);

// A finite path graph hosting a line game, sized so no reachable
// configuration ever touches the path boundary.
struct LineEmbedding {
    FiringSystem graph;
    Site lo;      // line coordinate mapped to path vertex 0
    int length;

    int to_vertex(Site k) const { return static_cast<int>(k - lo); }
    Site to_line(int v) const { return lo + v; }
    ChipConfig embed(const ChipConfig& line_cfg) const;
    // Restriction back to line coordinates; throws if a boundary vertex
    // holds chips (the embedding was too small, which is a bug).
    ChipConfig restrict_to_line(const ChipConfig& path_cfg) const;
};

LineEmbedding embed_line_on_path(const ConfigPoset& line_poset, int margin = 2);

// The poset of firing moves k^j, ordered by forced precedence. Element i
// corresponds to moves[i]; only_move_cfgs[i] is its c(k^j).
struct MovePoset {
    FinitePoset poset;
    std::vector<FiringMove> moves;
    std::vector<ChipConfig> only_move_cfgs;

    int index_of(FiringMove m) const;
};

// Order via reachability between the only-move configurations c(k^j),
// which is equivalent to the forced-precedence definition.
MovePoset build_move_poset(const FiringSystem& sys, const ChipConfig& root,
                           std::uint64_t state_cap = kDefaultStateCap);

// Independent oracle for the move order, straight from the definition:
// enumerate every complete firing sequence; k^j >= k'^j' iff no sequence
// places k'^j' strictly before k^j. Throws SeqCapExceeded.
struct BruteForceOrder {
    std::vector<FiringMove> moves;
    std::vector<std::pair<int, int>> strict_geq;  // (greater, lesser) indices
    std::uint64_t sequence_count = 0;

    bool geq(int a, int b) const;
};

BruteForceOrder brute_force_move_order(const FiringSystem& sys, const ChipConfig& root,
                                       std::uint64_t seq_cap = 1'000'000);

// Instance verification of the join-irreducible correspondence: the
// join-irreducibles of the configuration poset, each mapped to the unique
// move available from it, form the move poset.
struct JoinTheoremReport {
    int config_count = 0;
    int join_irreducible_count = 0;
    int move_count = 0;
    bool lattice = false;
    bool bijection = false;          // each join-irreducible equals its c(k^j)
    bool order_isomorphic = false;

    bool passed() const { return lattice && bijection && order_isomorphic; }
    std::string summary() const;
};

JoinTheoremReport verify_join_theorem(const FiringSystem& sys, const ChipConfig& root,
                                      std::uint64_t state_cap = kDefaultStateCap);

}  // namespace chipfire

#endif
