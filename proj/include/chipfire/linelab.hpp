#ifndef CHIPFIRE_LINELAB_HPP
#define CHIPFIRE_LINELAB_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chipfire/builder.hpp"
#include "chipfire/core.hpp"

namespace chipfire {

// n chips at the origin of the line.
ChipConfig origin_config(Count n);

// For n = 2m: one chip at each of -(m-1)..-1 and 1..m-1, two at the
// origin. Throws OddChipCount for odd n.
ChipConfig endgame_config(Count n);

// ---- endgame lattice verification ----

struct EndgameReport {
    int m = 0;
    int config_count = 0;
    int move_count = 0;
    int ideal_count = 0;
    bool lattice = false;
    bool mv_min_max = false;       // mv(join) = min, mv(meet) = max, all pairs
    bool distributive = false;
    bool ideal_isomorphism = false;

    bool passed() const { return lattice && mv_min_max && distributive && ideal_isomorphism; }
    std::string summary() const;
};

EndgameReport verify_endgame_lattice_one(int m);
std::vector<EndgameReport> verify_endgame_lattice(int m_max);

// ---- counterexample reproduction ----

struct CounterexampleTranscript {
    Count n = 0;
    // (row name, compact configuration), in the order x, y, z, y∨z,
    // x∧(y∨z), x∧y, x∧z, (x∧y)∨(x∧z)
    std::vector<std::pair<std::string, std::string>> rows;
    bool violates_distributivity = false;  // x∧(y∨z) != (x∧y)∨(x∧z)

    std::string text() const;
};

// Pins the published configurations for n = 5 or 8 and recomputes every
// row. Throws ConfigNotFound if a pinned configuration is missing from
// the poset, Error for other n.
CounterexampleTranscript reproduce_counterexample(Count n);

// ---- invalid linear extensions ----

struct ExtensionDemo {
    Count n = 0;
    std::uint64_t extension_count = 0;       // linear extensions of the move poset
    std::uint64_t valid_count = 0;           // those that replay legally
    bool enumerated = false;                 // full enumeration vs counted by DP
    std::vector<Site> invalid_sites;         // a concrete invalid extension
    std::size_t fail_index = 0;              // replay failure index, 0-based

    std::string text() const;
};

// Demonstrates that not every linear extension of the move poset is a
// legal firing sequence. For n=5 the site sequence (0,0,0,1,-1) is found
// among the extensions and fails at index 2; for n=8 an extension with
// five leading origin fires is constructed and fails.
ExtensionDemo invalid_extension_demo(Count n, std::size_t enum_cap = 100'000);

// ---- labeled chip-firing ----

// Site -> sorted labels currently at that site. Labels are 1..n.
using LabeledConfig = std::map<Site, std::vector<int>>;

struct LabeledRun {
    LabeledConfig final_config;
    MoveVector odometer;  // unlabeled projection of the run

    bool sorted() const;  // labels strictly increasing across sites
};

// Places labels 1..n at the origin and repeatedly picks a seeded-random
// site holding >= 2 chips and a random pair there, sending the smaller
// label left and the larger right, until stable.
LabeledRun labeled_fire_run(Count n, std::uint64_t seed);

}  // namespace chipfire

#endif
