#ifndef CHIPFIRE_FIRING_HPP
#define CHIPFIRE_FIRING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "chipfire/core.hpp"
#include "chipfire/system.hpp"

namespace chipfire {

inline constexpr std::uint64_t kDefaultStepCap = 1'000'000;

// Site-selection policy for stabilization. All policies reach the same
// final configuration and odometer (global confluence).
enum class Policy { LowestFirst, HighestFirst, SeededRandom };

// Non-sink sites whose chip count meets the firing threshold, ascending.
std::vector<Site> available_sites(const FiringSystem& sys, const ChipConfig& cfg);

bool is_fireable(const FiringSystem& sys, const ChipConfig& cfg, Site k);
bool is_stable(const FiringSystem& sys, const ChipConfig& cfg);

// Fires site k once: k loses degree(k) chips, each neighbor u gains
// m(k,u). Throws NotFireable if k is below threshold or a sink.
ChipConfig fire(const FiringSystem& sys, const ChipConfig& cfg, Site k);

// Applies fire for each site in order. Throws IllegalFiring with the
// 0-based index of the first non-fireable step.
ChipConfig replay(const FiringSystem& sys, const ChipConfig& cfg, std::span<const Site> seq);

struct StabilizeResult {
    ChipConfig config;
    MoveVector odometer;
};

// Fires policy-chosen available sites until none remains. Throws
// StepCapExceeded after step_cap firings (non-terminating game).
StabilizeResult stabilize(const FiringSystem& sys, const ChipConfig& cfg,
                          Policy policy = Policy::LowestFirst, std::uint64_t seed = 0,
                          std::uint64_t step_cap = kDefaultStepCap);

}  // namespace chipfire

#endif
