#include "chipfire/firing.hpp"

#include <random>

namespace chipfire {

bool is_fireable(const FiringSystem& sys, const ChipConfig& cfg, Site k) {
    if (!sys.valid_site(k) || sys.is_sink(k)) return false;
    Count d = sys.degree(k);
    return d >= 1 && cfg.at(k) >= d;
}

std::vector<Site> available_sites(const FiringSystem& sys, const ChipConfig& cfg) {
    std::vector<Site> out;
    for (const auto& [k, v] : cfg.entries())
        if (is_fireable(sys, cfg, k)) out.push_back(k);
    return out;  // map iteration order is ascending
}

bool is_stable(const FiringSystem& sys, const ChipConfig& cfg) {
    for (const auto& [k, v] : cfg.entries())
        if (is_fireable(sys, cfg, k)) return false;
    return true;
}

ChipConfig fire(const FiringSystem& sys, const ChipConfig& cfg, Site k) {
    if (!is_fireable(sys, cfg, k))
        throw NotFireable("site " + std::to_string(k) + " cannot fire");
    ChipConfig next = cfg;
    next.add(k, -sys.degree(k));
    sys.for_each_neighbor(k, [&](Site u, Count m) { next.add(u, m); });
    return next;
}

ChipConfig replay(const FiringSystem& sys, const ChipConfig& cfg, std::span<const Site> seq) {
    ChipConfig cur = cfg;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!is_fireable(sys, cur, seq[i]))
            throw IllegalFiring(i, "site " + std::to_string(seq[i]) +
                                       " not fireable at step " + std::to_string(i));
        cur = fire(sys, cur, seq[i]);
    }
    return cur;
}

StabilizeResult stabilize(const FiringSystem& sys, const ChipConfig& cfg, Policy policy,
                          std::uint64_t seed, std::uint64_t step_cap) {
    ChipConfig cur = cfg;
    MoveVector odometer;
    std::mt19937_64 rng(seed);
    for (std::uint64_t steps = 0;; ++steps) {
        std::vector<Site> av = available_sites(sys, cur);
        if (av.empty()) return {std::move(cur), std::move(odometer)};
        if (steps >= step_cap)
            throw StepCapExceeded("no stabilization within " + std::to_string(step_cap) +
                                  " firings");
        Site k;
        switch (policy) {
            case Policy::LowestFirst: k = av.front(); break;
            case Policy::HighestFirst: k = av.back(); break;
            case Policy::SeededRandom:
                k = av[std::uniform_int_distribution<std::size_t>(0, av.size() - 1)(rng)];
                break;
            default: throw Error("unknown policy");
        }
        cur = fire(sys, cur, k);
        odometer.bump(k);
    }
}

}  // namespace chipfire
