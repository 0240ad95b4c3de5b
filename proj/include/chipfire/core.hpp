#ifndef CHIPFIRE_CORE_HPP
#define CHIPFIRE_CORE_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>

namespace chipfire {

// A site is either a vertex index of a finite multigraph (0..V-1) or a
// signed coordinate on the integer line.
using Site = std::int64_t;
using Count = std::int64_t;
using SparseMap = std::map<Site, Count>;

// ---- errors ----

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotFireable : Error {
    using Error::Error;
};

struct IllegalFiring : Error {
    std::size_t index;
    IllegalFiring(std::size_t i, const std::string& what) : Error(what), index(i) {}
};

struct StepCapExceeded : Error {
    using Error::Error;
};

struct StateCapExceeded : Error {
    using Error::Error;
};

struct SeqCapExceeded : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct NotALattice : Error {
    using Error::Error;
};

struct Unreachable : Error {
    using Error::Error;
};

struct NotBijective : Error {
    using Error::Error;
};

struct IndexTooLarge : Error {
    using Error::Error;
};

struct ConfigNotFound : Error {
    using Error::Error;
};

struct OddChipCount : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t line, column;
    ParseError(std::size_t ln, std::size_t col, const std::string& what)
        : Error(what), line(ln), column(col) {}
};

// ---- chip configuration ----

// Finite-support map site -> chip count. Zero entries are dropped on
// construction and mutation, so equality and ordering are structural.
class ChipConfig {
public:
    ChipConfig() = default;
    explicit ChipConfig(SparseMap entries);
    ChipConfig(std::initializer_list<SparseMap::value_type> init)
        : ChipConfig(SparseMap(init)) {}

    Count at(Site k) const {
        auto it = entries_.find(k);
        return it == entries_.end() ? 0 : it->second;
    }

    // Adds delta chips at k; throws on a resulting negative count.
    void add(Site k, Count delta);

    Count total() const { return total_; }
    const SparseMap& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    // Canonical string key, used for hashing and deduplication.
    std::string key() const;

    friend bool operator==(const ChipConfig&, const ChipConfig&) = default;
    friend auto operator<=>(const ChipConfig& a, const ChipConfig& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    SparseMap entries_;
    Count total_ = 0;
};

// ---- firing moves and move vectors ----

// The j-th firing move at a site, written k^j (j >= 1).
struct FiringMove {
    Site site;
    Count index;

    std::string str() const;
    friend bool operator==(const FiringMove&, const FiringMove&) = default;
    friend auto operator<=>(const FiringMove&, const FiringMove&) = default;
};

// Per-site firing counts (the odometer of a partial or complete game).
// Componentwise order encodes move-set containment because moves at one
// site are totally ordered.
class MoveVector {
public:
    MoveVector() = default;
    explicit MoveVector(SparseMap counts);
    MoveVector(std::initializer_list<SparseMap::value_type> init)
        : MoveVector(SparseMap(init)) {}

    Count at(Site k) const {
        auto it = counts_.find(k);
        return it == counts_.end() ? 0 : it->second;
    }

    void bump(Site k, Count delta = 1);
    Count total() const { return total_; }
    const SparseMap& counts() const { return counts_; }

    bool leq(const MoveVector& other) const;

    static MoveVector componentwise_min(const MoveVector& a, const MoveVector& b);
    static MoveVector componentwise_max(const MoveVector& a, const MoveVector& b);

    friend bool operator==(const MoveVector&, const MoveVector&) = default;

private:
    SparseMap counts_;
    Count total_ = 0;
};

}  // namespace chipfire

#endif
