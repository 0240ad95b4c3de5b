#ifndef CHIPFIRE_POSET_HPP
#define CHIPFIRE_POSET_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chipfire/core.hpp"

namespace chipfire {

// Fixed-size bitset sized at runtime; enough for poset down-sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    Bitset& operator|=(const Bitset& o);
    Bitset& operator&=(const Bitset& o);
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool any() const;
    std::size_t count() const;
    bool is_subset_of(const Bitset& o) const;
    // Calls fn for each set index, ascending.
    void for_each(const std::function<void(std::size_t)>& fn) const;
    std::vector<std::size_t> indices() const;

    friend bool operator==(const Bitset&, const Bitset&) = default;
    std::size_t hash() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

// Finite poset with opaque string labels. Configuration posets use the
// reversed convention larger = earlier, so the initial configuration is
// the maximum. Covers are stored as (upper, lower) pairs.
class FinitePoset {
public:
    FinitePoset() = default;

    // strict_pairs are (greater, lesser); the cover relation is recovered
    // by transitive reduction of the reflexive-transitive closure.
    static FinitePoset from_relation(std::vector<std::string> labels,
                                     const std::vector<std::pair<int, int>>& strict_pairs);

    // cover_pairs must already be transitively reduced and acyclic.
    static FinitePoset from_covers(std::vector<std::string> labels,
                                   std::vector<std::pair<int, int>> cover_pairs);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& lower_covers(int i) const { return lower_covers_[i]; }
    const std::vector<int>& upper_covers(int i) const { return upper_covers_[i]; }

    // x >= y (y lies in the down-set of x); reflexive.
    bool geq(int x, int y) const { return down_[x].test(static_cast<std::size_t>(y)); }
    const Bitset& down(int x) const { return down_[x]; }

    // Length of the longest cover chain from a maximal element down to i.
    int depth(int i) const { return depth_[i]; }

    // ---- lattice operations ----

    enum class BoundStatus { Found, NoBound, NoExtremum };
    struct BoundResult {
        BoundStatus status;
        int element = -1;  // valid iff status == Found
    };

    BoundResult meet(int x, int y) const;  // greatest lower bound
    BoundResult join(int x, int y) const;  // least upper bound

    struct LatticeCheck {
        bool ok;
        std::pair<int, int> failing{-1, -1};
    };
    LatticeCheck is_lattice() const;

    // Elements covering exactly one element. Throws NotALattice.
    std::vector<int> join_irreducibles() const;

    struct DistributivityCheck {
        bool ok;
        std::array<int, 3> witness{-1, -1, -1};  // first failing (x,y,z) by index
    };
    DistributivityCheck is_distributive() const;

    struct UldCheck {
        bool ok;
        int witness = -1;
    };
    // True iff for every element, the interval between it and the meet of
    // its lower covers is a hypercube. upper_orientation flips the check to
    // upper covers and their join (the textbook direction under the usual,
    // non-reversed order).
    UldCheck is_uld(bool upper_orientation = false) const;

    // Restriction to a subset of elements, with the induced order.
    FinitePoset restrict(const std::vector<int>& elements) const;

private:
    void finalize_from_covers();

    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_;  // (upper, lower)
    std::vector<std::vector<int>> lower_covers_, upper_covers_;
    std::vector<Bitset> down_;
    std::vector<int> depth_;

    mutable std::vector<int> meet_table_, join_table_;  // lazy, -1 = undefined
    const std::vector<int>& meet_table() const;
    const std::vector<int>& join_table() const;
};

// ---- enumeration ----

struct IdealEnumeration {
    std::vector<Bitset> ideals;  // over elements of the source poset
    FinitePoset lattice;         // ideals ordered by containment (superset = greater)
};

// All down-closed subsets. Throws CapExceeded beyond ideal_cap.
IdealEnumeration order_ideals(const FinitePoset& p, std::size_t ideal_cap = 1'000'000);

// Total orders consistent with p, greatest-first (matching firing
// chronology). Deterministic: candidates are tried in index order. Returns
// false from the callback to stop early. Throws CapExceeded past cap.
void linear_extensions(const FinitePoset& p, std::size_t cap,
                       const std::function<bool(const std::vector<int>&)>& yield);
std::vector<std::vector<int>> linear_extensions(const FinitePoset& p,
                                                std::size_t cap = 1'000'000);

// Number of linear extensions, saturating at UINT64_MAX.
std::uint64_t count_linear_extensions(const FinitePoset& p);

// True iff p_to_q is an order isomorphism: x >= y in p  <=>  f(x) >= f(y)
// in q. Throws NotBijective if p_to_q is not a bijection onto q.
bool embed_check(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& p_to_q);

}  // namespace chipfire

#endif
