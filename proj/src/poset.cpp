#include "chipfire/poset.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace chipfire {

// ---- Bitset ----

Bitset& Bitset::operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

bool Bitset::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

void Bitset::for_each(const std::function<void(std::size_t)>& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            auto b = static_cast<std::size_t>(std::countr_zero(w));
            fn(wi * 64 + b);
            w &= w - 1;
        }
    }
}

std::vector<std::size_t> Bitset::indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::size_t Bitset::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

// ---- FinitePoset construction ----

namespace {

// Reflexive-transitive down-closure over a DAG given by lower adjacency.
std::vector<Bitset> close_down(int n, const std::vector<std::vector<int>>& lower) {
    std::vector<Bitset> down(static_cast<std::size_t>(n));
    std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0=new 1=open 2=done
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (state[static_cast<std::size_t>(s)] == 2) continue;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            auto xi = static_cast<std::size_t>(x);
            if (state[xi] == 0) {
                state[xi] = 1;
                for (int y : lower[xi]) {
                    auto yi = static_cast<std::size_t>(y);
                    if (state[yi] == 1) throw Error("cycle in poset relation");
                    if (state[yi] == 0) stack.push_back(y);
                }
            } else {
                stack.pop_back();
                if (state[xi] == 2) continue;
                state[xi] = 2;
                Bitset d(static_cast<std::size_t>(n));
                d.set(xi);
                for (int y : lower[xi]) d |= down[static_cast<std::size_t>(y)];
                down[xi] = std::move(d);
            }
        }
    }
    return down;
}

}  // namespace

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels,
                                       const std::vector<std::pair<int, int>>& strict_pairs) {
    int n = static_cast<int>(labels.size());
    std::vector<std::vector<int>> lower(static_cast<std::size_t>(n));
    for (auto [x, y] : strict_pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n) throw Error("poset pair out of range");
        if (x == y) throw Error("strict pair relates an element to itself");
        lower[static_cast<std::size_t>(x)].push_back(y);
    }
    std::vector<Bitset> down = close_down(n, lower);

    // Transitive reduction: (x,y) is a cover iff no z strictly between.
    std::vector<std::pair<int, int>> covers;
    for (int x = 0; x < n; ++x) {
        const Bitset& dx = down[static_cast<std::size_t>(x)];
        dx.for_each([&](std::size_t yi) {
            int y = static_cast<int>(yi);
            if (y == x) return;
            bool between = false;
            dx.for_each([&](std::size_t zi) {
                int z = static_cast<int>(zi);
                if (between || z == x || z == y) return;
                if (down[zi].test(yi)) between = true;
            });
            if (!between) covers.emplace_back(x, y);
        });
    }
    return from_covers(std::move(labels), std::move(covers));
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> labels,
                                     std::vector<std::pair<int, int>> cover_pairs) {
    FinitePoset p;
    p.labels_ = std::move(labels);
    std::sort(cover_pairs.begin(), cover_pairs.end());
    cover_pairs.erase(std::unique(cover_pairs.begin(), cover_pairs.end()), cover_pairs.end());
    p.covers_ = std::move(cover_pairs);
    p.finalize_from_covers();
    return p;
}

void FinitePoset::finalize_from_covers() {
    int n = size();
    lower_covers_.assign(static_cast<std::size_t>(n), {});
    upper_covers_.assign(static_cast<std::size_t>(n), {});
    for (auto [x, y] : covers_) {
        if (x < 0 || x >= n || y < 0 || y >= n || x == y) throw Error("bad cover pair");
        lower_covers_[static_cast<std::size_t>(x)].push_back(y);
        upper_covers_[static_cast<std::size_t>(y)].push_back(x);
    }
    down_ = close_down(n, lower_covers_);

    // depth = longest cover chain from a maximal element; process in an
    // order where all upper covers come first (descending down-set size
    // works for chains but not in general, so iterate to fixpoint).
    depth_.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return down_[static_cast<std::size_t>(a)].count() >
               down_[static_cast<std::size_t>(b)].count();
    });
    for (int x : order) {
        auto xi = static_cast<std::size_t>(x);
        for (int u : upper_covers_[xi])
            depth_[xi] = std::max(depth_[xi], depth_[static_cast<std::size_t>(u)] + 1);
    }
}

// ---- lattice operations ----

namespace {

// GLB inside a candidate set that is an intersection of down-sets: any
// member z has down(z) contained in the set, so z is the greatest lower
// bound iff |down(z)| == |set|.
int extremum_in(const Bitset& candidates, const std::vector<Bitset>& closure) {
    std::size_t target = candidates.count();
    if (target == 0) return -2;  // no bound at all
    int found = -1;
    candidates.for_each([&](std::size_t zi) {
        if (found >= 0) return;
        if (closure[zi].count() == target) found = static_cast<int>(zi);
    });
    return found;  // -1: bounds exist but no extremum
}

}  // namespace

FinitePoset::BoundResult FinitePoset::meet(int x, int y) const {
    Bitset lb = down_[static_cast<std::size_t>(x)] & down_[static_cast<std::size_t>(y)];
    int z = extremum_in(lb, down_);
    if (z == -2) return {BoundStatus::NoBound, -1};
    if (z == -1) return {BoundStatus::NoExtremum, -1};
    return {BoundStatus::Found, z};
}

FinitePoset::BoundResult FinitePoset::join(int x, int y) const {
    int n = size();
    Bitset ub(static_cast<std::size_t>(n));
    for (int z = 0; z < n; ++z) {
        const Bitset& dz = down_[static_cast<std::size_t>(z)];
        if (dz.test(static_cast<std::size_t>(x)) && dz.test(static_cast<std::size_t>(y)))
            ub.set(static_cast<std::size_t>(z));
    }
    if (!ub.any()) return {BoundStatus::NoBound, -1};
    // least upper bound: the member below every other member of ub
    std::size_t total = ub.count();
    int lub = -1;
    ub.for_each([&](std::size_t zi) {
        if (lub >= 0) return;
        std::size_t above = 0;
        ub.for_each([&](std::size_t wi) {
            if (down_[wi].test(zi)) ++above;
        });
        if (above == total) lub = static_cast<int>(zi);
    });
    if (lub < 0) return {BoundStatus::NoExtremum, -1};
    return {BoundStatus::Found, lub};
}

const std::vector<int>& FinitePoset::meet_table() const {
    if (!meet_table_.empty()) return meet_table_;
    auto n = static_cast<std::size_t>(size());
    meet_table_.assign(n * n, -1);
    for (std::size_t x = 0; x < n; ++x) {
        meet_table_[x * n + x] = static_cast<int>(x);
        for (std::size_t y = 0; y < x; ++y) {
            Bitset lb = down_[x] & down_[y];
            int z = extremum_in(lb, down_);
            int v = z >= 0 ? z : -1;
            meet_table_[x * n + y] = v;
            meet_table_[y * n + x] = v;
        }
    }
    return meet_table_;
}

const std::vector<int>& FinitePoset::join_table() const {
    if (!join_table_.empty()) return join_table_;
    auto n = static_cast<std::size_t>(size());
    // up-sets once, then the same extremum trick as for meets
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t z = 0; z < n; ++z)
        down_[z].for_each([&](std::size_t yi) { up[yi].set(z); });
    join_table_.assign(n * n, -1);
    for (std::size_t x = 0; x < n; ++x) {
        join_table_[x * n + x] = static_cast<int>(x);
        for (std::size_t y = 0; y < x; ++y) {
            Bitset ub = up[x] & up[y];
            int z = extremum_in(ub, up);
            int v = z >= 0 ? z : -1;
            join_table_[x * n + y] = v;
            join_table_[y * n + x] = v;
        }
    }
    return join_table_;
}

FinitePoset::LatticeCheck FinitePoset::is_lattice() const {
    auto n = static_cast<std::size_t>(size());
    const auto& mt = meet_table();
    const auto& jt = join_table();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (mt[x * n + y] < 0 || jt[x * n + y] < 0)
                return {false, {static_cast<int>(x), static_cast<int>(y)}};
    return {true, {-1, -1}};
}

std::vector<int> FinitePoset::join_irreducibles() const {
    if (!is_lattice().ok) throw NotALattice("poset is not a lattice");
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (lower_covers_[static_cast<std::size_t>(i)].size() == 1) out.push_back(i);
    return out;
}

FinitePoset::DistributivityCheck FinitePoset::is_distributive() const {
    if (!is_lattice().ok) throw NotALattice("poset is not a lattice");
    auto n = static_cast<std::size_t>(size());
    const int* mt = meet_table().data();
    const int* jt = join_table().data();
    for (std::size_t x = 0; x < n; ++x) {
        const int* mx = mt + x * n;
        for (std::size_t y = 0; y < n; ++y) {
            const int mxy = mx[y];
            const int* jyz = jt + y * n;
            for (std::size_t z = 0; z < n; ++z) {
                int lhs = mx[jyz[z]];
                int rhs = jt[static_cast<std::size_t>(mxy) * n + mx[z]];
                if (lhs != rhs)
                    return {false, {static_cast<int>(x), static_cast<int>(y),
                                    static_cast<int>(z)}};
            }
        }
    }
    return {true, {-1, -1, -1}};
}

FinitePoset::UldCheck FinitePoset::is_uld(bool upper_orientation) const {
    if (!is_lattice().ok) throw NotALattice("poset is not a lattice");
    auto n = static_cast<std::size_t>(size());
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t z = 0; z < n; ++z)
        down_[z].for_each([&](std::size_t yi) { up[yi].set(z); });

    const auto& primary = upper_orientation ? up : down_;
    for (std::size_t x = 0; x < n; ++x) {
        const std::vector<int>& covers =
            upper_orientation ? upper_covers_[x] : lower_covers_[x];
        std::size_t d = covers.size();
        if (d == 0) continue;
        // extremum (meet resp. join) of the covers
        Bitset common = primary[static_cast<std::size_t>(covers[0])];
        for (std::size_t i = 1; i < d; ++i)
            common &= primary[static_cast<std::size_t>(covers[i])];
        int ext = extremum_in(common, primary);
        if (ext < 0) return {false, static_cast<int>(x)};
        // interval between x and the extremum
        Bitset interval = primary[x];
        interval &= upper_orientation ? down_[static_cast<std::size_t>(ext)]
                                      : up[static_cast<std::size_t>(ext)];
        if (d >= 63 || interval.count() != (std::size_t{1} << d))
            return {false, static_cast<int>(x)};
        // hypercube: map each member to the subset of covers it lies under
        // (over, in the flipped orientation); demand a bijection onto
        // subsets that reverses order.
        std::vector<std::pair<std::uint64_t, std::size_t>> members;
        bool bad = false;
        std::unordered_set<std::uint64_t> seen;
        interval.for_each([&](std::size_t zi) {
            if (bad) return;
            std::uint64_t s = 0;
            for (std::size_t i = 0; i < d; ++i)
                if (primary[static_cast<std::size_t>(covers[i])].test(zi))
                    s |= std::uint64_t{1} << i;
            if (!seen.insert(s).second) bad = true;
            members.emplace_back(s, zi);
        });
        if (bad) return {false, static_cast<int>(x)};
        for (const auto& [s1, z1] : members)
            for (const auto& [s2, z2] : members) {
                bool rel = primary[z1].test(z2);  // z2 closer to the extremum side
                bool sub = (s1 & ~s2) == 0;       // s1 subset of s2
                if (rel != sub) return {false, static_cast<int>(x)};
            }
    }
    return {true, -1};
}

FinitePoset FinitePoset::restrict(const std::vector<int>& elements) const {
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (int e : elements) labels.push_back(labels_[static_cast<std::size_t>(e)]);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j)
            if (i != j && geq(elements[i], elements[j]))
                pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return from_relation(std::move(labels), pairs);
}

// ---- enumeration ----

IdealEnumeration order_ideals(const FinitePoset& p, std::size_t ideal_cap) {
    auto n = static_cast<std::size_t>(p.size());
    // strict down-sets: everything that must be present before an element
    // can join an ideal
    std::vector<Bitset> below(n, Bitset(n));
    for (std::size_t e = 0; e < n; ++e) {
        below[e] = p.down(static_cast<int>(e));
        below[e].reset(e);
    }

    IdealEnumeration out;
    std::unordered_map<Bitset, int, BitsetHash> index;
    std::vector<std::pair<int, int>> covers;  // (superset, subset)
    Bitset empty(n);
    out.ideals.push_back(empty);
    index.emplace(empty, 0);
    for (std::size_t head = 0; head < out.ideals.size(); ++head) {
        Bitset cur = out.ideals[head];
        for (std::size_t e = 0; e < n; ++e) {
            if (cur.test(e) || !below[e].is_subset_of(cur)) continue;
            Bitset next = cur;
            next.set(e);
            auto [it, inserted] = index.emplace(next, static_cast<int>(out.ideals.size()));
            if (inserted) {
                if (out.ideals.size() >= ideal_cap)
                    throw CapExceeded("more than " + std::to_string(ideal_cap) +
                                      " order ideals");
                out.ideals.push_back(std::move(next));
            }
            covers.emplace_back(it->second, static_cast<int>(head));
        }
    }
    std::vector<std::string> labels;
    labels.reserve(out.ideals.size());
    for (const Bitset& ideal : out.ideals) {
        std::string s = "{";
        ideal.for_each([&](std::size_t e) {
            if (s.size() > 1) s += ',';
            s += p.label(static_cast<int>(e));
        });
        s += '}';
        labels.push_back(std::move(s));
    }
    out.lattice = FinitePoset::from_covers(std::move(labels), std::move(covers));
    return out;
}

void linear_extensions(const FinitePoset& p, std::size_t cap,
                       const std::function<bool(const std::vector<int>&)>& yield) {
    auto n = static_cast<std::size_t>(p.size());
    // strict ancestors of each element; an element may be placed once all
    // of them are placed (greatest-first order)
    std::vector<Bitset> above(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x)
        p.down(static_cast<int>(x)).for_each([&](std::size_t y) {
            if (y != x) above[y].set(x);
        });

    std::vector<int> seq;
    Bitset placed(n);
    std::size_t yielded = 0;
    bool stop = false;

    auto rec = [&](auto&& self) -> void {
        if (stop) return;
        if (seq.size() == n) {
            if (++yielded > cap) throw CapExceeded("more than " + std::to_string(cap) +
                                                   " linear extensions");
            if (!yield(seq)) stop = true;
            return;
        }
        for (std::size_t e = 0; e < n && !stop; ++e) {
            if (placed.test(e) || !above[e].is_subset_of(placed)) continue;
            placed.set(e);
            seq.push_back(static_cast<int>(e));
            self(self);
            seq.pop_back();
            placed.reset(e);
        }
    };
    rec(rec);
}

std::vector<std::vector<int>> linear_extensions(const FinitePoset& p, std::size_t cap) {
    std::vector<std::vector<int>> out;
    linear_extensions(p, cap, [&](const std::vector<int>& seq) {
        out.push_back(seq);
        return true;
    });
    return out;
}

std::uint64_t count_linear_extensions(const FinitePoset& p) {
    auto n = static_cast<std::size_t>(p.size());
    std::vector<Bitset> above(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x)
        p.down(static_cast<int>(x)).for_each([&](std::size_t y) {
            if (y != x) above[y].set(x);
        });
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::unordered_map<Bitset, std::uint64_t, BitsetHash> memo;
    auto rec = [&](auto&& self, const Bitset& placed, std::size_t k) -> std::uint64_t {
        if (k == n) return 1;
        auto it = memo.find(placed);
        if (it != memo.end()) return it->second;
        std::uint64_t total = 0;
        for (std::size_t e = 0; e < n; ++e) {
            if (placed.test(e) || !above[e].is_subset_of(placed)) continue;
            Bitset next = placed;
            next.set(e);
            std::uint64_t sub = self(self, next, k + 1);
            total = (total > kMax - sub) ? kMax : total + sub;
        }
        memo.emplace(placed, total);
        return total;
    };
    return rec(rec, Bitset(n), 0);
}

bool embed_check(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& p_to_q) {
    if (p.size() != q.size() || static_cast<int>(p_to_q.size()) != p.size())
        throw NotBijective("map size mismatch");
    std::vector<bool> hit(static_cast<std::size_t>(q.size()), false);
    for (int img : p_to_q) {
        if (img < 0 || img >= q.size() || hit[static_cast<std::size_t>(img)])
            throw NotBijective("map is not a bijection onto the target");
        hit[static_cast<std::size_t>(img)] = true;
    }
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.geq(x, y) !=
                q.geq(p_to_q[static_cast<std::size_t>(x)], p_to_q[static_cast<std::size_t>(y)]))
                return false;
    return true;
}

}  // namespace chipfire
