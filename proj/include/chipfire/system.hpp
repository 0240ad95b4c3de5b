#ifndef CHIPFIRE_SYSTEM_HPP
#define CHIPFIRE_SYSTEM_HPP

#include <functional>
#include <set>
#include <tuple>
#include <vector>

#include "chipfire/core.hpp"

namespace chipfire {

// A firing system: either the integer line (threshold 2, neighbors k-1 and
// k+1) or a finite multigraph with explicit edge multiplicities and an
// optional sink set. Sinks are never eligible to fire.
class FiringSystem {
public:
    enum class Kind { Line, Multigraph };

    static FiringSystem line() { return FiringSystem(Kind::Line); }

    // edges: (u, v, multiplicity); duplicate pairs sum. Loops are rejected.
    static FiringSystem multigraph(int vertex_count,
                                   const std::vector<std::tuple<int, int, Count>>& edges,
                                   const std::set<int>& sinks = {});

    Kind kind() const { return kind_; }
    bool is_line() const { return kind_ == Kind::Line; }
    int vertex_count() const { return vertex_count_; }

    // Firing threshold = total incident edge multiplicity (2 on the line).
    Count degree(Site k) const;
    bool is_sink(Site k) const;
    bool valid_site(Site k) const;
    Count multiplicity(Site u, Site v) const;

    void for_each_neighbor(Site k, const std::function<void(Site, Count)>& fn) const;

    const std::set<int>& sinks() const { return sinks_; }

private:
    explicit FiringSystem(Kind kind) : kind_(kind) {}

    Kind kind_;
    int vertex_count_ = 0;
    std::vector<SparseMap> adjacency_;  // multigraph only
    std::set<int> sinks_;
};

}  // namespace chipfire

#endif
