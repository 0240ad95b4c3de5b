#include "chipfire/system.hpp"

namespace chipfire {

FiringSystem FiringSystem::multigraph(int vertex_count,
                                      const std::vector<std::tuple<int, int, Count>>& edges,
                                      const std::set<int>& sinks) {
    if (vertex_count < 0) throw Error("negative vertex count");
    FiringSystem sys(Kind::Multigraph);
    sys.vertex_count_ = vertex_count;
    sys.adjacency_.resize(static_cast<std::size_t>(vertex_count));
    for (const auto& [u, v, m] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw Error("edge endpoint out of range");
        if (u == v) throw Error("loop edges are not allowed");
        if (m < 1) throw Error("edge multiplicity must be positive");
        sys.adjacency_[static_cast<std::size_t>(u)][v] += m;
        sys.adjacency_[static_cast<std::size_t>(v)][u] += m;
    }
    for (int s : sinks) {
        if (s < 0 || s >= vertex_count) throw Error("sink out of range");
        sys.sinks_.insert(s);
    }
    return sys;
}

Count FiringSystem::degree(Site k) const {
    if (kind_ == Kind::Line) return 2;
    if (!valid_site(k)) throw Error("vertex out of range: " + std::to_string(k));
    Count d = 0;
    for (const auto& [_, m] : adjacency_[static_cast<std::size_t>(k)]) d += m;
    return d;
}

bool FiringSystem::is_sink(Site k) const {
    return kind_ == Kind::Multigraph && sinks_.count(static_cast<int>(k)) > 0;
}

bool FiringSystem::valid_site(Site k) const {
    if (kind_ == Kind::Line) return true;
    return k >= 0 && k < vertex_count_;
}

Count FiringSystem::multiplicity(Site u, Site v) const {
    if (kind_ == Kind::Line) return (u == v - 1 || u == v + 1) ? 1 : 0;
    if (!valid_site(u) || !valid_site(v)) throw Error("vertex out of range");
    const auto& row = adjacency_[static_cast<std::size_t>(u)];
    auto it = row.find(v);
    return it == row.end() ? 0 : it->second;
}

void FiringSystem::for_each_neighbor(Site k,
                                     const std::function<void(Site, Count)>& fn) const {
    if (kind_ == Kind::Line) {
        fn(k - 1, 1);
        fn(k + 1, 1);
        return;
    }
    if (!valid_site(k)) throw Error("vertex out of range: " + std::to_string(k));
    for (const auto& [v, m] : adjacency_[static_cast<std::size_t>(k)]) fn(v, m);
}

}  // namespace chipfire
