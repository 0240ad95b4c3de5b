#include "chipfire/core.hpp"

#include <sstream>

namespace chipfire {

ChipConfig::ChipConfig(SparseMap entries) {
    for (auto& [k, v] : entries) {
        if (v < 0) throw Error("negative chip count at site " + std::to_string(k));
        if (v > 0) {
            entries_.emplace(k, v);
            total_ += v;
        }
    }
}

void ChipConfig::add(Site k, Count delta) {
    if (delta == 0) return;
    auto [it, inserted] = entries_.try_emplace(k, 0);
    it->second += delta;
    if (it->second < 0) {
        it->second -= delta;
        if (inserted) entries_.erase(it);
        throw Error("negative chip count at site " + std::to_string(k));
    }
    total_ += delta;
    if (it->second == 0) entries_.erase(it);
}

std::string ChipConfig::key() const {
    std::ostringstream out;
    for (const auto& [k, v] : entries_) out << k << ':' << v << ';';
    return out.str();
}

std::string FiringMove::str() const {
    return std::to_string(site) + "^" + std::to_string(index);
}

MoveVector::MoveVector(SparseMap counts) {
    for (auto& [k, v] : counts) {
        if (v < 0) throw Error("negative firing count at site " + std::to_string(k));
        if (v > 0) {
            counts_.emplace(k, v);
            total_ += v;
        }
    }
}

void MoveVector::bump(Site k, Count delta) {
    if (delta == 0) return;
    auto [it, inserted] = counts_.try_emplace(k, 0);
    it->second += delta;
    if (it->second < 0) {
        it->second -= delta;
        if (inserted) counts_.erase(it);
        throw Error("negative firing count at site " + std::to_string(k));
    }
    total_ += delta;
    if (it->second == 0) counts_.erase(it);
}

bool MoveVector::leq(const MoveVector& other) const {
    for (const auto& [k, v] : counts_)
        if (v > other.at(k)) return false;
    return true;
}

MoveVector MoveVector::componentwise_min(const MoveVector& a, const MoveVector& b) {
    MoveVector out;
    for (const auto& [k, v] : a.counts_) {
        Count m = std::min(v, b.at(k));
        if (m > 0) out.bump(k, m);
    }
    return out;
}

MoveVector MoveVector::componentwise_max(const MoveVector& a, const MoveVector& b) {
    MoveVector out = a;
    for (const auto& [k, v] : b.counts_) {
        Count cur = out.at(k);
        if (v > cur) out.bump(k, v - cur);
    }
    return out;
}

}  // namespace chipfire
