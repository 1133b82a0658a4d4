#pragma once

#include <map>

#include "prepro/quiver.hpp"

namespace prepro {

/// Arrow-degree assignment. Total degree of a path is the sum over its word;
/// serialization orders entries by arrow id.
using WeightGrading = std::map<ArrowId, int>;

inline int path_degree(const WeightGrading& g, const Path& p) {
    int d = 0;
    for (const ArrowId a : p.word) d += g.at(a);
    return d;
}

}  // namespace prepro
