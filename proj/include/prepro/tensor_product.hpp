#pragma once

#include <map>
#include <utility>

#include "prepro/presentation.hpp"
#include "prepro/weight_grading.hpp"

namespace prepro {

/// Identification of the factors inside a product quiver: vertex pairs map to
/// product vertices, and each factor arrow paired with a co-vertex maps to a
/// product arrow.
struct TensorMap {
    std::map<std::pair<VertexId, VertexId>, VertexId> vertex;
    std::map<std::pair<ArrowId, VertexId>, ArrowId> arrow_left;   // (arrow of p1, vertex of p2)
    std::map<std::pair<VertexId, ArrowId>, ArrowId> arrow_right;  // (vertex of p1, arrow of p2)
};

struct TensorProduct {
    QuadraticPresentation presentation;
    TensorMap map;
};

/// Product presentation: |V1|*|V2| vertices, one arrow per (factor arrow,
/// co-vertex), relations = both factors' relations lifted at every co-vertex
/// plus one commutator per arrow pair per placement.
TensorProduct tensor_presentation(const QuadraticPresentation& p1,
                                  const QuadraticPresentation& p2);

/// Sum grading: (a1, v2) inherits g1(a1) and (v1, a2) inherits g2(a2).
WeightGrading lift_grading_sum(const WeightGrading& g1, const WeightGrading& g2,
                               const TensorMap& t);

}  // namespace prepro
