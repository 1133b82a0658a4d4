#pragma once

#include <vector>

#include "prepro/presentation.hpp"
#include "prepro/superpotential.hpp"
#include "prepro/weight_grading.hpp"

namespace prepro {

/// Extension of a Koszul presentation by one arrow per top Koszul generator,
/// with the two-sided derivative relations. The grading puts the original
/// arrows in degree 0 and the new arrows in degree 1.
struct PreprojectivePresentation {
    QuadraticPresentation presentation;
    std::size_t n = 0;
    std::vector<PathVector> generators;       // K_n basis, in the input quiver
    std::vector<ArrowId> new_arrows;          // one per generator, same order
    std::vector<PathVector> left_relations;   // raw left derivative relations
    std::vector<PathVector> right_relations;  // raw right derivative relations
    std::vector<PathVector> new_relations;    // independent reduction of the raw lists
    WeightGrading grading;
};

/// Requires K_n != 0, K_{n+1} = 0 (a global-dimension-n proxy) and a passing
/// Koszulity probe; throws PreconditionError carrying the dimension table
/// otherwise. The new arrow a_q runs target(q) -> source(q) for each
/// RREF-canonical generator q of K_n; the new relations are
///   sum_q (dL_p q) a_q   and   sum_q a_q (dR_p q)
/// over the canonical basis {p} of K_{n-1}.
PreprojectivePresentation build_preprojective(const QuadraticPresentation& p, std::size_t n,
                                              std::size_t probe_degree = 8);

/// The alternating cyclic closure sum_q sum_{0<=l<=n} s^l(q a_q) with s the
/// signed cyclic shift; a degree-(n+1) superpotential whose derivation
/// quotient has the same relation span as the preprojective presentation.
Superpotential preprojective_superpotential(const PreprojectivePresentation& pp);

}  // namespace prepro
