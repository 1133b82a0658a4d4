#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prepro/presentation.hpp"
#include "prepro/superpotential.hpp"
#include "prepro/weight_grading.hpp"

namespace prepro {

/// Finite-dimensionality verdict at a probe bound. Finite carries the total
/// dimension; Infinite carries an elementary degree-0 cycle whose checked
/// powers all survive in the quotient; Inconclusive reports the bound.
struct Finiteness {
    enum class Kind { Finite, Infinite, Inconclusive };
    Kind kind = Kind::Inconclusive;
    long total_dim = 0;      // Finite
    Path witness;            // Infinite
    std::size_t bound = 0;   // probe bound used
};

struct GradingVerdict {
    bool relations_homogeneous = false;
    std::optional<std::size_t> first_violation;       // index of the first bad relation
    std::map<int, std::size_t> superpotential_term_degrees;  // degree -> #terms
    std::optional<int> gorenstein_parameter;          // defined iff homogeneous + one degree
    std::optional<Finiteness> degree0_finiteness;     // filled by the search / callers
};

/// Homogeneity of every relation plus the multiset of superpotential term
/// degrees; the Gorenstein parameter is their common value when it exists.
GradingVerdict validate_grading(const QuadraticPresentation& p, const Superpotential& w,
                                const WeightGrading& g);

std::optional<int> gorenstein_parameter(const QuadraticPresentation& p, const Superpotential& w,
                                        const WeightGrading& g);

/// Subquiver of degree-0 arrows (all vertices kept, ids preserved) with the
/// relations of total degree 0. Requires {0,1} values and homogeneous
/// relations; throws InvalidArgument otherwise.
QuadraticPresentation degree_zero_part(const QuadraticPresentation& p, const WeightGrading& g);

/// Finite when the graded dimensions hit zero within the bound; Infinite
/// when an elementary cycle survives with all checked powers nonzero in the
/// quotient; Inconclusive otherwise.
Finiteness finiteness_check(const QuadraticPresentation& p0, std::size_t l_max);

struct GradingSearchOptions {
    std::size_t l_max = 12;       // finiteness probe bound
    std::size_t arrow_limit = 24; // search-space guard
    bool brute = false;           // plain enumeration instead of the pruned search
};

struct GradingSearchResult {
    std::vector<std::pair<WeightGrading, GradingVerdict>> valid;
    unsigned long long assignments = 0;  // 2^#arrows
    std::size_t finite_count = 0;
    std::size_t infinite_count = 0;
    std::size_t inconclusive_count = 0;
};

/// Exhaustive search over {0,1} arrow degrees keeping the gradings with
/// homogeneous relations and every superpotential term of degree exactly 1,
/// each with a finiteness verdict for its degree-0 part. Throws LimitError
/// past the arrow limit.
GradingSearchResult grading_search(const QuadraticPresentation& p, const Superpotential& w,
                                   const GradingSearchOptions& opts = {});

}  // namespace prepro
