#pragma once

#include <map>
#include <utility>
#include <vector>

#include "prepro/presentation.hpp"

namespace prepro {

/// Degree-by-degree model of the quotient algebra A = T_S V / <M>.
///
/// Degree l is presented on candidates b (x) a with b a surviving basis path
/// of degree l-1 and a a composable arrow acting first; the relation ideal's
/// degree-l component is spanned by the reductions of b' (x) m over surviving
/// b' of degree l-2, which keeps every elimination at quotient size instead
/// of path-space size. Surviving candidates give a monomial basis of A_l and
/// the eliminations double as a reduction table, so arbitrary homogeneous
/// vectors can be reduced to canonical coordinates.
class GradedQuotient {
public:
    explicit GradedQuotient(const QuadraticPresentation& p);

    void extend_to(std::size_t l);
    std::size_t computed_degree() const { return levels_.size() - 1; }

    const std::vector<Path>& basis(std::size_t l);
    DimMatrix dims(std::size_t l);
    long total_dim(std::size_t l);

    /// Coordinates of a homogeneous degree-l vector over basis(l); the zero
    /// vector of coordinates means the class is zero in the quotient.
    std::vector<Rat> reduce(const PathVector& v);
    bool is_zero(const PathVector& v);

private:
    using SparseVec = std::vector<std::pair<std::size_t, Rat>>;  // (basis index, coeff)

    struct Level {
        std::vector<Path> basis;
        std::map<Path, std::size_t> index;
        std::map<Path, SparseVec> killed;  // eliminated candidates -> basis combo
    };

    // Reduction of the candidate path b.word + [a]; valid once level l exists.
    const SparseVec* killed_lookup(std::size_t l, const Path& p) const;
    void build_level(std::size_t l);

    QuadraticPresentation pres_;  // owned copy, so temporaries are safe arguments
    std::vector<Level> levels_;
};

}  // namespace prepro
