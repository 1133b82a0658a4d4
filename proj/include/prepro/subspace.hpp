#pragma once

#include <cstddef>
#include <vector>

#include "prepro/matrix.hpp"

namespace prepro {

/// Row space of an exact rational matrix over a fixed ordered basis.
/// The basis matrix is kept in reduced row-echelon form with zero rows
/// dropped, so equal subspaces compare equal as values.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    Subspace(std::size_t ambient_dim, RationalMatrix rows);

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);
    static Subspace span_of(std::size_t ambient_dim, const std::vector<std::vector<Rat>>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RationalMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

private:
    std::size_t ambient_ = 0;
    RationalMatrix basis_;  // RREF, no zero rows
};

/// Throws InvalidArgument on ambient mismatch.
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Zassenhaus intersection; throws InvalidArgument on ambient mismatch.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Null space of m, canonicalized. dim(kernel) + rank = cols.
Subspace kernel(const RationalMatrix& m);

}  // namespace prepro
