#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prepro/path_vector.hpp"
#include "prepro/quiver.hpp"
#include "prepro/subspace.hpp"

namespace prepro {

/// Integer matrix of graded dimensions, indexed by (target, source) vertex
/// position in the quiver's vertex list.
class DimMatrix {
public:
    DimMatrix() = default;
    explicit DimMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

    std::size_t size() const { return n_; }
    long& at(std::size_t target, std::size_t source) { return d_[target * n_ + source]; }
    long at(std::size_t target, std::size_t source) const { return d_[target * n_ + source]; }
    long total() const;

    friend bool operator==(const DimMatrix&, const DimMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<long> d_;
};

/// Quadratic presentation T_S V / <M> over S = one field factor per vertex.
/// Relations are homogeneous of path length 2 with common endpoints; the
/// constructor canonicalizes them into an independent block-wise RREF set so
/// equal presentations compare equal.
class QuadraticPresentation {
public:
    QuadraticPresentation(Quiver quiver, std::vector<PathVector> relations);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<PathVector>& relations() const { return relations_; }

private:
    Quiver quiver_;
    std::vector<PathVector> relations_;
};

/// Span of all two-sided paddings u (x) m (x) w of the relations inside the
/// length-l path space, with the enumerate_paths order as the ambient basis.
/// Exact but ambient-sized; intended for small l (the graded engine serves
/// the large degrees).
Subspace relation_span(const QuadraticPresentation& p, std::size_t l);

struct GradedDims {
    std::vector<DimMatrix> by_degree;  // index = degree
    long total(std::size_t l) const { return by_degree.at(l).total(); }
};

/// Graded dimensions of the quotient algebra up to l_max, refined by vertex
/// pair. Computed degree by degree.
GradedDims graded_dims(const QuadraticPresentation& p, std::size_t l_max);
long graded_dim(const QuadraticPresentation& p, std::size_t l);

/// Quadratic dual: reversed quiver, relations spanning the orthogonal
/// complement of M under the pairing of a*(x)b* with b(x)a. An involution on
/// canonicalized presentations.
QuadraticPresentation quadratic_dual(const QuadraticPresentation& p);

struct KoszulityVerdict {
    bool pass = false;
    std::optional<std::size_t> failed_degree;
    std::string note;  // always states that passing is only a necessary condition
};

/// Numeric Koszulity probe: checks, per vertex pair and for each degree
/// 2 <= d <= d_max, that the Hilbert tables of the algebra and its quadratic
/// dual satisfy the alternating product identity
///   sum_{l+m=d} (-1)^l H_A(m) * H_dual(l)^T = 0.
/// Passing is a NECESSARY condition for Koszulity, never a proof.
KoszulityVerdict koszulity_probe(const QuadraticPresentation& p, std::size_t d_max);

/// Membership of a homogeneous vector in the relation ideal's graded
/// component. Throws InvalidArgument for non-homogeneous input.
bool is_zero_in_quotient(const QuadraticPresentation& p, const PathVector& v);

}  // namespace prepro
