#pragma once

#include <map>
#include <optional>
#include <vector>

#include "prepro/quiver.hpp"
#include "prepro/rational.hpp"

namespace prepro {

/// Endpoints and length shared by every term of a homogeneous vector.
struct Homogeneity {
    VertexId source;
    VertexId target;
    std::size_t length;

    friend bool operator==(const Homogeneity&, const Homogeneity&) = default;
};

/// Finite formal rational linear combination of paths. Zero coefficients are
/// never stored; terms iterate in the canonical path order.
class PathVector {
public:
    PathVector() = default;
    static PathVector term(Path p, Rat coef);

    const std::map<Path, Rat>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Path& p, const Rat& coef);
    Rat coefficient(const Path& p) const;

    PathVector& operator+=(const PathVector& other);
    PathVector& operator-=(const PathVector& other);
    PathVector& operator*=(const Rat& scalar);
    friend PathVector operator+(PathVector a, const PathVector& b) { return a += b; }
    friend PathVector operator-(PathVector a, const PathVector& b) { return a -= b; }
    friend PathVector operator*(const Rat& s, PathVector v) { return v *= s; }

    friend bool operator==(const PathVector&, const PathVector&) = default;

private:
    std::map<Path, Rat> terms_;
};

/// Common (source, target, length) of all terms, when the vector is
/// homogeneous; nullopt otherwise (and for the zero vector).
std::optional<Homogeneity> homogeneity(const Quiver& q, const PathVector& v);

/// Bilinear extension of composition: u after v. Non-composable term
/// products are dropped.
PathVector concatenate(const Quiver& q, const PathVector& u, const PathVector& v);

/// Coordinates over an ordered path basis. Throws InvalidArgument when a
/// term's path is not in the basis.
std::vector<Rat> coordinates(const PathVector& v, const std::vector<Path>& basis);
PathVector from_coordinates(const std::vector<Path>& basis, const std::vector<Rat>& coords);

std::string pathvector_to_string(const Quiver& q, const PathVector& v);

}  // namespace prepro
