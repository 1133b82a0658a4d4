#pragma once

#include <string>

#include "prepro/path_vector.hpp"
#include "prepro/presentation.hpp"
#include "prepro/tensor_product.hpp"

namespace prepro {

/// Closed, signed-cyclically-symmetric homogeneous path vector. Construction
/// validates the defining properties and throws InvalidArgument otherwise.
class Superpotential {
public:
    Superpotential(const Quiver& q, PathVector form);

    const PathVector& form() const { return form_; }
    std::size_t degree() const { return degree_; }

private:
    PathVector form_;
    std::size_t degree_;
};

/// Unsigned full-cycle rotation: in every term the first-acting arrow moves
/// to the last-acting slot (v_n...v_1 becomes v_1 v_n...v_2). Terms must be
/// closed cycles of a common length.
PathVector cyclic_rotate(const Quiver& q, const PathVector& v);

/// Rotation with the sign (-1)^(n-1) per single shift; its n-fold iterate is
/// the identity on closed length-n vectors. Superpotentials are exactly the
/// closed homogeneous fixed points.
PathVector signed_cyclic_shift(const Quiver& q, const PathVector& v);

struct SuperpotentialCheck {
    bool ok = false;
    std::string reason;  // empty when ok
};

/// Closed + homogeneous + commutes with the vertex idempotents + fixed by
/// the signed cyclic shift.
SuperpotentialCheck check_superpotential(const Quiver& q, const PathVector& v);

enum class Side { Left, Right };

/// Partial derivative: Left strips the tensor-order prefix p (the
/// last-acting letters) from each term carrying it, Right strips the
/// first-acting suffix. Linear in w; requires length(p) < degree(w).
PathVector derive(const Quiver& q, const Superpotential& w, const Path& p, Side side);

/// Derivation-quotient presentation of order degree-2: relations span
/// { delta_p w : p of length degree(w) - 2 }, reduced to an independent set.
QuadraticPresentation derivation_quotient(const Quiver& q, const Superpotential& w);

/// Shuffle product of two superpotentials on the factors of a tensor
/// presentation: for every pair of terms, the signed sum over all
/// interleavings, each re-routed through the unique composable lift in the
/// product quiver. The result is a superpotential of the product.
Superpotential shuffle_product(const Quiver& q1, const Superpotential& w1, const Quiver& q2,
                               const Superpotential& w2, const TensorProduct& tp);

}  // namespace prepro
