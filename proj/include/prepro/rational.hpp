#pragma once

#include <gmpxx.h>

#include <string>

namespace prepro {

/// Exact arbitrary-precision rational. GMP keeps values in lowest terms with
/// a positive denominator once canonicalized; every constructor path in this
/// project goes through rat_from_string or integer literals, so stored values
/// are always canonical.
using Rat = mpq_class;

/// Parses "n" or "n/d" (optional sign, arbitrary precision). Throws ParseError.
Rat rat_from_string(const std::string& s);

/// Canonical text form: "n" for integers, "n/d" otherwise. Round-trips
/// bit-exactly through rat_from_string.
std::string rat_to_string(const Rat& q);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

}  // namespace prepro
