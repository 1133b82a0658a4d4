#pragma once

#include <optional>
#include <string>

#include "prepro/quiver.hpp"
#include "prepro/weight_grading.hpp"

namespace prepro {

/// Graphviz export: vertices labeled, arrows black in degree 0 and red in
/// degree 1 (all black without a grading). Deterministic output.
std::string to_dot(const Quiver& q, const std::optional<WeightGrading>& g = std::nullopt);

}  // namespace prepro
