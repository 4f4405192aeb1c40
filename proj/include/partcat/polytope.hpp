#pragma once

#include <optional>
#include <span>
#include <vector>

#include "partcat/prob_vec.hpp"

namespace partcat {

/// Exact phase-one simplex: weights w >= 0 with Σw = 1 and Σ w_j p_j = target,
/// or nullopt when target lies outside the convex hull of `points`.
std::optional<std::vector<Rat>> convex_combination_weights(const ProbVec& target, std::span<const ProbVec> points);

}  // namespace partcat
