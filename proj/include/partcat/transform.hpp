#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "partcat/prob_vec.hpp"

namespace partcat {

/// Interior tail indices (1 < l < n, 1-based) where the minimal tail ratio is
/// attained, together with that minimum.
struct CriticalSet {
  std::vector<std::size_t> indices;
  Rat p_star;
  /// P(x→y) < min{x↓_n / y↓_n, 1}: the regime where partial catalysts exist.
  bool hypothesis_holds = false;
};

struct TransformReport {
  Rat p;
  CriticalSet critical;
  bool deterministic = false;
  /// x↓_n / y↓_n; nullopt when y↓_n = 0 (treated as +∞).
  std::optional<Rat> last_ratio;
};

/// Optimal conversion probability min_l E_l(x) / E_l(y).
/// Shorter vectors are zero-padded. Tails with E_l(y) = 0 impose no constraint.
Rat max_prob(const ProbVec& x, const ProbVec& y);

CriticalSet critical_set(const ProbVec& x, const ProbVec& y);

TransformReport analyze_transform(const ProbVec& x, const ProbVec& y);

/// P(x→y) < min{x↓_n/y↓_n, 1}.
bool catalysis_hypothesis(const ProbVec& x, const ProbVec& y);

/// x ∈ S^λ(y), decided as x ≺ y_λ and cross-checked against x ≺^w λy.
bool s_membership(const ProbVec& x, const ProbVec& y, const Rat& lambda);

/// The distinct permutations of y_λ in lexicographically increasing order;
/// S^λ(y) is their convex hull.
std::vector<ProbVec> s_extreme_points(const ProbVec& y, const Rat& lambda);

}  // namespace partcat
