#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "partcat/prob_vec.hpp"
#include "partcat/transform.hpp"

namespace partcat {

/// A nonincreasing index tuple r_1 >= ... >= r_k over L ∪ {n+1} with r_k != n+1.
/// Indices are 1-based positions in y↓; n+1 stands for "no term of this block".
using TupleR = std::vector<std::size_t>;

struct CatalystVerdict {
  bool is_partial = false;
  Rat p_without;
  /// Filled by the direct route only; the combinatorial predicate never
  /// evaluates the tensor product.
  std::optional<Rat> p_with;
  /// A tuple whose band constraints all hold, i.e. a proof that c does not help.
  std::optional<TupleR> blocking_tuple;
};

/// Direct check: P(x⊗c → y⊗c) > P(x → y). c must be strictly positive.
CatalystVerdict is_partial_catalyst(const ProbVec& x, const ProbVec& y, const ProbVec& c);

/// The combinatorial characterization: c helps iff every tuple admits a pair
/// i > j with c_i/c_j below y_{r_j}/y_{r_i-1} or above y_{r_j-1}/y_{r_i}.
/// Requires the catalysis hypothesis and a strictly positive y.
CatalystVerdict pcon_predicate(const ProbVec& x, const ProbVec& y, const ProbVec& c);

/// For one tuple: some pair i > j satisfies one of the two strict disjuncts.
/// A disjunct mentioning y_{n+1} counts as violated. y and c nonincreasing.
bool pcon_holds_for_tuple(const ProbVec& y, const ProbVec& c, const TupleR& r);

/// For one tuple: every pair i > j lies in the closed band
/// y_{r_j}/y_{r_i-1} <= c_i/c_j <= y_{r_j-1}/y_{r_i}. A constraint mentioning
/// y_{n+1} counts as satisfied. Logical complement of pcon_holds_for_tuple.
bool conds_band_holds(const ProbVec& y, const ProbVec& c, const TupleR& r);

/// Partial catalysts exist iff P(x→y) < min{x↓_n / y↓_n, 1}.
bool partial_catalyst_exists(const ProbVec& x, const ProbVec& y);

/// Normalized (1, α, ..., α^{k-1}) with the least k such that
/// α^{k-1} < y↓_{l_max} / y↓_{l_min - 1}. Default α is the midpoint of
/// (y↓_n / y↓_{l_max}, 1). The result is verified before it is returned.
ProbVec construct_geometric_catalyst(const ProbVec& x, const ProbVec& y, std::optional<Rat> alpha = std::nullopt);

/// The exact open interval of ratios c_2/c_1 that make a 2-dim partial
/// catalyst when L = {l}; nullopt when the interval is empty.
std::optional<std::pair<Rat, Rat>> two_dim_interval(const ProbVec& x, const ProbVec& y);

/// Two-dimensional factors (1, α^{2^t}) / norm, t = 0..M-1, with 2^M >= k
/// the smallest such power; their tensor product is the geometric vector
/// (1, α, ..., α^{2^M - 1}) / norm.
std::vector<ProbVec> factor_to_two_dim(std::size_t k, const Rat& alpha);

struct RatioBounds {
  /// Every partial catalyst has c_k / c_{k-1} strictly above this.
  Rat lower_adjacent;
  /// Every partial catalyst has c_k / c_1 strictly below this.
  Rat upper_span;
};

RatioBounds necessary_ratio_bounds(const ProbVec& y, const std::vector<std::size_t>& critical);

}  // namespace partcat
