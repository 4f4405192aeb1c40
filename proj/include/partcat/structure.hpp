#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "partcat/prob_vec.hpp"

namespace partcat {

// Structure of T^λ(y), the states that reach y with probability at least λ
// when some catalyst may be borrowed. Membership is only semi-decidable
// here: a catalyst certifies it, and a few necessary conditions refute it.

enum class MembershipStatus { member_with_certificate, non_member, boundary, interior, unknown_at_resolution };

struct MembershipVerdict {
  MembershipStatus status = MembershipStatus::unknown_at_resolution;
  /// Catalyst c with P(x⊗c → y⊗c) >= λ.
  std::optional<ProbVec> certificate;
  Rat lambda;
};

const char* to_string(MembershipStatus s);

/// Fast necessary test for x ∈ T^λ(y): with d the last index where
/// x↓_d != λ y↓_d, membership needs x↓_d > λ y↓_d. false is a proof of
/// non-membership; true proves nothing.
bool t_necessary(const ProbVec& x, const ProbVec& y, const Rat& lambda);

enum class BoundaryClass { boundary, interior };

const char* to_string(BoundaryClass b);

/// For a certified member x, boundary iff x↓_n = λ y↓_n.
BoundaryClass t_boundary_classify(const ProbVec& x, const ProbVec& y, const Rat& lambda, const ProbVec& certificate);

/// Looks for a k-dimensional grid catalyst certifying x ∈ T_k^λ(y). Returns
/// member (certificate (1) when no catalyst is needed), non_member when
/// t_necessary refutes, and unknown_at_resolution when the grid runs dry.
MembershipVerdict t_k_membership(const ProbVec& x, const ProbVec& y, const Rat& lambda, std::size_t k,
                                 std::size_t grid);
/// Same, over a caller-supplied candidate list (see catalyst_grid).
MembershipVerdict t_k_membership(const ProbVec& x, const ProbVec& y, const Rat& lambda,
                                 std::span<const ProbVec> candidates);

/// T^λ(y) = S^λ(y) iff y↓_2 = y↓_n; λ does not matter beyond 0 < λ < 1.
bool t_equals_s(const ProbVec& y, const Rat& lambda);

/// Admissible open interval for μ in t_separating_witness.
std::pair<Rat, Rat> separating_mu_range(const ProbVec& y, const Rat& lambda);

/// A state on the boundary of S^λ(y) (P = λ exactly) that lies in the
/// interior of T^λ(y) (x↓_n / y↓_n = μ > λ). μ defaults to the midpoint of
/// separating_mu_range. Requires y↓_2 > y↓_n.
ProbVec t_separating_witness(const ProbVec& y, const Rat& lambda, std::optional<Rat> mu = std::nullopt);

/// A state with P(x→y) = x↓_n / y↓_n = μ, used to show T^λ(y) is not closed
/// for μ < λ: it lies outside T^λ(y) while the segment towards the uniform
/// state enters it. Requires y↓_2 > y↓_n and 0 < μ < 1.
ProbVec outside_probe(const ProbVec& y, const Rat& mu);

struct Reduction {
  ProbVec x_reduced;  // x' / (1 - μλ)
  ProbVec y_reduced;  // y' / (1 - μ)
  Rat lambda_prime;   // (λ - μλ) / (1 - μλ)
  Rat mu;             // mass of z
  ProbVec x_prime;
  ProbVec y_prime;
  ProbVec z;
};

/// Splits off the longest common tail x = x' ⊕ λz, y = y' ⊕ z (exact matches
/// on the sorted vectors, z↓_1 < y↓_1) and rescales the remainder.
std::optional<Reduction> decompose_reduce(const ProbVec& x, const ProbVec& y, const Rat& lambda);

/// Same vertex set as S^λ(y): the distinct permutations of y_λ.
std::vector<ProbVec> t_extreme_points(const ProbVec& y, const Rat& lambda);

}  // namespace partcat
