#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "partcat/catalysis.hpp"
#include "partcat/prob_vec.hpp"

namespace partcat {

/// Every nonincreasing k-tuple over L ∪ {n+1} whose last entry is in L,
/// in lexicographically decreasing order.
std::vector<TupleR> enumerate_tuples(const std::vector<std::size_t>& critical, std::size_t n, std::size_t k);

/// c_i / c_j < bound  or  c_i / c_j > bound, with 1-based 1 <= j < i <= k.
struct RatioConstraint {
  enum class Kind { strict_less, strict_greater };
  std::size_t i = 0;
  std::size_t j = 0;
  Kind kind = Kind::strict_less;
  Rat bound;

  friend bool operator==(const RatioConstraint&, const RatioConstraint&) = default;
};

/// One multiplicative constraint c_to <= weight * c_from (strict: <).
/// Nodes are 0-based.
struct RatioEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Rat weight;
  bool strict = false;
};

/// Multiplicative difference constraints over k positive unknowns.
class ConstraintGraph {
 public:
  explicit ConstraintGraph(std::size_t nodes) : nodes_(nodes) {}

  std::size_t size() const { return nodes_; }
  const std::vector<RatioEdge>& edges() const { return edges_; }

  void add_edge(RatioEdge e);
  void add(const RatioConstraint& rc);
  /// c_{i+1} <= c_i for every i.
  void add_monotonicity();

 private:
  std::size_t nodes_;
  std::vector<RatioEdge> edges_;
};

struct Feasibility {
  /// A strictly feasible positive assignment (max component 1), if any.
  std::optional<std::vector<Rat>> point;
  /// When infeasible: a simple cycle (node sequence, closing back on the
  /// first) whose weight product is < 1, or == 1 through a strict edge.
  std::vector<std::size_t> violating_cycle;
};

Feasibility solve_constraints(const ConstraintGraph& g);

inline std::optional<std::vector<Rat>> feasible_point(const ConstraintGraph& g) { return solve_constraints(g).point; }

bool satisfies(const ConstraintGraph& g, std::span<const Rat> point);

/// Product of the tightest edge weights along `cycle`, and whether any of
/// them is strict. Used to check infeasibility certificates.
std::pair<Rat, bool> cycle_weight(const ConstraintGraph& g, const std::vector<std::size_t>& cycle);

struct SearchResult {
  bool exists = false;
  std::optional<ProbVec> witness;
  std::size_t dimension = 0;
  /// One satisfied disjunct per enumerated tuple, in tuple order.
  std::optional<std::vector<RatioConstraint>> selections;
};

/// Decides whether a k-dimensional partial catalyst exists and returns a
/// verified witness when it does.
SearchResult decide_k_dim(const ProbVec& x, const ProbVec& y, std::size_t k);

/// Smallest k with a k-dimensional partial catalyst, searched up to the
/// dimension of the geometric construction.
SearchResult min_catalyst_dimension(const ProbVec& x, const ProbVec& y);

/// Nonincreasing k-vectors a / D with positive integers a_i summing to D,
/// sorted lexicographically increasing.
std::vector<ProbVec> catalyst_grid(std::size_t k, std::size_t grid);

/// Grid points that are partial catalysts (direct check).
std::vector<ProbVec> grid_oracle(const ProbVec& x, const ProbVec& y, std::size_t k, std::size_t grid);

struct GridBest {
  Rat p_best;
  ProbVec c_best;
};

/// Best P(x⊗c → y⊗c) over the grid plus the trivial catalyst (1).
/// A lower bound on the catalytic optimum, nothing more.
GridBest best_prob_at_dim(const ProbVec& x, const ProbVec& y, std::size_t k, std::size_t grid);

}  // namespace partcat
