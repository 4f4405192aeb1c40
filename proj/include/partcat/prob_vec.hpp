#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "partcat/rat.hpp"

namespace partcat {

/// A finite vector of nonnegative exact rationals, usually a probability
/// vector of Schmidt coefficients. Positive vectors that do not sum to one
/// are allowed; `normalized()` reports whether the total is exactly 1.
class ProbVec {
 public:
  ProbVec() = default;
  explicit ProbVec(std::vector<Rat> components);
  ProbVec(std::initializer_list<Rat> components) : ProbVec(std::vector<Rat>(components)) {}

  /// Parses each entry with parse_rat; convenient for literals like {"0.6", "0.2", "0.2"}.
  static ProbVec parse(std::span<const std::string> entries);
  static ProbVec of(std::initializer_list<const char*> entries);

  std::size_t size() const { return components_.size(); }
  const Rat& operator[](std::size_t i) const { return components_[i]; }
  std::span<const Rat> components() const { return components_; }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  const Rat& total() const { return total_; }
  bool normalized() const { return total_ == 1; }
  bool strictly_positive() const;
  bool is_nonincreasing() const;

  /// Divides by the total. Throws PreconditionError for the zero vector.
  ProbVec normalize() const;
  ProbVec scaled(const Rat& factor) const;

  friend bool operator==(const ProbVec& a, const ProbVec& b) { return a.components_ == b.components_; }

 private:
  std::vector<Rat> components_;
  Rat total_;
};

/// Throws PreconditionError unless v sums to exactly one.
void require_normalized(const ProbVec& v, const char* what);

std::string to_string(const ProbVec& v);

/// Nonincreasing rearrangement; equal values keep their relative order.
ProbVec sort_desc(const ProbVec& v);

/// Appends zeros up to dimension n (no-op when already that long).
ProbVec pad_to(const ProbVec& v, std::size_t n);

/// E_l(v): sum of the n-l+1 smallest components, l is 1-based.
Rat tail_sum(const ProbVec& v, std::size_t l);

/// All tail sums; element l-1 holds E_l(v).
std::vector<Rat> tail_sums(const ProbVec& v);

/// Nielsen order x ≺ y: equal totals and prefix sums of x↓ never exceed those of y↓.
bool is_majorized(const ProbVec& x, const ProbVec& y);

/// x ≺^w w: E_l(x) >= E_l(w) for every l. w need not be normalized.
bool is_super_majorized(const ProbVec& x, const ProbVec& w);

/// All pairwise products x_i * y_j, sorted nonincreasingly.
ProbVec tensor(const ProbVec& x, const ProbVec& y);

/// Concatenation (not re-normalized, not sorted). At least one side must be nonempty.
ProbVec direct_sum(std::span<const Rat> x, std::span<const Rat> y);
inline ProbVec direct_sum(const ProbVec& x, const ProbVec& y) { return direct_sum(x.components(), y.components()); }

/// (1 - λE_2(y), λy↓_2, ..., λy↓_n), the truncated target whose majorization
/// cone is the set of states reaching y with probability at least λ.
ProbVec y_lambda(const ProbVec& y, const Rat& lambda);

/// Dense row-major square matrix of exact rationals.
using RatMatrix = std::vector<std::vector<Rat>>;

/// When x ≺ y, returns a doubly stochastic D with x↓ = D y↓, built as a
/// product of T-transforms; nullopt otherwise.
std::optional<RatMatrix> doubly_stochastic_witness(const ProbVec& x, const ProbVec& y);

bool is_doubly_stochastic(const RatMatrix& d);
std::vector<Rat> apply(const RatMatrix& d, std::span<const Rat> v);

}  // namespace partcat
