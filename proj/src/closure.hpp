#pragma once

// Incremental all-pairs tightest-bound closure for multiplicative
// difference constraints. Internal to the search module.

#include <cstddef>
#include <optional>
#include <vector>

#include "partcat/rat.hpp"

namespace partcat::detail {

/// c_to <= weight * c_from, strict when `strict`.
struct Bound {
  Rat weight;
  bool strict = false;
};

/// a is at least as tight as b.
inline bool tighter_or_equal(const Bound& a, const Bound& b) {
  return a.weight < b.weight || (a.weight == b.weight && (a.strict || !b.strict));
}

inline Bound compose(const Bound& a, const Bound& b) { return {a.weight * b.weight, a.strict || b.strict}; }

/// A self-bound c_i (<|<=) w c_i with w < 1, or w == 1 strict, has no positive solution.
inline bool contradictory(const Bound& self) { return self.weight < 1 || (self.weight == 1 && self.strict); }

class Closure {
 public:
  explicit Closure(std::size_t n) : n_(n), d_(n * n) {
    for (std::size_t i = 0; i < n; ++i) d_[i * n + i] = Bound{Rat(1), false};
  }

  std::size_t size() const { return n_; }
  const std::optional<Bound>& at(std::size_t from, std::size_t to) const { return d_[from * n_ + to]; }

  /// Adds c_to (<|<=) w c_from and re-closes; returns false on contradiction.
  bool add(std::size_t from, std::size_t to, const Bound& b) {
    std::vector<std::optional<Bound>> next = d_;
    for (std::size_t p = 0; p < n_; ++p) {
      const auto& into = at(p, from);
      if (!into) continue;
      Bound head = compose(*into, b);
      for (std::size_t q = 0; q < n_; ++q) {
        const auto& out = at(to, q);
        if (!out) continue;
        Bound cand = compose(head, *out);
        auto& cur = next[p * n_ + q];
        if (!cur || !tighter_or_equal(*cur, cand)) cur = cand;
      }
    }
    d_ = std::move(next);
    for (std::size_t i = 0; i < n_; ++i) {
      if (contradictory(*at(i, i))) return false;
    }
    return true;
  }

  /// True when the current bounds already force c_to < w c_from.
  bool implies_strict(std::size_t from, std::size_t to, const Rat& w) const {
    const auto& b = at(from, to);
    return b && (b->weight < w || (b->weight == w && b->strict));
  }

 private:
  std::size_t n_;
  std::vector<std::optional<Bound>> d_;
};

}  // namespace partcat::detail
