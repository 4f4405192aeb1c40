#pragma once

// Independent oracles for the test suites. Nothing here calls the library
// routine it is used to check.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "partcat/prob_vec.hpp"

namespace partcat::testing {

inline ProbVec V(std::initializer_list<const char*> entries) { return ProbVec::of(entries); }
inline Rat R(const char* s) { return parse_rat(s); }

/// Optimal probability from first principles: sort a copy, sum each suffix by hand.
inline Rat tail_ratio_oracle(std::vector<Rat> x, std::vector<Rat> y) {
  const std::size_t n = std::max(x.size(), y.size());
  x.resize(n, Rat(0));
  y.resize(n, Rat(0));
  std::sort(x.begin(), x.end(), [](const Rat& a, const Rat& b) { return a > b; });
  std::sort(y.begin(), y.end(), [](const Rat& a, const Rat& b) { return a > b; });
  Rat best = 1;
  for (std::size_t l = 0; l < n; ++l) {
    Rat ex = 0;
    Rat ey = 0;
    for (std::size_t i = l; i < n; ++i) {
      ex += x[i];
      ey += y[i];
    }
    if (sgn(ey) == 0) continue;
    Rat r = ex / ey;
    if (r < best) best = r;
  }
  return best;
}

inline Rat tail_ratio_oracle(const ProbVec& x, const ProbVec& y) {
  return tail_ratio_oracle(std::vector<Rat>(x.begin(), x.end()), std::vector<Rat>(y.begin(), y.end()));
}

/// Every k-tuple over `values` by odometer counting, keeping the
/// nonincreasing ones that end inside L.
inline std::vector<std::vector<std::size_t>> tuples_oracle(const std::vector<std::size_t>& critical, std::size_t n,
                                                           std::size_t k) {
  std::vector<std::size_t> values(critical);
  values.push_back(n + 1);
  std::vector<std::size_t> idx(k, 0);
  std::set<std::vector<std::size_t>> seen;
  for (;;) {
    std::vector<std::size_t> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = values[idx[i]];
    if (std::is_sorted(t.begin(), t.end(), std::greater<>()) && t.back() != n + 1) seen.insert(t);
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == values.size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return {seen.begin(), seen.end()};
}

/// Uniform vector (1/n, ..., 1/n).
inline ProbVec uniform(std::size_t n) {
  return ProbVec(std::vector<Rat>(n, rat(1, static_cast<long>(n))));
}

}  // namespace partcat::testing
