#include "partcat/catalysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "partcat/errors.hpp"
#include "partcat/search.hpp"

namespace partcat {
namespace {

void require_positive_catalyst(const ProbVec& c) {
  if (!c.strictly_positive()) throw PreconditionError("catalyst must have strictly positive components");
}

std::pair<ProbVec, ProbVec> aligned_sorted(const ProbVec& x, const ProbVec& y) {
  const std::size_t n = std::max(x.size(), y.size());
  return {sort_desc(pad_to(x, n)), sort_desc(pad_to(y, n))};
}

// y_r for 1-based r, with the y_{n+1} slot reported as absent.
std::optional<Rat> y_at(const ProbVec& y, std::size_t r) {
  if (r == y.size() + 1) return std::nullopt;
  return y[r - 1];
}

}  // namespace

CatalystVerdict is_partial_catalyst(const ProbVec& x, const ProbVec& y, const ProbVec& c) {
  require_positive_catalyst(c);
  auto [xs, ys] = aligned_sorted(x, y);
  CatalystVerdict v;
  v.p_without = max_prob(xs, ys);
  v.p_with = max_prob(tensor(xs, c), tensor(ys, c));
  v.is_partial = *v.p_with > v.p_without;
  return v;
}

bool pcon_holds_for_tuple(const ProbVec& y, const ProbVec& c, const TupleR& r) {
  const std::size_t k = r.size();
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      // c_i/c_j < y_{r_j} / y_{r_i - 1}
      if (auto num = y_at(y, r[j]); num) {
        if (c[i] * y[r[i] - 2] < c[j] * *num) return true;
      }
      // c_i/c_j > y_{r_j - 1} / y_{r_i}
      if (auto den = y_at(y, r[i]); den) {
        if (c[i] * *den > c[j] * y[r[j] - 2]) return true;
      }
    }
  }
  return false;
}

bool conds_band_holds(const ProbVec& y, const ProbVec& c, const TupleR& r) {
  const std::size_t k = r.size();
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      // y_{r_j} / y_{r_i - 1} <= c_i/c_j
      if (auto num = y_at(y, r[j]); num) {
        if (!(c[j] * *num <= c[i] * y[r[i] - 2])) return false;
      }
      // c_i/c_j <= y_{r_j - 1} / y_{r_i}
      if (auto den = y_at(y, r[i]); den) {
        if (!(c[i] * *den <= c[j] * y[r[j] - 2])) return false;
      }
    }
  }
  return true;
}

CatalystVerdict pcon_predicate(const ProbVec& x, const ProbVec& y, const ProbVec& c) {
  require_positive_catalyst(c);
  auto [xs, ys] = aligned_sorted(x, y);
  if (!ys.strictly_positive()) {
    throw PreconditionError("combinatorial catalyst test needs a strictly positive target; use the direct check");
  }
  CriticalSet crit = critical_set(xs, ys);
  if (!crit.hypothesis_holds) {
    throw PreconditionError("P(x->y) < min{x_n/y_n, 1} fails; the combinatorial characterization does not apply");
  }
  ProbVec cs = sort_desc(c);
  CatalystVerdict v;
  v.p_without = crit.p_star;
  v.is_partial = true;
  for (const TupleR& r : enumerate_tuples(crit.indices, xs.size(), cs.size())) {
    if (!pcon_holds_for_tuple(ys, cs, r)) {
      v.is_partial = false;
      v.blocking_tuple = r;
      break;
    }
  }
  return v;
}

bool partial_catalyst_exists(const ProbVec& x, const ProbVec& y) {
  require_normalized(x, "source x");
  require_normalized(y, "target y");
  return catalysis_hypothesis(x, y);
}

ProbVec construct_geometric_catalyst(const ProbVec& x, const ProbVec& y, std::optional<Rat> alpha) {
  if (!partial_catalyst_exists(x, y)) throw PreconditionError("no partial catalyst exists for this transformation");
  auto [xs, ys] = aligned_sorted(x, y);
  CriticalSet crit = critical_set(xs, ys);
  const std::size_t n = ys.size();
  const std::size_t l_min = crit.indices.front();
  const std::size_t l_max = crit.indices.back();
  Rat lower = ys[n - 1] / ys[l_max - 1];
  if (!alpha) {
    alpha = (1 + lower) / 2;
  } else if (!(lower < *alpha && *alpha < 1)) {
    throw PreconditionError("alpha must lie strictly between " + to_fraction_string(lower) + " and 1");
  }
  Rat gamma = ys[l_max - 1] / ys[l_min - 2];

  std::vector<Rat> comps{Rat(1), *alpha};
  while (!(comps.back() < gamma)) comps.emplace_back(comps.back() * *alpha);
  ProbVec c = ProbVec(std::move(comps)).normalize();

  if (!is_partial_catalyst(xs, ys, c).is_partial) {
    throw std::logic_error("geometric construction produced a vector that is not a partial catalyst");
  }
  return c;
}

std::optional<std::pair<Rat, Rat>> two_dim_interval(const ProbVec& x, const ProbVec& y) {
  auto [xs, ys] = aligned_sorted(x, y);
  CriticalSet crit = critical_set(xs, ys);
  if (!crit.hypothesis_holds) throw PreconditionError("P(x->y) < min{x_n/y_n, 1} fails");
  if (crit.indices.size() != 1) {
    throw PreconditionError("critical set has " + std::to_string(crit.indices.size()) +
                            " elements; the closed-form interval needs exactly one");
  }
  const std::size_t l = crit.indices.front();
  const std::size_t n = ys.size();
  Rat lo = ys[n - 1] / ys[l - 1];
  Rat hi = ys[l - 1] / ys[l - 2];
  if (!(lo < hi)) return std::nullopt;
  return std::pair{lo, hi};
}

std::vector<ProbVec> factor_to_two_dim(std::size_t k, const Rat& alpha) {
  if (!(0 < alpha && alpha < 1)) throw PreconditionError("alpha must lie in (0, 1)");
  if (k == 0) throw PreconditionError("catalyst dimension must be positive");
  std::vector<ProbVec> factors;
  Rat power = alpha;
  for (std::size_t covered = 1; covered < k; covered *= 2) {
    factors.push_back(ProbVec{Rat(1), power}.normalize());
    power *= power;
  }
  return factors;
}

RatioBounds necessary_ratio_bounds(const ProbVec& y, const std::vector<std::size_t>& critical) {
  if (critical.empty()) throw PreconditionError("critical set is empty");
  ProbVec ys = sort_desc(y);
  const std::size_t n = ys.size();
  std::optional<Rat> lower;
  std::optional<Rat> upper;
  for (std::size_t l : critical) {
    if (l < 2 || l >= n) throw PreconditionError("critical index out of range");
    Rat lo = ys[n - 1] / ys[l - 1];
    Rat hi = ys[l - 1] / ys[l - 2];
    if (!lower || lo > *lower) lower = lo;
    if (!upper || hi < *upper) upper = hi;
  }
  return {*lower, *upper};
}

}  // namespace partcat
