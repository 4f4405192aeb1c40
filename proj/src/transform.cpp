#include "partcat/transform.hpp"

#include <algorithm>
#include <stdexcept>

#include "partcat/errors.hpp"

namespace partcat {
namespace {

struct PaddedPair {
  std::vector<Rat> x_tails;
  std::vector<Rat> y_tails;
};

PaddedPair padded_tails(const ProbVec& x, const ProbVec& y) {
  const std::size_t n = std::max(x.size(), y.size());
  return {tail_sums(pad_to(x, n)), tail_sums(pad_to(y, n))};
}

}  // namespace

Rat max_prob(const ProbVec& x, const ProbVec& y) {
  auto [tx, ty] = padded_tails(x, y);
  std::optional<Rat> best;
  for (std::size_t l = 0; l < tx.size(); ++l) {
    if (sgn(ty[l]) == 0) continue;
    Rat r = tx[l] / ty[l];
    if (!best || r < *best) best = r;
  }
  // Only reachable for y = 0, which no caller passes; 1 is the neutral value.
  return best.value_or(Rat(1));
}

bool catalysis_hypothesis(const ProbVec& x, const ProbVec& y) {
  const std::size_t n = std::max(x.size(), y.size());
  ProbVec xs = sort_desc(pad_to(x, n));
  ProbVec ys = sort_desc(pad_to(y, n));
  Rat p = max_prob(xs, ys);
  if (p >= 1) return false;
  if (sgn(ys[n - 1]) == 0) return true;
  return p < xs[n - 1] / ys[n - 1];
}

CriticalSet critical_set(const ProbVec& x, const ProbVec& y) {
  CriticalSet out;
  out.p_star = max_prob(x, y);
  auto [tx, ty] = padded_tails(x, y);
  const std::size_t n = tx.size();
  for (std::size_t l = 2; l < n; ++l) {
    if (sgn(ty[l - 1]) == 0) continue;
    if (tx[l - 1] == out.p_star * ty[l - 1]) out.indices.push_back(l);
  }
  out.hypothesis_holds = catalysis_hypothesis(x, y);
  return out;
}

TransformReport analyze_transform(const ProbVec& x, const ProbVec& y) {
  TransformReport r;
  r.critical = critical_set(x, y);
  r.p = r.critical.p_star;
  r.deterministic = r.p == 1;
  const std::size_t n = std::max(x.size(), y.size());
  ProbVec xs = sort_desc(pad_to(x, n));
  ProbVec ys = sort_desc(pad_to(y, n));
  r.last_ratio = ratio(xs[n - 1], ys[n - 1]);
  return r;
}

bool s_membership(const ProbVec& x, const ProbVec& y, const Rat& lambda) {
  if (lambda < 0 || lambda > 1) throw PreconditionError("lambda must lie in [0, 1]");
  bool via_majorization = is_majorized(x, y_lambda(y, lambda));
  bool via_super = is_super_majorized(x, y.scaled(lambda));
  if (via_majorization != via_super) {
    throw std::logic_error("S^lambda membership routes disagree for x=" + to_string(x));
  }
  return via_majorization;
}

std::vector<ProbVec> s_extreme_points(const ProbVec& y, const Rat& lambda) {
  ProbVec yl = y_lambda(y, lambda);
  std::vector<Rat> perm(yl.begin(), yl.end());
  std::sort(perm.begin(), perm.end());
  std::vector<ProbVec> out;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace partcat
