#include "partcat/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "partcat/errors.hpp"
#include "partcat/search.hpp"
#include "partcat/transform.hpp"

namespace partcat {
namespace {

void require_open_lambda(const Rat& lambda) {
  if (!(0 < lambda && lambda < 1)) throw PreconditionError("lambda must lie strictly between 0 and 1");
}

std::pair<ProbVec, ProbVec> aligned_sorted(const ProbVec& x, const ProbVec& y) {
  const std::size_t n = std::max(x.size(), y.size());
  return {sort_desc(pad_to(x, n)), sort_desc(pad_to(y, n))};
}

// m, 1-based: y↓_m > y↓_{m+1} = ... = y↓_n. Needs y↓_2 > y↓_n.
std::size_t last_step_index(const ProbVec& ys) {
  const std::size_t n = ys.size();
  if (n < 3 || !(ys[1] > ys[n - 1])) throw PreconditionError("target must satisfy y_2 > y_n");
  std::size_t m = n - 1;
  while (ys[m - 1] == ys[n - 1]) --m;
  return m;
}

Rat tail_of_sorted(const ProbVec& ys, std::size_t l) {
  Rat acc = 0;
  for (std::size_t i = l; i <= ys.size(); ++i) acc += ys[i - 1];
  return acc;
}

}  // namespace

const char* to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::member_with_certificate: return "member_with_certificate";
    case MembershipStatus::non_member: return "non_member";
    case MembershipStatus::boundary: return "boundary";
    case MembershipStatus::interior: return "interior";
    case MembershipStatus::unknown_at_resolution: return "unknown_at_resolution";
  }
  return "?";
}

const char* to_string(BoundaryClass b) { return b == BoundaryClass::boundary ? "boundary" : "interior"; }

bool t_necessary(const ProbVec& x, const ProbVec& y, const Rat& lambda) {
  require_open_lambda(lambda);
  auto [xs, ys] = aligned_sorted(x, y);
  for (std::size_t d = xs.size(); d-- > 0;) {
    Rat scaled = lambda * ys[d];
    if (xs[d] != scaled) return xs[d] > scaled;
  }
  // Only reachable when x = λy, impossible for normalized inputs with λ < 1.
  return false;
}

BoundaryClass t_boundary_classify(const ProbVec& x, const ProbVec& y, const Rat& lambda, const ProbVec& certificate) {
  require_open_lambda(lambda);
  auto [xs, ys] = aligned_sorted(x, y);
  if (!certificate.strictly_positive() || !certificate.normalized()) {
    throw PreconditionError("certificate must be a strictly positive probability vector");
  }
  if (max_prob(tensor(xs, certificate), tensor(ys, certificate)) < lambda) {
    throw PreconditionError("certificate does not show x in T^lambda(y)");
  }
  const std::size_t n = xs.size();
  return xs[n - 1] == lambda * ys[n - 1] ? BoundaryClass::boundary : BoundaryClass::interior;
}

MembershipVerdict t_k_membership(const ProbVec& x, const ProbVec& y, const Rat& lambda,
                                 std::span<const ProbVec> candidates) {
  if (!(0 < lambda && lambda <= 1)) throw PreconditionError("lambda must lie in (0, 1]");
  auto [xs, ys] = aligned_sorted(x, y);
  MembershipVerdict v;
  v.lambda = lambda;
  if (max_prob(xs, ys) >= lambda) {
    v.status = MembershipStatus::member_with_certificate;
    v.certificate = ProbVec{Rat(1)};
    return v;
  }
  if (lambda < 1 && !t_necessary(xs, ys, lambda)) {
    v.status = MembershipStatus::non_member;
    return v;
  }
  for (const ProbVec& c : candidates) {
    if (max_prob(tensor(xs, c), tensor(ys, c)) >= lambda) {
      v.status = MembershipStatus::member_with_certificate;
      v.certificate = c;
      return v;
    }
  }
  v.status = MembershipStatus::unknown_at_resolution;
  return v;
}

MembershipVerdict t_k_membership(const ProbVec& x, const ProbVec& y, const Rat& lambda, std::size_t k,
                                 std::size_t grid) {
  if (k == 0) throw PreconditionError("catalyst dimension must be positive");
  std::vector<ProbVec> candidates = k == 1 ? std::vector<ProbVec>{} : catalyst_grid(k, grid);
  return t_k_membership(x, y, lambda, candidates);
}

bool t_equals_s(const ProbVec& y, const Rat& lambda) {
  require_open_lambda(lambda);
  ProbVec ys = sort_desc(y);
  if (ys.size() < 2) return true;
  return ys[1] == ys[ys.size() - 1];
}

std::pair<Rat, Rat> separating_mu_range(const ProbVec& y, const Rat& lambda) {
  require_open_lambda(lambda);
  require_normalized(y, "target y");
  ProbVec ys = sort_desc(y);
  const std::size_t n = ys.size();
  const std::size_t m = last_step_index(ys);
  Rat cap = 1;
  if (sgn(ys[n - 1]) > 0) {
    Rat bound = lambda * tail_of_sorted(ys, m) / (static_cast<long>(n - m + 1) * ys[n - 1]);
    if (bound < cap) cap = bound;
  }
  return {lambda, cap};
}

ProbVec t_separating_witness(const ProbVec& y, const Rat& lambda, std::optional<Rat> mu) {
  auto [lo, hi] = separating_mu_range(y, lambda);
  if (!mu) mu = (lo + hi) / 2;
  if (!(lo < *mu && *mu < hi)) {
    throw PreconditionError("mu must lie in (" + to_fraction_string(lo) + ", " + to_fraction_string(hi) + ")");
  }
  ProbVec ys = sort_desc(y);
  const std::size_t n = ys.size();
  const std::size_t m = last_step_index(ys);
  Rat e_m = tail_of_sorted(ys, m);
  Rat e_m1 = tail_of_sorted(ys, m + 1);
  Rat spread = (1 - lambda) * e_m / static_cast<long>(m - 1);
  std::vector<Rat> comps;
  for (std::size_t i = 1; i < m; ++i) comps.emplace_back(ys[i - 1] + spread);
  comps.emplace_back(lambda * e_m - *mu * e_m1);
  for (std::size_t i = m + 1; i <= n; ++i) comps.emplace_back(*mu * ys[i - 1]);
  ProbVec x(std::move(comps));

  if (!x.normalized() || !x.is_nonincreasing() || max_prob(x, ys) != lambda || x[n - 1] != *mu * ys[n - 1]) {
    throw std::logic_error("separating witness failed its own checks: " + to_string(x));
  }
  return x;
}

ProbVec outside_probe(const ProbVec& y, const Rat& mu) {
  if (!(0 < mu && mu < 1)) throw PreconditionError("mu must lie in (0, 1)");
  require_normalized(y, "target y");
  ProbVec ys = sort_desc(y);
  const std::size_t n = ys.size();
  const std::size_t m = last_step_index(ys);
  Rat spread = (1 - mu) * tail_of_sorted(ys, m) / static_cast<long>(m - 1);
  std::vector<Rat> comps;
  for (std::size_t i = 1; i < m; ++i) comps.emplace_back(ys[i - 1] + spread);
  for (std::size_t i = m; i <= n; ++i) comps.emplace_back(mu * ys[i - 1]);
  return ProbVec(std::move(comps));
}

std::optional<Reduction> decompose_reduce(const ProbVec& x, const ProbVec& y, const Rat& lambda) {
  require_open_lambda(lambda);
  auto [xs, ys] = aligned_sorted(x, y);
  const std::size_t n = xs.size();
  std::size_t start = n;  // z = ys[start..n)
  while (start > 1 && xs[start - 1] == lambda * ys[start - 1]) --start;
  // z↓_1 < y↓_1: drop tail entries equal to the largest target component.
  while (start < n && !(ys[start] < ys[0])) ++start;
  if (start == n) return std::nullopt;

  std::vector<Rat> xp(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(start));
  std::vector<Rat> yp(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(start));
  std::vector<Rat> z(ys.begin() + static_cast<std::ptrdiff_t>(start), ys.end());
  Rat mu = 0;
  for (const Rat& v : z) mu += v;

  Reduction r{
      ProbVec(xp).scaled(Rat(1 / (1 - mu * lambda))),
      ProbVec(yp).scaled(Rat(1 / (1 - mu))),
      Rat((lambda - mu * lambda) / (1 - mu * lambda)),
      mu,
      ProbVec(xp),
      ProbVec(yp),
      ProbVec(z),
  };
  return r;
}

std::vector<ProbVec> t_extreme_points(const ProbVec& y, const Rat& lambda) {
  require_open_lambda(lambda);
  return s_extreme_points(y, lambda);
}

}  // namespace partcat
