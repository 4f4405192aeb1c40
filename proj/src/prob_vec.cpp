#include "partcat/prob_vec.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "partcat/errors.hpp"

namespace partcat {

ProbVec::ProbVec(std::vector<Rat> components) : components_(std::move(components)) {
  if (components_.empty()) throw DimensionError("vector must have at least one component");
  total_ = 0;
  for (const Rat& c : components_) {
    if (sgn(c) < 0) throw ParseError("negative component " + to_fraction_string(c));
    total_ += c;
  }
}

ProbVec ProbVec::parse(std::span<const std::string> entries) {
  std::vector<Rat> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(parse_rat(e));
  return ProbVec(std::move(out));
}

ProbVec ProbVec::of(std::initializer_list<const char*> entries) {
  std::vector<std::string> s(entries.begin(), entries.end());
  return parse(s);
}

bool ProbVec::strictly_positive() const {
  return std::all_of(components_.begin(), components_.end(), [](const Rat& c) { return sgn(c) > 0; });
}

bool ProbVec::is_nonincreasing() const {
  return std::is_sorted(components_.begin(), components_.end(), std::greater<>());
}

ProbVec ProbVec::normalize() const {
  if (sgn(total_) == 0) throw PreconditionError("cannot normalize the zero vector");
  return scaled(Rat(1 / total_));
}

ProbVec ProbVec::scaled(const Rat& factor) const {
  std::vector<Rat> out(components_);
  for (Rat& c : out) c *= factor;
  return ProbVec(std::move(out));
}

void require_normalized(const ProbVec& v, const char* what) {
  if (!v.normalized()) {
    throw PreconditionError(std::string(what) + " must sum to 1 (sum is " + to_fraction_string(v.total()) + ")");
  }
}

std::string to_string(const ProbVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

ProbVec sort_desc(const ProbVec& v) {
  std::vector<Rat> out(v.begin(), v.end());
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return ProbVec(std::move(out));
}

ProbVec pad_to(const ProbVec& v, std::size_t n) {
  if (v.size() >= n) return v;
  std::vector<Rat> out(v.begin(), v.end());
  out.resize(n, Rat(0));
  return ProbVec(std::move(out));
}

std::vector<Rat> tail_sums(const ProbVec& v) {
  ProbVec s = sort_desc(v);
  std::vector<Rat> tails(s.size());
  Rat acc = 0;
  for (std::size_t i = s.size(); i-- > 0;) {
    acc += s[i];
    tails[i] = acc;
  }
  return tails;
}

Rat tail_sum(const ProbVec& v, std::size_t l) {
  if (l < 1 || l > v.size()) {
    throw std::out_of_range("tail index " + std::to_string(l) + " outside 1.." + std::to_string(v.size()));
  }
  return tail_sums(v)[l - 1];
}

namespace {

void require_same_dimension(const ProbVec& x, const ProbVec& y) {
  if (x.size() != y.size()) {
    throw DimensionError("dimension mismatch: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
}

}  // namespace

bool is_majorized(const ProbVec& x, const ProbVec& y) {
  require_same_dimension(x, y);
  if (x.total() != y.total()) return false;
  ProbVec xs = sort_desc(x);
  ProbVec ys = sort_desc(y);
  Rat px = 0;
  Rat py = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    px += xs[i];
    py += ys[i];
    if (px > py) return false;
  }
  return true;
}

bool is_super_majorized(const ProbVec& x, const ProbVec& w) {
  require_same_dimension(x, w);
  std::vector<Rat> tx = tail_sums(x);
  std::vector<Rat> tw = tail_sums(w);
  for (std::size_t l = 0; l < tx.size(); ++l) {
    if (tx[l] < tw[l]) return false;
  }
  return true;
}

ProbVec tensor(const ProbVec& x, const ProbVec& y) {
  std::vector<Rat> out;
  out.reserve(x.size() * y.size());
  for (const Rat& a : x) {
    for (const Rat& b : y) out.emplace_back(a * b);
  }
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return ProbVec(std::move(out));
}

ProbVec direct_sum(std::span<const Rat> x, std::span<const Rat> y) {
  std::vector<Rat> out(x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return ProbVec(std::move(out));
}

ProbVec y_lambda(const ProbVec& y, const Rat& lambda) {
  if (lambda < 0 || lambda > 1) throw PreconditionError("lambda must lie in [0, 1], got " + to_fraction_string(lambda));
  require_normalized(y, "target y");
  ProbVec ys = sort_desc(y);
  std::vector<Rat> out(ys.size());
  Rat rest = 0;
  for (std::size_t i = 1; i < ys.size(); ++i) {
    out[i] = lambda * ys[i];
    rest += out[i];
  }
  out[0] = 1 - rest;
  return ProbVec(std::move(out));
}

std::optional<RatMatrix> doubly_stochastic_witness(const ProbVec& x, const ProbVec& y) {
  if (!is_majorized(x, y)) return std::nullopt;
  const std::size_t n = x.size();
  ProbVec xs = sort_desc(x);
  ProbVec ys = sort_desc(y);
  std::vector<Rat> cur(ys.begin(), ys.end());
  RatMatrix d(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;

  // Each T-transform equalizes one more coordinate with x↓, so at most n steps.
  for (std::size_t step = 0; step <= n; ++step) {
    std::optional<std::size_t> j;
    for (std::size_t i = 0; i < n; ++i) {
      if (cur[i] > xs[i]) j = i;
    }
    if (!j) break;
    std::size_t k = *j + 1;
    while (k < n && !(cur[k] < xs[k])) ++k;
    Rat delta = std::min<Rat>(cur[*j] - xs[*j], xs[k] - cur[k]);
    Rat mix = delta / (cur[*j] - cur[k]);  // weight moved between j and k
    // T = (1 - mix) I + mix Q, Q swaps j and k; D <- T D.
    std::vector<Rat> row_j = d[*j];
    std::vector<Rat> row_k = d[k];
    for (std::size_t c = 0; c < n; ++c) {
      d[*j][c] = (1 - mix) * row_j[c] + mix * row_k[c];
      d[k][c] = (1 - mix) * row_k[c] + mix * row_j[c];
    }
    cur[*j] -= delta;
    cur[k] += delta;
  }
  return d;
}

bool is_doubly_stochastic(const RatMatrix& d) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].size() != n) return false;
    Rat row = 0;
    Rat col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(d[i][j]) < 0) return false;
      row += d[i][j];
      col += d[j][i];
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

std::vector<Rat> apply(const RatMatrix& d, std::span<const Rat> v) {
  std::vector<Rat> out(d.size(), Rat(0));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += d[i][j] * v[j];
  }
  return out;
}

}  // namespace partcat
