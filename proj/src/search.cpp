#include "partcat/search.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "closure.hpp"
#include "partcat/errors.hpp"

namespace partcat {

std::vector<TupleR> enumerate_tuples(const std::vector<std::size_t>& critical, std::size_t n, std::size_t k) {
  if (critical.empty()) throw PreconditionError("critical set is empty");
  if (k == 0) throw PreconditionError("tuple length must be positive");
  std::vector<std::size_t> values(critical.begin(), critical.end());
  values.push_back(n + 1);
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<TupleR> out;
  TupleR cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      if (cur.back() != n + 1) out.push_back(cur);
      return;
    }
    for (std::size_t v = start; v < values.size(); ++v) {
      cur.push_back(values[v]);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

struct Prepared {
  ProbVec xs;
  ProbVec ys;
  CriticalSet crit;
};

Prepared prepare(const ProbVec& x, const ProbVec& y) {
  require_normalized(x, "source x");
  require_normalized(y, "target y");
  const std::size_t n = std::max(x.size(), y.size());
  Prepared p{sort_desc(pad_to(x, n)), sort_desc(pad_to(y, n)), {}};
  if (!p.ys.strictly_positive()) {
    throw PreconditionError("catalyst search needs a strictly positive target");
  }
  p.crit = critical_set(p.xs, p.ys);
  if (!p.crit.hypothesis_holds) throw PreconditionError("no partial catalyst exists for this transformation");
  return p;
}

// The strict disjuncts for one tuple, pair order (i, j) with i > j, lower
// disjunct first. Disjuncts that mention y_{n+1} are dropped.
std::vector<RatioConstraint> disjuncts(const ProbVec& ys, const TupleR& r) {
  const std::size_t n = ys.size();
  std::vector<RatioConstraint> out;
  for (std::size_t i = 2; i <= r.size(); ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      std::size_t ri = r[i - 1];
      std::size_t rj = r[j - 1];
      if (rj != n + 1) out.push_back({i, j, RatioConstraint::Kind::strict_less, Rat(ys[rj - 1] / ys[ri - 2])});
      if (ri != n + 1) out.push_back({i, j, RatioConstraint::Kind::strict_greater, Rat(ys[rj - 2] / ys[ri - 1])});
    }
  }
  return out;
}

RatioEdge as_edge(const RatioConstraint& rc) {
  ConstraintGraph g(rc.i);
  g.add(rc);
  return g.edges().front();
}

}  // namespace

SearchResult decide_k_dim(const ProbVec& x, const ProbVec& y, std::size_t k) {
  if (k < 2) throw PreconditionError("catalyst dimension must be at least 2");
  Prepared prep = prepare(x, y);
  std::vector<TupleR> tuples = enumerate_tuples(prep.crit.indices, prep.ys.size(), k);
  std::vector<std::vector<RatioConstraint>> options;
  options.reserve(tuples.size());
  for (const TupleR& r : tuples) options.push_back(disjuncts(prep.ys, r));

  ConstraintGraph base(k);
  base.add_monotonicity();
  detail::Closure start(k);
  for (const RatioEdge& e : base.edges()) start.add(e.from, e.to, {e.weight, e.strict});

  std::vector<RatioConstraint> chosen;
  // Depth-first over tuples; a tuple already forced by the current bounds
  // needs no branching, which keeps the search small in practice.
  std::function<bool(std::size_t, const detail::Closure&)> search = [&](std::size_t t, const detail::Closure& cl) {
    if (t == options.size()) return true;
    for (const RatioConstraint& rc : options[t]) {
      RatioEdge e = as_edge(rc);
      if (cl.implies_strict(e.from, e.to, e.weight)) {
        chosen.push_back(rc);
        if (search(t + 1, cl)) return true;
        chosen.pop_back();
        return false;
      }
    }
    for (const RatioConstraint& rc : options[t]) {
      RatioEdge e = as_edge(rc);
      detail::Closure next = cl;
      if (!next.add(e.from, e.to, {e.weight, true})) continue;
      chosen.push_back(rc);
      if (search(t + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };

  SearchResult result;
  result.dimension = k;
  if (!search(0, start)) return result;

  ConstraintGraph g = base;
  for (const RatioConstraint& rc : chosen) g.add(rc);
  auto point = feasible_point(g);
  if (!point) throw std::logic_error("selected constraints closed consistently but have no point");
  ProbVec witness = ProbVec(std::move(*point)).normalize();
  if (!is_partial_catalyst(prep.xs, prep.ys, witness).is_partial) {
    throw std::logic_error("constraint witness " + to_string(witness) + " failed direct verification");
  }
  result.exists = true;
  result.witness = std::move(witness);
  result.selections = std::move(chosen);
  return result;
}

SearchResult min_catalyst_dimension(const ProbVec& x, const ProbVec& y) {
  Prepared prep = prepare(x, y);
  const std::size_t upper = construct_geometric_catalyst(prep.xs, prep.ys).size();
  for (std::size_t k = 2; k <= upper; ++k) {
    SearchResult r = decide_k_dim(prep.xs, prep.ys, k);
    if (r.exists) return r;
  }
  throw std::logic_error("no catalyst found up to the geometric upper bound");
}

std::vector<ProbVec> catalyst_grid(std::size_t k, std::size_t grid) {
  if (k == 0) throw PreconditionError("catalyst dimension must be positive");
  if (grid < k) throw PreconditionError("grid density must be at least the catalyst dimension");
  const long d = static_cast<long>(grid);
  std::vector<ProbVec> out;
  std::vector<long> a;
  // Nonincreasing positive parts a_1 >= ... >= a_k summing to D.
  std::function<void(long, long)> rec = [&](long remaining, long cap) {
    const long slots = static_cast<long>(k - a.size());
    if (slots == 1) {
      if (remaining <= cap) {
        std::vector<Rat> comps;
        for (long v : a) comps.push_back(rat(v, d));
        comps.push_back(rat(remaining, d));
        out.emplace_back(std::move(comps));
      }
      return;
    }
    for (long v = std::min(cap, remaining - (slots - 1)); v >= 1; --v) {
      if (v * slots < remaining) break;
      a.push_back(v);
      rec(remaining - v, v);
      a.pop_back();
    }
  };
  rec(d, d);
  std::sort(out.begin(), out.end(), [](const ProbVec& l, const ProbVec& r) {
    return std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end());
  });
  return out;
}

std::vector<ProbVec> grid_oracle(const ProbVec& x, const ProbVec& y, std::size_t k, std::size_t grid) {
  if (k < 2 || grid < k) throw PreconditionError("grid oracle needs k >= 2 and D >= k");
  std::vector<ProbVec> out;
  for (ProbVec& c : catalyst_grid(k, grid)) {
    if (is_partial_catalyst(x, y, c).is_partial) out.push_back(std::move(c));
  }
  return out;
}

GridBest best_prob_at_dim(const ProbVec& x, const ProbVec& y, std::size_t k, std::size_t grid) {
  if (k < 1 || grid < k) throw PreconditionError("grid search needs k >= 1 and D >= k");
  const std::size_t n = std::max(x.size(), y.size());
  ProbVec xs = sort_desc(pad_to(x, n));
  ProbVec ys = sort_desc(pad_to(y, n));
  GridBest best{max_prob(xs, ys), ProbVec{Rat(1)}};
  if (k == 1) return best;
  for (ProbVec& c : catalyst_grid(k, grid)) {
    Rat p = max_prob(tensor(xs, c), tensor(ys, c));
    if (p > best.p_best) best = {std::move(p), std::move(c)};
  }
  return best;
}

}  // namespace partcat
