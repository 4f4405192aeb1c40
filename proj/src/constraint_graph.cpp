#include <algorithm>
#include <functional>
#include <stdexcept>

#include "closure.hpp"
#include "partcat/errors.hpp"
#include "partcat/search.hpp"

namespace partcat {

using detail::Bound;
using detail::Closure;

void ConstraintGraph::add_edge(RatioEdge e) {
  if (e.from >= nodes_ || e.to >= nodes_) throw DimensionError("constraint references a missing node");
  if (sgn(e.weight) <= 0) throw PreconditionError("constraint weights must be positive");
  edges_.push_back(std::move(e));
}

void ConstraintGraph::add(const RatioConstraint& rc) {
  if (!(1 <= rc.j && rc.j < rc.i && rc.i <= nodes_)) throw DimensionError("ratio constraint needs 1 <= j < i <= k");
  if (sgn(rc.bound) <= 0) throw PreconditionError("ratio bound must be positive");
  if (rc.kind == RatioConstraint::Kind::strict_less) {
    add_edge({rc.j - 1, rc.i - 1, rc.bound, true});
  } else {
    add_edge({rc.i - 1, rc.j - 1, Rat(1 / rc.bound), true});
  }
}

void ConstraintGraph::add_monotonicity() {
  for (std::size_t i = 0; i + 1 < nodes_; ++i) add_edge({i, i + 1, Rat(1), false});
}

bool satisfies(const ConstraintGraph& g, std::span<const Rat> point) {
  if (point.size() != g.size()) return false;
  for (const Rat& v : point) {
    if (sgn(v) <= 0) return false;
  }
  for (const RatioEdge& e : g.edges()) {
    Rat cap = e.weight * point[e.from];
    if (e.strict ? !(point[e.to] < cap) : !(point[e.to] <= cap)) return false;
  }
  return true;
}

namespace {

using PairBounds = std::vector<std::vector<std::optional<Bound>>>;

PairBounds tightest_edges(const ConstraintGraph& g) {
  PairBounds t(g.size(), std::vector<std::optional<Bound>>(g.size()));
  for (const RatioEdge& e : g.edges()) {
    Bound b{e.weight, e.strict};
    auto& cur = t[e.from][e.to];
    if (!cur || !detail::tighter_or_equal(*cur, b)) cur = b;
  }
  return t;
}

std::vector<std::size_t> find_violating_cycle(const ConstraintGraph& g) {
  PairBounds t = tightest_edges(g);
  const std::size_t n = g.size();
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  std::vector<std::size_t> found;

  // Simple cycles rooted at their smallest node; a violating closed walk
  // always contains a violating simple cycle.
  std::function<bool(std::size_t, std::size_t, const Bound&)> dfs = [&](std::size_t root, std::size_t node,
                                                                       const Bound& acc) {
    if (const auto& back = t[node][root]; back) {
      if (detail::contradictory(detail::compose(acc, *back))) {
        found = path;
        return true;
      }
    }
    for (std::size_t next = root + 1; next < n; ++next) {
      if (on_path[next] || !t[node][next]) continue;
      on_path[next] = true;
      path.push_back(next);
      if (dfs(root, next, detail::compose(acc, *t[node][next]))) return true;
      path.pop_back();
      on_path[next] = false;
    }
    return false;
  };

  for (std::size_t root = 0; root < n; ++root) {
    path = {root};
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[root] = true;
    if (dfs(root, root, Bound{Rat(1), false})) return found;
  }
  return {};
}

}  // namespace

std::pair<Rat, bool> cycle_weight(const ConstraintGraph& g, const std::vector<std::size_t>& cycle) {
  PairBounds t = tightest_edges(g);
  Bound acc{Rat(1), false};
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    std::size_t a = cycle[i];
    std::size_t b = cycle[(i + 1) % cycle.size()];
    if (!t[a][b]) throw std::invalid_argument("cycle uses a missing edge");
    acc = detail::compose(acc, *t[a][b]);
  }
  return {acc.weight, acc.strict};
}

Feasibility solve_constraints(const ConstraintGraph& g) {
  Feasibility out;
  Closure exact(g.size());
  for (const RatioEdge& e : g.edges()) {
    if (!exact.add(e.from, e.to, {e.weight, e.strict})) {
      out.violating_cycle = find_violating_cycle(g);
      if (out.violating_cycle.empty()) throw std::logic_error("infeasible constraint system without a violating cycle");
      return out;
    }
  }

  // Strictly feasible: tighten every strict edge by (1 - slack) and read the
  // point off the non-strict closure. Halve the slack until it fits.
  Rat slack(1, 2);
  for (int attempt = 0; attempt < 256; ++attempt, slack /= 2) {
    Closure relaxed(g.size());
    bool ok = true;
    for (const RatioEdge& e : g.edges()) {
      Rat w = e.strict ? Rat(e.weight * (1 - slack)) : e.weight;
      if (!relaxed.add(e.from, e.to, {w, false})) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Rat> point(g.size(), Rat(1));
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (const auto& d = relaxed.at(b, a); d && d->weight < point[a]) point[a] = d->weight;
      }
    }
    if (satisfies(g, point)) {
      out.point = std::move(point);
      return out;
    }
  }
  throw std::logic_error("failed to extract a strictly feasible point");
}

}  // namespace partcat
