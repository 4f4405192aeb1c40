#include "partcat/polytope.hpp"

#include "partcat/errors.hpp"

namespace partcat {

std::optional<std::vector<Rat>> convex_combination_weights(const ProbVec& target, std::span<const ProbVec> points) {
  if (points.empty()) return std::nullopt;
  const std::size_t dim = target.size();
  for (const ProbVec& p : points) {
    if (p.size() != dim) throw DimensionError("hull points and target differ in dimension");
  }
  const std::size_t rows = dim + 1;
  const std::size_t vars = points.size();
  const std::size_t cols = vars + rows;  // structural then artificial
  // tableau[r] = coefficients..., rhs
  std::vector<std::vector<Rat>> tab(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t j = 0; j < vars; ++j) tab[r][j] = points[j][r];
    tab[r][cols] = target[r];
  }
  for (std::size_t j = 0; j < vars; ++j) tab[dim][j] = 1;
  tab[dim][cols] = 1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    tab[r][vars + r] = 1;
    basis[r] = vars + r;
  }

  // Reduced costs of the phase-one objective (sum of artificials).
  auto reduced_cost = [&](std::size_t j) {
    Rat c = j >= vars ? Rat(1) : Rat(0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (basis[r] >= vars) c -= tab[r][j];
    }
    return c;
  };

  for (;;) {
    // Bland's rule: lowest-index entering column, lowest-index leaving basic variable.
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < cols && !enter; ++j) {
      if (sgn(reduced_cost(j)) < 0) enter = j;
    }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rat best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(tab[r][*enter]) <= 0) continue;
      Rat q = tab[r][cols] / tab[r][*enter];
      if (!leave || q < best_ratio || (q == best_ratio && basis[r] < basis[*leave])) {
        leave = r;
        best_ratio = q;
      }
    }
    if (!leave) break;  // unbounded cannot happen for a phase-one objective >= 0
    Rat pivot = tab[*leave][*enter];
    for (Rat& v : tab[*leave]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == *leave || sgn(tab[r][*enter]) == 0) continue;
      Rat f = tab[r][*enter];
      for (std::size_t c = 0; c <= cols; ++c) tab[r][c] -= f * tab[*leave][c];
    }
    basis[*leave] = *enter;
  }

  std::vector<Rat> weights(vars, Rat(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] >= vars) {
      if (sgn(tab[r][cols]) != 0) return std::nullopt;
    } else {
      weights[basis[r]] = tab[r][cols];
    }
  }
  return weights;
}

}  // namespace partcat
