#include "repbox/lp.hpp"

#include "repbox/errors.hpp"

namespace repbox {

std::optional<std::vector<Rational>> find_nonnegative_solution(EqualitySystem system) {
  const std::size_t rows = system.a.size();
  if (system.b.size() != rows) throw DomainError("right-hand side length mismatch");
  const std::size_t vars = rows == 0 ? 0 : system.a.front().size();
  for (const auto& row : system.a)
    if (row.size() != vars) throw DomainError("ragged constraint matrix");

  // Tableau over the structural variables only. Artificial variables start
  // basic in every row; once one leaves it never re-enters, so its column is
  // not stored. basis[i] >= vars marks an artificial (index vars + i).
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(vars + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = system.b[i] < 0;
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = flip ? -system.a[i][j] : system.a[i][j];
    t[i][vars] = flip ? -system.b[i] : system.b[i];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = vars + i;

  // Reduced costs of minimizing the sum of artificials; z[vars] is minus the objective.
  std::vector<Rational> z(vars + 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j <= vars; ++j) z[j] -= t[i][j];

  for (;;) {
    std::size_t enter = vars;
    for (std::size_t j = 0; j < vars; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == vars) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][vars] / t[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a positive entry.
    if (leave == rows) throw InternalError("unbounded phase-one simplex");

    const Rational pivot = t[leave][enter];
    for (std::size_t j = 0; j <= vars; ++j)
      if (t[leave][j] != 0) t[leave][j] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j <= vars; ++j)
        if (t[leave][j] != 0) t[i][j] -= factor * t[leave][j];
    }
    if (z[enter] != 0) {
      const Rational factor = z[enter];
      for (std::size_t j = 0; j <= vars; ++j)
        if (t[leave][j] != 0) z[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (z[vars] != 0) return std::nullopt;
  std::vector<Rational> y(vars);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < vars) y[basis[i]] = t[i][vars];
  return y;
}

}  // namespace repbox
