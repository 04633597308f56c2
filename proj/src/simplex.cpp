// Phase-one simplex over Q with Bland's rule. Only feasibility is ever asked
// of it (dual-cone gradings, cone intersections), so there is no phase two.

#include <optional>
#include <vector>

#include "lenfact/linalg.hpp"

namespace lenfact {

std::optional<std::vector<Rational>> find_nonnegative_solution(const IntMatrix& a,
                                                               const IntVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Tableau columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = Rational(a(i, j) * sign);
    t[i][n + i] = 1;
    t[i][width - 1] = Rational(b[i] * sign);
    basis[i] = n + i;
  }
  // Reduced costs of the objective "sum of artificials", kept as a row.
  std::vector<Rational> cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t[i][j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  if (cost[width - 1] != 0) return std::nullopt;  // artificial sum stays positive

  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  return x;
}

}  // namespace lenfact
