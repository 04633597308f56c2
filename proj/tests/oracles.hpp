#pragma once

// Test-only brute-force references. Nothing here shares code with the
// library's enumeration, lattice or sweep routines.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline Vec reduce(Vec v, std::size_t free_rank, const std::vector<std::int64_t>& torsion) {
  for (std::size_t j = 0; j < torsion.size(); ++j) {
    auto& x = v[free_rank + j];
    x = ((x % torsion[j]) + torsion[j]) % torsion[j];
  }
  return v;
}

inline Vec combine(const std::vector<Vec>& atoms, const Vec& e, std::size_t dim) {
  Vec x(dim, 0);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) x[j] += e[i] * atoms[i][j];
  return x;
}

/// Every exponent vector e with sum_i e_i deg_i <= max_degree, generated by
/// plain nested counting.
inline void for_each_exponent(const std::vector<std::int64_t>& degrees, std::int64_t max_degree,
                              const std::function<void(const Vec&)>& fn) {
  Vec e(degrees.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t budget) {
    if (i == degrees.size()) {
      fn(e);
      return;
    }
    for (e[i] = 0; e[i] * degrees[i] <= budget; ++e[i]) rec(i + 1, budget - e[i] * degrees[i]);
    e[i] = 0;
  };
  rec(0, max_degree);
}

/// Element -> all factorizations, for every factorization of grading <= bound
/// (complete per element because gradings are positive).
inline std::map<Vec, std::vector<Vec>> factorization_table(const std::vector<Vec>& atoms,
                                                           const std::vector<std::int64_t>& degrees,
                                                           std::size_t free_rank,
                                                           const std::vector<std::int64_t>& torsion,
                                                           std::int64_t bound) {
  std::map<Vec, std::vector<Vec>> t;
  const std::size_t dim = free_rank + torsion.size();
  for_each_exponent(degrees, bound, [&](const Vec& e) {
    t[reduce(combine(atoms, e, dim), free_rank, torsion)].push_back(e);
  });
  for (auto& [x, zs] : t) std::sort(zs.begin(), zs.end());
  return t;
}

inline std::int64_t length(const Vec& z) {
  std::int64_t s = 0;
  for (auto v : z) s += v;
  return s;
}

inline std::int64_t distance(const Vec& a, const Vec& b) {
  std::int64_t l = 0, r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t g = std::min(a[i], b[i]);
    l += a[i] - g;
    r += b[i] - g;
  }
  return std::max(l, r);
}

/// Smallest N joining all of zs by N-chains: try N = 0, 1, 2, ... with BFS.
inline std::int64_t catenary(const std::vector<Vec>& zs) {
  if (zs.size() <= 1) return 0;
  for (std::int64_t n = 0;; ++n) {
    std::vector<bool> seen(zs.size(), false);
    std::vector<std::size_t> q{0};
    seen[0] = true;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (std::size_t v = 0; v < zs.size(); ++v)
        if (!seen[v] && distance(zs[q[h]], zs[v]) <= n) {
          seen[v] = true;
          q.push_back(v);
        }
    if (q.size() == zs.size()) return n;
  }
}

/// Number of R-classes: components of the "share an atom" graph.
inline std::size_t r_class_count(const std::vector<Vec>& zs) {
  std::vector<int> comp(zs.size(), -1);
  int c = 0;
  for (std::size_t s = 0; s < zs.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> st{s};
    comp[s] = c;
    while (!st.empty()) {
      std::size_t u = st.back();
      st.pop_back();
      for (std::size_t v = 0; v < zs.size(); ++v) {
        if (comp[v] >= 0) continue;
        bool share = false;
        for (std::size_t i = 0; i < zs[u].size(); ++i) share |= zs[u][i] > 0 && zs[v][i] > 0;
        if (share) {
          comp[v] = c;
          st.push_back(v);
        }
      }
    }
    ++c;
  }
  return static_cast<std::size_t>(c);
}

struct Pure {
  std::vector<std::size_t> longs, shorts;
};

/// Definition of purely long/short over all irredundant unbalanced pairs in
/// the table, plus `extra` relations c (read as c+ = c-). Each extra relation
/// must evaluate to equal sides; `bad_extra` counts the ones that do not.
inline Pure pure_sets(const std::map<Vec, std::vector<Vec>>& table, std::size_t k,
                      const std::vector<Vec>& extra = {}, const std::vector<Vec>& atoms = {},
                      std::size_t free_rank = 0, const std::vector<std::int64_t>& torsion = {},
                      std::size_t* bad_extra = nullptr) {
  std::vector<bool> on_long(k, false), on_short(k, false);
  auto record = [&](const Vec& a, const Vec& b) {
    std::int64_t la = length(a), lb = length(b);
    if (la <= lb) return;
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] > 0 && b[i] > 0) return;
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i] > 0) on_long[i] = true;
      if (b[i] > 0) on_short[i] = true;
    }
  };
  for (const auto& [x, zs] : table)
    for (const Vec& a : zs)
      for (const Vec& b : zs) record(a, b);
  const std::size_t dim = free_rank + torsion.size();
  for (const Vec& c : extra) {
    Vec plus(k), minus(k);
    for (std::size_t i = 0; i < k; ++i) {
      plus[i] = std::max<std::int64_t>(c[i], 0);
      minus[i] = std::max<std::int64_t>(-c[i], 0);
    }
    if (reduce(combine(atoms, plus, dim), free_rank, torsion) != reduce(combine(atoms, minus, dim), free_rank, torsion)) {
      if (bad_extra) ++*bad_extra;
      continue;
    }
    record(plus, minus);
    record(minus, plus);
  }
  Pure p;
  for (std::size_t i = 0; i < k; ++i) {
    if (on_long[i] && !on_short[i]) p.longs.push_back(i);
    if (on_short[i] && !on_long[i]) p.shorts.push_back(i);
  }
  return p;
}

/// Rank over Q by textbook Gaussian elimination on rationals.
inline std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

/// Minimal zero-sum multisets over Z/n x ... by listing every multiset of
/// primes up to `max_size` and testing every proper sub-multiset.
inline std::vector<Vec> minimal_zero_sums(const std::vector<Vec>& classes, const std::vector<std::int64_t>& moduli,
                                          std::int64_t max_size) {
  const std::size_t n = classes.size();
  auto is_zero = [&](const Vec& e) {
    for (std::size_t j = 0; j < moduli.size(); ++j) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s += e[i] * classes[i][j];
      if (((s % moduli[j]) + moduli[j]) % moduli[j] != 0) return false;
    }
    return true;
  };
  std::vector<Vec> out;
  std::vector<std::int64_t> ones(n, 1);
  for_each_exponent(ones, max_size, [&](const Vec& e) {
    if (length(e) == 0 || !is_zero(e)) return;
    bool minimal = true;
    Vec sub(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (!minimal) return;
      if (i == n) {
        std::int64_t l = length(sub);
        if (l > 0 && l < length(e) && is_zero(sub)) minimal = false;
        return;
      }
      for (sub[i] = 0; sub[i] <= e[i]; ++sub[i]) rec(i + 1);
      sub[i] = 0;
    };
    rec(0);
    if (minimal) out.push_back(e);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
