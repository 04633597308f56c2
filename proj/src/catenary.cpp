#include <algorithm>
#include <map>
#include <set>

#include "lenfact/error.hpp"
#include "lenfact/invariants.hpp"

namespace lenfact {

namespace {

// Largest edge of a minimum bottleneck spanning tree of the complete graph
// on `zs` weighted by distance (Prim).
std::int64_t bottleneck(const std::vector<const Factorization*>& zs) {
  const std::size_t n = zs.size();
  if (n <= 1) return 0;
  std::vector<std::int64_t> best(n, INT64_MAX);
  std::vector<bool> done(n, false);
  best[0] = 0;
  std::int64_t worst = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && (u == n || best[v] < best[u])) u = v;
    done[u] = true;
    worst = std::max(worst, best[u]);
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v]) best[v] = std::min(best[v], distance(*zs[u], *zs[v]));
  }
  return worst;
}

}  // namespace

CatenaryReport catenary_of_set(const std::vector<Factorization>& zs) {
  CatenaryReport r;
  if (zs.size() <= 1) return r;
  std::vector<const Factorization*> all;
  std::map<std::int64_t, std::vector<const Factorization*>> by_length;
  for (const Factorization& z : zs) {
    all.push_back(&z);
    by_length[length(z)].push_back(&z);
  }
  r.c = bottleneck(all);
  for (const auto& [len, cls] : by_length) r.c_eq = std::max(r.c_eq, bottleneck(cls));
  for (auto it = by_length.begin(); std::next(it) != by_length.end(); ++it) {
    auto nx = std::next(it);
    std::int64_t m = INT64_MAX;
    for (const Factorization* a : it->second)
      for (const Factorization* b : nx->second) m = std::min(m, distance(*a, *b));
    r.c_adj = std::max(r.c_adj, m);
  }
  r.c_mon = std::max(r.c_eq, r.c_adj);
  return r;
}

std::int64_t monotone_catenary_by_definition(const std::vector<Factorization>& zs) {
  const std::size_t n = zs.size();
  if (n <= 1) return 0;
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n));
  std::set<std::int64_t> candidates{0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = distance(zs[i], zs[j]);
      candidates.insert(d[i][j]);
    }
  // For a candidate N: every z must reach every z' with |z'| >= |z| along
  // steps of distance <= N that never decrease the length. Reversing such a
  // chain covers the other direction.
  for (std::int64_t bound : candidates) {
    bool ok = true;
    for (std::size_t s = 0; s < n && ok; ++s) {
      std::vector<bool> seen(n, false);
      std::vector<std::size_t> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v)
          if (!seen[v] && d[u][v] <= bound && length(zs[v]) >= length(zs[u])) {
            seen[v] = true;
            stack.push_back(v);
          }
      }
      for (std::size_t t = 0; t < n && ok; ++t)
        if (length(zs[t]) >= length(zs[s]) && !seen[t]) ok = false;
    }
    if (ok) return bound;
  }
  return *candidates.rbegin();
}

CatenaryReport catenary_element(const Presentation& p, const Vec& x) {
  auto zs = factorizations(p, x);
  if (zs.empty()) throw Error(ErrorCode::kElementNotInMonoid, vec_to_string(x) + " is not in the monoid");
  CatenaryReport r = catenary_of_set(zs);
  r.element = x;
  p.ambient.canonicalize(r.element);
  return r;
}

CatenaryMonoidReport catenary_monoid(const Presentation& p, std::int64_t bound) {
  CatenaryMonoidReport rep;
  rep.bound = bound;
  SweepTable table = sweep(p, SweepBound::degree(bound));
  for (const auto& [x, zs] : table) {
    CatenaryReport r = catenary_of_set(zs);
    rep.c = std::max(rep.c, r.c);
    rep.c_eq = std::max(rep.c_eq, r.c_eq);
    rep.c_adj = std::max(rep.c_adj, r.c_adj);
    rep.c_mon = std::max(rep.c_mon, r.c_mon);
  }
  LfResult lf = is_length_factorial(p, LfStrategy::kKernel);
  if (lf.value && rep.c_eq != 0)
    throw Error(ErrorCode::kAssertionFailed, "length-factorial monoid with a positive equal catenary degree");
  if (is_factorial(p)) {
    rep.exact = true;
    return rep;
  }
  if (lf.master) {
    std::int64_t exact = std::max(length(lf.master->w1), length(lf.master->w2));
    std::int64_t betti_degree = p.degree(p.evaluate(lf.master->w1));
    // The sweep can only see values up to the closed form, and reaches it
    // once the Betti element is inside the bound.
    bool consistent = rep.c <= exact && rep.c_adj <= exact && rep.c_mon <= exact;
    if (betti_degree <= bound) consistent = consistent && rep.c == exact && rep.c_adj == exact && rep.c_mon == exact;
    if (!consistent)
      throw Error(ErrorCode::kAssertionFailed, "catenary sweep contradicts max(|w1|, |w2|)");
    if (betti_degree > bound)
      rep.warnings.push_back("bound " + std::to_string(bound) + " is below the Betti element; exact value from the master relation");
    rep.c = rep.c_adj = rep.c_mon = exact;
    rep.c_eq = 0;
    rep.exact = true;
    return rep;
  }
  if (rep.c_eq == 0)
    rep.warnings.push_back("inconclusive: monoid is not length-factorial but no positive equal catenary value below bound " +
                           std::to_string(bound));
  return rep;
}

}  // namespace lenfact
