#include "lenfact/congruence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <tuple>

#include "lenfact/error.hpp"

namespace lenfact {

Factorization Relation::plus() const {
  Factorization z(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) z[i] = c[i] > 0 ? c[i] : 0;
  return z;
}

Factorization Relation::minus() const {
  Factorization z(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) z[i] = c[i] < 0 ? -c[i] : 0;
  return z;
}

std::int64_t Relation::balance() const { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); }

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool share_atom(const Factorization& a, const Factorization& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return true;
  return false;
}

}  // namespace

std::vector<std::vector<Factorization>> r_classes(const std::vector<Factorization>& zs) {
  UnionFind uf(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      if (share_atom(zs[i], zs[j])) uf.unite(i, j);
  std::vector<std::vector<Factorization>> out;
  std::vector<std::size_t> slot(zs.size(), SIZE_MAX);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    std::size_t r = uf.find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(zs[i]);
  }
  return out;
}

std::vector<std::vector<Factorization>> r_classes(const Presentation& p, const Vec& x) {
  return r_classes(factorizations(p, x));
}

std::int64_t mu(const Presentation& p, const Vec& x) {
  auto classes = r_classes(p, x);
  if (classes.empty()) throw Error(ErrorCode::kElementNotInMonoid, vec_to_string(x) + " is not in the monoid");
  std::int64_t best = 0;
  for (const auto& cls : classes) {
    std::int64_t m = length(cls.front());
    for (const auto& z : cls) m = std::min(m, length(z));
    best = std::max(best, m);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Binomial completion

namespace {

struct Binomial {
  Vec lead;
  Vec tail;
};

// Returns <0, 0, >0 like a three-way comparison of monomials.
using TermOrder = std::function<int(const Vec&, const Vec&)>;

std::int64_t weighted_degree(const Vec& u, const std::vector<std::int64_t>& w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * w[i];
  return s;
}

TermOrder graded_lex(const std::vector<std::int64_t>& w) {
  return [w](const Vec& u, const Vec& v) {
    std::int64_t du = weighted_degree(u, w), dv = weighted_degree(v, w);
    if (du != dv) return du < dv ? -1 : 1;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
    return 0;
  };
}

// Weighted reverse lexicographic order in which x_last is the smallest variable.
TermOrder graded_revlex(const std::vector<std::int64_t>& w, std::size_t last) {
  return [w, last](const Vec& u, const Vec& v) {
    std::int64_t du = weighted_degree(u, w), dv = weighted_degree(v, w);
    if (du != dv) return du < dv ? -1 : 1;
    if (u[last] != v[last]) return u[last] > v[last] ? -1 : 1;
    for (std::size_t i = u.size(); i-- > 0;) {
      if (i == last) continue;
      if (u[i] != v[i]) return u[i] > v[i] ? -1 : 1;
    }
    return 0;
  };
}

bool divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// Orients so that lead > tail; false if the binomial is zero.
bool orient(Binomial& b, const TermOrder& ord) {
  int c = ord(b.lead, b.tail);
  if (c == 0) return false;
  if (c < 0) std::swap(b.lead, b.tail);
  return true;
}

void replace_multiple(Vec& m, const Binomial& g) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += g.tail[i] - g.lead[i];
}

// Reduces the leading term until no element of `basis` divides it.
bool reduce_lead(Binomial& b, const std::vector<Binomial>& basis, const TermOrder& ord) {
  for (;;) {
    if (!orient(b, ord)) return false;
    auto it = std::find_if(basis.begin(), basis.end(), [&](const Binomial& g) { return divides(g.lead, b.lead); });
    if (it == basis.end()) return true;
    replace_multiple(b.lead, *it);
  }
}

void reduce_tail(Binomial& b, const std::vector<Binomial>& basis) {
  for (;;) {
    auto it = std::find_if(basis.begin(), basis.end(), [&](const Binomial& g) { return divides(g.lead, b.tail); });
    if (it == basis.end()) return;
    replace_multiple(b.tail, *it);
  }
}

std::vector<Binomial> groebner(const std::vector<Binomial>& input, const TermOrder& ord,
                               const std::vector<std::int64_t>& w) {
  std::vector<Binomial> g;
  using Pair = std::tuple<std::int64_t, std::size_t, std::size_t>;  // (lcm degree, i, j)
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;

  auto add = [&](Binomial b) {
    if (!reduce_lead(b, g, ord)) return;
    std::size_t j = g.size();
    g.push_back(std::move(b));
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(g[i].lead, g[j].lead)) continue;  // product criterion
      Vec l(g[i].lead.size());
      for (std::size_t t = 0; t < l.size(); ++t) l[t] = std::max(g[i].lead[t], g[j].lead[t]);
      pairs.emplace(weighted_degree(l, w), i, j);
    }
  };
  for (const Binomial& b : input) add(b);
  while (!pairs.empty()) {
    auto [deg, i, j] = pairs.top();
    pairs.pop();
    Vec l(g[i].lead.size());
    for (std::size_t t = 0; t < l.size(); ++t) l[t] = std::max(g[i].lead[t], g[j].lead[t]);
    Binomial s{l, l};
    for (std::size_t t = 0; t < l.size(); ++t) {
      s.lead[t] += g[i].tail[t] - g[i].lead[t];
      s.tail[t] += g[j].tail[t] - g[j].lead[t];
    }
    add(std::move(s));
  }

  // Reduced basis: drop elements with a divisible leading term, then
  // reduce tails.
  std::sort(g.begin(), g.end(), [&](const Binomial& a, const Binomial& b) { return ord(a.lead, b.lead) < 0; });
  std::vector<Binomial> minimal;
  for (const Binomial& b : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Binomial& m) { return divides(m.lead, b.lead); });
    if (!redundant) minimal.push_back(b);
  }
  for (Binomial& b : minimal) {
    std::vector<Binomial> others;
    for (const Binomial& o : minimal)
      if (&o != &b) others.push_back(o);
    reduce_tail(b, others);
  }
  return minimal;
}

}  // namespace

std::vector<Relation> kernel_generating_set(const Presentation& p) {
  const std::size_t k = p.atoms.size();
  std::vector<Binomial> current;
  for (const IntVector& c : p.kernel.basis()) {
    Binomial b{Vec(k, 0), Vec(k, 0)};
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t v = to_int64(c[i]);
      (v > 0 ? b.lead[i] : b.tail[i]) = v > 0 ? v : -v;
    }
    current.push_back(std::move(b));
  }
  if (current.empty()) return {};

  // The lattice-basis binomials generate an ideal whose saturation by all
  // variables is the kernel ideal. Saturate one variable at a time: in
  // reverse lex with x_i last, dividing a Groebner basis by x_i^inf yields a
  // Groebner basis of the saturation.
  for (std::size_t i = 0; i < k; ++i) {
    bool needed = std::any_of(current.begin(), current.end(), [&](const Binomial& b) { return b.lead[i] > 0 && b.tail[i] > 0; });
    // A variable missing from every leading term still needs the pass,
    // since completion can create common factors. Only skip when the
    // variable never occurs on both sides and the set is a single binomial.
    if (!needed && current.size() == 1) continue;
    current = groebner(current, graded_revlex(p.degrees, i), p.degrees);
    std::vector<Binomial> next;
    for (Binomial b : current) {
      std::int64_t m = std::min(b.lead[i], b.tail[i]);
      b.lead[i] -= m;
      b.tail[i] -= m;
      if (b.lead != b.tail) next.push_back(std::move(b));
    }
    current = std::move(next);
  }
  std::vector<Binomial> final_basis = groebner(current, graded_lex(p.degrees), p.degrees);

  std::vector<Relation> out;
  for (const Binomial& b : final_basis) {
    Relation r{Vec(k)};
    for (std::size_t i = 0; i < k; ++i) r.c[i] = b.lead[i] - b.tail[i];
    out.push_back(std::move(r));
  }
  return out;
}

bool connected_by_moves(const std::vector<Factorization>& zs, const std::vector<Relation>& gens) {
  if (zs.size() <= 1) return true;
  std::map<Factorization, std::size_t> index;
  for (std::size_t i = 0; i < zs.size(); ++i) index.emplace(zs[i], i);
  UnionFind uf(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (const Relation& g : gens)
      for (int dir : {1, -1}) {
        Factorization z = zs[i];
        bool ok = true;
        for (std::size_t t = 0; t < z.size() && ok; ++t) {
          z[t] -= dir * g.c[t];
          ok = z[t] >= 0;
        }
        if (!ok) continue;
        auto it = index.find(z);
        if (it != index.end()) uf.unite(i, it->second);
      }
  for (std::size_t i = 1; i < zs.size(); ++i)
    if (uf.find(i) != uf.find(0)) return false;
  return true;
}

std::optional<MasterRelation> master_relation(const Presentation& p) {
  if (p.kernel.rank() != 1) return std::nullopt;
  Relation r{Vec(p.atoms.size())};
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = to_int64(p.kernel.basis()[0][i]);
  if (r.balance() == 0) return std::nullopt;
  Factorization plus = r.plus(), minus = r.minus();
  auto zs = factorizations(p, p.evaluate(plus));
  if (zs.size() != 2) return std::nullopt;
  if (!((zs[0] == plus && zs[1] == minus) || (zs[0] == minus && zs[1] == plus))) return std::nullopt;
  if (length(plus) < length(minus)) return MasterRelation{plus, minus};
  return MasterRelation{minus, plus};
}

BettiSet betti_elements(const Presentation& p, BettiStrategy strategy, std::int64_t bound) {
  BettiSet out;
  out.strategy = strategy;
  out.bound_used = bound;
  auto by_grade = [&](const Vec& a, const Vec& b) { return graded_less(p.grading, a, b); };

  if (strategy == BettiStrategy::kCertified) {
    // Crossing between R-classes of x needs a generator living exactly at
    // x, so Betti elements are among the generator degrees.
    std::vector<Vec> candidates;
    for (const Relation& g : kernel_generating_set(p)) candidates.push_back(p.evaluate(g.plus()));
    std::sort(candidates.begin(), candidates.end(), by_grade);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Vec& x : candidates)
      if (r_classes(p, x).size() >= 2) out.elements.push_back(x);
    out.bound_used = 0;
    for (const Vec& x : out.elements) out.bound_used = std::max(out.bound_used, p.degree(x));
    return out;
  }

  SweepTable table = sweep(p, SweepBound::degree(bound));
  for (const auto& [x, zs] : table)
    if (zs.size() >= 2 && r_classes(zs).size() >= 2) out.elements.push_back(x);
  std::sort(out.elements.begin(), out.elements.end(), by_grade);
  if (p.atoms.size() <= kGeneratingSetAtomLimit) {
    std::int64_t top = 0;
    for (const Relation& g : kernel_generating_set(p)) top = std::max(top, p.degree(p.evaluate(g.plus())));
    if (top > bound)
      out.warnings.push_back("BoundTooSmallWarning: kernel generators reach grading " + std::to_string(top) +
                             " > bound " + std::to_string(bound));
  } else {
    out.warnings.push_back("BoundTooSmallWarning: sweep is complete only up to grading " + std::to_string(bound));
  }
  return out;
}

}  // namespace lenfact
