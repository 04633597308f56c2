#include "lenfact/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "lenfact/error.hpp"

namespace lenfact {

namespace {

Vec kernel_vector(const IntVector& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_int64(v[i]);
  return out;
}

std::vector<Vec> kernel_basis(const Presentation& p) {
  std::vector<Vec> out;
  for (const IntVector& v : p.kernel.basis()) out.push_back(kernel_vector(v));
  return out;
}

std::int64_t sum(const Vec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

std::string factorization_string(const Presentation& p, const Factorization& z) {
  std::string s;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (z[i] != 1) s += std::to_string(z[i]) + "*";
    s += vec_to_string(p.atoms[i]);
  }
  return s.empty() ? "0" : s;
}

// Independence of `vectors` over Z inside the ambient group.
bool integrally_independent(const std::vector<Vec>& vectors, const AmbientGroup& ambient) {
  if (vectors.empty()) return true;
  if (ambient.torsion_free()) {
    std::vector<IntVector> cols;
    for (const Vec& v : vectors) cols.push_back(to_integers(v));
    return rational_rank(IntMatrix::from_columns(ambient.dim(), cols)) == vectors.size();
  }
  return integer_kernel(vectors, ambient).is_zero();
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kAssertionFailed, what);
}

// Grading of c+ (equal to that of c-).
std::int64_t relation_degree(const Presentation& p, const Vec& c) {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] > 0) d += c[j] * p.degrees[j];
  return d;
}

// The Hermite preimages can be far heavier than necessary. Small
// combinations of the kernel basis usually contain much lighter relations
// with the same sign pattern (sign of sigma, atom i present); keep the
// lightest one per witness.
void shrink_witnesses(const Presentation& p, std::size_t i, std::vector<Vec>& witnesses) {
  constexpr std::int64_t kRange = 3;
  constexpr std::size_t kMaxRank = 4;
  if (p.kernel.rank() == 0 || p.kernel.rank() > kMaxRank || witnesses.empty()) return;
  // Small combinations of a reduced basis (weighted by grading) reach the
  // light relations that the Hermite basis hides behind big coefficients.
  std::vector<Integer> weights(p.degrees.begin(), p.degrees.end());
  std::vector<Vec> basis;
  for (const IntVector& v : lll_reduce(p.kernel.basis(), weights)) basis.push_back(kernel_vector(v));
  const std::size_t k = p.atoms.size();
  auto sign = [](std::int64_t x) { return (x > 0) - (x < 0); };
  std::vector<std::int64_t> best(witnesses.size());
  for (std::size_t w = 0; w < witnesses.size(); ++w) best[w] = relation_degree(p, witnesses[w]);
  std::vector<std::int64_t> coef(basis.size(), -kRange);
  while (true) {
    Vec c(k, 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t j = 0; j < k; ++j) c[j] += coef[b] * basis[b][j];
    if (c[i] > 0) {
      std::int64_t d = relation_degree(p, c);
      for (std::size_t w = 0; w < witnesses.size(); ++w)
        if (sign(sum(c)) == sign(sum(witnesses[w])) && d < best[w]) {
          witnesses[w] = c;
          best[w] = d;
        }
    }
    std::size_t b = 0;
    while (b < coef.size() && coef[b] == kRange) coef[b++] = -kRange;
    if (b == coef.size()) break;
    ++coef[b];
  }
}

}  // namespace

std::int64_t witness_sweep_bound(const Presentation& p, const PureSets& lattice, std::int64_t floor) {
  std::int64_t b = floor;
  for (const AtomSignature& s : lattice.signatures)
    for (const Vec& c : s.witnesses) b = std::max(b, relation_degree(p, c));
  return b;
}

const char* lf_strategy_name(LfStrategy s) noexcept {
  switch (s) {
    case LfStrategy::kRank: return "rank";
    case LfStrategy::kKernel: return "kernel";
    case LfStrategy::kBrute: return "brute";
  }
  return "unknown";
}

const char* pure_kind_name(PureKind k) noexcept {
  switch (k) {
    case PureKind::kNone: return "none";
    case PureKind::kPurelyLong: return "purely_long";
    case PureKind::kPurelyShort: return "purely_short";
  }
  return "unknown";
}

bool is_factorial(const Presentation& p) { return p.kernel.is_zero(); }

bool is_half_factorial(const Presentation& p) {
  for (const IntVector& c : p.kernel.basis()) {
    Integer s = 0;
    for (const Integer& x : c) s += x;
    if (s != 0) return false;
  }
  return true;
}

std::optional<std::pair<Factorization, Factorization>> equal_length_witness(const Presentation& p,
                                                                            SweepBound bound) {
  if (is_length_factorial(p, LfStrategy::kKernel).value) return std::nullopt;
  // Grow the sweep gradually; large atom lists make a full sweep expensive.
  std::vector<SweepBound> steps;
  if (bound.kind == SweepBound::Kind::kDegree)
    for (std::int64_t f = 2; f * p.max_degree() < bound.value; ++f) steps.push_back(SweepBound::degree(f * p.max_degree()));
  steps.push_back(bound);
  for (const SweepBound& b : steps) {
    LfResult brute = is_length_factorial(p, LfStrategy::kBrute, b);
    if (brute.violation) return brute.violation;
  }
  // Nothing inside the bound: build a balanced kernel vector directly.
  std::vector<Vec> basis = kernel_basis(p);
  Vec c;
  for (const Vec& b : basis)
    if (sum(b) == 0) {
      c = b;
      break;
    }
  if (c.empty()) {
    // Rank >= 2 here (rank 1 and unbalanced would be length-factorial).
    const Vec& b1 = basis.at(0);
    const Vec& b2 = basis.at(1);
    std::int64_t s1 = sum(b1), s2 = sum(b2);
    c.resize(b1.size());
    std::int64_t g = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = s2 * b1[i] - s1 * b2[i];
      g = std::gcd(g, c[i]);
    }
    for (std::int64_t& x : c) x /= g;
  }
  Relation r{c};
  return std::make_pair(r.plus(), r.minus());
}

LfResult is_length_factorial(const Presentation& p, LfStrategy strategy, SweepBound bound) {
  LfResult res;
  res.strategy = strategy;
  switch (strategy) {
    case LfStrategy::kRank: {
      if (is_factorial(p)) {
        res.value = true;
        return res;
      }
      const std::size_t k = p.atoms.size();
      for (std::size_t a = 0; a < k; ++a) {
        std::vector<Vec> rest, shifted;
        for (std::size_t b = 0; b < k; ++b) {
          if (b == a) continue;
          rest.push_back(p.atoms[b]);
          shifted.push_back(p.ambient.subtract(p.atoms[a], p.atoms[b]));
        }
        if (integrally_independent(rest, p.ambient) && integrally_independent(shifted, p.ambient)) {
          res.value = true;
          res.witness_atom = a;
          return res;
        }
      }
      res.value = false;
      return res;
    }
    case LfStrategy::kKernel: {
      if (is_factorial(p)) {
        res.value = true;
        return res;
      }
      res.master = master_relation(p);
      res.value = res.master.has_value();
      return res;
    }
    case LfStrategy::kBrute: {
      SweepTable table = sweep(p, bound);
      std::vector<const SweepTable::value_type*> rows;
      for (const auto& row : table) rows.push_back(&row);
      std::sort(rows.begin(), rows.end(),
                [&](auto* a, auto* b) { return graded_less(p.grading, a->first, b->first); });
      for (auto* row : rows) {
        const auto& zs = row->second;
        for (std::size_t i = 0; i < zs.size(); ++i)
          for (std::size_t j = i + 1; j < zs.size(); ++j)
            if (length(zs[i]) == length(zs[j])) {
              res.value = false;
              res.violation = std::make_pair(zs[i], zs[j]);
              return res;
            }
      }
      res.value = true;
      res.exact = false;
      return res;
    }
  }
  return res;
}

AtomSignature atom_signature(const Presentation& p, std::size_t i) {
  const std::size_t k = p.atoms.size();
  IntVector sigma(k, Integer(1));
  IntVector ei(k, Integer(0));
  ei[i] = 1;
  AtomSignature sig;
  sig.lattice = image_lattice_2d(p.kernel, sigma, ei);
  const Sublattice2& lat = sig.lattice;

  // Kernel vector mapping to (x, y) under (sigma, e_i), for (x, y) in the image.
  auto preimage = [&](const Integer& x, const Integer& y) {
    IntVector c(k, Integer(0));
    if (lat.rank == 1) {
      const auto& [h0, h1] = lat.hermite_basis[0];
      Integer t = h0 != 0 ? Integer(x / h0) : Integer(y / h1);
      for (std::size_t j = 0; j < k; ++j) c[j] = t * lat.preimages[0][j];
    } else {
      const auto& [a, b] = lat.hermite_basis[0];
      const Integer& d = lat.hermite_basis[1].second;
      Integer t1 = x / a;
      Integer t2 = (y - t1 * b) / d;
      for (std::size_t j = 0; j < k; ++j) c[j] = t1 * lat.preimages[0][j] + t2 * lat.preimages[1][j];
    }
    return kernel_vector(c);
  };

  if (lat.rank == 0) return sig;
  if (lat.rank == 2) {
    // The image contains det * Z^2, so relations with a on the longer and on
    // the shorter side both exist.
    Integer det = lat.hermite_basis[0].first * lat.hermite_basis[1].second;
    sig.witnesses.push_back(preimage(det, det));
    sig.witnesses.push_back(preimage(-det, det));
    shrink_witnesses(p, i, sig.witnesses);
    return sig;
  }
  const auto& [pp, qq] = *lat.generator;
  if (qq == 0) return sig;  // the atom occurs in no relation
  Integer x = lat.multiplier * pp, y = lat.multiplier * qq;
  if (y < 0) {
    x = -x;
    y = -y;
  }
  sig.witnesses.push_back(preimage(x, y));
  shrink_witnesses(p, i, sig.witnesses);
  if (pp == 0) return sig;  // only balanced relations
  sig.verdict = (pp * qq > 0) ? PureKind::kPurelyLong : PureKind::kPurelyShort;
  return sig;
}

PureSets pure_sets(const Presentation& p) {
  PureSets out;
  for (std::size_t i = 0; i < p.atoms.size(); ++i) {
    out.signatures.push_back(atom_signature(p, i));
    if (out.signatures.back().verdict == PureKind::kPurelyLong) out.purely_long.push_back(i);
    if (out.signatures.back().verdict == PureKind::kPurelyShort) out.purely_short.push_back(i);
  }
  return out;
}

std::int64_t tractable_sweep_bound(const Presentation& p, std::int64_t want, std::uint64_t limit) {
  std::int64_t lo = *std::min_element(p.degrees.begin(), p.degrees.end());
  if (want <= lo) return want;
  // ways[g]: exponent vectors of grading exactly g, saturated above limit.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(want) + 1, 0);
  ways[0] = 1;
  for (std::int64_t d : p.degrees)
    for (std::int64_t g = d; g <= want; ++g) ways[g] = std::min<std::uint64_t>(limit + 1, ways[g] + ways[g - d]);
  std::uint64_t total = 0;
  for (std::int64_t g = 0; g <= want; ++g) {
    total = std::min<std::uint64_t>(limit + 1, total + ways[g]);
    if (total > limit) return std::max(lo, g - 1);
  }
  return want;
}

std::vector<Vec> witness_relations(const PureSets& lattice) {
  std::vector<Vec> out;
  for (const AtomSignature& s : lattice.signatures) out.insert(out.end(), s.witnesses.begin(), s.witnesses.end());
  return out;
}

PureSets pure_sets_oracle(const Presentation& p, SweepBound bound, const std::vector<Vec>& extra) {
  const std::size_t k = p.atoms.size();
  std::vector<bool> longer(k, false), shorter(k, false);
  auto record = [&](const Factorization& z, const Factorization& w) {
    for (std::size_t t = 0; t < k; ++t)
      if (z[t] > 0 && w[t] > 0) return;
    std::int64_t lz = length(z), lw = length(w);
    if (lz == lw) return;
    const Factorization& big = lz > lw ? z : w;
    const Factorization& small = lz > lw ? w : z;
    for (std::size_t t = 0; t < k; ++t) {
      if (big[t] > 0) longer[t] = true;
      if (small[t] > 0) shorter[t] = true;
    }
  };
  for (const auto& [x, zs] : sweep(p, bound))
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t j = i + 1; j < zs.size(); ++j) record(zs[i], zs[j]);
  for (const Vec& c : extra) {
    Relation r{c};
    check(p.evaluate(r.plus()) == p.evaluate(r.minus()), "oracle: " + vec_to_string(c) + " is not a relation");
    record(r.plus(), r.minus());
  }
  PureSets out;
  for (std::size_t t = 0; t < k; ++t) {
    if (longer[t] && !shorter[t]) out.purely_long.push_back(t);
    if (shorter[t] && !longer[t]) out.purely_short.push_back(t);
  }
  return out;
}

Classification classify(const Presentation& p) {
  Classification c;
  c.atom_count = p.atoms.size();
  c.rank = gp_rank(p);
  c.torsion_free = p.ambient.torsion_free();
  c.factorial = is_factorial(p);
  c.half_factorial = is_half_factorial(p);
  c.lf = is_length_factorial(p, LfStrategy::kKernel);
  LfResult by_rank = is_length_factorial(p, LfStrategy::kRank);
  check(by_rank.value == c.lf.value, "length-factorial deciders disagree (rank vs kernel)");
  c.length_factorial = c.lf.value;
  c.proper_length_factorial = c.length_factorial && !c.factorial;
  c.pure = pure_sets(p);
  c.pls = !c.pure.purely_long.empty() && !c.pure.purely_short.empty();

  check(!c.factorial || (c.half_factorial && c.length_factorial), "factorial monoid not HF and LF");
  if (c.proper_length_factorial) {
    check(c.pls, "proper length-factorial monoid without the PLS property");
    check(c.atom_count == c.rank + 1, "proper length-factorial monoid with |A| != rank + 1");
    BettiSet betti = betti_elements(p, BettiStrategy::kCertified, 0);
    check(betti.elements.size() == 1, "proper length-factorial monoid without exactly one Betti element");
  }
  if (c.torsion_free && c.rank <= 2)
    check(c.pls == c.proper_length_factorial, "rank <= 2 torsion-free monoid with PLS != proper LF");

  if (by_rank.witness_atom)
    c.certificates.push_back({"lf_witness_atom", vec_to_string(p.atoms[*by_rank.witness_atom])});
  if (c.lf.master)
    c.certificates.push_back({"master_relation", factorization_string(p, c.lf.master->w1) + " = " +
                                                     factorization_string(p, c.lf.master->w2)});
  if (!c.length_factorial) {
    auto w = equal_length_witness(p, SweepBound::degree(4 * p.max_degree()));
    c.certificates.push_back(
        {"equal_length_relation", factorization_string(p, w->first) + " = " + factorization_string(p, w->second)});
  }
  if (!c.half_factorial) {
    for (const Vec& b : kernel_basis(p))
      if (sum(b) != 0) {
        Relation r{b};
        c.certificates.push_back({"unbalanced_relation", factorization_string(p, r.plus()) + " = " +
                                                             factorization_string(p, r.minus())});
        break;
      }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Decomposition

Presentation sub_presentation(const Presentation& p, const std::vector<std::size_t>& atoms) {
  Presentation s;
  s.ambient = p.ambient;
  s.grading = p.grading;
  s.scale = p.scale;
  for (std::size_t i : atoms) {
    s.atoms.push_back(p.atoms[i]);
    s.degrees.push_back(p.degrees[i]);
  }
  s.kernel = s.atoms.empty() ? LatticeBasis(0, {}) : integer_kernel(s.atoms, s.ambient);
  return s;
}

bool trivial_intersection(const Presentation& p, const std::vector<std::size_t>& a,
                          const std::vector<std::size_t>& b, std::int64_t bound, std::string* method) {
  if (a.empty() || b.empty()) {
    if (method) *method = "empty";
    return true;
  }
  // A common nonzero element exists iff the rational cones on the free parts
  // meet away from 0: scaling a rational solution by the torsion exponent
  // clears any torsion discrepancy. Normalize by the grading.
  const std::size_t d = p.ambient.free_rank;
  IntMatrix m(d + 1, a.size() + b.size());
  IntVector rhs(d + 1, Integer(0));
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t r = 0; r < d; ++r) m(r, j) = static_cast<long>(p.atoms[a[j]][r]);
    m(d, j) = static_cast<long>(p.degrees[a[j]]);
  }
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t r = 0; r < d; ++r) m(r, a.size() + j) = -static_cast<long>(p.atoms[b[j]][r]);
  rhs[d] = 1;
  if (find_nonnegative_solution(m, rhs)) {
    if (method) *method = "cone";
    return false;
  }
  if (method) *method = "cone";
  if (bound > 0) {
    // Cross-check by enumeration of the smaller side.
    Presentation pa = sub_presentation(p, a), pb = sub_presentation(p, b);
    for (const Vec& x : enumerate_elements(pa, bound)) {
      if (p.degree(x) == 0) continue;
      check(!contains(pb, x), "cone test and enumeration disagree on intersection");
    }
    if (method) *method = "cone+enumeration";
  }
  return true;
}

Decomposition decompose(const Presentation& p, std::int64_t bound) {
  PureSets pure = pure_sets(p);
  if (pure.purely_long.empty() || pure.purely_short.empty())
    throw Error(ErrorCode::kNotPLS, "monoid is not PLS: purely long " + std::to_string(pure.purely_long.size()) +
                                        ", purely short " + std::to_string(pure.purely_short.size()));
  const std::size_t k = p.atoms.size();
  std::vector<bool> is_pure(k, false);
  for (std::size_t i : pure.purely_long) is_pure[i] = true;
  for (std::size_t i : pure.purely_short) is_pure[i] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < k; ++i)
    if (!is_pure[i]) rest.push_back(i);

  auto attempt = [&](const std::vector<bool>& in_o) {
    Decomposition d;
    for (std::size_t i = 0; i < k; ++i) (in_o[i] ? d.o_atoms : d.h_atoms).push_back(i);
    d.o = sub_presentation(p, d.o_atoms);
    d.h = sub_presentation(p, d.h_atoms);
    d.h_half_factorial = is_half_factorial(d.h);
    d.o_proper_length_factorial = !is_factorial(d.o) && is_length_factorial(d.o, LfStrategy::kKernel).value;
    if (d.h_half_factorial && d.o_proper_length_factorial)
      d.trivial_intersection = trivial_intersection(p, d.o_atoms, d.h_atoms, bound, &d.intersection_method);
    return d;
  };
  auto ok = [](const Decomposition& d) {
    return d.h_half_factorial && d.o_proper_length_factorial && d.trivial_intersection;
  };

  Decomposition canonical = attempt(is_pure);
  canonical.construction = "pure atoms";
  if (ok(canonical) || !is_factorial(canonical.o) || rest.size() > 16) return canonical;
  // Subsets of the non-pure atoms by size, then lexicographically.
  for (std::size_t size = 1; size <= rest.size(); ++size) {
    std::vector<bool> pick(rest.size(), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<bool> in_o = is_pure;
      for (std::size_t j = 0; j < rest.size(); ++j)
        if (pick[j]) in_o[rest[j]] = true;
      Decomposition d = attempt(in_o);
      if (ok(d)) {
        d.construction = "search";
        return d;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return canonical;
}

RelationShapeReport relation_shape_check(const Presentation& p, SweepBound bound) {
  PureSets pure = pure_sets(p);
  if (pure.purely_long.empty() || pure.purely_short.empty()) throw Error(ErrorCode::kNotPLS, "monoid is not PLS");
  const std::size_t k = p.atoms.size();
  std::vector<bool> is_pure(k, false);
  for (std::size_t i : pure.purely_long) is_pure[i] = true;
  for (std::size_t i : pure.purely_short) is_pure[i] = true;

  RelationShapeReport rep;
  const std::size_t a = pure.purely_long.front();
  rep.anchor_atom = a;
  const AtomSignature& sig = pure.signatures[a];
  // Smallest positive number of copies of a in any relation.
  rep.multiplicity = to_int64(abs(sig.lattice.multiplier * sig.lattice.generator->second));

  // Prefer a relation among the pure atoms only; the generator of the
  // pure-atom submonoid's kernel, oriented with a on the longer side.
  std::vector<std::size_t> o_atoms, h_atoms;
  for (std::size_t i = 0; i < k; ++i) (is_pure[i] ? o_atoms : h_atoms).push_back(i);
  Presentation o = sub_presentation(p, o_atoms);
  Vec w(k, 0);
  std::size_t a_in_o = std::find(o_atoms.begin(), o_atoms.end(), a) - o_atoms.begin();
  if (o.kernel.rank() == 1 && abs(o.kernel.basis()[0][a_in_o]) == rep.multiplicity) {
    for (std::size_t j = 0; j < o_atoms.size(); ++j) w[o_atoms[j]] = to_int64(o.kernel.basis()[0][j]);
  } else {
    w = sig.witnesses.front();
    rep.notes.push_back("no relation among the pure atoms alone carries the minimal multiplicity; anchor taken from the full kernel");
  }
  if (w[a] < 0)
    for (std::int64_t& x : w) x = -x;
  Relation wr{w};
  rep.w1 = wr.plus();
  rep.w2 = wr.minus();
  if (length(rep.w1) <= length(rep.w2)) rep.failures.push_back("anchor relation is not longer on the anchor side");

  Presentation h = sub_presentation(p, h_atoms);
  for (const IntVector& v : h.kernel.basis()) {
    Relation r{Vec(k, 0)};
    for (std::size_t j = 0; j < h_atoms.size(); ++j) r.c[h_atoms[j]] = to_int64(v[j]);
    rep.balanced_generators.push_back(std::move(r));
  }

  SweepTable table = sweep(p, bound);
  for (const auto& [x, zs] : table)
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t j = i + 1; j < zs.size(); ++j) {
        Vec c(k);
        bool disjoint = true;
        for (std::size_t t = 0; t < k; ++t) {
          c[t] = zs[i][t] - zs[j][t];
          if (zs[i][t] > 0 && zs[j][t] > 0) disjoint = false;
        }
        if (!disjoint) continue;
        ++rep.relations_checked;
        std::int64_t s = sum(c);
        if (s == 0) {
          bool touches_pure = false;
          for (std::size_t t = 0; t < k; ++t) touches_pure |= is_pure[t] && c[t] != 0;
          if (touches_pure)
            rep.failures.push_back("balanced relation involving a pure atom at " + vec_to_string(x));
          continue;
        }
        ++rep.unbalanced_checked;
        if (s < 0)
          for (std::int64_t& t : c) t = -t;
        std::string where = " at " + vec_to_string(x);
        if (c[a] <= 0 || c[a] % rep.multiplicity != 0) {
          rep.failures.push_back("anchor count not a positive multiple of m" + where);
          continue;
        }
        std::int64_t n = c[a] / rep.multiplicity;
        // c - n*w must avoid the pure atoms and be balanced.
        std::int64_t rest = 0;
        bool ok = true;
        for (std::size_t t = 0; t < k; ++t) {
          if (is_pure[t]) ok &= c[t] == n * w[t];
          else rest += c[t] - n * w[t];
        }
        if (!ok) rep.failures.push_back("pure part is not n copies of the anchor relation" + where);
        if (rest != 0) rep.failures.push_back("non-pure remainder is unbalanced" + where);
      }
  return rep;
}

PuiseuxReport puiseux_classify(const Presentation& p) {
  if (p.ambient.free_rank != 1 || !p.ambient.torsion_free())
    throw Error(ErrorCode::kInvalidInput, "Puiseux classification needs a rank-1 torsion-free presentation");
  for (const Vec& a : p.atoms)
    if (a[0] <= 0) throw Error(ErrorCode::kNonPositivePuiseuxGenerator, "atoms must be positive");
  PuiseuxReport r;
  for (const Vec& a : p.atoms) r.atoms.push_back(Rational(Integer(static_cast<long>(a[0])), p.scale));
  for (Rational& q : r.atoms) q.canonicalize();
  if (p.atoms.empty()) {
    r.agree = true;
    return r;
  }
  Classification c = classify(p);
  // Atoms are sorted by value: inf is the first, sup the last.
  const std::size_t lo = 0, hi = p.atoms.size() - 1;
  auto in = [](const std::vector<std::size_t>& v, std::size_t i) { return std::find(v.begin(), v.end(), i) != v.end(); };
  bool inf_long = in(c.pure.purely_long, lo);
  bool sup_short = in(c.pure.purely_short, hi);
  r.a = c.proper_length_factorial;
  r.b = c.pls;
  r.c = inf_long && sup_short;
  r.d = inf_long || sup_short;
  r.e = p.atoms.size() == 2;
  r.agree = r.a == r.b && r.b == r.c && r.c == r.d && r.d == r.e;
  for (std::size_t i : c.pure.purely_long) r.purely_long.push_back(r.atoms[i]);
  for (std::size_t i : c.pure.purely_short) r.purely_short.push_back(r.atoms[i]);
  if (r.agree && r.a)
    r.agree = c.pure.purely_long == std::vector<std::size_t>{lo} && c.pure.purely_short == std::vector<std::size_t>{hi};
  return r;
}

}  // namespace lenfact
