#include "lenfact/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lenfact/error.hpp"
#include "lenfact/factor.hpp"

namespace lenfact {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kEmptyGenerators: return "EmptyGenerators";
    case ErrorCode::kNonPositivePuiseuxGenerator: return "NonPositivePuiseuxGenerator";
    case ErrorCode::kNotPointed: return "NotPointed";
    case ErrorCode::kElementNotInMonoid: return "ElementNotInMonoid";
    case ErrorCode::kNotPLS: return "NotPLS";
    case ErrorCode::kBoundRequiredForInfiniteGroup: return "BoundRequiredForInfiniteGroup";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kAssertionFailed: return "AssertionFailed";
  }
  return "Unknown";
}

const char* monoid_kind_name(MonoidKind kind) noexcept {
  switch (kind) {
    case MonoidKind::kNumerical: return "numerical";
    case MonoidKind::kPuiseux: return "puiseux";
    case MonoidKind::kAffine: return "affine";
    case MonoidKind::kAffineTorsion: return "affine_torsion";
    case MonoidKind::kKrull: return "krull";
  }
  return "unknown";
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::int64_t Grading::operator()(const Vec& x) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < functional.size(); ++i) {
    std::int64_t t;
    if (__builtin_mul_overflow(functional[i], x[i], &t) || __builtin_add_overflow(s, t, &s))
      throw Error(ErrorCode::kOverflow, "grading value overflows 64 bits");
  }
  return s;
}

bool graded_less(const Grading& g, const Vec& a, const Vec& b) {
  std::int64_t ga = g(a), gb = g(b);
  if (ga != gb) return ga < gb;
  return a < b;
}

std::int64_t Presentation::max_degree() const {
  std::int64_t m = 0;
  for (std::int64_t d : degrees) m = std::max(m, d);
  return m;
}

Vec Presentation::evaluate(const Vec& exponents) const {
  Vec x(ambient.dim(), 0);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (exponents[i] != 0) x = ambient.add(x, ambient.scale(atoms[i], exponents[i]));
  return x;
}

int Presentation::atom_index(const Vec& v) const {
  auto it = std::find(atoms.begin(), atoms.end(), v);
  return it == atoms.end() ? -1 : static_cast<int>(it - atoms.begin());
}

Grading find_grading(const std::vector<Vec>& atoms, const AmbientGroup& ambient) {
  const std::size_t d = ambient.free_rank;
  Grading ones{Vec(d, 1)};
  if (std::all_of(atoms.begin(), atoms.end(), [&](const Vec& a) { return ones(a) >= 1; }))
    return ones;
  if (d == 0) throw Error(ErrorCode::kNotPointed, "no free coordinates: every generator has finite order");

  // w = w+ - w-, slack s >= 0:  <w, a> - s_a = 1 for every atom a.
  const std::size_t k = atoms.size();
  IntMatrix m(k, 2 * d + k);
  IntVector rhs(k, Integer(1));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < d; ++j) {
      m(r, j) = static_cast<long>(atoms[r][j]);
      m(r, d + j) = -static_cast<long>(atoms[r][j]);
    }
    m(r, 2 * d + r) = -1;
  }
  auto sol = find_nonnegative_solution(m, rhs);
  if (!sol) throw Error(ErrorCode::kNotPointed, "no positive grading exists; the monoid is not pointed");

  std::vector<Rational> w(d);
  Integer den = 1;
  for (std::size_t j = 0; j < d; ++j) {
    w[j] = (*sol)[j] - (*sol)[d + j];
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w[j].get_den_mpz_t());
  }
  IntVector wi(d);
  Integer g = 0;
  for (std::size_t j = 0; j < d; ++j) {
    wi[j] = w[j].get_num() * (den / w[j].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), wi[j].get_mpz_t());
  }
  Grading out{Vec(d)};
  for (std::size_t j = 0; j < d; ++j) out.functional[j] = to_int64(wi[j] / g);
  return out;
}

std::vector<Vec> compute_atoms(const std::vector<Vec>& generators, const AmbientGroup& ambient,
                               std::vector<Vec>* dropped) {
  Grading grading = find_grading(generators, ambient);
  std::vector<Vec> gens = generators;
  std::sort(gens.begin(), gens.end(),
            [&](const Vec& a, const Vec& b) { return graded_less(grading, a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // g is an atom iff it is not in the monoid generated by the others: a
  // decomposition g = x + y could never use g itself, since the cofactor
  // would have to be zero.
  std::vector<Vec> atoms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Vec> others;
    std::vector<std::int64_t> degrees;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i && grading(gens[j]) < grading(gens[i])) {
        others.push_back(gens[j]);
        degrees.push_back(grading(gens[j]));
      }
    bool reducible = false;
    enumerate_representations(others, degrees, ambient, grading, gens[i], [&](const Factorization&) {
      reducible = true;
      return false;
    });
    if (reducible) {
      if (dropped) dropped->push_back(gens[i]);
    } else {
      atoms.push_back(gens[i]);
    }
  }
  return atoms;
}

Presentation present(std::vector<Vec> generators, const AmbientGroup& ambient) {
  ambient.validate();
  if (generators.empty()) throw Error(ErrorCode::kEmptyGenerators, "generator list is empty");
  Presentation p;
  p.ambient = ambient;
  std::vector<Vec> nonzero;
  for (Vec& g : generators) {
    if (g.size() != ambient.dim())
      throw Error(ErrorCode::kInvalidInput, "generator " + vec_to_string(g) + " has wrong dimension");
    ambient.canonicalize(g);
    if (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; })) {
      p.warnings.push_back("dropped zero generator");
      continue;
    }
    nonzero.push_back(std::move(g));
  }
  if (nonzero.empty()) {
    p.grading.functional.assign(ambient.free_rank, 1);
    p.kernel = LatticeBasis(0, {});
    return p;
  }
  std::vector<Vec> dropped;
  p.atoms = compute_atoms(nonzero, ambient, &dropped);
  for (const Vec& v : dropped) p.warnings.push_back("dropped non-atom generator " + vec_to_string(v));
  p.grading = find_grading(p.atoms, ambient);
  // Canonical order depends on the final grading; recompute it.
  std::sort(p.atoms.begin(), p.atoms.end(),
            [&](const Vec& a, const Vec& b) { return graded_less(p.grading, a, b); });
  for (const Vec& a : p.atoms) p.degrees.push_back(p.grading(a));
  p.kernel = integer_kernel(p.atoms, ambient);
  return p;
}

Presentation normalize_spec(const MonoidSpec& spec) {
  switch (spec.kind) {
    case MonoidKind::kNumerical: {
      if (spec.generators.empty()) throw Error(ErrorCode::kEmptyGenerators, "generator list is empty");
      return present(spec.generators, AmbientGroup{1, {}});
    }
    case MonoidKind::kPuiseux: {
      if (spec.rationals.empty()) throw Error(ErrorCode::kEmptyGenerators, "generator list is empty");
      Integer l = 1;
      for (const Rational& q : spec.rationals) {
        if (q <= 0) throw Error(ErrorCode::kNonPositivePuiseuxGenerator, "generator " + q.get_str() + " is not positive");
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      }
      std::vector<Vec> gens;
      for (const Rational& q : spec.rationals) gens.push_back({to_int64(q.get_num() * (l / q.get_den()))});
      Presentation p = present(std::move(gens), AmbientGroup{1, {}});
      p.scale = l;
      return p;
    }
    case MonoidKind::kAffine:
    case MonoidKind::kAffineTorsion:
    case MonoidKind::kKrull:
      return present(spec.generators, spec.ambient);
  }
  throw Error(ErrorCode::kInvalidInput, "unknown monoid kind");
}

std::vector<Vec> enumerate_elements(const Presentation& p, std::int64_t bound) {
  std::vector<std::set<Vec>> layers(static_cast<std::size_t>(std::max<std::int64_t>(bound, 0)) + 1);
  layers[0].insert(Vec(p.ambient.dim(), 0));
  for (std::int64_t g = 1; g <= bound; ++g)
    for (std::size_t i = 0; i < p.atoms.size(); ++i) {
      std::int64_t from = g - p.degrees[i];
      if (from < 0) continue;
      for (const Vec& x : layers[from]) layers[g].insert(p.ambient.add(x, p.atoms[i]));
    }
  std::vector<Vec> out;
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::size_t gp_rank(const Presentation& p) {
  if (p.atoms.empty()) return 0;
  std::vector<IntVector> cols;
  for (const Vec& a : p.atoms) cols.push_back(to_integers(std::span(a.data(), p.ambient.free_rank)));
  return rational_rank(IntMatrix::from_columns(p.ambient.free_rank, cols));
}

}  // namespace lenfact
