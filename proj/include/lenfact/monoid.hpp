#pragma once

// Reduced, finitely generated cancellative monoids presented inside
// Z^d x Z/m_1 x ... x Z/m_t. Inputs are assumed to present reduced monoids:
// there is no representation of units anywhere in the library.

#include <cstdint>
#include <string>
#include <vector>

#include "lenfact/linalg.hpp"

namespace lenfact {

enum class MonoidKind { kNumerical, kPuiseux, kAffine, kAffineTorsion, kKrull };

const char* monoid_kind_name(MonoidKind kind) noexcept;

struct MonoidSpec {
  MonoidKind kind = MonoidKind::kAffine;
  AmbientGroup ambient;
  std::vector<Vec> generators;       // numerical / affine kinds
  std::vector<Rational> rationals;   // puiseux kind, kept in lowest terms
};

struct Grading {
  Vec functional;  // acts on the free coordinates only

  std::int64_t operator()(const Vec& x) const;
};

struct Presentation {
  AmbientGroup ambient;
  std::vector<Vec> atoms;          // canonical graded-lex order
  std::vector<std::int64_t> degrees;  // grading value of each atom
  LatticeBasis kernel;             // integer relations among the atoms
  Grading grading;
  /// For Puiseux input: atoms = scale * original generators.
  Integer scale = 1;
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return atoms.size(); }
  std::int64_t degree(const Vec& x) const { return grading(x); }
  std::int64_t max_degree() const;
  /// sum_i e_i a_i in the ambient group.
  Vec evaluate(const Vec& exponents) const;
  /// Index of `v` in the atom list, or -1.
  int atom_index(const Vec& v) const;
};

/// Builds a presentation from arbitrary generators: canonicalizes torsion,
/// drops zero and duplicate generators, finds a grading, keeps only atoms.
Presentation present(std::vector<Vec> generators, const AmbientGroup& ambient);

Presentation normalize_spec(const MonoidSpec& spec);

/// Generators that are not a sum of two nonzero elements of the monoid they
/// generate, in canonical order. `dropped` receives the rest.
std::vector<Vec> compute_atoms(const std::vector<Vec>& generators, const AmbientGroup& ambient,
                               std::vector<Vec>* dropped = nullptr);

/// Integer functional on the free part that is >= 1 on every atom.
Grading find_grading(const std::vector<Vec>& atoms, const AmbientGroup& ambient);

/// Every element of grading value <= bound, ordered by (grading, lex).
std::vector<Vec> enumerate_elements(const Presentation& p, std::int64_t bound);

std::size_t gp_rank(const Presentation& p);

/// Graded-lex comparison under a grading; the canonical atom order.
bool graded_less(const Grading& g, const Vec& a, const Vec& b);

std::string vec_to_string(const Vec& v);

}  // namespace lenfact
