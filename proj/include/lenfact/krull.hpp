#pragma once

// Truncated monoids of nonzero principal ideals of a Dedekind domain: a
// class group, finitely many primes per class, and the irreducible
// principal ideals as minimal zero-sum multisets of primes.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lenfact/invariants.hpp"

namespace lenfact {

/// Class group Z^r x Z/m_1 x ... ; moduli >= 1 (1 is a trivial factor).
struct ClassGroup {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  std::size_t dim() const noexcept { return free_rank + torsion.size(); }
  bool finite() const noexcept { return free_rank == 0; }
  std::int64_t order() const;  // finite groups only
  void canonicalize(Vec& v) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec negate(const Vec& a) const;
  bool is_zero(const Vec& a) const;
};

/// `count` primes sharing one class; labelled family + index (just the
/// family name when count is 1).
struct PrimeFamily {
  std::string name;
  Vec cls;
  std::int64_t count = 1;
};

struct PrimeDistribution {
  ClassGroup group;
  std::vector<PrimeFamily> families;
  std::optional<std::int64_t> degree_bound;
};

struct Prime {
  std::string label;
  Vec cls;
  std::size_t family = 0;
};

/// All primes, ordered lexicographically by label.
std::vector<Prime> expand_primes(const PrimeDistribution& dist);

struct IdealAtom {
  Vec exponents;         // over expand_primes order
  std::string type_tag;  // family pattern, e.g. "P^3", "PQ", "Q^3"
  std::string name;      // prime pattern, e.g. "P^3", "PQ1", "Q1Q2Q3"
  std::int64_t degree = 0;
};

struct IdealAtomList {
  std::vector<Prime> primes;
  std::vector<IdealAtom> atoms;  // ordered by (degree, exponents descending)
  std::int64_t degree_bound = 0;
  bool complete = false;  // true when the bound covers every atom
};

/// Minimal nonempty zero-sum multisets of primes with at most `bound` primes.
/// Finite class groups default to |G|; infinite ones require a bound.
IdealAtomList ideal_atoms(const PrimeDistribution& dist, std::optional<std::int64_t> bound = std::nullopt);

/// Submonoid of N^{#primes} generated by the ideal atoms.
Presentation to_presentation(const IdealAtomList& atoms);

/// Per-type atom counts, in first-seen order.
std::vector<std::pair<std::string, std::size_t>> census(const IdealAtomList& atoms);

struct WitnessCheck {
  std::string name;
  std::string left;
  std::string right;
  std::int64_t left_length = 0;
  std::int64_t right_length = 0;
  bool in_kernel = false;
  bool irredundant = false;
  bool length_claim = false;  // the stated strict inequality holds
  bool counting_identity = false;
};

struct DedekindReport {
  std::string name;
  PrimeDistribution dist;
  IdealAtomList atoms;
  std::vector<std::pair<std::string, std::size_t>> census;
  std::vector<std::string> purely_long;   // atom names
  std::vector<std::string> purely_short;
  bool pls = false;
  std::vector<WitnessCheck> witnesses;
  /// Swept relations involving the distinguished atom that satisfy the
  /// counting identity and the length comparison, out of those examined.
  std::size_t identity_checked = 0;
  std::size_t identity_held = 0;
  std::int64_t sweep_bound = 0;
  bool oracle_agrees = false;
  bool pass = false;
};

/// "6.2": Z/3 with one prime of class 1 and five of class 2.
/// "6.3": Z with one prime each of classes -2 and 2, four each of -1 and 1.
PrimeDistribution dedekind_distribution(const std::string& name);

DedekindReport verify_dedekind_example(const std::string& name);

}  // namespace lenfact
