#pragma once

// Deciders and numeric invariants: factorial / half-factorial /
// length-factorial / PLS, pure irreducibles, catenary degrees, the
// half-factorial + length-factorial decomposition, Puiseux classification.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenfact/congruence.hpp"

namespace lenfact {

struct Certificate {
  std::string name;
  std::string detail;
};

bool is_factorial(const Presentation& p);
bool is_half_factorial(const Presentation& p);

enum class LfStrategy { kRank, kKernel, kBrute };

const char* lf_strategy_name(LfStrategy s) noexcept;

struct LfResult {
  bool value = false;
  LfStrategy strategy = LfStrategy::kKernel;
  std::optional<std::size_t> witness_atom;  // rank strategy, first in atom order
  std::optional<MasterRelation> master;     // kernel strategy
  /// Two distinct factorizations of one element with equal length.
  std::optional<std::pair<Factorization, Factorization>> violation;
  /// Brute strategy only: false when no violation was found but the answer
  /// rests on the truncated sweep.
  bool exact = true;
};

/// `bound` is used by the brute strategy only.
LfResult is_length_factorial(const Presentation& p, LfStrategy strategy,
                             SweepBound bound = SweepBound::degree(0));

/// Smallest-grading pair of distinct equal-length factorizations within the
/// bound, falling back to a balanced kernel vector when the sweep finds none.
/// Absent iff the monoid is length-factorial.
std::optional<std::pair<Factorization, Factorization>> equal_length_witness(const Presentation& p,
                                                                            SweepBound bound);

enum class PureKind { kNone, kPurelyLong, kPurelyShort };

const char* pure_kind_name(PureKind k) noexcept;

struct AtomSignature {
  Sublattice2 lattice;  // {(sigma(c), c_i) : c in kernel}
  PureKind verdict = PureKind::kNone;
  /// Kernel vector c with c_i > 0 whose relation refutes the opposite
  /// verdict (or shows the atom is not pure); empty when none is needed.
  std::vector<Vec> witnesses;
};

AtomSignature atom_signature(const Presentation& p, std::size_t i);

struct PureSets {
  std::vector<std::size_t> purely_long;
  std::vector<std::size_t> purely_short;
  std::vector<AtomSignature> signatures;  // lattice strategy only
};

PureSets pure_sets(const Presentation& p);

/// Sweep degree large enough for the oracle to meet every signature witness:
/// the largest witness grading, and at least `floor`.
std::int64_t witness_sweep_bound(const Presentation& p, const PureSets& lattice, std::int64_t floor);

/// Largest grading b <= want whose degree sweep lists at most `limit`
/// factorizations (at least the smallest atom grading).
std::int64_t tractable_sweep_bound(const Presentation& p, std::int64_t want,
                                   std::uint64_t limit = 2'000'000);

/// Every witness relation recorded in the signatures.
std::vector<Vec> witness_relations(const PureSets& lattice);

/// Literal definition over the irredundant relations found in a sweep: an
/// atom is purely long when it occurs in some unbalanced relation and only
/// ever on the longer side. `extra` relations (kernel vectors c, read as
/// c+ = c-) join the swept ones after checking that both sides evaluate to
/// the same element; a false one throws ErrorCode::kAssertionFailed.
PureSets pure_sets_oracle(const Presentation& p, SweepBound bound, const std::vector<Vec>& extra = {});

struct Classification {
  bool factorial = false;
  bool half_factorial = false;
  bool length_factorial = false;
  bool proper_length_factorial = false;
  bool pls = false;
  std::size_t atom_count = 0;
  std::size_t rank = 0;
  bool torsion_free = true;
  PureSets pure;
  LfResult lf;
  std::vector<Certificate> certificates;
};

/// Computes all flags with the exact deciders and checks the structural
/// implications between them; a violated implication throws
/// ErrorCode::kAssertionFailed.
Classification classify(const Presentation& p);

// ---------------------------------------------------------------------------
// Catenary degrees

struct CatenaryReport {
  Vec element;
  std::int64_t c = 0;
  std::int64_t c_eq = 0;
  std::int64_t c_adj = 0;
  std::int64_t c_mon = 0;
};

CatenaryReport catenary_element(const Presentation& p, const Vec& x);
/// Same invariants for an explicit factorization set (all of Z(x)).
CatenaryReport catenary_of_set(const std::vector<Factorization>& zs);

/// Monotone catenary degree straight from the definition (smallest N such
/// that any two factorizations are joined by a monotone N-chain). Used to
/// check c_mon = max(c_eq, c_adj).
std::int64_t monotone_catenary_by_definition(const std::vector<Factorization>& zs);

struct CatenaryMonoidReport {
  std::int64_t c = 0;
  std::int64_t c_eq = 0;
  std::int64_t c_adj = 0;
  std::int64_t c_mon = 0;
  bool exact = false;  // true for proper LF (closed form), sweep otherwise
  std::int64_t bound = 0;
  std::vector<std::string> warnings;
};

CatenaryMonoidReport catenary_monoid(const Presentation& p, std::int64_t bound);

// ---------------------------------------------------------------------------
// Decomposition

/// Submonoid generated by the listed atoms of p (sub-presentation).
Presentation sub_presentation(const Presentation& p, const std::vector<std::size_t>& atoms);

/// True when the monoids generated by the two atom lists meet only in 0.
/// `method` receives "cone" or "enumeration".
bool trivial_intersection(const Presentation& p, const std::vector<std::size_t>& a,
                          const std::vector<std::size_t>& b, std::int64_t bound, std::string* method);

struct Decomposition {
  std::vector<std::size_t> o_atoms;  // pure atoms
  std::vector<std::size_t> h_atoms;  // the rest
  Presentation o;
  Presentation h;
  bool h_half_factorial = false;
  bool o_proper_length_factorial = false;
  bool trivial_intersection = false;
  std::string intersection_method;
  /// "pure atoms": O is generated by L(M) and S(M). "search": that choice
  /// leaves O factorial (the pure atoms can be independent), so O is grown
  /// by the fewest non-pure atoms that make every check pass.
  std::string construction;
};

/// Throws ErrorCode::kNotPLS when p is not a PLS monoid. Falls back to the
/// search construction when the pure atoms alone generate a factorial O.
Decomposition decompose(const Presentation& p, std::int64_t bound);

struct RelationShapeReport {
  std::size_t anchor_atom = 0;  // the purely long atom a
  std::int64_t multiplicity = 0;  // m: copies of a in w1
  Factorization w1;  // longer side, contains a
  Factorization w2;
  std::vector<Relation> balanced_generators;  // kernel basis of the non-pure part
  std::size_t relations_checked = 0;
  std::size_t unbalanced_checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

/// Throws ErrorCode::kNotPLS when p is not a PLS monoid.
RelationShapeReport relation_shape_check(const Presentation& p, SweepBound bound);

// ---------------------------------------------------------------------------
// Puiseux / numerical monoids

struct PuiseuxReport {
  bool a = false;  // length-factorial, not factorial
  bool b = false;  // PLS
  bool c = false;  // inf of atoms purely long and sup purely short
  bool d = false;  // inf of atoms purely long or sup purely short
  bool e = false;  // exactly two atoms
  bool agree = false;
  std::vector<Rational> purely_long;  // original scale
  std::vector<Rational> purely_short;
  std::vector<Rational> atoms;
};

PuiseuxReport puiseux_classify(const Presentation& p);

}  // namespace lenfact
