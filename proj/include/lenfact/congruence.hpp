#pragma once

// The factorization congruence: R-classes, Betti elements, generating sets of
// the kernel, master relations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lenfact/factor.hpp"

namespace lenfact {

/// An integer relation c among the atoms; (c+, c-) is the irredundant
/// factorization relation it encodes.
struct Relation {
  Vec c;

  Factorization plus() const;
  Factorization minus() const;
  std::int64_t balance() const;  // sum of entries = |c+| - |c-|
};

/// Connected components of the "share an atom" graph on `zs`, each class in
/// the input order, classes ordered by their first member.
std::vector<std::vector<Factorization>> r_classes(const std::vector<Factorization>& zs);
std::vector<std::vector<Factorization>> r_classes(const Presentation& p, const Vec& x);

/// max over R-classes of the shortest length in the class.
std::int64_t mu(const Presentation& p, const Vec& x);

/// A binomial generating set of the kernel lattice ideal, as relations c with
/// c+ the leading side under the weighted-degree-then-lex order on the atom
/// list. Computed by Buchberger completion with variable-by-variable
/// saturation; the result is the reduced Groebner basis for that order.
std::vector<Relation> kernel_generating_set(const Presentation& p);

/// True when the moves z = w + g+ <-> w + g- (either direction, g in gens)
/// connect all of `zs`, i.e. the relations among `zs` are generated by gens.
bool connected_by_moves(const std::vector<Factorization>& zs, const std::vector<Relation>& gens);

struct MasterRelation {
  Factorization w1;  // shorter side
  Factorization w2;
};

std::optional<MasterRelation> master_relation(const Presentation& p);

enum class BettiStrategy { kCertified, kSweep };

struct BettiSet {
  std::vector<Vec> elements;  // ordered by (grading, lex)
  std::int64_t bound_used = 0;
  BettiStrategy strategy = BettiStrategy::kCertified;
  std::vector<std::string> warnings;
};

/// Largest atom count for which the sweep strategy also computes the
/// generating set to detect a too-small bound.
inline constexpr std::size_t kGeneratingSetAtomLimit = 12;

BettiSet betti_elements(const Presentation& p, BettiStrategy strategy, std::int64_t bound);

}  // namespace lenfact
