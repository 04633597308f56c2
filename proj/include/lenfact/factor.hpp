#pragma once

// Factorization enumeration, length sets, distance, and bounded sweeps.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "lenfact/monoid.hpp"

namespace lenfact {

using Factorization = Vec;  // exponent vector over the atom list

std::int64_t length(const Factorization& z);

/// max(|z / gcd(z,z')|, |z' / gcd(z,z')|).
std::int64_t distance(const Factorization& z, const Factorization& w);

/// Depth-first bounded knapsack over `atoms`. Calls `emit` with each exponent
/// vector hitting `target`; stops early when `emit` returns false. Exponents
/// are tried high-to-low in atom order, so emission order is lexicographically
/// descending.
void enumerate_representations(const std::vector<Vec>& atoms, const std::vector<std::int64_t>& degrees,
                               const AmbientGroup& ambient, const Grading& grading, const Vec& target,
                               const std::function<bool(const Factorization&)>& emit);

/// Z(x), lexicographically descending. Empty iff x is not in the monoid.
std::vector<Factorization> factorizations(const Presentation& p, const Vec& x);

bool contains(const Presentation& p, const Vec& x);

std::set<std::int64_t> length_set(const Presentation& p, const Vec& x);

/// How a sweep is truncated: by grading value of the element, or by
/// factorization length.
struct SweepBound {
  enum class Kind { kDegree, kLength } kind = Kind::kDegree;
  std::int64_t value = 0;

  static SweepBound degree(std::int64_t v) { return {Kind::kDegree, v}; }
  static SweepBound length(std::int64_t v) { return {Kind::kLength, v}; }
};

/// Element -> factorizations (lexicographically descending), for every
/// factorization inside the bound. With a degree bound each listed set is the
/// complete Z(x). With a length bound it holds the factorizations of length
/// at most the bound.
using SweepTable = std::map<Vec, std::vector<Factorization>>;

SweepTable sweep(const Presentation& p, SweepBound bound);

}  // namespace lenfact
