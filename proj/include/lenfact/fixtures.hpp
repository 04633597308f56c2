#pragma once

// Named monoids with known verdicts, and the reproduction suite that checks
// every one of them against the deciders.

#include <string>
#include <vector>

#include "lenfact/monoid.hpp"

namespace lenfact {

struct Fixture {
  std::string id;      // N23, M3, E46, T4, ...
  std::string anchor;  // where the verdict comes from, e.g. "Example 4.7 / M1"
  MonoidSpec spec;
};

/// All monoid fixtures in suite order (the Krull rows are separate).
const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& id);

MonoidSpec numerical(std::initializer_list<std::int64_t> gens);
/// <n, n+1, ..., 2n-1>.
MonoidSpec interval_monoid(std::int64_t n);
/// <(1,...,1), r*e_1, ..., r*e_r> in Z^r.
MonoidSpec diagonal_monoid(std::int64_t r);
/// a1 = (0,2), a2 = (0,3), a_k = (1,0) with torsion k-3 in Z/(n-2), k = 3..n.
MonoidSpec torsion_monoid(std::int64_t n);

struct SuiteRow {
  std::string id;
  std::string anchor;
  std::string expected;
  std::string computed;
  std::string cross_checks;
  bool pass = false;
};

/// Runs every row concurrently; rows come back in fixed order.
std::vector<SuiteRow> paper_suite();

}  // namespace lenfact
