#pragma once

// Exact integer linear algebra: Hermite normal form, integer kernels over
// groups with torsion, fraction-free rank, and rank-<=2 image lattices.
// Nothing in here touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lenfact {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Small machine-integer vector; used for atoms, elements and exponents.
using Vec = std::vector<std::int64_t>;

IntVector to_integers(std::span<const std::int64_t> v);
std::int64_t to_int64(const Integer& x);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HermiteResult {
  IntMatrix h;  // h = m * u
  IntMatrix u;  // unimodular
  std::size_t rank = 0;
};

/// Column-style Hermite normal form. `h` is lower triangular in echelon form:
/// the nonzero columns come first, each pivot (first nonzero entry) is
/// positive, pivot rows strictly increase, and every entry to the left of a
/// pivot lies in [0, pivot). Zero columns trail.
HermiteResult hnf(const IntMatrix& m);

/// Rank over Q, computed with fraction-free (Bareiss) elimination.
std::size_t rational_rank(const IntMatrix& m);

/// Z^d x Z/m_1 x ... x Z/m_t; vectors list the d free coordinates first.
struct AmbientGroup {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  std::size_t dim() const noexcept { return free_rank + torsion.size(); }
  bool torsion_free() const noexcept { return torsion.empty(); }
  /// Reduces torsion coordinates into [0, m_j).
  void canonicalize(Vec& v) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec subtract(const Vec& a, const Vec& b) const;
  Vec scale(const Vec& a, std::int64_t k) const;
  void validate() const;

  bool operator==(const AmbientGroup&) const = default;
};

/// A sublattice of Z^n stored by its canonical (Hermite) basis.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  /// Canonicalizes `generators` (which need not be independent).
  LatticeBasis(std::size_t ambient_dim, const std::vector<IntVector>& generators);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  const std::vector<IntVector>& basis() const noexcept { return basis_; }
  bool contains(std::span<const Integer> v) const;
  bool contains(std::span<const std::int64_t> v) const;

  bool operator==(const LatticeBasis&) const = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of { c in Z^k : sum_i c_i v_i = 0 in the ambient group }.
LatticeBasis integer_kernel(const std::vector<Vec>& vectors, const AmbientGroup& ambient);

/// Image of a lattice in Z^2 under two integer functionals.
struct Sublattice2 {
  int rank = 0;
  /// Primitive direction, present iff rank == 1; p > 0, or p == 0 and q > 0.
  std::optional<std::pair<Integer, Integer>> generator;
  /// For rank 1 the image is multiplier * generator * Z.
  Integer multiplier = 0;
  /// Hermite basis of the image (columns), rank many.
  std::vector<std::pair<Integer, Integer>> hermite_basis;
  /// preimages[j] lies in the source lattice and maps to hermite_basis[j].
  std::vector<IntVector> preimages;

  bool contains(const Integer& x, const Integer& y) const;
};

Sublattice2 image_lattice_2d(const LatticeBasis& lattice, std::span<const Integer> f,
                             std::span<const Integer> g);

/// LLL-reduced basis (delta = 3/4) of the lattice spanned by the linearly
/// independent `basis`, for the inner product sum_j w_j^2 a_j b_j. An empty
/// `weights` means all ones.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis, const std::vector<Integer>& weights = {});

/// Finds x >= 0 with a x = b over Q (exact simplex), if one exists.
std::optional<std::vector<Rational>> find_nonnegative_solution(const IntMatrix& a,
                                                               const IntVector& b);

}  // namespace lenfact
