#include "lenfact/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "lenfact/error.hpp"

namespace lenfact {

IntVector to_integers(std::span<const std::int64_t> v) {
  IntVector out;
  out.reserve(v.size());
  for (std::int64_t x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw Error(ErrorCode::kOverflow, "integer exceeds 64 bits: " + x.get_str());
  return x.get_si();
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::kInvalidInput, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::kInvalidInput, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::kInvalidInput, "matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Hermite normal form

namespace {

// col_a <- s*col_a + t*col_b ; col_b <- x*col_a + y*col_b  (applied to both h and u)
void combine_columns(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                     const Integer& t, const Integer& x, const Integer& y) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer va = m(r, a);
    Integer vb = m(r, b);
    m(r, a) = s * va + t * vb;
    m(r, b) = x * va + y * vb;
  }
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

// col_dst -= q * col_src
void subtract_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

}  // namespace

HermiteResult hnf(const IntMatrix& m) {
  HermiteResult res{m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  const std::size_t n = m.cols();
  std::size_t col = 0;
  for (std::size_t row = 0; row < m.rows() && col < n; ++row) {
    for (std::size_t j = col + 1; j < n; ++j) {
      if (h(row, j) == 0) continue;
      Integer a = h(row, col);
      Integer b = h(row, j);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer x = -b / g;
      Integer y = a / g;
      combine_columns(h, col, j, s, t, x, y);
      combine_columns(u, col, j, s, t, x, y);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      negate_column(h, col);
      negate_column(u, col);
    }
    const Integer pivot = h(row, col);
    for (std::size_t j = 0; j < col; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(row, j).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      subtract_multiple(h, j, col, q);
      subtract_multiple(u, j, col, q);
    }
    ++col;
  }
  res.rank = col;
  return res;
}

std::size_t rational_rank(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(rank, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = m(rank, c) * m(i, j) - m(i, c) * m(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// AmbientGroup

void AmbientGroup::canonicalize(Vec& v) const {
  for (std::size_t j = 0; j < torsion.size(); ++j) {
    std::int64_t& x = v[free_rank + j];
    x %= torsion[j];
    if (x < 0) x += torsion[j];
  }
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "64-bit overflow in element arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "64-bit overflow in element arithmetic");
  return r;
}

}  // namespace

Vec AmbientGroup::add(const Vec& a, const Vec& b) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  canonicalize(r);
  return r;
}

Vec AmbientGroup::subtract(const Vec& a, const Vec& b) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], -b[i]);
  canonicalize(r);
  return r;
}

Vec AmbientGroup::scale(const Vec& a, std::int64_t k) const {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  canonicalize(r);
  return r;
}

void AmbientGroup::validate() const {
  if (dim() == 0) throw Error(ErrorCode::kInvalidInput, "ambient group must have free_rank + |torsion| >= 1");
  for (std::int64_t m : torsion)
    if (m < 2) throw Error(ErrorCode::kInvalidInput, "torsion moduli must be >= 2");
}

// ---------------------------------------------------------------------------
// LatticeBasis

LatticeBasis::LatticeBasis(std::size_t ambient_dim, const std::vector<IntVector>& generators)
    : ambient_dim_(ambient_dim) {
  if (generators.empty()) return;
  HermiteResult r = hnf(IntMatrix::from_columns(ambient_dim, generators));
  for (std::size_t c = 0; c < r.rank; ++c) {
    IntVector v = r.h.column(c);
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    pivots_.push_back(p);
    basis_.push_back(std::move(v));
  }
}

bool LatticeBasis::contains(std::span<const Integer> v) const {
  if (v.size() != ambient_dim_) return false;
  IntVector r(v.begin(), v.end());
  std::size_t row = 0;
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    for (; row < pivots_[j]; ++row)
      if (r[row] != 0) return false;
    const Integer& pivot = basis_[j][row];
    if (!mpz_divisible_p(r[row].get_mpz_t(), pivot.get_mpz_t())) return false;
    Integer q = r[row] / pivot;
    for (std::size_t i = row; i < ambient_dim_; ++i) r[i] -= q * basis_[j][i];
    ++row;
  }
  for (; row < ambient_dim_; ++row)
    if (r[row] != 0) return false;
  return true;
}

bool LatticeBasis::contains(std::span<const std::int64_t> v) const {
  IntVector w = to_integers(v);
  return contains(std::span<const Integer>(w));
}

LatticeBasis integer_kernel(const std::vector<Vec>& vectors, const AmbientGroup& ambient) {
  const std::size_t k = vectors.size();
  const std::size_t t = ambient.torsion.size();
  const std::size_t rows = ambient.dim();
  // Each torsion coordinate gets an auxiliary unknown multiplying its modulus,
  // turning the congruence into an equation over Z.
  IntMatrix m(rows, k + t);
  for (std::size_t c = 0; c < k; ++c) {
    if (vectors[c].size() != rows) throw Error(ErrorCode::kInvalidInput, "vector dimension does not match ambient group");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = static_cast<long>(vectors[c][r]);
  }
  for (std::size_t j = 0; j < t; ++j) m(ambient.free_rank + j, k + j) = static_cast<long>(ambient.torsion[j]);

  HermiteResult r = hnf(m);
  std::vector<IntVector> kernel;
  for (std::size_t c = r.rank; c < k + t; ++c) {
    IntVector v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = r.u(i, c);
    kernel.push_back(std::move(v));
  }
  return LatticeBasis(k, kernel);
}

// ---------------------------------------------------------------------------
// Rank-2 images

bool Sublattice2::contains(const Integer& x, const Integer& y) const {
  if (rank == 0) return x == 0 && y == 0;
  if (rank == 2) {
    const auto& [a, b] = hermite_basis[0];
    const auto& c = hermite_basis[1].second;
    if (!mpz_divisible_p(x.get_mpz_t(), a.get_mpz_t())) return false;
    Integer rest = y - (x / a) * b;
    return mpz_divisible_p(rest.get_mpz_t(), c.get_mpz_t()) != 0;
  }
  const auto& [p, q] = hermite_basis[0];
  // (x, y) = k (p, q)
  if (p != 0) {
    if (!mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) return false;
    return (x / p) * q == y;
  }
  if (x != 0) return false;
  return mpz_divisible_p(y.get_mpz_t(), q.get_mpz_t()) != 0;
}

Sublattice2 image_lattice_2d(const LatticeBasis& lattice, std::span<const Integer> f,
                             std::span<const Integer> g) {
  Sublattice2 out;
  const auto& basis = lattice.basis();
  if (basis.empty()) return out;
  IntMatrix images(2, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    images(0, j) = dot(f, basis[j]);
    images(1, j) = dot(g, basis[j]);
  }
  HermiteResult r = hnf(images);
  out.rank = static_cast<int>(r.rank);
  for (std::size_t c = 0; c < r.rank; ++c) {
    out.hermite_basis.emplace_back(r.h(0, c), r.h(1, c));
    IntVector pre(lattice.ambient_dim(), Integer(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (r.u(j, c) == 0) continue;
      for (std::size_t i = 0; i < pre.size(); ++i) pre[i] += r.u(j, c) * basis[j][i];
    }
    out.preimages.push_back(std::move(pre));
  }
  if (out.rank == 1) {
    auto [p, q] = out.hermite_basis[0];
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    out.multiplier = gcd;
    out.generator = std::make_pair(Integer(p / gcd), Integer(q / gcd));
  }
  return out;
}

std::vector<IntVector> lll_reduce(std::vector<IntVector> b, const std::vector<Integer>& weights) {
  const std::size_t n = b.size();
  if (n == 0) return b;
  const std::size_t dim = b[0].size();
  auto inner = [&](const auto& u, const auto& v) {
    Rational s = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      Rational t = Rational(u[j]) * Rational(v[j]);
      if (!weights.empty()) t *= Rational(weights[j] * weights[j]);
      s += t;
    }
    return s;
  };
  // Gram-Schmidt data, recomputed from scratch after every change: the
  // lattices here have rank <= a handful, so simplicity wins.
  std::vector<std::vector<Rational>> star(n, std::vector<Rational>(dim));
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> norm(n);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < dim; ++j) star[i][j] = b[i][j];
      for (std::size_t l = 0; l < i; ++l) {
        mu[i][l] = inner(b[i], star[l]) / norm[l];
        for (std::size_t j = 0; j < dim; ++j) star[i][j] -= mu[i][l] * star[l][j];
      }
      norm[i] = inner(star[i], star[i]);
    }
  };
  gram_schmidt();
  const Rational delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t l = k; l-- > 0;) {
      Rational m = mu[k][l];
      // Nearest integer to m.
      Integer q = m.get_num() * 2 + m.get_den();
      Integer den = m.get_den() * 2;
      mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
      if (q != 0) {
        for (std::size_t j = 0; j < dim; ++j) b[k][j] -= q * b[l][j];
        gram_schmidt();
      }
    }
    if (norm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

}  // namespace lenfact
