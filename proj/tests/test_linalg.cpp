#include <doctest.h>

#include <random>

#include "lenfact/linalg.hpp"
#include "oracles.hpp"

using namespace lenfact;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

Rational det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

// Echelon shape: nonzero columns first, positive pivots with increasing
// rows, entries left of a pivot reduced into [0, pivot).
bool is_hermite(const IntMatrix& h) {
  std::size_t prev_row = 0;
  bool seen_zero = false;
  for (std::size_t c = 0; c < h.cols(); ++c) {
    std::size_t r = 0;
    while (r < h.rows() && h(r, c) == 0) ++r;
    if (r == h.rows()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero || h(r, c) <= 0) return false;
    if (c > 0 && r <= prev_row) return false;
    for (std::size_t l = 0; l < c; ++l)
      if (h(r, l) < 0 || h(r, l) >= h(r, c)) return false;
    prev_row = r;
  }
  return true;
}

std::vector<std::vector<mpq_class>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

TEST_CASE("hnf of the identity is the identity") {
  auto r = hnf(IntMatrix::identity(2));
  CHECK(r.h == IntMatrix::identity(2));
  CHECK(r.u == IntMatrix::identity(2));
  CHECK(r.rank == 2);
}

TEST_CASE("hnf of a 1x2 row reduces by extended gcd") {
  auto r = hnf(IntMatrix::from_rows({{2, 3}}));
  CHECK(r.h == IntMatrix::from_rows({{1, 0}}));
  CHECK(IntMatrix::from_rows({{2, 3}}) * r.u == r.h);
}

TEST_CASE("hnf of a zero matrix") {
  auto r = hnf(IntMatrix(2, 3));
  CHECK(r.h.is_zero());
  CHECK(r.u == IntMatrix::identity(3));
  CHECK(r.rank == 0);
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, r, c, -6, 6);
    auto res = hnf(m);
    CHECK(m * res.u == res.h);
    CHECK(is_hermite(res.h));
    Rational d = det(res.u);
    CHECK((d == 1 || d == -1));
    CHECK(res.rank == oracle::rank(rows_of(m)));
    // Idempotent.
    CHECK(hnf(res.h).h == res.h);
    // Column permutations do not change the result.
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < c; ++j) cols.push_back(m.column(j));
    std::shuffle(cols.begin(), cols.end(), rng);
    CHECK(hnf(IntMatrix::from_columns(r, cols)).h == res.h);
  }
}

TEST_CASE("integer kernel examples") {
  auto k = integer_kernel({{2}, {3}}, AmbientGroup{1, {}});
  REQUIRE(k.rank() == 1);
  IntVector b = k.basis()[0];
  CHECK(((b == IntVector{3, -2}) || (b == IntVector{-3, 2})));

  CHECK(integer_kernel({{1, 0}, {0, 1}}, AmbientGroup{2, {}}).is_zero());

  // Free coordinates first, the Z/2 coordinate last.
  auto t = integer_kernel({{0, 2, 0}, {0, 3, 0}, {1, 0, 0}, {1, 0, 1}}, AmbientGroup{2, {2}});
  CHECK(t.rank() == 2);
  CHECK(t.contains(std::span<const std::int64_t>(Vec{3, -2, 0, 0})));
  CHECK(t.contains(std::span<const std::int64_t>(Vec{0, 0, 2, -2})));
  CHECK_FALSE(t.contains(std::span<const std::int64_t>(Vec{0, 0, 1, -1})));
}

TEST_CASE("integer kernel properties") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = 1 + rng() % 3, k = 1 + rng() % 5;
    std::vector<std::int64_t> torsion;
    if (rng() % 3 == 0) torsion.push_back(2 + rng() % 4);
    AmbientGroup g{d, torsion};
    std::vector<Vec> atoms;
    for (std::size_t i = 0; i < k; ++i) {
      Vec v(g.dim());
      for (auto& x : v) x = static_cast<std::int64_t>(rng() % 13) - 6;
      atoms.push_back(v);
    }
    auto ker = integer_kernel(atoms, g);
    for (const IntVector& c : ker.basis()) {
      Vec cv;
      for (const Integer& x : c) cv.push_back(x.get_si());
      CHECK(oracle::reduce(oracle::combine(atoms, cv, g.dim()), d, torsion) == Vec(g.dim(), 0));
      CHECK(ker.contains(std::span<const Integer>(c)));
    }
    if (torsion.empty()) {
      std::vector<std::vector<mpq_class>> rows(d, std::vector<mpq_class>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < d; ++j) rows[j][i] = atoms[i][j];
      CHECK(ker.rank() + oracle::rank(rows) == k);
    }
  }
}

TEST_CASE("rational rank examples and random agreement") {
  CHECK(rational_rank(IntMatrix::identity(3)) == 3);
  CHECK(rational_rank(IntMatrix::from_columns(2, {{0, 3}, {1, 2}, {2, 1}})) == 2);
  CHECK(rational_rank(IntMatrix(3, 2)) == 0);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, -2, 2);
    CHECK(rational_rank(m) == oracle::rank(rows_of(m)));
  }
}

TEST_CASE("image lattices in Z^2") {
  IntVector sigma{1, 1}, first{1, 0}, second{0, 1};
  auto zero = image_lattice_2d(LatticeBasis(2, {}), sigma, first);
  CHECK(zero.rank == 0);

  auto one = image_lattice_2d(LatticeBasis(2, {{3, -2}}), sigma, first);
  REQUIRE(one.rank == 1);
  CHECK(one.generator->first == 1);
  CHECK(one.generator->second == 3);
  CHECK(one.multiplier == 1);

  auto full = image_lattice_2d(LatticeBasis(2, {{1, 0}, {0, 1}}), first, second);
  CHECK(full.rank == 2);
}

TEST_CASE("image lattice contains images of random lattice vectors") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 3, r = 1 + rng() % 2;
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < r; ++i) {
      IntVector v(n);
      for (auto& x : v) x = static_cast<long>(rng() % 9) - 4;
      gens.push_back(v);
    }
    LatticeBasis lat(n, gens);
    IntVector f(n), g(n);
    for (auto& x : f) x = static_cast<long>(rng() % 5) - 2;
    for (auto& x : g) x = static_cast<long>(rng() % 5) - 2;
    auto img = image_lattice_2d(lat, f, g);
    CHECK(img.rank <= static_cast<int>(lat.rank()));
    if (img.generator) CHECK(gcd(img.generator->first, img.generator->second) == 1);
    for (int s = 0; s < 5; ++s) {
      IntVector c(n, Integer(0));
      for (const IntVector& b : lat.basis()) {
        long t = static_cast<long>(rng() % 7) - 3;
        for (std::size_t j = 0; j < n; ++j) c[j] += t * b[j];
      }
      CHECK(img.contains(dot(c, f), dot(c, g)));
    }
    for (std::size_t j = 0; j < img.preimages.size(); ++j) {
      CHECK(lat.contains(std::span<const Integer>(img.preimages[j])));
      CHECK(dot(img.preimages[j], f) == img.hermite_basis[j].first);
      CHECK(dot(img.preimages[j], g) == img.hermite_basis[j].second);
    }
  }
}

TEST_CASE("nonnegative solutions by exact simplex") {
  auto x = find_nonnegative_solution(IntMatrix::from_rows({{1, 1}, {1, -1}}), {4, 2});
  REQUIRE(x);
  CHECK((*x)[0] == 3);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(find_nonnegative_solution(IntMatrix::from_rows({{1, 1}}), {-1}));
  auto y = find_nonnegative_solution(IntMatrix::from_rows({{2, 4}}), {3});
  REQUIRE(y);
  CHECK(2 * (*y)[0] + 4 * (*y)[1] == 3);
}

TEST_CASE("LLL keeps the lattice and shortens the basis") {
  std::vector<IntVector> b{{14, 1, 11, -24, 2}, {0, 2, -4, 1, 1}};
  auto r = lll_reduce(b);
  REQUIRE(r.size() == 2);
  CHECK(LatticeBasis(5, r) == LatticeBasis(5, b));
  auto norm2 = [](const IntVector& v) {
    Integer s = 0;
    for (const Integer& x : v) s += x * x;
    return s;
  };
  CHECK(norm2(r[0]) <= norm2(b[1]));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 3 + rng() % 3, k = 1 + rng() % 3;
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < k; ++i) {
      IntVector v(n);
      for (auto& x : v) x = static_cast<long>(rng() % 41) - 20;
      gens.push_back(v);
    }
    LatticeBasis lat(n, gens);
    std::vector<Integer> w(n);
    for (auto& x : w) x = 1 + static_cast<long>(rng() % 5);
    auto red = lll_reduce(lat.basis(), w);
    CHECK(red.size() == lat.rank());
    CHECK(LatticeBasis(n, red) == lat);
  }
}
