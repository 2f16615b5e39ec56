#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "polydefect/errors.hpp"
#include "polydefect/lattice_algebra.hpp"

using namespace polydefect;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  return m;
}

oracle::Matrix rows_of(const IntMatrix& m) {
  oracle::Matrix out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

bool is_unimodular(const IntMatrix& u) {
  const Int d = determinant(u);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, n, n, 6);
    CHECK(determinant(m) == oracle::laplace_det(rows_of(m)));
  }
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("hermite form is echelon, reduced, and U M = H") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, r, c, 5);
    const auto [h, u] = hermite_normal_form(m);
    CHECK(is_unimodular(u));
    CHECK(u * m == h);
    std::size_t last_pivot = 0;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t p = 0;
      while (p < c && h(i, p) == 0) ++p;
      if (p == c) {
        seen_zero_row = true;
        continue;
      }
      CHECK_FALSE(seen_zero_row);
      if (i > 0) CHECK(p > last_pivot);
      last_pivot = p;
      CHECK(h(i, p) > 0);
      for (std::size_t above = 0; above < i; ++above) {
        CHECK(h(above, p) >= 0);
        CHECK(h(above, p) < h(i, p));
      }
    }
    CHECK(rank(m) == [&] {
      std::size_t k = 0;
      for (std::size_t i = 0; i < r; ++i)
        if (!IntMatrix::from_rows({h.row(i)}).is_zero()) ++k;
      return k;
    }());
  }
}

TEST_CASE("smith form matches determinantal divisors") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, r, c, 6);
    const auto sf = smith_normal_form(m);
    CHECK(is_unimodular(sf.U));
    CHECK(is_unimodular(sf.V));
    CHECK(sf.U * m * sf.V == sf.S);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(sf.S(i, j) == 0);
    const auto divs = elementary_divisors(m);
    CHECK(divs == oracle::determinantal_divisors(rows_of(m)));
    for (std::size_t i = 1; i < divs.size(); ++i) CHECK(divs[i] % divs[i - 1] == 0);
  }
}

TEST_CASE("smith form of a known matrix") {
  const IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(elementary_divisors(m) == std::vector<Int>{2, 6, 12});
}

TEST_CASE("inverses") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, n, n, 4);
    const auto u = hermite_normal_form(m).U;
    CHECK(unimodular_inverse(u) * u == IntMatrix::identity(n));
    if (determinant(m) != 0) {
      const auto inv = rational_inverse(m);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Rat s = 0;
          for (std::size_t q = 0; q < n; ++q) s += inv[i][q] * Rat(m(q, j));
          CHECK(s == Rat(i == j ? 1 : 0));
        }
    }
  }
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}})), InputError);
}

TEST_CASE("primitive and gcd") {
  const IntVector v{6, -9, 12};
  CHECK(gcd_of(v) == 3);
  CHECK(primitive(v) == IntVector{2, -3, 4});
  CHECK_THROWS_AS(primitive(IntVector{0, 0}), InputError);
}

TEST_CASE("saturated chart of a lower-dimensional point set") {
  // segment from (0,0,0) to (2,4,6): primitive step (1,2,3), two steps long
  const std::vector<IntVector> pts{{0, 0, 0}, {2, 4, 6}};
  const auto chart = saturated_chart(pts);
  CHECK(chart.rank() == 1);
  const auto y = chart.coordinates(IntVector{1, 2, 3});
  REQUIRE(y);
  const auto y2 = chart.coordinates(IntVector{2, 4, 6});
  REQUIRE(y2);
  const auto y0 = chart.coordinates(IntVector{0, 0, 0});
  REQUIRE(y0);
  CHECK(abs((*y2)[0] - (*y0)[0]) == 2);
  CHECK(abs((*y)[0] - (*y0)[0]) == 1);
  CHECK_FALSE(chart.coordinates(IntVector{1, 2, 4}));
  CHECK(chart.point(*y) == IntVector{1, 2, 3});
  CHECK(lattice_index(pts) == 2);
}

TEST_CASE("full-dimensional points get the identity chart") {
  const auto chart = saturated_chart({{0, 0}, {3, 1}, {1, 2}});
  CHECK(chart.is_identity());
  CHECK(chart.origin() == IntVector{0, 0});
  CHECK(lattice_index({{0, 0}, {3, 1}, {1, 2}}) == 5);
  CHECK(lattice_index({{0, 0}, {1, 0}, {0, 1}}) == 1);
}

TEST_CASE("generalized binomial") {
  for (long t = -8; t <= 12; ++t)
    for (long k = -2; k <= 10; ++k) CHECK(generalized_binomial(t, k) == oracle::binom(t, k));
  CHECK(generalized_binomial(0, 0) == 1);
  CHECK(generalized_binomial(-1, 3) == -1);
  CHECK(factorial(6) == 720);
}
