#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sextic/errors.hpp"
#include "sextic/matrix.hpp"
#include "sextic/selfcheck.hpp"

using namespace sextic;

namespace {

const ScalarRing kZ = ScalarRing::integers();
const ScalarRing kQ = ScalarRing::rationals();

oracle::Table table(const Matrix& m) {
  oracle::Table t(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t[r][c] = m(r, c).value();
  return t;
}

Matrix random_matrix(RandomSource& rnd, const ScalarRing& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rnd.scalar(ring, -6, 6);
  return m;
}

}  // namespace

TEST_SUITE("corelin") {
  TEST_CASE("scalar arithmetic in each ring") {
    const auto f7 = ScalarRing::prime_field(7);
    CHECK(Scalar(f7, 3L) * Scalar(f7, 5L) == Scalar(f7, 1L));
    CHECK(Scalar(f7, -1L) == Scalar(f7, 6L));
    CHECK(Scalar(f7, 3L) / Scalar(f7, 5L) == Scalar(f7, 2L));
    CHECK(Scalar(kQ, mpq_class(1, 2)) + Scalar(kQ, mpq_class(1, 3)) == Scalar(kQ, mpq_class(5, 6)));
    CHECK(Scalar::parse(f7, "-3/2") == Scalar(f7, 2L));
    CHECK_THROWS_AS(Scalar(kZ, 3L) / Scalar(kZ, 2L), Error);
    CHECK_THROWS_AS(Scalar::parse(kQ, "x1"), Error);
    CHECK_THROWS_AS(Scalar(kZ, 1L) + Scalar(kQ, 1L), Error);
    CHECK_THROWS_AS(ScalarRing::prime_field(9), Error);
  }

  TEST_CASE("determinant against Leibniz and Bareiss") {
    RandomSource rnd(11);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int rep = 0; rep < 5; ++rep) {
        const Matrix m = random_matrix(rnd, kZ, n);
        const auto t = table(m);
        CHECK(determinant(m).value() == oracle::leibniz_det(t));
        std::vector<std::vector<mpz_class>> zt(n, std::vector<mpz_class>(n));
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) zt[r][c] = m(r, c).as_integer();
        CHECK(determinant(m).as_integer() == oracle::bareiss_det(zt));
      }
    }
  }

  TEST_CASE("determinant over F_p matches the reduced integer determinant") {
    RandomSource rnd(12);
    const auto f5 = ScalarRing::prime_field(5);
    for (int rep = 0; rep < 20; ++rep) {
      const Matrix m = random_matrix(rnd, kZ, 5);
      CHECK(determinant(m.in(f5)) == determinant(m).in(f5));
    }
  }

  TEST_CASE("pfaffian against perfect matchings") {
    RandomSource rnd(13);
    for (std::size_t n : {2U, 4U, 6U, 8U}) {
      for (int rep = 0; rep < 5; ++rep) {
        const Matrix a = rnd.skew(kZ, n);
        CHECK(pfaffian(a).value() == oracle::matching_pfaffian(table(a)));
      }
    }
    CHECK(pfaffian(Matrix(kZ, 0, 0)) == Scalar::one(kZ));
    CHECK(pfaffian(Matrix::from_ints(kZ, {{0, 3}, {-3, 0}})) == Scalar(kZ, 3L));
    CHECK_THROWS_AS(pfaffian(Matrix(kZ, 3, 3)), Error);
    CHECK_THROWS_AS(pfaffian(Matrix::from_ints(kZ, {{0, 1}, {1, 0}})), Error);
  }

  TEST_CASE("characteristic polynomial of a companion matrix") {
    // x^3 - 2x^2 + 5x - 7 has companion matrix with last column (7, -5, 2).
    const Matrix c = Matrix::from_ints(kZ, {{0, 0, 7}, {1, 0, -5}, {0, 1, 2}});
    const auto poly = char_poly(c);
    REQUIRE(poly.size() == 4);
    CHECK(poly[0] == Scalar(kZ, -7L));
    CHECK(poly[1] == Scalar(kZ, 5L));
    CHECK(poly[2] == Scalar(kZ, -2L));
    CHECK(poly[3] == Scalar(kZ, 1L));
  }

  TEST_CASE("inverse, solve, rank and nullspace") {
    RandomSource rnd(14);
    for (int rep = 0; rep < 10; ++rep) {
      const Matrix g = rnd.invertible(kQ, 4);
      CHECK(g * inverse(g) == Matrix::identity(kQ, 4));
      std::vector<Scalar> b{rnd.scalar(kQ), rnd.scalar(kQ), rnd.scalar(kQ), rnd.scalar(kQ)};
      CHECK(g.apply(solve(g, b)) == b);
    }
    const Matrix m = Matrix::from_ints(kQ, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    const Matrix kernel = nullspace(m);
    REQUIRE(kernel.rows() == 1);
    CHECK(m.apply(kernel.row(0)) == std::vector<Scalar>(3, Scalar::zero(kQ)));
    CHECK_THROWS_AS(inverse(m), Error);
    CHECK_THROWS_AS(determinant(Matrix(kQ, 2, 3)), Error);
  }
}
