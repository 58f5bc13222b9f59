#include "doctest.h"
#include "oracles.hpp"
#include "sextic/errors.hpp"
#include "sextic/exterior.hpp"
#include "sextic/selfcheck.hpp"

using namespace sextic;

namespace {

const ScalarRing kZ = ScalarRing::integers();

ExtVector f(std::initializer_list<std::size_t> s) { return ExtVector::basis(kZ, 5, IndexSet(s)); }

}  // namespace

TEST_SUITE("exterior") {
  TEST_CASE("subset bases") {
    CHECK(subsets(5, 2).size() == 10);
    CHECK(subsets(5, 4).size() == 5);
    CHECK(subsets(5, 2).front() == IndexSet{0, 1});
    CHECK(subsets(5, 2).back() == IndexSet{3, 4});
    for (std::size_t k = 0; k <= 5; ++k)
      for (std::size_t p = 0; p < subsets(5, k).size(); ++p) CHECK(subset_position(5, subsets(5, k)[p]) == p);
  }

  TEST_CASE("sort_sign matches inversion counting") {
    std::vector<std::size_t> perm{0, 1, 2, 3, 4};
    do {
      CHECK(sort_sign(perm) == oracle::permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(sort_sign({1, 1, 2}) == 0);
  }

  TEST_CASE("wedge is graded anticommutative and associative") {
    RandomSource rnd(31);
    for (int rep = 0; rep < 20; ++rep) {
      const auto u = rnd.ext(kZ, 1);
      const auto v = rnd.ext(kZ, 2);
      const auto w = rnd.ext(kZ, 1);
      CHECK(wedge(u, w) == -wedge(w, u));
      CHECK(wedge(u, v) == wedge(v, u));
      CHECK(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)));
    }
    CHECK(wedge(f({0}), f({1})) == f({0, 1}));
    CHECK(wedge(f({1}), f({0})) == -f({0, 1}));
    CHECK_THROWS_AS(wedge(f({0, 1, 2}), f({3, 4, 0})), Error);
  }

  TEST_CASE("box square") {
    CHECK(box_square(f({0, 1}) + f({2, 3})) == f({0, 1, 2, 3}));
    CHECK(box_square(f({0, 1})).is_zero());
    // Works in characteristic 2, where μ∧μ vanishes.
    const auto f2 = ScalarRing::prime_field(2);
    const auto mu = (f({0, 1}) + f({2, 3}) + f({1, 4})).in(f2);
    CHECK(wedge(mu, mu).is_zero());
    CHECK_FALSE(box_square(mu).is_zero());
    CHECK_THROWS_AS(box_square(f({0})), Error);
  }

  TEST_CASE("covector and determinant anchors") {
    std::array<ExtVector, 5> gens{ExtVector(kZ, 5, 4), ExtVector(kZ, 5, 4), ExtVector(kZ, 5, 4),
                                  ExtVector(kZ, 5, 4), ExtVector(kZ, 5, 4)};
    for (std::size_t p = 0; p < 5; ++p) gens[p] = ExtVector::basis(kZ, 5, subsets(5, 4)[p]);
    CHECK(det_in_wedge4(gens) == Scalar::one(kZ));
    auto repeated = gens;
    repeated[1] = repeated[0];
    CHECK(det_in_wedge4(repeated).is_zero());
    // â_m is the coefficient of f_top in α∧f_m.
    RandomSource rnd(32);
    for (int rep = 0; rep < 10; ++rep) {
      const auto alpha = rnd.ext(kZ, 4);
      const auto cov = covector(alpha);
      for (std::size_t m = 0; m < 5; ++m) CHECK(wedge(alpha, f({m})).coeff(0) == cov[m]);
      CHECK(ExtVector::from_covector(cov) == alpha);
    }
    CHECK_THROWS_AS(contract(f({0, 1}), f({0, 1}), f({0, 1, 2, 3})), Error);
  }

  TEST_CASE("skew matrix round trip and exterior power action") {
    RandomSource rnd(33);
    const auto mu = rnd.ext(kZ, 2);
    CHECK(ExtVector::from_skew(mu.to_skew()) == mu);
    CHECK_THROWS_AS(ExtVector::from_skew(Matrix::identity(kZ, 5)), Error);
    const Matrix g = rnd.invertible(kZ, 5);
    const auto u = rnd.ext(kZ, 1);
    const auto v = rnd.ext(kZ, 1);
    CHECK(exterior_power_apply(g, wedge(u, v)) == wedge(exterior_power_apply(g, u), exterior_power_apply(g, v)));
  }
}
