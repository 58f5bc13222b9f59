#include "doctest.h"
#include "sextic/errors.hpp"
#include "sextic/examples.hpp"
#include "sextic/lattice_resolvent.hpp"

using namespace sextic;

namespace {

const ScalarRing kQ = ScalarRing::rationals();

RationalLattice scaled_standard(const mpq_class& s) {
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < 5; ++i) {
    RatVector r(5, 0);
    r[i] = s;
    rows.push_back(r);
  }
  return RationalLattice::from_generators(rows, 5);
}

}  // namespace

TEST_SUITE("latres") {
  TEST_CASE("split algebra") {
    const auto ex = build_example(1);
    const auto bl = compute_M0(ex.cases[0].ring, *ex.cases[0].resolvent);
    CHECK(bl.m0 == *ex.expected.m0);
    const auto c = conductor(bl);
    CHECK(c.value == 1);
    CHECK(c.formulas_agree);
    const auto found = enumerate_numerical_resolvents(bl, c);
    REQUIRE(found.resolvents.size() == 1);
    CHECK(found.resolvents[0].reference_lattice == bl.m0);
    CHECK(found.resolvents[0].is_numerical);
    CHECK(numerical_count_bound(c) == 1);
  }

  TEST_CASE("subring example") {
    for (unsigned p : {2U, 3U}) {
      CAPTURE(p);
      const auto ex = build_example(2, p);
      const auto& cs = ex.cases[0];
      const auto bl = compute_M0(cs.ring, *cs.resolvent);
      CHECK(bl.m0 == *ex.expected.m0);
      for (std::size_t i = 0; i < 4; ++i) CHECK(bl.at_m0.phi(i) * Scalar(kQ, -1L) == ex.fixtures[i].in(kQ));
      const auto c = conductor(bl);
      CHECK(c.value == p);
      CHECK(c.from_theta == p);
      CHECK(c.from_F == p);
      // Admissible functionals: span of the first and last dual basis vectors.
      const auto kernel = common_kernel_mod_p(bl.at_m0, p);
      REQUIRE(kernel.size() == 2);
      for (const auto& l : kernel) {
        CHECK(l[1] == 0);
        CHECK(l[2] == 0);
        CHECK(l[3] == 0);
      }
      CHECK((kernel[0][0] * kernel[1][4] - kernel[0][4] * kernel[1][0]) % static_cast<long>(p) != 0);
      const auto found = enumerate_numerical_resolvents(bl, c);
      CHECK(found.resolvents.size() == p + 1);
      CHECK(found.within_bound);
      for (const auto& r : found.resolvents) {
        CHECK(r.index_in_m0 == p);
        CHECK(r.is_resolvent);
        CHECK(r.is_numerical);
      }
      const auto all = enumerate_all_resolvents(bl, c);
      CHECK_FALSE(all.partial);
      CHECK(all.resolvents.size() == found.resolvents.size());
      for (const auto& r : all.resolvents) CHECK(r.is_numerical);
    }
    CHECK(numerical_count_bound(conductor(compute_M0(build_example(2, 2).cases[0].ring))) == 31);
  }

  TEST_CASE("bounding lattice does not depend on the reference resolvent") {
    const auto cs = build_example(2, 3).cases[0];
    const auto a = compute_M0(cs.ring, *cs.resolvent);
    const auto b = compute_M0(cs.ring);
    CHECK(conductor(a).value == conductor(b).value);
    CHECK(enumerate_numerical_resolvents(b, conductor(b)).resolvents.size() == 4);
  }

  TEST_CASE("scaled example on its printed lattice") {
    const auto cs = build_example(4, 2).cases[0];
    const auto bl = compute_M0(cs.ring, *cs.resolvent);
    const auto c = conductor(bl);
    CHECK(c.value == 16);
    CHECK(c.formulas_agree);
    const auto status = resolvent_status(bl, *cs.lattice);
    CHECK(status.phi_ok);
    CHECK(status.phi_content == 1);
    CHECK(status.theta_ok);
    CHECK(status.theta_index == 2);
    CHECK(status.is_resolvent);
    CHECK_FALSE(status.is_numerical);
    CHECK_THROWS_AS(enumerate_numerical_resolvents(bl, c), Error);
    const auto capped = enumerate_all_resolvents(bl, c, mpz_class(2), {*cs.lattice});
    bool seen = false;
    for (const auto& r : capped.resolvents) seen = seen || r.reference_lattice == *cs.lattice;
    CHECK(seen);
  }

  TEST_CASE("index-p super-modules of the scaled example are numerical") {
    const auto cs = build_example(4, 2).cases[0];
    const auto bl = compute_M0(cs.ring, *cs.resolvent);
    const auto m = cs.lattice->basis();
    std::size_t numerical = 0;
    for (unsigned mask = 1; mask < 32; ++mask) {
      auto gens = m;
      RatVector extra(5, 0);
      for (std::size_t i = 0; i < 5; ++i)
        if (mask & (1U << i))
          for (std::size_t c = 0; c < 5; ++c) extra[c] += m[i][c] / 2;
      gens.push_back(extra);
      const auto status = resolvent_status(bl, RationalLattice::from_generators(gens, 5));
      numerical += status.is_resolvent && status.is_numerical;
    }
    CHECK(numerical == 31);
  }

  TEST_CASE("lattices outside the bounding lattice are rejected") {
    const auto cs = build_example(1).cases[0];
    const auto bl = compute_M0(cs.ring, *cs.resolvent);
    CHECK_THROWS_AS(resolvent_status(bl, scaled_standard(mpq_class(1, 2))), Error);
    const auto twice = resolvent_status(bl, scaled_standard(2));
    CHECK_FALSE(twice.is_resolvent);
    CHECK(twice.index_in_m0 == 32);
  }

  TEST_CASE("strong maximality hypothesis") {
    const auto ex3 = build_example(3).cases[0].ring;
    const auto r3 = check_strong_maximal_hypothesis(ex3, {2, 3});
    REQUIRE(r3.primes.size() == 2);
    for (const auto& e : r3.primes) CHECK(e.dimension == 2);
    REQUIRE(r3.numerical_count.has_value());
    CHECK(*r3.numerical_count == 1);
    const auto r1 = check_strong_maximal_hypothesis(build_example(1).cases[0].ring, {2, 3, 5});
    for (const auto& e : r1.primes) CHECK(e.dimension == 0);
    const auto r4 = check_strong_maximal_hypothesis(build_example(4, 2).cases[0].ring, {2});
    REQUIRE(r4.primes.size() == 1);
    CHECK(r4.primes[0].dimension == 4);
  }

  TEST_CASE("factorization") {
    const auto f = factorize(mpz_class(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<mpz_class, unsigned>(2, 3));
    CHECK(f[1] == std::pair<mpz_class, unsigned>(3, 2));
    CHECK(f[2] == std::pair<mpz_class, unsigned>(5, 1));
  }
}
