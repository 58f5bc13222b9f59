#include "doctest.h"
#include "sextic/errors.hpp"
#include "sextic/examples.hpp"
#include "sextic/field_resolvent.hpp"
#include "sextic/resolvent.hpp"
#include "sextic/selfcheck.hpp"

using namespace sextic;

namespace {

const ScalarRing kZ = ScalarRing::integers();
const ScalarRing kQ = ScalarRing::rationals();

QuinticRing split_by_hand() {
  QuinticRing q(kZ);
  for (std::size_t i = 1; i <= 4; ++i) q.set(i, i, i, 1L);
  return q;
}

}  // namespace

TEST_SUITE("resolvent") {
  TEST_CASE("split example verifies and recovers its ring") {
    const auto c = build_example(1).cases[0];
    const auto report = verify_resolvent(*c.resolvent, c.ring);
    CHECK(report.pass);
    CHECK(report.grid_checks == 400);
    CHECK(report.random_checks == 20);
    CHECK(ring_from_resolvent(*c.resolvent) == split_by_hand());
  }

  TEST_CASE("the five idempotent images sum to zero") {
    const auto all = split_phi_all();
    Matrix sum(kZ, 5, 5);
    for (const auto& m : all) sum += m;
    CHECK(sum.is_zero());
  }

  TEST_CASE("mismatched ring is rejected with a failing triple") {
    const auto res = *build_example(1).cases[0].resolvent;
    const auto other = build_example(2, 2).cases[0].ring;
    const auto report = verify_resolvent(res.in(kQ), other.in(kQ));
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.failures.empty());
    const auto& f = report.failures.front();
    CHECK(f.lhs != f.rhs);
  }

  TEST_CASE("input validation") {
    const Matrix z(kZ, 5, 5);
    CHECK_THROWS_AS(ResolventData({z, z, z, Matrix::identity(kZ, 5)}, Scalar::one(kZ)), Error);
    CHECK_THROWS_AS(ResolventData({z, z, z, Matrix(kZ, 4, 4)}, Scalar::one(kZ)), Error);
    CHECK_THROWS_AS(ResolventData({z, z, z, z.in(kQ)}, Scalar::one(kZ)), Error);
  }

  TEST_CASE("random resolvents give associative rings in the gauge") {
    RandomSource rnd(51);
    for (int rep = 0; rep < 10; ++rep) {
      const auto res = rnd.resolvent(kZ);
      const QuinticRing q = ring_from_resolvent(res);
      CHECK(check_associative(q).empty());
      CHECK(q == normalize_translation(q));
      CHECK(verify_resolvent(res, q).pass);
    }
  }

  TEST_CASE("change of basis keeps a resolvent a resolvent") {
    RandomSource rnd(52);
    const auto c = build_example(1).cases[0];
    for (int rep = 0; rep < 5; ++rep) {
      const Matrix b = rnd.invertible(kQ, 5);
      const auto moved = c.resolvent->rebase(b);
      CHECK(moved.t() == determinant(b) * Scalar::one(kQ));
      CHECK(verify_resolvent(moved, c.ring.in(kQ)).pass);
    }
    CHECK(c.resolvent->rebase(Matrix::identity(kQ, 5)) == c.resolvent->in(kQ));
  }

  TEST_CASE("s value is antisymmetric in its last two arguments") {
    RandomSource rnd(53);
    const auto res = rnd.resolvent(kZ);
    const LVector x = rnd.lvector(kZ), y = rnd.lvector(kZ), z = rnd.lvector(kZ);
    CHECK(s_value(res, x, y, z) == -s_value(res, x, z, y));
    CHECK(s_value(res, x, y, y).is_zero());
  }

  TEST_CASE("pfaffian bracket") {
    const auto res = *build_example(1).cases[0].resolvent;
    const auto grid = grid_set(kZ);
    CHECK(pfaffian_bracket(res, grid[0], grid[4], grid[5]) ==
          Scalar(kZ, static_cast<long>(kPfaffianSign)) * s_value(res, grid[0], grid[4], grid[5]));
    const auto f2 = ScalarRing::prime_field(2);
    const auto g2 = grid_set(f2);
    CHECK_THROWS_AS(pfaffian_bracket(res.in(f2), g2[0], g2[1], g2[2]), Error);
  }

  TEST_CASE("constant terms do not depend on the auxiliary index") {
    const auto q = ring_from_resolvent(*build_example(1).cases[0].resolvent);
    for (std::size_t i = 1; i <= 4; ++i)
      for (std::size_t j = i; j <= 4; ++j) {
        const auto choices = constant_term_choices(q, i, j);
        CHECK(choices.size() >= 2);
        for (const auto& v : choices) CHECK(v == q.c(i, j, 0));
      }
  }
}

TEST_SUITE("fieldres") {
  TEST_CASE("constructed resolvents verify") {
    const auto q = build_example(1).cases[0].ring;
    for (const auto& ring : {kQ, ScalarRing::prime_field(5), ScalarRing::prime_field(7)}) {
      const auto res = construct_resolvent(q.in(ring));
      CHECK(res.t() == Scalar::one(ring));
      CHECK(verify_resolvent(res, q.in(ring)).pass);
    }
    RandomSource rnd(54);
    for (int rep = 0; rep < 5; ++rep) {
      const QuinticRing r = ring_from_resolvent(rnd.resolvent(kZ)).in(kQ);
      CHECK(verify_resolvent(construct_resolvent(r), r).pass);
    }
  }

  TEST_CASE("anchor tuple") {
    const auto q = build_example(1).cases[0].ring.in(kQ);
    const auto anchor = find_anchor_tuple(q);
    CHECK_FALSE(anchor.f0.is_zero());
    CHECK(anchor.f0 == F_form(q, anchor.a));
    const auto v = anchor_basis(anchor);
    // Each anchor vector is sent to its own basis element.
    for (std::size_t i = 0; i < 5; ++i) {
      const auto box = expected_box(q, anchor, v, anchor.a[i]);
      CHECK(box == v[i]);
    }
    const auto res = construct_resolvent(q, anchor);
    for (const auto& a : grid_set(kQ)) CHECK(box_square(res.phi_of(a)) == expected_box(q, anchor, v, a));
  }

  TEST_CASE("very degenerate algebras have no constructed resolvent") {
    CHECK_THROWS_AS(construct_resolvent(QuinticRing(kQ)), Error);
    CHECK_THROWS_AS(construct_resolvent(build_example(5).cases[0].ring.in(kQ)), Error);
  }
}
