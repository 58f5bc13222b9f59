#include "doctest.h"
#include "oracles.hpp"
#include "sextic/errors.hpp"
#include "sextic/examples.hpp"
#include "sextic/quintic_ring.hpp"
#include "sextic/selfcheck.hpp"

using namespace sextic;

namespace {

const ScalarRing kZ = ScalarRing::integers();

// ℤ^⊕5 with idempotents E1..E5, basis (1, E1..E4), built from the product in
// idempotent coordinates.
QuinticRing split_by_hand() {
  QuinticRing q(kZ);
  for (std::size_t i = 1; i <= 4; ++i) q.set(i, i, i, 1L);
  return q;
}

mpq_class split_triple_wedge(const LVector& x, const LVector& y, const LVector& z) {
  oracle::Table t(4, std::vector<mpq_class>(4));
  for (std::size_t c = 0; c < 4; ++c) {
    t[0][c] = x[c].value();
    t[1][c] = y[c].value();
    t[2][c] = z[c].value();
    t[3][c] = y[c].value() * z[c].value();
  }
  return oracle::leibniz_det(t);
}

}  // namespace

TEST_SUITE("quintic") {
  TEST_CASE("multiplication in the split algebra") {
    const QuinticRing q = split_by_hand();
    CHECK(check_associative(q).empty());
    RandomSource rnd(41);
    for (int rep = 0; rep < 20; ++rep) {
      Element u{rnd.scalar(kZ), rnd.scalar(kZ), rnd.scalar(kZ), rnd.scalar(kZ), rnd.scalar(kZ)};
      Element v{rnd.scalar(kZ), rnd.scalar(kZ), rnd.scalar(kZ), rnd.scalar(kZ), rnd.scalar(kZ)};
      // Idempotent coordinates: c + x_i for i ≤ 4 and c for the fifth factor.
      auto coords = [](const Element& w) {
        std::vector<Scalar> out;
        for (std::size_t i = 1; i <= 4; ++i) out.push_back(w[0] + w[i]);
        out.push_back(w[0]);
        return out;
      };
      const auto cu = coords(u);
      const auto cv = coords(v);
      const auto cw = coords(q.multiply(u, v));
      for (std::size_t i = 0; i < 5; ++i) CHECK(cw[i] == cu[i] * cv[i]);
      CHECK(q.multiply(u, unit_element(kZ)) == u);
    }
  }

  TEST_CASE("triple wedge on the split algebra") {
    const QuinticRing q = split_by_hand();
    RandomSource rnd(42);
    for (int rep = 0; rep < 30; ++rep) {
      const LVector x = rnd.lvector(kZ), y = rnd.lvector(kZ), z = rnd.lvector(kZ);
      CHECK(triple_wedge(q, x, y, z).value() == split_triple_wedge(x, y, z));
    }
    CHECK(F_grid_gcd(q) == 1);
    CHECK(grid_set(kZ).size() == kGridSize);
  }

  TEST_CASE("associativity violations are reported") {
    QuinticRing q = split_by_hand();
    q.set(1, 2, 3, 1L);
    CHECK_FALSE(check_associative(q).empty());
  }

  TEST_CASE("discriminants of the example rings") {
    CHECK(discriminant(split_by_hand()) == Scalar::one(kZ));
    for (long p : {2L, 3L}) {
      // Index p³ in ℤ^⊕5.
      const auto q2 = build_example(2, static_cast<unsigned>(p)).cases[0].ring;
      CHECK(discriminant(q2) == Scalar(kZ, mpz_class(p * p * p * p * p * p)));
      // ℤ + p²ℤ^⊕5 has index p⁸.
      const auto q4 = build_example(4, static_cast<unsigned>(p)).cases[0].ring;
      mpz_class expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(p), 16);
      CHECK(discriminant(q4) == Scalar(kZ, expected));
    }
    CHECK(discriminant(build_example(3).cases[0].ring).is_zero());
  }

  TEST_CASE("translation normalization") {
    RandomSource rnd(43);
    const QuinticRing q = split_by_hand();
    for (int rep = 0; rep < 10; ++rep) {
      const std::vector<Scalar> shift{rnd.scalar(kZ), rnd.scalar(kZ), rnd.scalar(kZ), rnd.scalar(kZ)};
      const QuinticRing moved = translate(q, shift);
      CHECK(check_associative(moved).empty());
      CHECK(discriminant(moved) == discriminant(q));
      const QuinticRing n = normalize_translation(moved);
      CHECK(n.c(1, 2, 1).is_zero());
      CHECK(n.c(1, 2, 2).is_zero());
      CHECK(n.c(3, 4, 3).is_zero());
      CHECK(n.c(3, 4, 4).is_zero());
      CHECK(n == normalize_translation(q));
      // T is invariant under translation.
      const LVector x = rnd.lvector(kZ), y = rnd.lvector(kZ), z = rnd.lvector(kZ);
      CHECK(triple_wedge(moved, x, y, z) == triple_wedge(q, x, y, z));
    }
  }
}
