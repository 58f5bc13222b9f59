#include "doctest.h"
#include "oracles.hpp"
#include "sextic/errors.hpp"
#include "sextic/lattice.hpp"
#include "sextic/selfcheck.hpp"

using namespace sextic;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Membership in the span of square generators, by Cramer's rule.
bool cramer_member(const std::vector<IntVector>& gens, const IntVector& v) {
  const std::size_t n = gens.size();
  oracle::Table g(n, std::vector<mpq_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g[r][c] = gens[r][c];
  const mpq_class d = oracle::leibniz_det(g);
  for (std::size_t r = 0; r < n; ++r) {
    auto h = g;
    for (std::size_t c = 0; c < n; ++c) h[r][c] = v[c];
    const mpq_class coeff = oracle::leibniz_det(h) / d;
    if (coeff.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("index agrees with coset enumeration") {
    const std::vector<IntVector> gens{iv({2, 1, 0}), iv({0, 3, 1}), iv({1, 0, 2})};
    const auto lat = IntegerLattice::from_generators(gens, 3);
    const long d = lat.index().get_si();
    REQUIRE(d > 0);
    long count = 0;
    for (long a = 0; a < d; ++a)
      for (long b = 0; b < d; ++b)
        for (long c = 0; c < d; ++c) {
          const IntVector v = iv({a, b, c});
          const bool member = cramer_member(gens, v);
          CHECK(lat.contains(v) == member);
          count += member;
        }
    CHECK(d * d * d / count == d);
    CHECK(d == 13);
  }

  TEST_CASE("HNF is canonical") {
    const auto a = IntegerLattice::from_generators({iv({2, 0}), iv({0, 2}), iv({1, 1})}, 2);
    const auto b = IntegerLattice::from_generators({iv({1, 1}), iv({1, -1})}, 2);
    CHECK(a == b);
    CHECK(a.index() == 2);
    CHECK(a.basis() == std::vector<IntVector>{iv({1, 1}), iv({0, 2})});
    CHECK_THROWS_AS(IntegerLattice::from_generators({iv({1, 2}), iv({2, 4})}, 2), Error);
  }

  TEST_CASE("dual, sum and intersection") {
    RandomSource rnd(21);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<IntVector> ga, gb;
      for (int r = 0; r < 4; ++r) {
        IntVector x, y;
        for (int c = 0; c < 4; ++c) {
          x.emplace_back(rnd.integer(-4, 4) + (r == c ? 9 : 0));
          y.emplace_back(rnd.integer(-4, 4) + (r == c ? 7 : 0));
        }
        ga.push_back(x);
        gb.push_back(y);
      }
      const auto a = IntegerLattice::from_generators(ga, 4);
      const auto b = IntegerLattice::from_generators(gb, 4);
      // Pairing of a with its dual is integral, and the dual of the dual is a.
      const auto da = a.dual();
      for (const auto& x : a.basis())
        for (const auto& y : da.basis()) {
          mpq_class s = 0;
          for (std::size_t i = 0; i < 4; ++i) s += mpq_class(x[i]) * y[i];
          CHECK(s.get_den() == 1);
        }
      CHECK(da.dual().as_integer() == a);
      CHECK(da.determinant() * mpq_class(a.index()) == 1);
      const auto s = a.sum(b);
      const auto i = a.intersection(b);
      CHECK(s.contains(a));
      CHECK(s.contains(b));
      CHECK(a.contains(i));
      CHECK(b.contains(i));
      // [s : a] = [b : i].
      CHECK(a.index() * b.index() == s.index() * i.index());
    }
  }

  TEST_CASE("rational lattices") {
    const auto r = RationalLattice::from_generators({{mpq_class(1, 2), 0}, {0, mpq_class(3, 4)}}, 2);
    CHECK(r.denominator() == 4);
    CHECK(r.determinant() == mpq_class(3, 8));
    CHECK(r.contains(RatVector{mpq_class(3, 2), mpq_class(-3, 2)}));
    CHECK_FALSE(r.contains(RatVector{mpq_class(1, 4), 0}));
    const auto sub = RationalLattice::from_generators({{1, 0}, {0, mpq_class(3, 2)}}, 2);
    CHECK(r.index_of(sub) == 4);
    CHECK(r.scaled_by(2).determinant() == mpq_class(3, 2));
    CHECK(rational_determinant({{1, 2}, {3, 4}}) == -2);
  }
}
