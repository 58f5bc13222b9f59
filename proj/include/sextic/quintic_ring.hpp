#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sextic/matrix.hpp"
#include "sextic/scalar.hpp"

namespace sextic {

/// Element of Q = R·1 ⊕ L in coordinates (1, e1, e2, e3, e4).
using Element = std::vector<Scalar>;
/// Element of L in coordinates (e1, e2, e3, e4).
using LVector = std::vector<Scalar>;

/// Rank 5 commutative ring with unit, given by structure constants
/// e_i e_j = c(i,j,0)·1 + Σ_k c(i,j,k) e_k for 1 ≤ i, j ≤ 4.
class QuinticRing {
 public:
  explicit QuinticRing(ScalarRing ring);

  const ScalarRing& ring() const { return ring_; }
  /// i, j in 1..4 (order irrelevant), k in 0..4.
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  void set(std::size_t i, std::size_t j, std::size_t k, long value);

  Element multiply(const Element& u, const Element& v) const;
  /// Matrix of multiplication by u on the basis (1, e1..e4), acting on columns.
  Matrix multiplication_matrix(const Element& u) const;

  QuinticRing in(ScalarRing target) const;
  bool operator==(const QuinticRing& rhs) const;
  std::string to_string() const;

 private:
  static std::size_t slot(std::size_t i, std::size_t j);
  ScalarRing ring_;
  // 10 unordered pairs × 5 coefficients.
  std::vector<Scalar> table_;
};

Element unit_element(const ScalarRing& ring);
Element basis_element(const ScalarRing& ring, std::size_t i);
/// L-vector lifted to Q with zero constant term.
Element lift(const LVector& x);
LVector l_part(const Element& u);

struct AssociativityViolation {
  std::size_t i, j, k;
};

/// Checks (e_i e_j) e_k = e_i (e_j e_k) for all 1 ≤ i, j, k ≤ 4; empty means associative.
std::vector<AssociativityViolation> check_associative(const QuinticRing& q);

/// The ten test vectors e1..e4, e1+e2, e1+e3, e1+e4, e2+e3, e2+e4, e3+e4.
std::vector<LVector> grid_set(const ScalarRing& ring);
constexpr std::size_t kGridSize = 10;

/// Coefficient of e_top in x∧y∧z∧(yz mod R).
Scalar triple_wedge(const QuinticRing& q, const LVector& x, const LVector& y, const LVector& z);

/// F(a,b,c,d,e) = T(a,b,c)T(a,d,e) + T(a,b,d)T(a,e,c) + T(a,b,e)T(a,c,d), T = triple_wedge.
Scalar F_form(const QuinticRing& q, const std::array<LVector, 5>& args);

/// triple_wedge on the grid, indexed [x][y][z].
class TripleWedgeTable {
 public:
  explicit TripleWedgeTable(const QuinticRing& q);
  const mpq_class& at(std::size_t x, std::size_t y, std::size_t z) const {
    return values_[(x * kGridSize + y) * kGridSize + z];
  }
  /// F on five grid indices, as an exact rational (residue products for 𝔽_p).
  mpq_class F(const std::array<std::size_t, 5>& g) const;
  const ScalarRing& ring() const { return ring_; }

 private:
  ScalarRing ring_;
  std::vector<mpq_class> values_;
};

/// First grid five-tuple (lexicographic) with F ≠ 0 in the scalar ring.
std::optional<std::array<std::size_t, 5>> first_nonzero_F(const QuinticRing& q);

/// gcd of all F values on the grid for a ring over ℤ (0 if F vanishes there).
mpz_class F_grid_gcd(const QuinticRing& q);

/// det of the trace form on (1, e1..e4); ℤ or ℚ.
Scalar discriminant(const QuinticRing& q);

/// Rebases to e_i' = e_i + shift_i·1.
QuinticRing translate(const QuinticRing& q, const std::vector<Scalar>& shift);
/// The unique translation with c12^1 = c12^2 = c34^3 = c34^4 = 0.
QuinticRing normalize_translation(const QuinticRing& q);

}  // namespace sextic
