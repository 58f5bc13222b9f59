#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "sextic/matrix.hpp"
#include "sextic/scalar.hpp"

namespace sextic {

using IndexSet = std::vector<std::size_t>;

/// Sorted k-subsets of {0..n-1} in lexicographic order.
const std::vector<IndexSet>& subsets(std::size_t n, std::size_t k);
/// Position of a sorted subset in subsets(n, k).
std::size_t subset_position(std::size_t n, const IndexSet& s);
/// Parity of the permutation sorting seq (+1/-1), 0 if seq repeats an index.
int sort_sign(const std::vector<std::size_t>& seq);

/// Element of Λᵏ(Rⁿ), dense in the lexicographic subset basis. Indices are
/// 0-based: f_{i+1} in the usual notation is index i.
class ExtVector {
 public:
  ExtVector(ScalarRing ring, std::size_t n, std::size_t k);
  /// The generator f_S for a sorted subset S.
  static ExtVector basis(ScalarRing ring, std::size_t n, const IndexSet& s);
  /// Degree 1 vector from coordinates.
  static ExtVector vector(const std::vector<Scalar>& coords);
  /// Degree 2 element Σ_{a<b} A[a][b] f_a∧f_b from an alternating matrix.
  static ExtVector from_skew(const Matrix& a);
  /// Degree n-1 element whose covector (see covector()) is the given one.
  static ExtVector from_covector(const std::vector<Scalar>& cov);

  const ScalarRing& ring() const { return ring_; }
  std::size_t ambient() const { return n_; }
  std::size_t degree() const { return k_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar& coeff(std::size_t pos) { return coeffs_[pos]; }
  const Scalar& coeff(std::size_t pos) const { return coeffs_[pos]; }
  const Scalar& coeff(const IndexSet& s) const { return coeffs_[subset_position(n_, s)]; }

  /// Inverse of from_skew.
  Matrix to_skew() const;
  bool is_zero() const;
  ExtVector in(ScalarRing target) const;

  ExtVector& operator+=(const ExtVector& rhs);
  ExtVector& operator-=(const ExtVector& rhs);
  ExtVector& operator*=(const Scalar& s);
  friend ExtVector operator+(ExtVector a, const ExtVector& b) { return a += b; }
  friend ExtVector operator-(ExtVector a, const ExtVector& b) { return a -= b; }
  friend ExtVector operator*(const Scalar& s, ExtVector a) { return a *= s; }
  ExtVector operator-() const;

  bool operator==(const ExtVector& rhs) const;
  std::string to_string() const;

 private:
  void check_compatible(const ExtVector& rhs) const;

  ScalarRing ring_;
  std::size_t n_;
  std::size_t k_;
  std::vector<Scalar> coeffs_;
};

ExtVector wedge(const ExtVector& u, const ExtVector& v);

/// The quadratic map Λ² → Λ⁴ summing f_S∧f_T over pairs S < T of the
/// coordinate decomposition. 2·box_square(μ) = μ∧μ in every characteristic.
ExtVector box_square(const ExtVector& mu);

/// For α of degree n-1: â_m = coefficient of f_top in α∧f_m.
std::vector<Scalar> covector(const ExtVector& alpha);

/// μ(α,β) = Σ_{a<b} μ_ab (â_a b̂_b − â_b b̂_a), rank 5 only.
Scalar contract(const ExtVector& mu, const ExtVector& alpha, const ExtVector& beta);

/// Determinant of the covector matrix of five elements of Λ⁴ (rank 5).
Scalar det_in_wedge4(const std::array<ExtVector, 5>& w);

/// Λᵏg applied to v, where g acts on column vectors: g f_j = Σ_i g(i,j) f_i.
ExtVector exterior_power_apply(const Matrix& g, const ExtVector& v);

}  // namespace sextic
