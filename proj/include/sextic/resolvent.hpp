#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sextic/exterior.hpp"
#include "sextic/matrix.hpp"
#include "sextic/quintic_ring.hpp"

namespace sextic {

/// φ on the basis e1..e4 of L as four alternating 5×5 matrices over a basis
/// f1..f5 of M (entry (a,b) is the coefficient of f_a∧f_b), and θ(f_top) = t·e_top³.
class ResolventData {
 public:
  ResolventData(std::array<Matrix, 4> phi, Scalar t);

  const ScalarRing& ring() const { return t_.ring(); }
  const std::array<Matrix, 4>& phi() const { return phi_; }
  const Matrix& phi(std::size_t i) const { return phi_.at(i); }
  const Scalar& t() const { return t_; }

  /// Σ x_i A_i.
  Matrix phi_matrix(const LVector& x) const;
  ExtVector phi_of(const LVector& x) const;
  /// θ is an isomorphism.
  bool is_numerical() const { return t_.is_unit(); }

  ResolventData in(ScalarRing target) const;
  /// Same maps on the M-basis given by the rows of basis (old coordinates);
  /// result over ℚ, or over 𝔽_p for 𝔽_p input.
  ResolventData rebase(const Matrix& basis) const;

  bool operator==(const ResolventData& rhs) const;

 private:
  std::array<Matrix, 4> phi_;
  Scalar t_;
};

/// t²·μ(φ(x))(φ(y)^□, φ(z)^□).
Scalar s_value(const ResolventData& res, const LVector& x, const LVector& y, const LVector& z);

struct IdentityFailure {
  LVector x, y, z;
  Scalar lhs;  // s_value
  Scalar rhs;  // triple_wedge
};

struct VerificationReport {
  bool pass = false;
  std::size_t grid_checks = 0;
  std::size_t random_checks = 0;
  std::vector<IdentityFailure> failures;
};

/// s_value = triple_wedge for x ∈ {e_i}, y, z on the grid (400 checks) and
/// on 20 random triples drawn from seed.
VerificationReport verify_resolvent(const ResolventData& res, const QuinticRing& q,
                                    std::uint64_t seed = 0);

/// The quintic ring of a resolvent, in the gauge c12^1 = c12^2 = c34^3 = c34^4 = 0.
/// Throws InconsistentResolvent if the result is not associative or does not
/// verify.
QuinticRing ring_from_resolvent(const ResolventData& res);

/// Σ_r (c_jk^r c_ri^k − c_ij^r c_rk^k) for every k ≠ i; all equal for rings
/// coming from a resolvent.
std::vector<Scalar> constant_term_choices(const QuinticRing& q, std::size_t i, std::size_t j);

/// ½(Pf[Y X; X Z] + Pf[Y X; X −Z]) with X = φ(x), Y = φ(y), Z = φ(z).
/// Throws CharTwo over 𝔽₂.
Scalar pfaffian_bracket(const ResolventData& res, const LVector& x, const LVector& y, const LVector& z);

/// pfaffian_bracket = kPfaffianSign · s_value / t².
constexpr int kPfaffianSign = 1;

/// t⁴ · det(φ(a)^□, …, φ(e)^□), which equals F(a,…,e) for a resolvent.
Scalar box_determinant(const ResolventData& res, const std::array<LVector, 5>& args);

}  // namespace sextic
