#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sextic/lattice.hpp"
#include "sextic/quintic_ring.hpp"
#include "sextic/resolvent.hpp"

namespace sextic {

/// The bounding lattice M0 inside M_K = ℚ⁵ (coordinates of the reference
/// resolvent) and the resolvent maps re-expressed on its HNF basis.
struct BoundingLattice {
  QuinticRing ring;           // over ℤ
  ResolventData reference;    // over ℚ
  RationalLattice m0;         // reference coordinates
  ResolventData at_m0;        // over ℚ, φ integral
};

/// Uses the resolvent of Q⊗ℚ built by construct_resolvent. Throws VeryDegenerate.
BoundingLattice compute_M0(const QuinticRing& q);
/// Uses a given resolvent of Q⊗ℚ (checked with verify_resolvent).
BoundingLattice compute_M0(const QuinticRing& q, const ResolventData& reference);

struct Conductor {
  mpz_class value;
  std::vector<std::pair<mpz_class, unsigned>> factorization;
  mpz_class from_theta;  // [Λ⁵M0 : θ⁻¹((Λ⁴L)^⊗3)]
  mpz_class from_F;      // gcd of F on the grid
  bool formulas_agree = false;
};

Conductor conductor(const BoundingLattice& bl);

/// Trial-division factorization of a positive integer.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

struct ResolventStatus {
  IntegerLattice lattice;  // M0 coordinates
  RationalLattice reference_lattice;
  mpz_class index_in_m0;
  bool phi_ok = false;
  bool theta_ok = false;
  bool is_resolvent = false;
  bool is_numerical = false;
  /// t on the HNF basis of the lattice.
  mpq_class t;
  /// |t| when theta_ok.
  mpz_class theta_index;
  /// gcd of the entries of the inherited φ (meaningful when phi_ok).
  mpz_class phi_content;
  ResolventData inherited;
};

/// Lattice given in M0 coordinates.
ResolventStatus resolvent_status(const BoundingLattice& bl, const IntegerLattice& lattice);
/// Lattice given in reference coordinates; NotInsideM0 unless it lies in M0.
ResolventStatus resolvent_status(const BoundingLattice& bl, const RationalLattice& lattice);

/// Basis of {ℓ ∈ 𝔽_p⁵ : ℓᵀ A_i ≡ 0 for all i}, A_i the (integral) φ matrices.
std::vector<std::vector<long>> common_kernel_mod_p(const ResolventData& data, long p);

/// ∏ ((p⁵−1)/(p−1))ⁿ over pⁿ ∥ c.
mpz_class numerical_count_bound(const Conductor& c);

struct EnumerationResult {
  std::vector<ResolventStatus> resolvents;  // sorted by HNF
  bool partial = false;
  /// Largest index [M0:M] the search could reach.
  mpz_class index_bound;
  std::size_t visited = 0;
  mpz_class count_bound;
  std::size_t numerical_count = 0;
  bool within_bound = false;
};

/// Chains of index-p kernels for each pⁿ ∥ c, glued across primes. Needs
/// p ≤ 7 and n ≤ 3 (SearchBudgetExceeded otherwise).
EnumerationResult enumerate_numerical_resolvents(const BoundingLattice& bl, const Conductor& c);

/// All resolvents with [M0:M]⁴ dividing the index of ⟨φ(g)^□⟩ in Λ⁴M0, optionally
/// capped by index_cap, plus every supplied candidate (reference coordinates)
/// that passes resolvent_status.
EnumerationResult enumerate_all_resolvents(const BoundingLattice& bl, const Conductor& c,
                                           std::optional<mpz_class> index_cap = std::nullopt,
                                           const std::vector<RationalLattice>& candidates = {});

struct StrongMaximalReport {
  struct PrimeEntry {
    unsigned p;
    std::size_t dimension;
    bool holds;
  };
  std::vector<PrimeEntry> primes;
  bool covers_conductor = false;
  bool predicts_unique = false;
  std::optional<std::size_t> numerical_count;
  bool confirmed = false;
};

StrongMaximalReport check_strong_maximal_hypothesis(const QuinticRing& q, const std::vector<unsigned>& primes);

/// Helpers between exact matrices and lattice rows.
Matrix lattice_matrix(const RationalLattice& lattice);
Matrix lattice_matrix(const IntegerLattice& lattice);

}  // namespace sextic
