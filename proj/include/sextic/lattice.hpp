#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sextic {

using IntVector = std::vector<mpz_class>;
using RatVector = std::vector<mpq_class>;

class RationalLattice;

/// Full-rank sublattice of ℤⁿ stored as its row-style Hermite normal form:
/// upper triangular, positive pivots, entries above each pivot reduced into
/// [0, pivot). Equal lattices have identical bases.
class IntegerLattice {
 public:
  /// Throws RankDeficient unless the generators span a rank-n lattice.
  static IntegerLattice from_generators(const std::vector<IntVector>& generators, std::size_t n);
  static IntegerLattice standard(std::size_t n);

  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  /// [ℤⁿ : L] = |det B|.
  mpz_class index() const;
  bool contains(const IntVector& v) const;
  bool contains(const IntegerLattice& other) const;
  /// Coordinates of v in the HNF basis, if v ∈ L.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  /// {x ∈ ℚⁿ : x·b ∈ ℤ for all b ∈ L}.
  RationalLattice dual() const;

  IntegerLattice sum(const IntegerLattice& other) const;
  IntegerLattice intersection(const IntegerLattice& other) const;

  bool operator==(const IntegerLattice&) const = default;
  /// Orders by the HNF entries; used for canonical sorting.
  bool operator<(const IntegerLattice& rhs) const { return basis_ < rhs.basis_; }

  std::string to_string() const;

 private:
  explicit IntegerLattice(std::vector<IntVector> basis) : basis_(std::move(basis)) {}
  std::vector<IntVector> basis_;
};

/// Full-rank lattice in ℚⁿ, kept as (1/denominator)·HNF with the smallest
/// positive denominator.
class RationalLattice {
 public:
  static RationalLattice from_generators(const std::vector<RatVector>& generators, std::size_t n);
  static RationalLattice from_integer(const IntegerLattice& lattice);

  std::size_t rank() const { return scaled_.rank(); }
  const mpz_class& denominator() const { return denominator_; }
  const IntegerLattice& scaled() const { return scaled_; }
  std::vector<RatVector> basis() const;

  /// Signed determinant of the basis matrix.
  mpq_class determinant() const;
  bool is_integral() const { return denominator_ == 1; }
  IntegerLattice as_integer() const;

  bool contains(const RatVector& v) const;
  bool contains(const RationalLattice& other) const;
  std::optional<IntVector> coordinates(const RatVector& v) const;
  /// [this : sub] for sub ⊆ this.
  mpz_class index_of(const RationalLattice& sub) const;

  RationalLattice dual() const;
  RationalLattice sum(const RationalLattice& other) const;
  RationalLattice intersection(const RationalLattice& other) const;
  RationalLattice scaled_by(const mpq_class& s) const;

  bool operator==(const RationalLattice&) const = default;
  bool operator<(const RationalLattice& rhs) const;

  std::string to_string() const;

 private:
  RationalLattice(mpz_class denominator, IntegerLattice scaled)
      : denominator_(std::move(denominator)), scaled_(std::move(scaled)) {}
  mpz_class denominator_;
  IntegerLattice scaled_;
};

/// Inverse of a nonsingular rational square matrix.
std::vector<RatVector> rational_inverse(const std::vector<RatVector>& m);
mpq_class rational_determinant(const std::vector<RatVector>& m);

}  // namespace sextic
