#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "sextic/quintic_ring.hpp"

namespace sextic {

/// Nested subspaces Q3 ⊂ Q4 of the algebra with Q4·Q3 = 0.
struct VeryDegenerateWitness {
  std::vector<Element> q3;  // 3 vectors
  std::vector<Element> q4;  // q3 followed by one more vector
};

struct VeryDegenerateReport {
  bool very_degenerate = false;
  /// From the subspace search.
  std::optional<VeryDegenerateWitness> witness;
  /// From the grid test: first five-tuple of grid indices with F ≠ 0.
  std::optional<std::array<std::size_t, 5>> nonzero_tuple;
  /// The two methods reach the same verdict.
  bool methods_agree = false;
};

/// Brute force over subspaces plus the grid test of F. Prime fields with
/// p ≤ 7 only (FieldTooLarge otherwise).
VeryDegenerateReport is_very_degenerate(const QuinticRing& q);

enum class VeryDegenerateType { A18, A19, A20 };
const char* to_string(VeryDegenerateType type);

struct Classification {
  VeryDegenerateType type;
  VeryDegenerateWitness witness;
  /// α² for the extra vector α of Q4.
  Element alpha_square;
};

/// Over 𝔽_p (p ≤ 7) or ℚ (ℤ input is tensored up). Throws NotVeryDegenerate.
Classification classify_very_degenerate(const QuinticRing& q);

struct IntegralClasses {
  std::size_t dimension = 0;
  /// Representatives v ∈ (ℤ/p)⁵ on (1, e1..e4) of a basis of the class space.
  std::vector<std::vector<long>> basis;
  /// Number of integral classes, equal to p^dimension.
  std::size_t count = 0;
};

/// Classes v + Q in p⁻¹Q/Q whose elements are integral over ℤ. Ring over ℤ, p ≤ 5.
IntegralClasses integral_class_dim(const QuinticRing& q, unsigned p);

}  // namespace sextic
