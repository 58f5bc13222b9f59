#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sextic/lattice.hpp"
#include "sextic/quintic_ring.hpp"
#include "sextic/resolvent.hpp"

namespace sextic {

/// One (ring, resolvent) pair of an example.
struct ExampleCase {
  std::string name;
  QuinticRing ring;
  std::optional<ResolventData> resolvent;
  /// Lattice (coordinates of the resolvent) on which the resolvent lives, if not the whole space.
  std::optional<RationalLattice> lattice;
};

struct ExampleExpectations {
  std::optional<mpz_class> conductor;
  std::optional<std::size_t> numerical_count;
  std::optional<RationalLattice> m0;
  /// Reduction mod p is very degenerate.
  std::optional<bool> very_degenerate_mod_p;
};

/// Values of 0..3 above-diagonal star entries (rows 1..3, column 5) per matrix.
using StarValues = std::array<std::array<long, 3>, 4>;

struct ExampleStars {
  StarValues a18{};
  StarValues a19{};
};

struct ExampleSpec {
  int id = 0;
  std::optional<unsigned> p;
  std::vector<ExampleCase> cases;
  ExampleExpectations expected;
  /// Example 2 only: printed φ-values on the basis of M0, for the L-basis vectors.
  std::vector<Matrix> fixtures;
};

/// ids 1..5; p required for 2 and 4 (MissingPrime), UnknownExample otherwise.
ExampleSpec build_example(int id, std::optional<unsigned> p = std::nullopt, const ExampleStars& stars = {});

/// Example 1's φ on all five idempotents (index 0..4), over ℤ.
std::array<Matrix, 5> split_phi_all();

}  // namespace sextic
