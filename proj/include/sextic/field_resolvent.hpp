#pragma once

#include <array>
#include <cstddef>

#include "sextic/exterior.hpp"
#include "sextic/quintic_ring.hpp"
#include "sextic/resolvent.hpp"

namespace sextic {

/// Five grid vectors with F(a1..a5) = f0 ≠ 0.
struct AnchorTuple {
  std::array<std::size_t, 5> grid_index;
  std::array<LVector, 5> a;
  Scalar f0;
};

/// First grid five-tuple in lexicographic order with F ≠ 0. Field scalars only.
/// Throws VeryDegenerate when F vanishes on the whole grid.
AnchorTuple find_anchor_tuple(const QuinticRing& q);

/// Σ_i F(a1,…,a,…,a5)/f0 · v_i (a in slot i): the value φ^□(a) must take.
ExtVector expected_box(const QuinticRing& q, const AnchorTuple& anchor, const std::array<ExtVector, 5>& v,
                       const LVector& a);

/// The Λ⁴M basis v1 = f0·ĝ1, v_i = ĝ_i used by construct_resolvent.
std::array<ExtVector, 5> anchor_basis(const AnchorTuple& anchor);

/// The resolvent of a not very degenerate algebra over a field, with t = 1.
/// Throws VeryDegenerate, SingularSystem or NotAResolvent.
ResolventData construct_resolvent(const QuinticRing& q);
ResolventData construct_resolvent(const QuinticRing& q, const AnchorTuple& anchor);

}  // namespace sextic
