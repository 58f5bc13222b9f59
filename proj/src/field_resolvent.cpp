#include "sextic/field_resolvent.hpp"

#include "sextic/errors.hpp"

namespace sextic {

AnchorTuple find_anchor_tuple(const QuinticRing& q) {
  if (!q.ring().is_field()) throw Error(ErrorCode::MixedRings, "find_anchor_tuple needs a field");
  const auto tuple = first_nonzero_F(q);
  if (!tuple) throw Error(ErrorCode::VeryDegenerate, "F vanishes on the grid; the algebra is very degenerate");
  const auto grid = grid_set(q.ring());
  AnchorTuple anchor{*tuple, {}, Scalar::zero(q.ring())};
  for (std::size_t i = 0; i < 5; ++i) anchor.a[i] = grid[(*tuple)[i]];
  anchor.f0 = F_form(q, anchor.a);
  return anchor;
}

std::array<ExtVector, 5> anchor_basis(const AnchorTuple& anchor) {
  const ScalarRing ring = anchor.f0.ring();
  std::array<ExtVector, 5> v{ExtVector(ring, 5, 4), ExtVector(ring, 5, 4), ExtVector(ring, 5, 4),
                             ExtVector(ring, 5, 4), ExtVector(ring, 5, 4)};
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<Scalar> cov(5, Scalar::zero(ring));
    cov[i] = (i == 0) ? anchor.f0 : Scalar::one(ring);
    v[i] = ExtVector::from_covector(cov);
  }
  return v;
}

ExtVector expected_box(const QuinticRing& q, const AnchorTuple& anchor, const std::array<ExtVector, 5>& v,
                       const LVector& a) {
  ExtVector out(q.ring(), 5, 4);
  for (std::size_t i = 0; i < 5; ++i) {
    auto args = anchor.a;
    args[i] = a;
    out += (F_form(q, args) / anchor.f0) * v[i];
  }
  return out;
}

ResolventData construct_resolvent(const QuinticRing& q) { return construct_resolvent(q, find_anchor_tuple(q)); }

ResolventData construct_resolvent(const QuinticRing& q, const AnchorTuple& anchor) {
  const ScalarRing ring = q.ring();
  const auto v = anchor_basis(anchor);
  const auto& pairs = subsets(5, 2);
  // Row (i,j): contract(μ, v_i, v_j) as a linear form in the 10 coordinates of μ.
  Matrix system(ring, 10, 10);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      const ExtVector unit = ExtVector::basis(ring, 5, pairs[c]);
      system(r, c) = contract(unit, v[pairs[r][0]], v[pairs[r][1]]);
    }
  }
  std::array<Matrix, 4> phi{Matrix(ring, 5, 5), Matrix(ring, 5, 5), Matrix(ring, 5, 5), Matrix(ring, 5, 5)};
  for (std::size_t m = 0; m < 4; ++m) {
    LVector em(4, Scalar::zero(ring));
    em[m] = Scalar::one(ring);
    std::vector<Scalar> rhs;
    for (const auto& pr : pairs) rhs.push_back(triple_wedge(q, em, anchor.a[pr[0]], anchor.a[pr[1]]));
    const auto mu = solve(system, rhs);
    ExtVector value(ring, 5, 2);
    for (std::size_t c = 0; c < pairs.size(); ++c) value.coeff(c) = mu[c];
    phi[m] = value.to_skew();
  }
  ResolventData res(std::move(phi), Scalar::one(ring));
  if (!verify_resolvent(res, q).pass)
    throw Error(ErrorCode::NotAResolvent, "constructed data fail the resolvent identity");
  return res;
}

}  // namespace sextic
