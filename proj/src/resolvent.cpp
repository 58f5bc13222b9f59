#include "sextic/resolvent.hpp"

#include <algorithm>
#include <random>

#include "sextic/errors.hpp"

namespace sextic {

ResolventData::ResolventData(std::array<Matrix, 4> phi, Scalar t) : phi_(std::move(phi)), t_(std::move(t)) {
  for (const auto& a : phi_) {
    if (a.rows() != 5 || a.cols() != 5) throw Error(ErrorCode::DimensionMismatch, "phi matrices must be 5x5");
    if (!(a.ring() == t_.ring())) throw Error(ErrorCode::MixedRings, "phi and t");
    if (!a.is_alternating()) throw Error(ErrorCode::NonSkew, "phi matrix is not alternating");
  }
}

Matrix ResolventData::phi_matrix(const LVector& x) const {
  if (x.size() != 4) throw Error(ErrorCode::DimensionMismatch, "L vector");
  Matrix m(ring(), 5, 5);
  for (std::size_t i = 0; i < 4; ++i) {
    if (!x[i].is_zero()) m += phi_[i] * x[i];
  }
  return m;
}

ExtVector ResolventData::phi_of(const LVector& x) const { return ExtVector::from_skew(phi_matrix(x)); }

ResolventData ResolventData::in(ScalarRing target) const {
  return ResolventData({phi_[0].in(target), phi_[1].in(target), phi_[2].in(target), phi_[3].in(target)},
                       t_.in(target));
}

ResolventData ResolventData::rebase(const Matrix& basis) const {
  const Matrix c = inverse(basis);
  const ScalarRing f = c.ring();
  const Matrix ct = c.transpose();
  std::array<Matrix, 4> phi{Matrix(f, 5, 5), Matrix(f, 5, 5), Matrix(f, 5, 5), Matrix(f, 5, 5)};
  for (std::size_t i = 0; i < 4; ++i) phi[i] = ct * phi_[i].in(f) * c;
  return ResolventData(std::move(phi), determinant(basis.in(f)) * t_.in(f));
}

bool ResolventData::operator==(const ResolventData& rhs) const { return phi_ == rhs.phi_ && t_ == rhs.t_; }

Scalar s_value(const ResolventData& res, const LVector& x, const LVector& y, const LVector& z) {
  const Scalar c = contract(res.phi_of(x), box_square(res.phi_of(y)), box_square(res.phi_of(z)));
  return res.t() * res.t() * c;
}

VerificationReport verify_resolvent(const ResolventData& res, const QuinticRing& q, std::uint64_t seed) {
  if (!(res.ring() == q.ring())) throw Error(ErrorCode::MixedRings, "resolvent and ring");
  VerificationReport report;
  const auto grid = grid_set(q.ring());
  const Scalar t2 = res.t() * res.t();
  std::vector<ExtVector> phis;
  std::vector<ExtVector> boxes;
  for (const auto& g : grid) {
    phis.push_back(res.phi_of(g));
    boxes.push_back(box_square(phis.back()));
  }
  const TripleWedgeTable table(q);
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < kGridSize; ++y) {
      for (std::size_t z = 0; z < kGridSize; ++z) {
        ++report.grid_checks;
        const Scalar lhs = t2 * contract(phis[x], boxes[y], boxes[z]);
        const Scalar rhs(q.ring(), table.at(x, y, z));
        if (lhs != rhs) report.failures.push_back({grid[x], grid[y], grid[z], lhs, rhs});
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-5, 5);
  auto draw = [&] {
    LVector v;
    for (int i = 0; i < 4; ++i) v.emplace_back(q.ring(), dist(rng));
    return v;
  };
  for (int n = 0; n < 20; ++n) {
    const LVector x = draw();
    const LVector y = draw();
    const LVector z = draw();
    ++report.random_checks;
    const Scalar lhs = s_value(res, x, y, z);
    const Scalar rhs = triple_wedge(q, x, y, z);
    if (lhs != rhs) report.failures.push_back({x, y, z, lhs, rhs});
  }
  report.pass = report.failures.empty();
  return report;
}

namespace {

int perm_sign4(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return sort_sign({i, j, k, l});
}

LVector unit_l(const ScalarRing& ring, std::size_t i) {
  LVector v(4, Scalar::zero(ring));
  v.at(i - 1) = Scalar::one(ring);
  return v;
}

LVector add(const LVector& a, const LVector& b) {
  LVector v = a;
  for (std::size_t i = 0; i < 4; ++i) v[i] += b[i];
  return v;
}

std::size_t remaining(std::initializer_list<std::size_t> used) {
  for (std::size_t m = 1; m <= 4; ++m)
    if (std::find(used.begin(), used.end(), m) == used.end()) return m;
  return 0;
}

}  // namespace

std::vector<Scalar> constant_term_choices(const QuinticRing& q, std::size_t i, std::size_t j) {
  std::vector<Scalar> values;
  for (std::size_t k = 1; k <= 4; ++k) {
    if (k == i) continue;
    Scalar v = Scalar::zero(q.ring());
    for (std::size_t r = 1; r <= 4; ++r) v += q.c(j, k, r) * q.c(r, i, k) - q.c(i, j, r) * q.c(r, k, k);
    values.push_back(v);
  }
  return values;
}

QuinticRing ring_from_resolvent(const ResolventData& res) {
  const ScalarRing ring = res.ring();
  auto w = [&](const LVector& x, const LVector& y, const LVector& z) { return s_value(res, x, y, z); };
  auto e = [&](std::size_t i) { return unit_l(ring, i); };
  auto eps = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return Scalar(ring, static_cast<long>(perm_sign4(i, j, k, l)));
  };
  QuinticRing q(ring);

  // c_ij^k for distinct i, j, k.
  std::array<std::size_t, 4> perm{1, 2, 3, 4};
  do {
    const auto [i, j, k, l] = perm;
    if (i < j) q.set(i, j, k, -eps(i, j, k, l) * w(e(l), e(i), e(j)));
  } while (std::next_permutation(perm.begin(), perm.end()));

  // c_ii^j for j ≠ i.
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) {
      if (j == i) continue;
      const std::size_t k = remaining({i, j});
      const std::size_t l = remaining({i, j, k});
      q.set(i, i, j, eps(i, j, k, l) * w(e(l), e(i), add(e(i), e(k))) - q.c(i, k, j));
    }
  }

  // c_ik^k relative to the gauge c_{i,j0}^{j0} = 0.
  static constexpr std::size_t partner[5] = {0, 2, 1, 4, 3};
  for (std::size_t i = 1; i <= 4; ++i) {
    const std::size_t j0 = partner[i];
    q.set(i, j0, j0, 0L);
    for (std::size_t k = 1; k <= 4; ++k) {
      if (k == i || k == j0) continue;
      const std::size_t l = remaining({i, j0, k});
      q.set(i, k, k,
            q.c(i, j0, j0) - eps(i, j0, k, l) * w(e(l), e(i), add(e(j0), e(k))) + q.c(i, k, j0) -
                q.c(i, j0, k));
    }
  }

  // c_ii^i.
  for (std::size_t i = 1; i <= 4; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t m = 1; m <= 4; ++m)
      if (m != i) others.push_back(m);
    const std::size_t j = others[0];
    const std::size_t k = others[1];
    const std::size_t l = others[2];
    const Scalar wv = w(e(l), add(e(i), e(k)), add(e(i), e(j)));
    const Scalar rest = -q.c(j, k, i) + q.c(i, k, j) + q.c(i, j, k) + q.c(i, i, j) + q.c(i, i, k) +
                        (q.c(k, j, j) - q.c(k, i, i)) + (q.c(j, k, k) - q.c(j, i, i));
    q.set(i, i, i, q.c(i, j, j) + q.c(i, k, k) + eps(i, j, k, l) * wv + rest);
  }

  // Constant terms.
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = i; j <= 4; ++j) {
      const auto choices = constant_term_choices(q, i, j);
      for (const auto& v : choices) {
        if (v != choices[0])
          throw Error(ErrorCode::InconsistentResolvent,
                      "constant term c" + std::to_string(i) + std::to_string(j) + "^0 depends on the auxiliary index");
      }
      q.set(i, j, 0, choices[0]);
    }
  }

  const auto bad = check_associative(q);
  if (!bad.empty()) {
    throw Error(ErrorCode::InconsistentResolvent,
                "reconstructed ring is not associative at (" + std::to_string(bad[0].i) + "," +
                    std::to_string(bad[0].j) + "," + std::to_string(bad[0].k) + ")");
  }
  const auto report = verify_resolvent(res, q);
  if (!report.pass) throw Error(ErrorCode::InconsistentResolvent, "reconstructed ring does not satisfy the identity");
  return q;
}

Scalar pfaffian_bracket(const ResolventData& res, const LVector& x, const LVector& y, const LVector& z) {
  const ScalarRing ring = res.ring();
  if (ring.kind() == ScalarKind::PrimeField && ring.characteristic() == 2)
    throw Error(ErrorCode::CharTwo, "pfaffian_bracket divides by 2");
  const Matrix xm = res.phi_matrix(x);
  const Matrix ym = res.phi_matrix(y);
  const Matrix zm = res.phi_matrix(z);
  auto block = [&](const Matrix& lower) {
    Matrix b(ring, 10, 10);
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) {
        b(r, c) = ym(r, c);
        b(r, c + 5) = xm(r, c);
        b(r + 5, c) = xm(r, c);
        b(r + 5, c + 5) = lower(r, c);
      }
    }
    return b;
  };
  const Scalar sum = pfaffian(block(zm)) + pfaffian(block(-zm));
  if (ring.kind() == ScalarKind::Integer) {
    const mpz_class v = sum.as_integer();
    if (!mpz_even_p(v.get_mpz_t())) throw Error(ErrorCode::InconsistentResolvent, "Pfaffian sum is odd");
    return Scalar(ring, mpz_class(v / 2));
  }
  return sum / Scalar(ring, 2L);
}

Scalar box_determinant(const ResolventData& res, const std::array<LVector, 5>& args) {
  std::array<ExtVector, 5> boxes{box_square(res.phi_of(args[0])), box_square(res.phi_of(args[1])),
                                 box_square(res.phi_of(args[2])), box_square(res.phi_of(args[3])),
                                 box_square(res.phi_of(args[4]))};
  const Scalar t2 = res.t() * res.t();
  return t2 * t2 * det_in_wedge4(boxes);
}

}  // namespace sextic
