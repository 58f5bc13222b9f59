#include "sextic/examples.hpp"

#include "sextic/errors.hpp"

namespace sextic {

namespace {

const ScalarRing kZ = ScalarRing::integers();
const ScalarRing kQ = ScalarRing::rationals();

// u∧v as an alternating matrix.
Matrix wedge_matrix(const std::vector<long>& u, const std::vector<long>& v) {
  Matrix m(kZ, 5, 5);
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) m(a, b) = Scalar(kZ, u[a] * v[b] - u[b] * v[a]);
  return m;
}

std::vector<long> unit(std::size_t i) {
  std::vector<long> v(5, 0);
  v[i % 5] = 1;
  return v;
}

std::vector<long> add(std::vector<long> a, const std::vector<long>& b, long s = 1) {
  for (std::size_t i = 0; i < 5; ++i) a[i] += s * b[i];
  return a;
}

Matrix skew_from_upper(ScalarRing ring, const std::vector<std::pair<std::pair<std::size_t, std::size_t>, long>>& entries) {
  Matrix m(ring, 5, 5);
  for (const auto& [pos, v] : entries) {
    m(pos.first, pos.second) += Scalar(ring, v);
    m(pos.second, pos.first) -= Scalar(ring, v);
  }
  return m;
}

QuinticRing diagonal_ring(const std::array<long, 4>& squares) {
  QuinticRing q(kZ);
  for (std::size_t i = 1; i <= 4; ++i) q.set(i, i, i, squares[i - 1]);
  return q;
}

ResolventData split_resolvent() {
  const auto all = split_phi_all();
  return ResolventData({all[0], all[1], all[2], all[3]}, Scalar::one(kZ));
}

mpz_class pow_int(long p, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), e);
  return r;
}

ExampleSpec example1() {
  ExampleSpec spec;
  spec.id = 1;
  spec.cases.push_back({"split", diagonal_ring({1, 1, 1, 1}), split_resolvent(), std::nullopt});
  spec.expected.conductor = 1;
  spec.expected.numerical_count = 1;
  spec.expected.m0 = RationalLattice::from_integer(IntegerLattice::standard(5));
  return spec;
}

ExampleSpec example2(long p) {
  ExampleSpec spec;
  spec.id = 2;
  spec.p = static_cast<unsigned>(p);
  // L = ⟨pe1, pe2, pe3, e5⟩ with e5 = −(e1 + e2 + e3 + e4) modulo 1.
  const QuinticRing ring = diagonal_ring({p, p, p, 1});
  const long rows[4][4] = {{p, 0, 0, 0}, {0, p, 0, 0}, {0, 0, p, 0}, {-1, -1, -1, -1}};
  const mpq_class det_l = -p * p * p;
  const auto split = split_phi_all();
  std::array<Matrix, 4> phi{Matrix(kQ, 5, 5), Matrix(kQ, 5, 5), Matrix(kQ, 5, 5), Matrix(kQ, 5, 5)};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t m = 0; m < 4; ++m) phi[i] += split[m].in(kQ) * Scalar(kQ, rows[i][m]);
    phi[i] *= Scalar(kQ, det_l);
  }
  const mpq_class t = 1 / (det_l * det_l * det_l);
  spec.cases.push_back({"subring", ring, ResolventData(std::move(phi), Scalar(kQ, t)), std::nullopt});
  spec.expected.conductor = p;
  spec.expected.numerical_count = static_cast<std::size_t>(p + 1);
  spec.expected.very_degenerate_mod_p = true;
  const long p2 = p * p;
  spec.expected.m0 = RationalLattice::from_integer(IntegerLattice::from_generators(
      {{p, 0, 0, p, 0}, {0, p2, 0, 0, 0}, {0, 0, p2, 0, 0}, {0, 0, 0, p2, 0}, {0, 0, 0, 0, p}}, 5));
  // Printed values in the basis f1'..f5' of M0 (index 0..4).
  auto f = [](std::size_t i) { return unit(i); };
  spec.fixtures.push_back(wedge_matrix(add(add({0, 0, 0, 0, 0}, f(0), p), f(3), -1), add(add({0, 0, 0, 0, 0}, f(4), p), f(1))));
  spec.fixtures.push_back(wedge_matrix(f(1), add(add(add({0, 0, 0, 0, 0}, f(0), p), f(3), -1), f(2))));
  spec.fixtures.push_back(wedge_matrix(f(2), add(f(1), f(3))));
  spec.fixtures.push_back(wedge_matrix(f(4), add({0, 0, 0, 0, 0}, f(0), p)));
  return spec;
}

ExampleSpec example3() {
  ExampleSpec spec;
  spec.id = 3;
  spec.cases.push_back({"two_directions", diagonal_ring({1, 1, 0, 0}), std::nullopt, std::nullopt});
  spec.expected.conductor = 1;
  spec.expected.numerical_count = 1;
  return spec;
}

ExampleSpec example4(long p) {
  ExampleSpec spec;
  spec.id = 4;
  spec.p = static_cast<unsigned>(p);
  const long p2 = p * p;
  const QuinticRing ring = diagonal_ring({p2, p2, p2, p2});
  // L = p²L1, so e_top^L = p⁸ e_top and φ = p¹⁰ φ1, t = p⁻²⁴.
  const auto split = split_phi_all();
  const Scalar scale(kQ, mpq_class(pow_int(p, 10)));
  std::array<Matrix, 4> phi{split[0].in(kQ) * scale, split[1].in(kQ) * scale, split[2].in(kQ) * scale,
                            split[3].in(kQ) * scale};
  const Scalar t(kQ, mpq_class(mpz_class(1), pow_int(p, 24)));
  std::vector<IntVector> m;
  for (std::size_t i = 0; i < 5; ++i) {
    IntVector row(5, 0);
    row[i] = pow_int(p, 5);
    m.push_back(row);
  }
  spec.cases.push_back({"scaled", ring, ResolventData(std::move(phi), t),
                        RationalLattice::from_integer(IntegerLattice::from_generators(m, 5))});
  spec.expected.conductor = pow_int(p, 4);
  return spec;
}

Matrix with_stars(std::vector<std::pair<std::pair<std::size_t, std::size_t>, long>> entries,
                  const std::array<long, 3>& stars) {
  for (std::size_t r = 0; r < 3; ++r) entries.push_back({{r, 4}, stars[r]});
  return skew_from_upper(kZ, entries);
}

ExampleSpec example5(const ExampleStars& stars) {
  ExampleSpec spec;
  spec.id = 5;
  {
    // α² = −α: the first basis vector is minus an idempotent.
    QuinticRing ring(kZ);
    ring.set(1, 1, 1, -1L);
    std::array<Matrix, 4> phi{with_stars({{{3, 4}, 1}}, stars.a18[0]), with_stars({{{1, 2}, 1}}, stars.a18[1]),
                              with_stars({{{0, 2}, -1}}, stars.a18[2]), with_stars({{{0, 1}, 1}}, stars.a18[3])};
    spec.cases.push_back({"A18", ring, ResolventData(std::move(phi), Scalar::one(kZ)), std::nullopt});
  }
  {
    // α² = β.
    QuinticRing ring(kZ);
    ring.set(1, 1, 2, 1L);
    std::array<Matrix, 4> phi{with_stars({{{3, 4}, 1}, {{1, 2}, 1}}, stars.a19[0]), with_stars({}, stars.a19[1]),
                              with_stars({{{0, 2}, -1}}, stars.a19[2]), with_stars({{{0, 1}, 1}}, stars.a19[3])};
    spec.cases.push_back({"A19", ring, ResolventData(std::move(phi), Scalar::one(kZ)), std::nullopt});
  }
  return spec;
}

long require_prime(int id, std::optional<unsigned> p) {
  if (!p) throw Error(ErrorCode::MissingPrime, "example " + std::to_string(id) + " needs --p");
  if (!is_prime(*p)) throw Error(ErrorCode::MissingPrime, "example " + std::to_string(id) + " needs a prime p");
  if (*p > 97) throw Error(ErrorCode::PrimeTooLarge, "example primes are limited to p <= 97");
  return static_cast<long>(*p);
}

}  // namespace

std::array<Matrix, 5> split_phi_all() {
  std::array<Matrix, 5> out{Matrix(kZ, 5, 5), Matrix(kZ, 5, 5), Matrix(kZ, 5, 5), Matrix(kZ, 5, 5),
                            Matrix(kZ, 5, 5)};
  Matrix total(kZ, 5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    out[i] = wedge_matrix(unit(i), add(unit(i + 4), unit(i + 1)));
    total += out[i];
  }
  if (!total.is_zero()) throw Error(ErrorCode::InconsistentResolvent, "split example: images do not sum to zero");
  return out;
}

ExampleSpec build_example(int id, std::optional<unsigned> p, const ExampleStars& stars) {
  switch (id) {
    case 1: return example1();
    case 2: return example2(require_prime(id, p));
    case 3: return example3();
    case 4: return example4(require_prime(id, p));
    case 5: return example5(stars);
    default: throw Error(ErrorCode::UnknownExample, "no example " + std::to_string(id) + " (valid: 1..5)");
  }
}

}  // namespace sextic
