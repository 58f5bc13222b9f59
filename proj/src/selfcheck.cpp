#include "sextic/selfcheck.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "sextic/degeneracy.hpp"
#include "sextic/errors.hpp"
#include "sextic/examples.hpp"
#include "sextic/field_resolvent.hpp"
#include "sextic/lattice_resolvent.hpp"

namespace sextic {

long RandomSource::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Scalar RandomSource::scalar(const ScalarRing& ring, long lo, long hi) { return Scalar(ring, integer(lo, hi)); }

Matrix RandomSource::skew(const ScalarRing& ring, std::size_t n, long lo, long hi) {
  Matrix m(ring, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      m(a, b) = scalar(ring, lo, hi);
      m(b, a) = -m(a, b);
    }
  }
  return m;
}

ExtVector RandomSource::ext(const ScalarRing& ring, std::size_t k, long lo, long hi) {
  ExtVector v(ring, 5, k);
  for (std::size_t p = 0; p < v.coeffs().size(); ++p) v.coeff(p) = scalar(ring, lo, hi);
  return v;
}

LVector RandomSource::lvector(const ScalarRing& ring, long lo, long hi) {
  LVector v;
  for (int i = 0; i < 4; ++i) v.push_back(scalar(ring, lo, hi));
  return v;
}

Matrix RandomSource::invertible(const ScalarRing& ring, std::size_t n) {
  if (ring.kind() == ScalarKind::Integer) {
    // Product of random elementary matrices and a sign flip.
    Matrix g = Matrix::identity(ring, n);
    for (int step = 0; step < 12; ++step) {
      const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      auto j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      const Scalar f = scalar(ring, -2, 2);
      for (std::size_t c = 0; c < n; ++c) g(i, c) += f * g(j, c);
    }
    if (integer(0, 1)) {
      for (std::size_t c = 0; c < n; ++c) g(0, c) = -g(0, c);
    }
    return g;
  }
  while (true) {
    Matrix g(ring, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) g(r, c) = scalar(ring, -5, 5);
    if (!determinant(g).is_zero()) return g;
  }
}

ResolventData RandomSource::resolvent(const ScalarRing& ring, long lo, long hi) {
  return ResolventData({skew(ring, 5, lo, hi), skew(ring, 5, lo, hi), skew(ring, 5, lo, hi), skew(ring, 5, lo, hi)},
                       Scalar::one(ring));
}

namespace {

const ScalarRing kZ = ScalarRing::integers();
const ScalarRing kQ = ScalarRing::rationals();

std::vector<ScalarRing> identity_rings() {
  return {kZ, ScalarRing::prime_field(2), ScalarRing::prime_field(3)};
}

std::string describe(const LVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.failures.size() < 20) result_.failures.push_back(what);
  }
  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

constexpr int kIdentityCases = 200;

SuiteResult suite_pfaffian(std::uint64_t seed) {
  Suite s("pfaffian_squared");
  RandomSource rnd(seed);
  for (const auto& ring : identity_rings()) {
    for (int n = 0; n < kIdentityCases; ++n) {
      const std::size_t size = 2 * static_cast<std::size_t>(1 + n % 4);
      const Matrix a = rnd.skew(ring, size);
      const Scalar pf = pfaffian(a);
      s.check(pf * pf == determinant(a), "Pf^2 != det over " + ring.name() + ": " + a.to_string());
    }
  }
  return s.take();
}

SuiteResult suite_polarization(std::uint64_t seed) {
  Suite s("box_polarization");
  RandomSource rnd(seed + 1);
  for (const auto& ring : identity_rings()) {
    for (int n = 0; n < kIdentityCases; ++n) {
      const ExtVector mu = rnd.ext(ring, 2);
      const ExtVector nu = rnd.ext(ring, 2);
      const ExtVector lhs = box_square(mu + nu) - box_square(mu) - box_square(nu);
      s.check(lhs == wedge(mu, nu), "polarization over " + ring.name() + " at " + mu.to_string());
      s.check(box_square(mu) + box_square(mu) == wedge(mu, mu), "2 box != wedge over " + ring.name());
    }
  }
  return s.take();
}

SuiteResult suite_basis_independence(std::uint64_t seed) {
  Suite s("box_basis_independence");
  RandomSource rnd(seed + 2);
  for (const auto& ring : identity_rings()) {
    for (int n = 0; n < kIdentityCases; ++n) {
      const Matrix g = rnd.invertible(ring, 5);
      const ExtVector mu = rnd.ext(ring, 2);
      s.check(box_square(exterior_power_apply(g, mu)) == exterior_power_apply(g, box_square(mu)),
              "box not equivariant over " + ring.name());
    }
  }
  return s.take();
}

SuiteResult suite_contraction(std::uint64_t seed) {
  Suite s("contraction_identities");
  RandomSource rnd(seed + 3);
  for (const auto& ring : identity_rings()) {
    for (int n = 0; n < kIdentityCases; ++n) {
      const ExtVector mu = rnd.ext(ring, 2);
      const ExtVector nu = rnd.ext(ring, 2);
      const ExtVector xi = rnd.ext(ring, 2);
      const ExtVector alpha = rnd.ext(ring, 4);
      const ExtVector box = box_square(mu);
      s.check(contract(mu, wedge(mu, nu), alpha) == -contract(nu, box, alpha), "contraction identity (a) over " + ring.name());
      s.check(contract(mu, box, alpha).is_zero(), "contraction identity (b) over " + ring.name());
      s.check(contract(nu, box, wedge(mu, xi)) == -contract(xi, box, wedge(mu, nu)), "contraction identity (c) over " + ring.name());
      s.check(contract(mu, alpha, box) == -contract(mu, box, alpha), "contract antisymmetry over " + ring.name());
    }
  }
  return s.take();
}

SuiteResult suite_box_expansion(std::uint64_t seed) {
  Suite s("box_determinant_expansion");
  RandomSource rnd(seed + 4);
  for (const auto& ring : identity_rings()) {
    for (int n = 0; n < kIdentityCases; ++n) {
      const ExtVector mu = rnd.ext(ring, 2);
      const ExtVector a = rnd.ext(ring, 4);
      const ExtVector b = rnd.ext(ring, 4);
      const ExtVector c = rnd.ext(ring, 4);
      const ExtVector d = rnd.ext(ring, 4);
      const Scalar lhs = det_in_wedge4({box_square(mu), a, b, c, d});
      const Scalar rhs = contract(mu, a, b) * contract(mu, c, d) + contract(mu, a, c) * contract(mu, d, b) +
                         contract(mu, a, d) * contract(mu, b, c);
      s.check(lhs == rhs, "box determinant expansion over " + ring.name());
    }
  }
  return s.take();
}

SuiteResult suite_random_resolvents(std::uint64_t seed) {
  Suite s("random_resolvent_rings");
  RandomSource rnd(seed + 5);
  for (int n = 0; n < 100; ++n) {
    const ResolventData res = rnd.resolvent(kZ);
    try {
      const QuinticRing q = ring_from_resolvent(res);
      s.check(check_associative(q).empty(), "case " + std::to_string(n) + ": not associative");
      const auto report = verify_resolvent(res, q, seed + static_cast<std::uint64_t>(n));
      s.check(report.pass, "case " + std::to_string(n) + ": identity fails");
      bool independent = true;
      for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = i; j <= 4; ++j) {
          const auto choices = constant_term_choices(q, i, j);
          for (const auto& v : choices) independent = independent && v == choices[0];
        }
      s.check(independent, "case " + std::to_string(n) + ": constant term depends on k");
    } catch (const Error& e) {
      s.check(false, "case " + std::to_string(n) + ": " + e.what());
    }
  }
  return s.take();
}

// Example resolvents with their rings: Example 1, Example 2 (p = 2, 3), Example 5.
std::vector<std::pair<std::string, ExampleCase>> prop_f_cases() {
  std::vector<std::pair<std::string, ExampleCase>> out;
  out.emplace_back("example 1", build_example(1).cases[0]);
  for (unsigned p : {2U, 3U}) out.emplace_back("example 2 p=" + std::to_string(p), build_example(2, p).cases[0]);
  for (const auto& c : build_example(5).cases) out.emplace_back("example 5 " + c.name, c);
  return out;
}

SuiteResult suite_prop_f(std::uint64_t seed) {
  Suite s("box_determinant_equals_F");
  RandomSource rnd(seed + 6);
  for (const auto& [name, ex] : prop_f_cases()) {
    const ResolventData res = ex.resolvent->in(kQ);
    const QuinticRing q = ex.ring.in(kQ);
    for (int n = 0; n < 50; ++n) {
      std::array<LVector, 5> args{rnd.lvector(kQ), rnd.lvector(kQ), rnd.lvector(kQ), rnd.lvector(kQ), rnd.lvector(kQ)};
      s.check(box_determinant(res, args) == F_form(q, args), name + ": t^4 det != F at " + describe(args[0]));
    }
  }
  return s.take();
}

SuiteResult suite_pfaffian_bracket(std::uint64_t seed) {
  Suite s("pfaffian_bracket_sign");
  RandomSource rnd(seed + 7);
  const Scalar sigma(kQ, static_cast<long>(kPfaffianSign));
  auto check = [&](const ResolventData& res, const std::string& name) {
    const LVector x = rnd.lvector(kQ);
    const LVector y = rnd.lvector(kQ);
    const LVector z = rnd.lvector(kQ);
    const Scalar expected = sigma * s_value(res, x, y, z) / (res.t() * res.t());
    s.check(pfaffian_bracket(res, x, y, z) == expected, name + ": bracket != sigma * s / t^2");
  };
  const ResolventData ex1 = build_example(1).cases[0].resolvent->in(kQ);
  const auto grid = grid_set(kQ);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < kGridSize; ++y)
      for (std::size_t z = 0; z < kGridSize; ++z)
        s.check(pfaffian_bracket(ex1, grid[x], grid[y], grid[z]) == sigma * s_value(ex1, grid[x], grid[y], grid[z]),
                "example 1 grid");
  for (const auto& c : build_example(5).cases) {
    const ResolventData res = c.resolvent->in(kQ);
    for (int n = 0; n < 20; ++n) check(res, "example 5 " + c.name);
  }
  for (int n = 0; n < 50; ++n) check(rnd.resolvent(kQ), "random " + std::to_string(n));
  return s.take();
}

ExampleStars random_stars(RandomSource& rnd) {
  ExampleStars stars;
  for (auto* family : {&stars.a18, &stars.a19})
    for (auto& m : *family)
      for (auto& v : m) v = rnd.integer(-5, 5);
  return stars;
}

SuiteResult suite_examples(std::uint64_t seed) {
  Suite s("example_resolvents");
  RandomSource rnd(seed + 8);
  {
    const auto ex = build_example(1);
    s.check(verify_resolvent(*ex.cases[0].resolvent, ex.cases[0].ring, seed).pass, "example 1 fails the identity");
  }
  for (unsigned p : {2U, 3U}) {
    const auto c = build_example(2, p).cases[0];
    s.check(verify_resolvent(*c.resolvent, c.ring.in(kQ), seed).pass, "example 2 reference fails the identity");
  }
  {
    const auto c = build_example(4, 2).cases[0];
    const ResolventData on_m = c.resolvent->rebase(lattice_matrix(*c.lattice));
    s.check(verify_resolvent(on_m, c.ring.in(kQ), seed).pass, "example 4 on M fails the identity");
  }
  for (int inst = 0; inst < 6; ++inst) {
    const ExampleStars stars = inst == 0 ? ExampleStars{} : random_stars(rnd);
    for (const auto& c : build_example(5, std::nullopt, stars).cases) {
      for (const auto& ring : {kQ, ScalarRing::prime_field(3)}) {
        s.check(verify_resolvent(c.resolvent->in(ring), c.ring.in(ring), seed).pass,
                "example 5 " + c.name + " over " + ring.name() + " instance " + std::to_string(inst));
      }
    }
  }
  return s.take();
}

SuiteResult suite_quintic(std::uint64_t seed) {
  Suite s("quintic_invariants");
  RandomSource rnd(seed + 9);
  std::vector<QuinticRing> rings{build_example(1).cases[0].ring, build_example(2, 2).cases[0].ring,
                                 build_example(3).cases[0].ring};
  for (int n = 0; n < 3; ++n) rings.push_back(ring_from_resolvent(rnd.resolvent(kZ)));
  for (const auto& q : rings) {
    for (int n = 0; n < 10; ++n) {
      const LVector x = rnd.lvector(kZ);
      const LVector y = rnd.lvector(kZ);
      const LVector z = rnd.lvector(kZ);
      // Changing the lifts of y and z by constants leaves x∧y∧z∧yz unchanged.
      Element ly = lift(y);
      Element lz = lift(z);
      ly[0] = rnd.scalar(kZ);
      lz[0] = rnd.scalar(kZ);
      const LVector yz = l_part(q.multiply(ly, lz));
      Matrix m(kZ, 4, 4);
      for (std::size_t c = 0; c < 4; ++c) {
        m(0, c) = x[c];
        m(1, c) = y[c];
        m(2, c) = z[c];
        m(3, c) = yz[c];
      }
      s.check(determinant(m) == triple_wedge(q, x, y, z), "triple_wedge depends on lifts");
      s.check(triple_wedge(q, x, y, z) == -triple_wedge(q, x, z, y), "triple_wedge not antisymmetric in y, z");
      // F is quadratic in every slot.
      std::array<LVector, 5> args{x, y, z, rnd.lvector(kZ), rnd.lvector(kZ)};
      const std::size_t slot = static_cast<std::size_t>(n % 5);
      const Scalar lambda = rnd.scalar(kZ, -3, 3);
      auto scaled = args;
      for (auto& v : scaled[slot]) v *= lambda;
      s.check(F_form(q, scaled) == lambda * lambda * F_form(q, args), "F not quadratic in slot");
      const LVector u = rnd.lvector(kZ);
      const LVector w = rnd.lvector(kZ);
      auto with = [&](const LVector& v) {
        auto a = args;
        a[slot] = v;
        return F_form(q, a);
      };
      LVector uw = u;
      for (std::size_t i = 0; i < 4; ++i) uw[i] += w[i];
      LVector u2w = uw;
      for (std::size_t i = 0; i < 4; ++i) u2w[i] += w[i];
      // B(u,w) = F(u+w) − F(u) − F(w) is bilinear: B(u, 2w) = 2 B(u, w).
      LVector w2 = w;
      for (auto& v : w2) v *= Scalar(kZ, 2L);
      const Scalar b1 = with(uw) - with(u) - with(w);
      const Scalar b2 = with(u2w) - with(u) - with(w2);
      s.check(b2 == Scalar(kZ, 2L) * b1, "polarization of F not bilinear");
    }
    // Grid vanishing agrees with vanishing at random points of a large field.
    const bool grid_zero = !first_nonzero_F(q).has_value();
    const QuinticRing big = q.in(ScalarRing::prime_field(1000003));
    bool random_zero = true;
    for (int n = 0; n < 20; ++n) {
      std::array<LVector, 5> args;
      for (auto& a : args) a = rnd.lvector(ScalarRing::prime_field(1000003), 0, 1000002);
      random_zero = random_zero && F_form(big, args).is_zero();
    }
    s.check(grid_zero == random_zero, "grid test disagrees with random evaluation");
  }
  return s.take();
}

SuiteResult suite_very_degenerate(std::uint64_t seed) {
  Suite s("very_degenerate_methods");
  RandomSource rnd(seed + 10);
  std::vector<QuinticRing> rings{build_example(1).cases[0].ring, build_example(2, 2).cases[0].ring,
                                 build_example(2, 3).cases[0].ring, build_example(3).cases[0].ring,
                                 build_example(4, 2).cases[0].ring, QuinticRing(kZ)};
  for (const auto& c : build_example(5).cases) rings.push_back(c.ring);
  for (int n = 0; n < 4; ++n) rings.push_back(ring_from_resolvent(rnd.resolvent(kZ, -1, 1)));
  for (const auto& q : rings) {
    for (unsigned p : {2U, 3U}) {
      const auto report = is_very_degenerate(q.in(ScalarRing::prime_field(p)));
      s.check(report.methods_agree, "methods disagree mod " + std::to_string(p) + " on " + q.to_string());
    }
  }
  return s.take();
}

SuiteResult suite_latres(std::uint64_t seed) {
  (void)seed;
  Suite s("resolvent_lattices");
  struct Case {
    std::string name;
    QuinticRing ring;
    std::optional<ResolventData> reference;
    std::size_t expected;
  };
  std::vector<Case> cases;
  cases.push_back({"example 1", build_example(1).cases[0].ring, std::nullopt, 1});
  for (unsigned p : {2U, 3U}) {
    const auto ex = build_example(2, p).cases[0];
    cases.push_back({"example 2 p=" + std::to_string(p), ex.ring, ex.resolvent, p + 1});
    cases.push_back({"example 2 p=" + std::to_string(p) + " constructed", ex.ring, std::nullopt, p + 1});
  }
  cases.push_back({"example 3", build_example(3).cases[0].ring, std::nullopt, 1});
  for (const auto& c : cases) {
    const BoundingLattice bl = c.reference ? compute_M0(c.ring, *c.reference) : compute_M0(c.ring);
    const Conductor cond = conductor(bl);
    s.check(cond.formulas_agree, c.name + ": conductor formulas disagree");
    const auto found = enumerate_numerical_resolvents(bl, cond);
    s.check(found.within_bound, c.name + ": count outside [1, bound]");
    s.check(found.numerical_count == c.expected, c.name + ": wrong number of numerical resolvents");
    const QuinticRing normalized = normalize_translation(c.ring);
    for (const auto& r : found.resolvents) {
      s.check(bl.m0.contains(r.reference_lattice), c.name + ": resolvent outside M0");
      s.check(r.index_in_m0 == cond.value, c.name + ": numerical index differs from the conductor");
      s.check(ring_from_resolvent(r.inherited.in(kZ)) == normalized, c.name + ": round trip changes the ring");
    }
  }
  return s.take();
}

const std::vector<std::pair<std::string, std::function<SuiteResult(std::uint64_t)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<SuiteResult(std::uint64_t)>>> suites{
      {"pfaffian_squared", suite_pfaffian},
      {"box_polarization", suite_polarization},
      {"box_basis_independence", suite_basis_independence},
      {"contraction_identities", suite_contraction},
      {"box_determinant_expansion", suite_box_expansion},
      {"quintic_invariants", suite_quintic},
      {"example_resolvents", suite_examples},
      {"random_resolvent_rings", suite_random_resolvents},
      {"box_determinant_equals_F", suite_prop_f},
      {"pfaffian_bracket_sign", suite_pfaffian_bracket},
      {"very_degenerate_methods", suite_very_degenerate},
      {"resolvent_lattices", suite_latres},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r = fn(seed);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw Error(ErrorCode::UnknownExample, "no suite named " + name);
}

std::vector<SuiteResult> run_selfcheck(std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, seed));
  return out;
}

}  // namespace sextic
