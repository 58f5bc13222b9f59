// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "sextic/errors.hpp"
#include "sextic/examples.hpp"
#include "sextic/lattice_resolvent.hpp"
#include "sextic/selfcheck.hpp"

using namespace sextic;

namespace {

const ScalarRing kZ = ScalarRing::integers();
const ScalarRing kQ = ScalarRing::rationals();
constexpr std::uint64_t kSeed = 0;

struct Criterion {
  int id;
  std::string what;
  double limit_seconds;
  std::function<std::string()> check;  // empty string means pass
};

std::string suites(std::initializer_list<const char*> names) {
  for (const char* name : names) {
    const SuiteResult r = run_suite(name, kSeed);
    if (!r.passed()) return r.name + ": " + (r.failures.empty() ? "no cases" : r.failures.front());
  }
  return {};
}

std::string example1_verifies() {
  const auto c = build_example(1).cases[0];
  const auto report = verify_resolvent(*c.resolvent, c.ring, kSeed);
  if (report.grid_checks != 400) return "grid has " + std::to_string(report.grid_checks) + " points";
  return report.pass ? "" : std::to_string(report.failures.size()) + " identity failures";
}

std::string example1_round_trip() {
  // ℤ^⊕5 on (1, E1..E4): E_i² = E_i, all other products zero.
  QuinticRing expected(kZ);
  for (std::size_t i = 1; i <= 4; ++i) expected.set(i, i, i, 1L);
  const auto got = ring_from_resolvent(*build_example(1).cases[0].resolvent);
  return got == normalize_translation(expected) ? "" : "recovered " + got.to_string();
}

std::string example2() {
  for (unsigned p : {2U, 3U}) {
    const std::string at = " at p = " + std::to_string(p);
    const auto cs = build_example(2, p).cases[0];
    const auto bl = compute_M0(cs.ring, *cs.resolvent);
    const auto c = conductor(bl);
    if (c.value != p || !c.formulas_agree) return "conductor " + c.value.get_str() + at;
    const auto kernel = common_kernel_mod_p(bl.at_m0, p);
    if (kernel.size() != 2) return "admissible functionals have dimension " + std::to_string(kernel.size()) + at;
    for (const auto& l : kernel)
      if (l[1] != 0 || l[2] != 0 || l[3] != 0) return "admissible functional outside the expected span" + at;
    const auto found = enumerate_numerical_resolvents(bl, c);
    if (found.resolvents.size() != p + 1) return std::to_string(found.resolvents.size()) + " numerical" + at;
    const auto all = enumerate_all_resolvents(bl, c);
    if (all.partial) return "search incomplete" + at;
    for (const auto& r : all.resolvents)
      if (!r.is_numerical) return "non-numerical resolvent" + at;
  }
  return {};
}

std::string example4() {
  const auto cs = build_example(4, 2).cases[0];
  const auto bl = compute_M0(cs.ring, *cs.resolvent);
  const auto s = resolvent_status(bl, *cs.lattice);
  if (!s.phi_ok || s.phi_content != 1) return "phi image is not all of the second exterior power";
  if (!s.theta_ok || s.theta_index != 2) return "theta index " + s.theta_index.get_str();
  if (s.is_numerical) return "flagged numerical";
  return {};
}

std::string example5() {
  RandomSource rnd(kSeed);
  for (int inst = 0; inst < 6; ++inst) {
    ExampleStars stars;
    if (inst > 0) {
      for (auto* family : {&stars.a18, &stars.a19})
        for (auto& m : *family)
          for (auto& v : m) v = rnd.integer(-5, 5);
    }
    for (const auto& c : build_example(5, std::nullopt, stars).cases) {
      for (const auto& ring : {kQ, ScalarRing::prime_field(3)}) {
        if (!verify_resolvent(c.resolvent->in(ring), c.ring.in(ring), kSeed).pass)
          return c.name + " over " + ring.name() + ", instance " + std::to_string(inst);
      }
    }
  }
  return {};
}

std::string strong_maximal() {
  const auto r3 = check_strong_maximal_hypothesis(build_example(3).cases[0].ring, {2, 3});
  for (const auto& e : r3.primes)
    if (e.dimension != 2) return "example 3 dimension " + std::to_string(e.dimension) + " at " + std::to_string(e.p);
  if (r3.numerical_count != std::optional<std::size_t>(1)) return "example 3 enumeration count differs from 1";
  for (const auto& e : check_strong_maximal_hypothesis(build_example(1).cases[0].ring, {2, 3}).primes)
    if (e.dimension != 0) return "split algebra dimension " + std::to_string(e.dimension);
  const auto r4 = check_strong_maximal_hypothesis(build_example(4, 2).cases[0].ring, {2});
  if (r4.primes.empty() || r4.primes[0].dimension != 4) return "example 4 dimension differs from 4";
  return {};
}

std::string counting_bound() {
  const auto bl = compute_M0(build_example(2, 2).cases[0].ring);
  const auto c = conductor(bl);
  const auto found = enumerate_numerical_resolvents(bl, c);
  if (found.count_bound != 31 || found.numerical_count != 3 || !found.within_bound) return "example 2 at p = 2";
  return suites({"resolvent_lattices"});
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "split example passes the 400-point grid", 1, example1_verifies},
      {2, "round trip recovers the split algebra", 1, example1_round_trip},
      {3, "subring example at p = 2, 3", 30, example2},
      {4, "scaled example on its printed lattice", 5, example4},
      {5, "very degenerate families over Q and F3", 5, example5},
      {6, "identity suites", 30,
       [] { return suites({"box_polarization", "box_basis_independence", "contraction_identities", "box_determinant_expansion", "pfaffian_squared"}); }},
      {7, "random resolvents give associative rings", 60, [] { return suites({"random_resolvent_rings"}); }},
      {8, "box determinant equals F", 10, [] { return suites({"box_determinant_equals_F"}); }},
      {9, "one global Pfaffian sign", 10, [] { return suites({"pfaffian_bracket_sign"}); }},
      {10, "strong maximality hypothesis", 30, strong_maximal},
      {11, "counting bound", 30, counting_bound},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && secs > c.limit_seconds) failure = "too slow";
    all = all && failure.empty();
    std::printf("criterion %2d: %s  %-45s %7.3f s (limit %g s)%s%s\n", c.id, failure.empty() ? "PASS" : "FAIL",
                c.what.c_str(), secs, c.limit_seconds, failure.empty() ? "" : "  ", failure.c_str());
  }
  return all ? 0 : 1;
}
