#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sextic/exterior.hpp"
#include "sextic/matrix.hpp"
#include "sextic/resolvent.hpp"

namespace sextic {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  bool passed() const { return failures.empty() && cases > 0; }
};

/// Names accepted by run_suite, in execution order.
const std::vector<std::string>& suite_names();
/// Throws UnknownExample for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteResult> run_selfcheck(std::uint64_t seed);

/// Random generators shared with the tests.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi);
  Scalar scalar(const ScalarRing& ring, long lo = -5, long hi = 5);
  Matrix skew(const ScalarRing& ring, std::size_t n, long lo = -5, long hi = 5);
  ExtVector ext(const ScalarRing& ring, std::size_t k, long lo = -5, long hi = 5);
  LVector lvector(const ScalarRing& ring, long lo = -3, long hi = 3);
  /// Invertible over a field; determinant ±1 over ℤ.
  Matrix invertible(const ScalarRing& ring, std::size_t n);
  ResolventData resolvent(const ScalarRing& ring, long lo = -3, long hi = 3);

 private:
  std::mt19937_64 rng_;
};

}  // namespace sextic
