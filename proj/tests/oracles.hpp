#pragma once

// Slow, independent reference computations used as test oracles.

#include <algorithm>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Table = std::vector<std::vector<mpq_class>>;

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

// Leibniz expansion.
inline mpq_class leibniz_det(const Table& a) {
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    mpq_class term = permutation_sign(perm);
    for (std::size_t r = 0; r < a.size(); ++r) term *= a[r][perm[r]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Fraction-free elimination on integer entries.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Sum over perfect matchings, expanding along the first remaining index.
inline mpq_class matching_pfaffian(const Table& a, std::vector<std::size_t> rest) {
  if (rest.empty()) return 1;
  const std::size_t i = rest[0];
  mpq_class total = 0;
  for (std::size_t pos = 1; pos < rest.size(); ++pos) {
    std::vector<std::size_t> sub;
    for (std::size_t q = 1; q < rest.size(); ++q)
      if (q != pos) sub.push_back(rest[q]);
    const int sign = pos % 2 ? 1 : -1;
    total += sign * a[i][rest[pos]] * matching_pfaffian(a, sub);
  }
  return total;
}

inline mpq_class matching_pfaffian(const Table& a) {
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  return matching_pfaffian(a, idx);
}

}  // namespace oracle
