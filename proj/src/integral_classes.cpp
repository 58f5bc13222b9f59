#include <set>

#include "sextic/degeneracy.hpp"
#include "sextic/errors.hpp"

namespace sextic {

namespace {

// Rank of vectors mod p with row echelon basis written to basis.
std::size_t rank_mod(std::vector<std::vector<long>> rows, long p, std::vector<std::vector<long>>& basis) {
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t pr = r;
    while (pr < rows.size() && rows[pr][c] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[r]);
    long inv = 1;
    for (long e = p - 2, b = rows[r][c]; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (auto& v : rows[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const long f = rows[i][c];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = ((rows[i][k] - f * rows[r][k]) % p + p) % p;
    }
    ++r;
  }
  rows.resize(r);
  basis = rows;
  return r;
}

}  // namespace

IntegralClasses integral_class_dim(const QuinticRing& q, unsigned p) {
  if (q.ring().kind() != ScalarKind::Integer) throw Error(ErrorCode::MixedRings, "integral_class_dim needs a ring over Z");
  if (!is_prime(p)) throw Error(ErrorCode::NotInvertible, "integral_class_dim needs a prime");
  if (p > 5) throw Error(ErrorCode::PrimeTooLarge, "integral_class_dim supports p <= 5");
  const ScalarRing qq = ScalarRing::rationals();
  const QuinticRing rq = q.in(qq);
  const long lp = static_cast<long>(p);
  std::size_t total = 1;
  for (int i = 0; i < 5; ++i) total *= p;

  std::set<std::vector<long>> integral;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<long> v(5);
    std::size_t rest = code;
    for (std::size_t i = 0; i < 5; ++i) {
      v[i] = static_cast<long>(rest % p);
      rest /= p;
    }
    Element w;
    for (long x : v) w.emplace_back(qq, mpq_class(x, lp));
    const auto poly = char_poly(rq.multiplication_matrix(w));
    bool ok = true;
    for (const auto& c : poly) ok = ok && c.is_integral();
    if (ok) integral.insert(v);
  }

  IntegralClasses out;
  out.count = integral.size();
  std::vector<std::vector<long>> rows(integral.begin(), integral.end());
  out.dimension = rank_mod(rows, lp, out.basis);
  std::size_t span_size = 1;
  for (std::size_t i = 0; i < out.dimension; ++i) span_size *= p;
  // A subset containing 0 whose size equals its span's size is the span itself.
  if (span_size != out.count || !integral.count(std::vector<long>(5, 0)))
    throw Error(ErrorCode::InconsistentResolvent, "integral classes do not form a subspace");
  return out;
}

}  // namespace sextic
