#include "sextic/lattice_resolvent.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sextic/degeneracy.hpp"
#include "sextic/errors.hpp"
#include "sextic/field_resolvent.hpp"

namespace sextic {

namespace {

const ScalarRing kQ = ScalarRing::rationals();

RatVector to_rat(const std::vector<Scalar>& v) {
  RatVector out;
  for (const auto& s : v) out.push_back(s.value());
  return out;
}

bool all_integral(const ResolventData& data) {
  for (const auto& a : data.phi())
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c)
        if (!a(r, c).is_integral()) return false;
  return true;
}

mpz_class content(const ResolventData& data) {
  mpz_class g = 0;
  for (const auto& a : data.phi())
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = r + 1; c < 5; ++c)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(r, c).value().get_num_mpz_t());
  return g;
}

unsigned valuation(mpz_class n, const mpz_class& p) {
  unsigned v = 0;
  if (n == 0) return 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

mpz_class power(const mpz_class& p, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

// Projective points of the span of basis (mod p), normalized to first nonzero = 1.
std::vector<std::vector<long>> projective_points(const std::vector<std::vector<long>>& basis, long p) {
  std::set<std::vector<long>> points;
  const std::size_t d = basis.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::size_t>(p);
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<long> v(5, 0);
    std::size_t rest = code;
    for (std::size_t i = 0; i < d; ++i) {
      const long coef = static_cast<long>(rest % static_cast<std::size_t>(p));
      rest /= static_cast<std::size_t>(p);
      for (std::size_t k = 0; k < 5; ++k) v[k] = (v[k] + coef * basis[i][k]) % p;
    }
    std::size_t lead = 0;
    while (lead < 5 && v[lead] == 0) ++lead;
    if (lead == 5) continue;
    long inv = 1;
    for (long e = p - 2, b = v[lead]; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (auto& x : v) x = x * inv % p;
    points.insert(v);
  }
  return {points.begin(), points.end()};
}

// Kernel of ℓ on M/pM, as a sublattice in M0 coordinates.
IntegerLattice kernel_sublattice(const IntegerLattice& m, const std::vector<long>& ell, long p) {
  std::size_t k = 0;
  while (ell[k] == 0) ++k;
  const auto& b = m.basis();
  std::vector<IntVector> gens;
  IntVector pk = b[k];
  for (auto& x : pk) x *= p;
  gens.push_back(pk);
  for (std::size_t j = 0; j < 5; ++j) {
    if (j == k) continue;
    IntVector v = b[j];
    for (std::size_t c = 0; c < 5; ++c) v[c] -= ell[j] * b[k][c];
    gens.push_back(v);
  }
  return IntegerLattice::from_generators(gens, 5);
}

ResolventData inherited_on(const BoundingLattice& bl, const IntegerLattice& m) {
  return bl.at_m0.rebase(lattice_matrix(m).in(kQ));
}

// All lattices reachable from M0 by chains of phi-compatible index-p kernels,
// grouped by depth 0..max_depth.
std::vector<std::vector<IntegerLattice>> descend(const BoundingLattice& bl, long p, unsigned max_depth,
                                                 std::size_t& visited) {
  std::vector<std::vector<IntegerLattice>> levels;
  levels.push_back({IntegerLattice::standard(5)});
  for (unsigned d = 0; d < max_depth; ++d) {
    std::set<IntegerLattice> next;
    for (const auto& m : levels.back()) {
      const ResolventData data = inherited_on(bl, m);
      const auto ker = common_kernel_mod_p(data, p);
      for (const auto& ell : projective_points(ker, p)) {
        ++visited;
        next.insert(kernel_sublattice(m, ell, p));
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

void finish(EnumerationResult& result, const Conductor& c) {
  std::sort(result.resolvents.begin(), result.resolvents.end(),
            [](const ResolventStatus& a, const ResolventStatus& b) { return a.lattice < b.lattice; });
  result.resolvents.erase(std::unique(result.resolvents.begin(), result.resolvents.end(),
                                      [](const ResolventStatus& a, const ResolventStatus& b) {
                                        return a.lattice == b.lattice;
                                      }),
                          result.resolvents.end());
  result.count_bound = numerical_count_bound(c);
  result.numerical_count = static_cast<std::size_t>(
      std::count_if(result.resolvents.begin(), result.resolvents.end(),
                    [](const ResolventStatus& s) { return s.is_numerical; }));
  result.within_bound = result.numerical_count >= 1 && result.count_bound >= result.numerical_count;
}

// Intersections over one choice per prime.
std::vector<IntegerLattice> glue(const std::vector<std::vector<IntegerLattice>>& per_prime) {
  std::vector<IntegerLattice> acc{IntegerLattice::standard(5)};
  for (const auto& options : per_prime) {
    std::vector<IntegerLattice> next;
    for (const auto& a : acc)
      for (const auto& b : options) next.push_back(a.intersection(b));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

Matrix lattice_matrix(const RationalLattice& lattice) {
  const auto rows = lattice.basis();
  Matrix m(kQ, rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = Scalar(kQ, rows[r][c]);
  return m;
}

Matrix lattice_matrix(const IntegerLattice& lattice) {
  const ScalarRing z = ScalarRing::integers();
  const auto& rows = lattice.basis();
  Matrix m(z, rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = Scalar(z, rows[r][c]);
  return m;
}

BoundingLattice compute_M0(const QuinticRing& q) {
  if (q.ring().kind() != ScalarKind::Integer) throw Error(ErrorCode::MixedRings, "compute_M0 needs a ring over Z");
  return compute_M0(q, construct_resolvent(q.in(kQ)));
}

BoundingLattice compute_M0(const QuinticRing& q, const ResolventData& reference_in) {
  if (q.ring().kind() != ScalarKind::Integer) throw Error(ErrorCode::MixedRings, "compute_M0 needs a ring over Z");
  const QuinticRing qq = q.in(kQ);
  if (!first_nonzero_F(qq)) throw Error(ErrorCode::VeryDegenerate, "Q tensor Q is very degenerate");
  const ResolventData reference = reference_in.in(kQ);
  if (!verify_resolvent(reference, qq).pass) throw Error(ErrorCode::NotAResolvent, "reference data are not a resolvent");
  // N = ⟨t·φ(g)^□⟩ viewed in M* via the f_top pairing; M0 is its dual.
  std::vector<RatVector> gens;
  for (const auto& g : grid_set(kQ)) {
    auto cov = covector(box_square(reference.phi_of(g)));
    for (auto& x : cov) x *= reference.t();
    gens.push_back(to_rat(cov));
  }
  const RationalLattice n = RationalLattice::from_generators(gens, 5);
  const RationalLattice m0 = n.dual();
  ResolventData at_m0 = reference.rebase(lattice_matrix(m0));
  if (!all_integral(at_m0)) throw Error(ErrorCode::InconsistentResolvent, "phi is not integral on M0");
  return BoundingLattice{q, reference, m0, std::move(at_m0)};
}

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n_in) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  mpz_class n = abs(n_in);
  for (mpz_class p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Conductor conductor(const BoundingLattice& bl) {
  Conductor c;
  const mpq_class inv = 1 / abs(bl.at_m0.t().value());
  if (inv.get_den() != 1) throw Error(ErrorCode::InconsistentResolvent, "theta does not map into the integral line");
  c.from_theta = inv.get_num();
  c.from_F = F_grid_gcd(bl.ring);
  c.formulas_agree = c.from_theta == c.from_F;
  c.value = c.from_theta;
  c.factorization = factorize(c.value);
  return c;
}

ResolventStatus resolvent_status(const BoundingLattice& bl, const IntegerLattice& lattice) {
  ResolventStatus s{lattice, bl.m0, lattice.index(), false, false, false, false, 0, 0, 0, bl.at_m0};
  // Reference coordinates: rows of (lattice basis)·(M0 basis).
  const Matrix ref = lattice_matrix(lattice).in(kQ) * lattice_matrix(bl.m0);
  std::vector<RatVector> rows;
  for (std::size_t r = 0; r < 5; ++r) rows.push_back(to_rat(ref.row(r)));
  s.reference_lattice = RationalLattice::from_generators(rows, 5);
  s.inherited = inherited_on(bl, lattice);
  s.phi_ok = all_integral(s.inherited);
  if (s.phi_ok) s.phi_content = content(s.inherited);
  s.t = s.inherited.t().value();
  s.theta_ok = s.t.get_den() == 1;
  if (s.theta_ok) s.theta_index = abs(s.t.get_num());
  s.is_resolvent = s.phi_ok && s.theta_ok;
  s.is_numerical = s.is_resolvent && s.theta_index == 1;
  return s;
}

ResolventStatus resolvent_status(const BoundingLattice& bl, const RationalLattice& lattice) {
  std::vector<IntVector> coords;
  const Matrix inv = inverse(lattice_matrix(bl.m0));
  for (const auto& row : lattice.basis()) {
    std::vector<Scalar> v;
    for (const auto& x : row) v.emplace_back(kQ, x);
    // Row vector times inverse basis gives M0 coordinates.
    IntVector iv(5);
    for (std::size_t c = 0; c < 5; ++c) {
      Scalar acc = Scalar::zero(kQ);
      for (std::size_t k = 0; k < 5; ++k) acc += v[k] * inv(k, c);
      if (!acc.is_integral()) throw Error(ErrorCode::NotInsideM0, "lattice is not contained in M0");
      iv[c] = acc.as_integer();
    }
    coords.push_back(iv);
  }
  return resolvent_status(bl, IntegerLattice::from_generators(coords, 5));
}

std::vector<std::vector<long>> common_kernel_mod_p(const ResolventData& data, long p) {
  // ℓᵀA = 0 ⇔ Aᵀℓ = 0 ⇔ Aℓ = 0 for alternating A; stack the rows.
  std::vector<std::vector<long>> rows;
  const mpz_class mp = p;
  for (const auto& a : data.phi()) {
    for (std::size_t r = 0; r < 5; ++r) {
      std::vector<long> row(5);
      for (std::size_t c = 0; c < 5; ++c) {
        if (!a(r, c).is_integral()) throw Error(ErrorCode::NotInsideM0, "phi not integral on this lattice");
        mpz_class x;
        mpz_mod(x.get_mpz_t(), a(r, c).value().get_num_mpz_t(), mp.get_mpz_t());
        row[c] = x.get_si();
      }
      rows.push_back(row);
    }
  }
  // Nullspace mod p by elimination.
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < 5 && rank < rows.size(); ++c) {
    std::size_t pr = rank;
    while (pr < rows.size() && rows[pr][c] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[rank]);
    long inv = 1;
    for (long e = p - 2, b = rows[rank][c]; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const long f = rows[i][c];
      for (std::size_t k = 0; k < 5; ++k) rows[i][k] = ((rows[i][k] - f * rows[rank][k]) % p + p) % p;
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<std::vector<long>> basis;
  for (std::size_t f = 0; f < 5; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<long> v(5, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - rows[r][f]) % p;
    basis.push_back(v);
  }
  return basis;
}

mpz_class numerical_count_bound(const Conductor& c) {
  mpz_class bound = 1;
  for (const auto& [p, n] : c.factorization) {
    const mpz_class per = (power(p, 5) - 1) / (p - 1);
    bound *= power(per, n);
  }
  return bound;
}

EnumerationResult enumerate_numerical_resolvents(const BoundingLattice& bl, const Conductor& c) {
  EnumerationResult result;
  result.index_bound = c.value;
  std::vector<std::vector<IntegerLattice>> per_prime;
  for (const auto& [p, n] : c.factorization) {
    if (p > 7 || n > 3) throw Error(ErrorCode::SearchBudgetExceeded, "conductor factor too large for the chain search");
    auto levels = descend(bl, p.get_si(), n, result.visited);
    per_prime.push_back(std::move(levels.back()));
  }
  for (const auto& m : glue(per_prime)) {
    ResolventStatus s = resolvent_status(bl, m);
    if (s.is_resolvent && s.is_numerical) result.resolvents.push_back(std::move(s));
  }
  finish(result, c);
  return result;
}

EnumerationResult enumerate_all_resolvents(const BoundingLattice& bl, const Conductor& c,
                                           std::optional<mpz_class> index_cap,
                                           const std::vector<RationalLattice>& candidates) {
  EnumerationResult result;
  // Ψ = ⟨φ(g)^□⟩ ⊆ Λ⁴M0 must lie in Λ⁴M, whose index is [M0:M]⁴.
  std::vector<IntVector> psi;
  for (const auto& g : grid_set(kQ)) {
    IntVector v;
    for (const auto& x : covector(box_square(bl.at_m0.phi_of(g)))) v.push_back(x.as_integer());
    psi.push_back(v);
  }
  std::map<mpz_class, unsigned> depth;  // prime -> max depth
  mpz_class bound = 1;
  bool rank_deficient = false;
  try {
    const IntegerLattice psi_lattice = IntegerLattice::from_generators(psi, 5);
    for (const auto& [p, e] : factorize(psi_lattice.index())) {
      if (e / 4 > 0) {
        depth[p] = e / 4;
        bound *= power(p, e / 4);
      }
    }
  } catch (const Error& err) {
    if (err.code() != ErrorCode::RankDeficient) throw;
    rank_deficient = true;
  }
  if (rank_deficient) {
    if (!index_cap) throw Error(ErrorCode::SearchBudgetExceeded, "no finite index bound; supply an index cap");
    result.partial = true;
    depth.clear();
    for (const auto& [p, e] : factorize(*index_cap)) depth[p] = e;
    bound = *index_cap;
  }
  for (const auto& [p, n] : c.factorization) {
    if (!depth.count(p)) depth[p] = 0;
  }
  if (index_cap && *index_cap < bound) {
    result.partial = true;
    for (auto& [p, d] : depth) {
      unsigned allowed = 0;
      while (power(p, allowed + 1) <= *index_cap && allowed < d) ++allowed;
      d = allowed;
    }
  }
  result.index_bound = 1;
  std::vector<std::vector<IntegerLattice>> per_prime;
  for (const auto& [p, d] : depth) {
    if (d > 0 && (p > 7 || power(p, d) > 343))
      throw Error(ErrorCode::SearchBudgetExceeded, "index bound too large; supply an index cap");
    const unsigned need = valuation(c.value, p);
    if (need > d) {
      per_prime.clear();
      per_prime.push_back({});
      break;
    }
    result.index_bound *= power(p, d);
    const auto levels = descend(bl, p.get_si(), d, result.visited);
    std::vector<IntegerLattice> options;
    for (unsigned k = need; k <= d; ++k) options.insert(options.end(), levels[k].begin(), levels[k].end());
    per_prime.push_back(std::move(options));
  }
  for (const auto& m : glue(per_prime)) {
    if (index_cap && m.index() > *index_cap) continue;
    ResolventStatus s = resolvent_status(bl, m);
    if (s.is_resolvent) result.resolvents.push_back(std::move(s));
  }
  for (const auto& cand : candidates) {
    ResolventStatus s = resolvent_status(bl, cand);
    if (s.is_resolvent) result.resolvents.push_back(std::move(s));
  }
  finish(result, c);
  return result;
}

StrongMaximalReport check_strong_maximal_hypothesis(const QuinticRing& q, const std::vector<unsigned>& primes) {
  StrongMaximalReport report;
  bool all = true;
  for (unsigned p : primes) {
    const auto classes = integral_class_dim(q, p);
    const bool holds = classes.dimension <= 2;
    report.primes.push_back({p, classes.dimension, holds});
    all = all && holds;
  }
  const BoundingLattice bl = compute_M0(q);
  const Conductor c = conductor(bl);
  report.covers_conductor = std::all_of(c.factorization.begin(), c.factorization.end(), [&](const auto& f) {
    return std::find(primes.begin(), primes.end(), f.first.get_ui()) != primes.end();
  });
  report.predicts_unique = all && report.covers_conductor;
  if (report.predicts_unique) {
    const auto found = enumerate_numerical_resolvents(bl, c);
    report.numerical_count = found.numerical_count;
    report.confirmed = found.numerical_count == 1;
  }
  return report;
}

}  // namespace sextic
