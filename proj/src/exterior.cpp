#include "sextic/exterior.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "sextic/errors.hpp"

namespace sextic {

namespace {

void build_subsets(std::size_t n, std::size_t k, std::size_t start, IndexSet& cur,
                   std::vector<IndexSet>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    build_subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

void require_degree(const ExtVector& v, std::size_t k, const char* what) {
  if (v.degree() != k || v.ambient() != 5) throw Error(ErrorCode::WrongDegree, what);
}

}  // namespace

const std::vector<IndexSet>& subsets(std::size_t n, std::size_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<IndexSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  std::vector<IndexSet> out;
  IndexSet cur;
  if (k <= n) build_subsets(n, k, 0, cur, out);
  return cache.emplace(std::make_pair(n, k), std::move(out)).first->second;
}

std::size_t subset_position(std::size_t n, const IndexSet& s) {
  const auto& all = subsets(n, s.size());
  auto it = std::lower_bound(all.begin(), all.end(), s);
  if (it == all.end() || *it != s) throw Error(ErrorCode::DimensionMismatch, "not a sorted subset");
  return static_cast<std::size_t>(it - all.begin());
}

int sort_sign(const std::vector<std::size_t>& seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) sign = -sign;
    }
  }
  return sign;
}

ExtVector::ExtVector(ScalarRing ring, std::size_t n, std::size_t k)
    : ring_(ring), n_(n), k_(k) {
  if (k > n) throw Error(ErrorCode::DegreeOverflow, "degree exceeds ambient rank");
  coeffs_.assign(subsets(n, k).size(), Scalar::zero(ring));
}

ExtVector ExtVector::basis(ScalarRing ring, std::size_t n, const IndexSet& s) {
  ExtVector v(ring, n, s.size());
  v.coeffs_[subset_position(n, s)] = Scalar::one(ring);
  return v;
}

ExtVector ExtVector::vector(const std::vector<Scalar>& coords) {
  if (coords.empty()) throw Error(ErrorCode::DimensionMismatch, "empty vector");
  ExtVector v(coords[0].ring(), coords.size(), 1);
  v.coeffs_ = coords;
  return v;
}

ExtVector ExtVector::from_skew(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "from_skew");
  if (!a.is_alternating()) throw Error(ErrorCode::NonSkew, "from_skew");
  ExtVector v(a.ring(), a.rows(), 2);
  const auto& subs = subsets(a.rows(), 2);
  for (std::size_t p = 0; p < subs.size(); ++p) v.coeffs_[p] = a(subs[p][0], subs[p][1]);
  return v;
}

ExtVector ExtVector::from_covector(const std::vector<Scalar>& cov) {
  const std::size_t n = cov.size();
  ExtVector v(cov[0].ring(), n, n - 1);
  // Subset omitting m sits at position n-1-m; the sign of (S, m) is (-1)^{n-1-m}.
  for (std::size_t m = 0; m < n; ++m) {
    const bool odd = ((n - 1 - m) % 2) == 1;
    v.coeffs_[n - 1 - m] = odd ? -cov[m] : cov[m];
  }
  return v;
}

Matrix ExtVector::to_skew() const {
  if (k_ != 2) throw Error(ErrorCode::WrongDegree, "to_skew needs degree 2");
  Matrix a(ring_, n_, n_);
  const auto& subs = subsets(n_, 2);
  for (std::size_t p = 0; p < subs.size(); ++p) {
    a(subs[p][0], subs[p][1]) = coeffs_[p];
    a(subs[p][1], subs[p][0]) = -coeffs_[p];
  }
  return a;
}

bool ExtVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

ExtVector ExtVector::in(ScalarRing target) const {
  ExtVector v(target, n_, k_);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) v.coeffs_[p] = coeffs_[p].in(target);
  return v;
}

void ExtVector::check_compatible(const ExtVector& rhs) const {
  if (!(ring_ == rhs.ring_)) throw Error(ErrorCode::MixedRings, "exterior operands");
  if (n_ != rhs.n_ || k_ != rhs.k_) throw Error(ErrorCode::DimensionMismatch, "exterior operands");
}

ExtVector& ExtVector::operator+=(const ExtVector& rhs) {
  check_compatible(rhs);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] += rhs.coeffs_[p];
  return *this;
}

ExtVector& ExtVector::operator-=(const ExtVector& rhs) {
  check_compatible(rhs);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] -= rhs.coeffs_[p];
  return *this;
}

ExtVector& ExtVector::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

ExtVector ExtVector::operator-() const {
  ExtVector v = *this;
  for (auto& c : v.coeffs_) c = -c;
  return v;
}

bool ExtVector::operator==(const ExtVector& rhs) const {
  return ring_ == rhs.ring_ && n_ == rhs.n_ && k_ == rhs.k_ && coeffs_ == rhs.coeffs_;
}

std::string ExtVector::to_string() const {
  std::ostringstream os;
  const auto& subs = subsets(n_, k_);
  bool any = false;
  for (std::size_t p = 0; p < subs.size(); ++p) {
    if (coeffs_[p].is_zero()) continue;
    if (any) os << " + ";
    any = true;
    os << coeffs_[p] << "*f";
    for (std::size_t i = 0; i < subs[p].size(); ++i) os << (i ? "^" : "") << subs[p][i] + 1;
  }
  if (!any) os << "0";
  return os.str();
}

namespace {

// Accumulates coefficient a*b of f_S ∧ f_T into out.
void accumulate_product(const IndexSet& s, const IndexSet& t, const Scalar& prod, ExtVector& out) {
  std::vector<std::size_t> seq(s);
  seq.insert(seq.end(), t.begin(), t.end());
  const int sign = sort_sign(seq);
  if (sign == 0) return;
  std::sort(seq.begin(), seq.end());
  Scalar& slot = out.coeff(subset_position(out.ambient(), seq));
  if (sign > 0) {
    slot += prod;
  } else {
    slot -= prod;
  }
}

}  // namespace

ExtVector wedge(const ExtVector& u, const ExtVector& v) {
  if (!(u.ring() == v.ring())) throw Error(ErrorCode::MixedRings, "wedge");
  if (u.ambient() != v.ambient()) throw Error(ErrorCode::DimensionMismatch, "wedge");
  const std::size_t n = u.ambient();
  if (u.degree() + v.degree() > n) throw Error(ErrorCode::DegreeOverflow, "wedge");
  ExtVector out(u.ring(), n, u.degree() + v.degree());
  const auto& su = subsets(n, u.degree());
  const auto& sv = subsets(n, v.degree());
  for (std::size_t a = 0; a < su.size(); ++a) {
    if (u.coeff(a).is_zero()) continue;
    for (std::size_t b = 0; b < sv.size(); ++b) {
      if (v.coeff(b).is_zero()) continue;
      accumulate_product(su[a], sv[b], u.coeff(a) * v.coeff(b), out);
    }
  }
  return out;
}

ExtVector box_square(const ExtVector& mu) {
  if (mu.degree() != 2) throw Error(ErrorCode::WrongDegree, "box_square needs degree 2");
  const std::size_t n = mu.ambient();
  if (n < 4) throw Error(ErrorCode::DegreeOverflow, "box_square needs ambient rank at least 4");
  ExtVector out(mu.ring(), n, 4);
  const auto& s2 = subsets(n, 2);
  for (std::size_t a = 0; a < s2.size(); ++a) {
    if (mu.coeff(a).is_zero()) continue;
    for (std::size_t b = a + 1; b < s2.size(); ++b) {
      if (mu.coeff(b).is_zero()) continue;
      accumulate_product(s2[a], s2[b], mu.coeff(a) * mu.coeff(b), out);
    }
  }
  return out;
}

std::vector<Scalar> covector(const ExtVector& alpha) {
  const std::size_t n = alpha.ambient();
  if (alpha.degree() + 1 != n) throw Error(ErrorCode::WrongDegree, "covector needs degree n-1");
  std::vector<Scalar> cov(n, Scalar::zero(alpha.ring()));
  for (std::size_t m = 0; m < n; ++m) {
    const Scalar& c = alpha.coeff(n - 1 - m);
    cov[m] = ((n - 1 - m) % 2 == 1) ? -c : c;
  }
  return cov;
}

Scalar contract(const ExtVector& mu, const ExtVector& alpha, const ExtVector& beta) {
  require_degree(mu, 2, "contract: first argument must be in Λ²");
  require_degree(alpha, 4, "contract: second argument must be in Λ⁴");
  require_degree(beta, 4, "contract: third argument must be in Λ⁴");
  if (!(mu.ring() == alpha.ring()) || !(mu.ring() == beta.ring()))
    throw Error(ErrorCode::MixedRings, "contract");
  const auto a = covector(alpha);
  const auto b = covector(beta);
  const auto& s2 = subsets(5, 2);
  Scalar total = Scalar::zero(mu.ring());
  for (std::size_t p = 0; p < s2.size(); ++p) {
    if (mu.coeff(p).is_zero()) continue;
    const std::size_t x = s2[p][0];
    const std::size_t y = s2[p][1];
    total += mu.coeff(p) * (a[x] * b[y] - a[y] * b[x]);
  }
  return total;
}

Scalar det_in_wedge4(const std::array<ExtVector, 5>& w) {
  Matrix m(w[0].ring(), 5, 5);
  for (std::size_t r = 0; r < 5; ++r) {
    require_degree(w[r], 4, "det_in_wedge4 needs degree 4");
    const auto cov = covector(w[r]);
    for (std::size_t c = 0; c < 5; ++c) m(r, c) = cov[c];
  }
  return determinant(m);
}

ExtVector exterior_power_apply(const Matrix& g, const ExtVector& v) {
  const std::size_t n = v.ambient();
  if (g.rows() != n || g.cols() != n) throw Error(ErrorCode::DimensionMismatch, "exterior_power_apply");
  const std::size_t k = v.degree();
  const auto& subs = subsets(n, k);
  ExtVector out(v.ring(), n, k);
  for (std::size_t s = 0; s < subs.size(); ++s) {
    if (v.coeff(s).is_zero()) continue;
    for (std::size_t t = 0; t < subs.size(); ++t) {
      Matrix minor(v.ring(), k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(subs[t][i], subs[s][j]);
      out.coeff(t) += v.coeff(s) * (k == 0 ? Scalar::one(v.ring()) : determinant(minor));
    }
  }
  return out;
}

}  // namespace sextic
