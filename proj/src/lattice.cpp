#include "sextic/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "sextic/errors.hpp"

namespace sextic {

namespace {

// Row-style HNF of the lattice spanned by gens.
std::vector<IntVector> hermite_form(std::vector<IntVector> rows, std::size_t n) {
  std::vector<IntVector> out;
  out.reserve(n);
  for (std::size_t col = 0; col < n; ++col) {
    // Euclid on column col among the remaining rows until one nonzero survives.
    while (true) {
      std::size_t best = rows.size();
      std::size_t nonzero = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (sgn(rows[r][col]) == 0) continue;
        ++nonzero;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (nonzero == 0) throw Error(ErrorCode::RankDeficient, "generators do not span full rank");
      if (nonzero == 1) {
        IntVector pivot = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        if (sgn(pivot[col]) < 0) {
          for (auto& v : pivot) v = -v;
        }
        out.push_back(std::move(pivot));
        break;
      }
      const IntVector& piv = rows[best];
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == best || sgn(rows[r][col]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), piv[col].get_mpz_t());
        for (std::size_t k = col; k < n; ++k) rows[r][k] -= q * piv[k];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), out[k][i].get_mpz_t(), out[i][i].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = i; c < n; ++c) out[k][c] -= q * out[i][c];
    }
  }
  return out;
}

mpz_class lcm_of_denominators(const std::vector<RatVector>& rows) {
  mpz_class d = 1;
  for (const auto& r : rows)
    for (const auto& v : r) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den().get_mpz_t());
  return d;
}

}  // namespace

IntegerLattice IntegerLattice::from_generators(const std::vector<IntVector>& generators,
                                               std::size_t n) {
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "generator length");
  }
  if (generators.size() < n) throw Error(ErrorCode::RankDeficient, "fewer generators than rank");
  return IntegerLattice(hermite_form(generators, n));
}

IntegerLattice IntegerLattice::standard(std::size_t n) {
  std::vector<IntVector> b(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
  return IntegerLattice(std::move(b));
}

mpz_class IntegerLattice::index() const {
  mpz_class d = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) d *= basis_[i][i];
  return d;
}

std::optional<IntVector> IntegerLattice::coordinates(const IntVector& v) const {
  const std::size_t n = rank();
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length");
  IntVector rest = v;
  IntVector coords(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!mpz_divisible_p(rest[i].get_mpz_t(), basis_[i][i].get_mpz_t())) return std::nullopt;
    coords[i] = rest[i] / basis_[i][i];
    if (coords[i] == 0) continue;
    for (std::size_t k = i; k < n; ++k) rest[k] -= coords[i] * basis_[i][k];
  }
  return coords;
}

bool IntegerLattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool IntegerLattice::contains(const IntegerLattice& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const IntVector& b) { return contains(b); });
}

RationalLattice IntegerLattice::dual() const {
  std::vector<RatVector> m(rank(), RatVector(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m[i][j] = basis_[i][j];
  const auto inv = rational_inverse(m);
  // Rows of B^{-T}: the columns of B^{-1}.
  std::vector<RatVector> rows(rank(), RatVector(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) rows[i][j] = inv[j][i];
  return RationalLattice::from_generators(rows, rank());
}

IntegerLattice IntegerLattice::sum(const IntegerLattice& other) const {
  std::vector<IntVector> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return from_generators(gens, rank());
}

IntegerLattice IntegerLattice::intersection(const IntegerLattice& other) const {
  return dual().sum(other.dual()).dual().as_integer();
}

std::string IntegerLattice::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < basis_[r].size(); ++c) os << (c ? ", " : "") << basis_[r][c];
    os << "]";
  }
  os << "]";
  return os.str();
}

RationalLattice RationalLattice::from_generators(const std::vector<RatVector>& generators,
                                                 std::size_t n) {
  const mpz_class d = lcm_of_denominators(generators);
  std::vector<IntVector> scaled;
  scaled.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "generator length");
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class x = g[i] * d;
      x.canonicalize();
      v[i] = x.get_num();
    }
    scaled.push_back(std::move(v));
  }
  IntegerLattice lat = IntegerLattice::from_generators(scaled, n);
  // Reduce to the minimal denominator.
  mpz_class g = d;
  for (const auto& row : lat.basis())
    for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g != 1) {
    std::vector<IntVector> b = lat.basis();
    for (auto& row : b)
      for (auto& v : row) v /= g;
    lat = IntegerLattice::from_generators(b, n);
  }
  return RationalLattice(d / g, std::move(lat));
}

RationalLattice RationalLattice::from_integer(const IntegerLattice& lattice) {
  std::vector<RatVector> rows;
  for (const auto& r : lattice.basis()) rows.emplace_back(r.begin(), r.end());
  return from_generators(rows, lattice.rank());
}

std::vector<RatVector> RationalLattice::basis() const {
  std::vector<RatVector> rows;
  for (const auto& r : scaled_.basis()) {
    RatVector v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      v[i] = mpq_class(r[i], denominator_);
      v[i].canonicalize();
    }
    rows.push_back(std::move(v));
  }
  return rows;
}

mpq_class RationalLattice::determinant() const {
  mpq_class d(scaled_.index());
  for (std::size_t i = 0; i < rank(); ++i) d /= denominator_;
  d.canonicalize();
  return d;
}

IntegerLattice RationalLattice::as_integer() const {
  if (denominator_ != 1) throw Error(ErrorCode::NotInvertible, "lattice is not integral");
  return scaled_;
}

std::optional<IntVector> RationalLattice::coordinates(const RatVector& v) const {
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpq_class x = v[i] * denominator_;
    x.canonicalize();
    if (x.get_den() != 1) return std::nullopt;
    scaled[i] = x.get_num();
  }
  return scaled_.coordinates(scaled);
}

bool RationalLattice::contains(const RatVector& v) const { return coordinates(v).has_value(); }

bool RationalLattice::contains(const RationalLattice& other) const {
  const auto rows = other.basis();
  return std::all_of(rows.begin(), rows.end(), [&](const RatVector& r) { return contains(r); });
}

mpz_class RationalLattice::index_of(const RationalLattice& sub) const {
  if (!contains(sub)) throw Error(ErrorCode::NotInsideM0, "index_of: not a sublattice");
  mpq_class ratio = sub.determinant() / determinant();
  ratio.canonicalize();
  return abs(ratio.get_num());
}

RationalLattice RationalLattice::dual() const {
  const auto inv = rational_inverse(basis());
  std::vector<RatVector> rows(rank(), RatVector(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) rows[i][j] = inv[j][i];
  return from_generators(rows, rank());
}

RationalLattice RationalLattice::sum(const RationalLattice& other) const {
  auto rows = basis();
  const auto more = other.basis();
  rows.insert(rows.end(), more.begin(), more.end());
  return from_generators(rows, rank());
}

RationalLattice RationalLattice::intersection(const RationalLattice& other) const {
  return dual().sum(other.dual()).dual();
}

RationalLattice RationalLattice::scaled_by(const mpq_class& s) const {
  auto rows = basis();
  for (auto& r : rows)
    for (auto& v : r) v *= s;
  return from_generators(rows, rank());
}

bool RationalLattice::operator<(const RationalLattice& rhs) const {
  if (denominator_ != rhs.denominator_) return denominator_ < rhs.denominator_;
  return scaled_ < rhs.scaled_;
}

std::string RationalLattice::to_string() const {
  if (denominator_ == 1) return scaled_.to_string();
  return "(1/" + denominator_.get_str() + ")" + scaled_.to_string();
}

std::vector<RatVector> rational_inverse(const std::vector<RatVector>& m) {
  const std::size_t n = m.size();
  std::vector<RatVector> a(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorCode::NonSquare, "rational_inverse");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw Error(ErrorCode::SingularSystem, "singular rational matrix");
    std::swap(a[p], a[c]);
    const mpq_class inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

mpq_class rational_determinant(const std::vector<RatVector>& m) {
  const std::size_t n = m.size();
  std::vector<RatVector> a = m;
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace sextic
