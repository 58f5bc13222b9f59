#include "sextic/matrix.hpp"

#include <sstream>

#include "sextic/errors.hpp"

namespace sextic {

namespace {

ScalarRing fraction_field(const ScalarRing& ring) {
  return ring.kind() == ScalarKind::Integer ? ScalarRing::rationals() : ring;
}

// Gaussian elimination to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, Scalar* det_sign = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pr, k));
      if (det_sign) *det_sign = -*det_sign;
    }
    const Scalar inv = m(r, c).inverse();
    if (det_sign) *det_sign *= m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Scalar pfaffian_rec(const Matrix& a, std::vector<std::size_t>& idx) {
  if (idx.empty()) return Scalar::one(a.ring());
  const std::size_t first = idx[0];
  Scalar total = Scalar::zero(a.ring());
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const Scalar& entry = a(first, idx[j]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (k != j) rest.push_back(idx[k]);
    }
    Scalar term = entry * pfaffian_rec(a, rest);
    if (j % 2 == 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace

Matrix::Matrix(ScalarRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ring)) {}

Matrix Matrix::identity(ScalarRing ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
  return m;
}

Matrix Matrix::from_ints(ScalarRing ring, std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.begin()->size() : 0;
  Matrix m(ring, nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    std::size_t c = 0;
    for (long v : row) m(r, c++) = Scalar(ring, v);
    ++r;
  }
  return m;
}

Matrix Matrix::from_rows(ScalarRing ring, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(ring, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c].in(ring);
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool Matrix::is_alternating() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::in(ScalarRing target) const {
  Matrix m(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].in(target);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix m(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& v : m.data_) v = -v;
  return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  std::vector<Scalar> out(rows_, Scalar::zero(ring_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return ring_ == rhs.ring_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "determinant");
  Matrix m = a.in(fraction_field(a.ring()));
  Scalar det = Scalar::one(m.ring());
  const auto pivots = row_reduce(m, &det);
  if (pivots.size() < a.rows()) return Scalar::zero(a.ring());
  return det.in(a.ring());
}

Scalar pfaffian(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "pfaffian");
  if (a.rows() % 2 != 0) throw Error(ErrorCode::OddSize, "pfaffian of odd size " + std::to_string(a.rows()));
  if (!a.is_alternating()) throw Error(ErrorCode::NonSkew, "pfaffian of a non-alternating matrix");
  std::vector<std::size_t> idx(a.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_rec(a, idx);
}

std::vector<Scalar> char_poly(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "char_poly");
  if (a.ring().kind() == ScalarKind::PrimeField) {
    throw Error(ErrorCode::MixedRings, "char_poly supports Z and Q only");
  }
  const std::size_t n = a.rows();
  const ScalarRing q = ScalarRing::rationals();
  const Matrix aq = a.in(q);
  std::vector<Scalar> coeffs(n + 1, Scalar::zero(q));
  coeffs[n] = Scalar::one(q);
  Matrix mk(q, n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = aq * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += coeffs[n - k + 1];
    const Matrix amk = aq * mk;
    Scalar tr = Scalar::zero(q);
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    coeffs[n - k] = -tr / Scalar(q, static_cast<long>(k));
  }
  if (a.ring().kind() == ScalarKind::Integer) {
    for (auto& c : coeffs) c = c.in(a.ring());
  }
  return coeffs;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "inverse");
  const std::size_t n = a.rows();
  const ScalarRing f = fraction_field(a.ring());
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j).in(f);
    aug(i, n + i) = Scalar::one(f);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorCode::SingularSystem, "singular matrix");
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Scalar> solve(const Matrix& a, const std::vector<Scalar>& b) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, "solve");
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve rhs");
  const std::size_t n = a.rows();
  const ScalarRing f = fraction_field(a.ring());
  Matrix aug(f, n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j).in(f);
    aug(i, n) = b[i].in(f);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorCode::SingularSystem, "singular system");
  std::vector<Scalar> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.push_back(aug(i, n));
  return x;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a.in(fraction_field(a.ring()));
  return row_reduce(m).size();
}

Matrix nullspace(const Matrix& a) {
  Matrix m = a.in(fraction_field(a.ring()));
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(m.ring(), m.cols() - pivots.size(), m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = Scalar::one(m.ring());
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(out, pivots[r]) = -m(r, free);
    ++out;
  }
  return basis;
}

}  // namespace sextic
