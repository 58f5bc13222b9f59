#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sextic/scalar.hpp"

namespace sextic {

/// Dense matrix over a single scalar ring.
class Matrix {
 public:
  Matrix(ScalarRing ring, std::size_t rows, std::size_t cols);
  static Matrix identity(ScalarRing ring, std::size_t n);
  static Matrix from_ints(ScalarRing ring, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(ScalarRing ring, const std::vector<std::vector<Scalar>>& rows);

  const ScalarRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;

  /// Zero diagonal and A + Aᵀ = 0.
  bool is_alternating() const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix in(ScalarRing target) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  bool operator==(const Matrix& rhs) const;

  std::string to_string() const;

 private:
  ScalarRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Determinant by elimination over the fraction field; exact.
Scalar determinant(const Matrix& a);

/// Pfaffian of an alternating matrix, normalized so that Pf(diag(J,…,J)) = 1
/// with J = [[0,1],[-1,0]]. Expansion along the first row.
Scalar pfaffian(const Matrix& a);

/// Monic characteristic polynomial det(tI − A), coefficients in ascending
/// degree (last entry is 1). Faddeev–LeVerrier; ℤ or ℚ only.
std::vector<Scalar> char_poly(const Matrix& a);

/// Inverse over a field (or ℤ, returned over ℚ). Throws SingularSystem.
Matrix inverse(const Matrix& a);

/// Unique solution of A x = b for square nonsingular A over a field.
std::vector<Scalar> solve(const Matrix& a, const std::vector<Scalar>& b);

/// Rank over the fraction field.
std::size_t rank(const Matrix& a);

/// Basis of {x : A x = 0} over a field, as rows of the result (possibly 0 rows).
Matrix nullspace(const Matrix& a);

}  // namespace sextic
