#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace sextic {

enum class ScalarKind { Integer, Rational, PrimeField };

/// The base ring a value lives in: ℤ, ℚ or 𝔽_p.
class ScalarRing {
 public:
  static ScalarRing integers() { return ScalarRing(ScalarKind::Integer, 0); }
  static ScalarRing rationals() { return ScalarRing(ScalarKind::Rational, 0); }
  /// Throws Error(NotInvertible) unless p is prime.
  static ScalarRing prime_field(std::uint32_t p);

  ScalarKind kind() const { return kind_; }
  /// 0 for ℤ and ℚ.
  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != ScalarKind::Integer; }
  std::string name() const;

  bool operator==(const ScalarRing&) const = default;

 private:
  ScalarRing(ScalarKind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  ScalarKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact value tagged with its ring. Rationals are kept reduced with
/// positive denominator; residues mod p are kept in [0, p).
class Scalar {
 public:
  Scalar() : ring_(ScalarRing::integers()) {}
  Scalar(ScalarRing ring, long value);
  Scalar(ScalarRing ring, const mpz_class& value);
  /// For Integer the value must be integral; for 𝔽_p the denominator must be
  /// prime to p.
  Scalar(ScalarRing ring, const mpq_class& value);

  static Scalar zero(ScalarRing ring) { return Scalar(ring, 0L); }
  static Scalar one(ScalarRing ring) { return Scalar(ring, 1L); }
  /// Parses "12", "-3/4"; residues for 𝔽_p are reduced.
  static Scalar parse(ScalarRing ring, const std::string& text);

  const ScalarRing& ring() const { return ring_; }
  const mpq_class& value() const { return value_; }
  /// Numerator of an integral value; throws if the value is not integral.
  mpz_class as_integer() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_unit() const;
  bool is_integral() const { return value_.get_den() == 1; }

  /// Base change ℤ → ℚ, ℤ/ℚ → 𝔽_p, and ℚ → ℤ for integral values.
  Scalar in(ScalarRing target) const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Field division; over ℤ only exact quotients are allowed.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  void normalize();
  void check_same_ring(const Scalar& rhs) const;

  ScalarRing ring_;
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace sextic
