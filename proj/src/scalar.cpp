#include "sextic/scalar.hpp"

#include <ostream>

#include "sextic/errors.hpp"

namespace sextic {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ScalarRing ScalarRing::prime_field(std::uint32_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotInvertible, "F_p requires a prime, got " + std::to_string(p));
  }
  return ScalarRing(ScalarKind::PrimeField, p);
}

std::string ScalarRing::name() const {
  switch (kind_) {
    case ScalarKind::Integer: return "Z";
    case ScalarKind::Rational: return "Q";
    case ScalarKind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

Scalar::Scalar(ScalarRing ring, long value) : ring_(ring), value_(value) { normalize(); }

Scalar::Scalar(ScalarRing ring, const mpz_class& value) : ring_(ring), value_(value) {
  normalize();
}

Scalar::Scalar(ScalarRing ring, const mpq_class& value) : ring_(ring), value_(value) {
  value_.canonicalize();
  normalize();
}

Scalar Scalar::parse(ScalarRing ring, const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a number: '" + text + "'");
  }
  q.canonicalize();
  return Scalar(ring, q);
}

void Scalar::normalize() {
  switch (ring_.kind()) {
    case ScalarKind::Integer:
      if (value_.get_den() != 1) {
        throw Error(ErrorCode::NotInvertible, "non-integral value " + value_.get_str() + " in Z");
      }
      break;
    case ScalarKind::Rational:
      break;
    case ScalarKind::PrimeField: {
      const mpz_class p(static_cast<unsigned long>(ring_.characteristic()));
      mpz_class num = value_.get_num();
      if (value_.get_den() != 1) {
        mpz_class den = value_.get_den();
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
          throw Error(ErrorCode::NotInvertible, "denominator divisible by p");
        }
        num *= inv;
      }
      mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
      value_ = mpq_class(num);
      break;
    }
  }
}

void Scalar::check_same_ring(const Scalar& rhs) const {
  if (!(ring_ == rhs.ring_)) {
    throw Error(ErrorCode::MixedRings, ring_.name() + " vs " + rhs.ring_.name());
  }
}

mpz_class Scalar::as_integer() const {
  if (value_.get_den() != 1) {
    throw Error(ErrorCode::NotInvertible, "value " + value_.get_str() + " is not integral");
  }
  return value_.get_num();
}

bool Scalar::is_unit() const {
  switch (ring_.kind()) {
    case ScalarKind::Integer: return value_ == 1 || value_ == -1;
    default: return !is_zero();
  }
}

Scalar Scalar::in(ScalarRing target) const {
  if (target == ring_) return *this;
  if (ring_.kind() == ScalarKind::PrimeField) {
    throw Error(ErrorCode::MixedRings, "cannot lift " + ring_.name() + " to " + target.name());
  }
  return Scalar(target, value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::NotInvertible, "division by zero");
  if (ring_.kind() == ScalarKind::Integer && !is_unit()) {
    throw Error(ErrorCode::NotInvertible, value_.get_str() + " is not a unit of Z");
  }
  mpq_class inv = 1 / value_;
  return Scalar(ring_, inv);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  if (ring_.kind() == ScalarKind::PrimeField) r.normalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_ring(rhs);
  value_ += rhs.value_;
  if (ring_.kind() == ScalarKind::PrimeField) normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_ring(rhs);
  value_ -= rhs.value_;
  if (ring_.kind() == ScalarKind::PrimeField) normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_ring(rhs);
  value_ *= rhs.value_;
  if (ring_.kind() == ScalarKind::PrimeField) normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_ring(rhs);
  if (rhs.is_zero()) throw Error(ErrorCode::NotInvertible, "division by zero");
  if (ring_.kind() == ScalarKind::PrimeField) return *this *= rhs.inverse();
  value_ /= rhs.value_;
  if (ring_.kind() == ScalarKind::Integer && value_.get_den() != 1) {
    throw Error(ErrorCode::NotInvertible, "inexact division in Z");
  }
  return *this;
}

bool Scalar::operator==(const Scalar& rhs) const {
  return ring_ == rhs.ring_ && value_ == rhs.value_;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace sextic
