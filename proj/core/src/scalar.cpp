#include "uprod/scalar.hpp"

#include <charconv>
#include <ostream>

#include "uprod/errors.hpp"

namespace uprod {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(p);
}

Field Field::parse(std::string_view descriptor) {
  if (descriptor == "rational") return rationals();
  constexpr std::string_view kPrefix = "mod ";
  if (descriptor.substr(0, kPrefix.size()) == kPrefix) {
    auto digits = descriptor.substr(kPrefix.size());
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      try {
        return prime(p);
      } catch (const Error& e) {
        throw FormatError(e.what());
      }
    }
  }
  throw FormatError("unknown field descriptor '" + std::string(descriptor) + "'");
}

std::string Field::descriptor() const {
  return is_rational() ? std::string("rational") : "mod " + std::to_string(modulus_);
}

Scalar Field::zero() const { return Scalar(mpq_class(0), modulus_); }
Scalar Field::one() const { return Scalar(mpq_class(1), modulus_); }
Scalar Field::from_int(long value) const { return Scalar(mpq_class(value), modulus_); }

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (sgn(den) == 0) throw Error("zero denominator");
  if (is_rational()) return Scalar(mpq_class(num, den), 0);
  // num * den^-1 mod p
  mpz_class p(modulus_), d = den % p, inv;
  if (d < 0) d += p;
  if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error("denominator is divisible by the field characteristic");
  }
  return Scalar(mpq_class(mpz_class(num * inv)), modulus_);
}

Scalar::Scalar(mpq_class value, std::uint32_t modulus)
    : value_(std::move(value)), modulus_(modulus) {
  reduce();
}

Field Scalar::field() const { return Field(modulus_); }

void Scalar::reduce() {
  if (modulus_ == 0) {
    value_.canonicalize();
    return;
  }
  mpz_class r = value_.get_num() % modulus_;
  if (r < 0) r += modulus_;
  value_ = mpq_class(r);
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw FieldMismatch("arithmetic between scalars of different fields");
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  if (modulus_ == 0) return Scalar(1 / value_, 0);
  mpz_class inv, p(modulus_);
  mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
  return Scalar(mpq_class(inv), modulus_);
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_), modulus_); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ += rhs.value_;
  if (modulus_ != 0) reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ -= rhs.value_;
  if (modulus_ != 0) reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ *= rhs.value_;
  if (modulus_ != 0) reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace uprod
