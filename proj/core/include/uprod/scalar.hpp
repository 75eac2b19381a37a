#ifndef UPROD_SCALAR_HPP
#define UPROD_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace uprod {

class Scalar;

/// Ground field descriptor: the rationals, or the prime field F_p.
///
/// Every scalar carries the modulus of its field (0 for Q). Arithmetic between
/// scalars of different fields throws FieldMismatch.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws Error when p is not a prime in [2, 2^31).
  static Field prime(std::uint32_t p);
  /// Inverse of descriptor(): "rational" or "mod <p>".
  static Field parse(std::string_view descriptor);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }
  std::string descriptor() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  /// Throws Error on a zero denominator (or one divisible by p).
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  Field field() const;
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  /// Reduced numerator and denominator (denominator is 1 for residues).
  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  /// Throws Error on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Structural equality; scalars of different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

  /// "n" or "n/d".
  std::string to_string() const;

 private:
  friend class Field;
  Scalar(mpq_class value, std::uint32_t modulus);

  void check_same_field(const Scalar& rhs) const;
  void reduce();

  mpq_class value_;
  std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace uprod

#endif  // UPROD_SCALAR_HPP
