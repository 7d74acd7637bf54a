#pragma once

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace starcomp {

using BigInt = mpz_class;
using Rational = mpq_class;

/// The real quadratic field Q(theta), where theta is one chosen real root of
/// x^2 + c1*x + c0. The discriminant c1^2 - 4*c0 is positive and not a square.
class QuadraticField {
 public:
  QuadraticField(BigInt c0, BigInt c1, bool positive_root);

  const BigInt& c0() const { return c0_; }
  const BigInt& c1() const { return c1_; }
  bool positive_root() const { return positive_; }
  BigInt discriminant() const { return c1_ * c1_ - 4 * c0_; }

  /// "root(c0,c1):pos" / "root(c0,c1):neg".
  std::string to_string() const;

  friend bool operator==(const QuadraticField& a, const QuadraticField& b) {
    return a.positive_ == b.positive_ && a.c0_ == b.c0_ && a.c1_ == b.c1_;
  }

 private:
  BigInt c0_;
  BigInt c1_;
  bool positive_;
};

using FieldPtr = std::shared_ptr<const QuadraticField>;

/// An element x + y*theta of Q or of a real quadratic field Q(theta).
///
/// Elements without a field are plain rationals. Mixing a rational with an
/// element of Q(theta) is allowed; mixing two different quadratic fields
/// throws FieldError.
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(long value) : x_(value) {}  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(const BigInt& value) : x_(value) {}  // NOLINT
  AlgebraicNumber(const Rational& value) : x_(value) { x_.canonicalize(); }  // NOLINT
  AlgebraicNumber(FieldPtr field, Rational x, Rational y);

  /// The chosen real root of x^2 + c1*x + c0. Rational when the discriminant
  /// is a perfect square; FieldError when it is negative.
  static AlgebraicNumber quadratic_root(const BigInt& c0, const BigInt& c1, bool positive);

  /// Parses "-2", "3/4" or "root(c0,c1):pos|neg". No floating point.
  static AlgebraicNumber parse(std::string_view text);

  const FieldPtr& field() const { return field_; }
  const Rational& rational_part() const { return x_; }
  const Rational& theta_part() const { return y_; }

  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  bool is_rational() const { return sgn(y_) == 0; }
  bool is_integer() const { return is_rational() && x_.get_den() == 1; }
  std::optional<Rational> as_rational() const;
  std::optional<BigInt> as_integer() const;

  /// Degree of the element over Q (1 or 2).
  int degree() const { return is_rational() ? 1 : 2; }

  /// Exact sign using the field's embedding.
  int sign() const;

  /// Galois conjugate (x + y*theta').
  AlgebraicNumber conjugate() const;
  Rational norm() const;
  AlgebraicNumber inverse() const;

  std::string to_string() const;

  AlgebraicNumber& operator+=(const AlgebraicNumber& o);
  AlgebraicNumber& operator-=(const AlgebraicNumber& o);
  AlgebraicNumber& operator*=(const AlgebraicNumber& o);
  AlgebraicNumber& operator/=(const AlgebraicNumber& o);

  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
  friend AlgebraicNumber operator/(AlgebraicNumber a, const AlgebraicNumber& b) { return a /= b; }
  AlgebraicNumber operator-() const;

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b);

 private:
  static FieldPtr merge(const AlgebraicNumber& a, const AlgebraicNumber& b);

  FieldPtr field_;
  Rational x_;
  Rational y_;
};

AlgebraicNumber pow(const AlgebraicNumber& base, unsigned exponent);

}  // namespace starcomp
