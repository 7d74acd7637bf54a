#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starcomp/exact/algebraic.hpp"

namespace starcomp {

/// Polynomial with integer coefficients, stored in ascending degree.
/// The leading coefficient is nonzero unless the polynomial is zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);

  static IntPolynomial monomial(unsigned degree, BigInt coeff = 1);
  /// x - root
  static IntPolynomial linear(const BigInt& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt evaluate(const BigInt& x) const;
  AlgebraicNumber evaluate(const AlgebraicNumber& x) const;

  IntPolynomial derivative() const;

  /// Quotient when `divisor` divides this polynomial exactly over Z.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

  /// "x^6 - 9x^4"
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Integer roots with multiplicities plus the cofactor without integer roots.
struct IntegerRootSplit {
  std::vector<std::pair<BigInt, unsigned>> roots;  // ascending by root
  IntPolynomial residual;
};

/// Splits off every integer root of a nonzero polynomial.
IntegerRootSplit split_integer_roots(const IntPolynomial& p);

/// Product of (x - lambda)^m over field elements, returned when every
/// coefficient is an integer.
std::optional<IntPolynomial> polynomial_from_spectrum(
    const std::vector<std::pair<AlgebraicNumber, unsigned>>& spectrum);

}  // namespace starcomp
