#include "starcomp/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace starcomp {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::monomial(unsigned degree, BigInt coeff) {
  std::vector<BigInt> c(degree + 1, BigInt(0));
  c[degree] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::linear(const BigInt& root) { return IntPolynomial({BigInt(-root), BigInt(1)}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

AlgebraicNumber IntPolynomial::evaluate(const AlgebraicNumber& x) const {
  AlgebraicNumber acc(0L);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += AlgebraicNumber(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return IntPolynomial();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(coeffs_.size() - divisor.coeffs_.size() + 1, BigInt(0));
  const BigInt& lead = divisor.leading();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const BigInt& top = rem[k + divisor.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    BigInt q = top / lead;
    for (int j = 0; j <= divisor.degree(); ++j) rem[k + j] -= q * divisor.coeffs_[j];
    quot[k] = q;
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

namespace {

// Fujiwara: every complex root z satisfies |z| <= 2 * max_i |a_{n-i}/a_n|^{1/i}
// (with the constant term halved). Rounded up to an integer.
BigInt root_bound(const IntPolynomial& p) {
  const int n = p.degree();
  const BigInt lead = abs(p.leading());
  BigInt best = 0;
  for (int i = 1; i <= n; ++i) {
    BigInt c = abs(p.coeff(static_cast<unsigned>(n - i)));
    if (i == n) c = (c + 1) / 2;
    if (c == 0) continue;
    // ceil(c / lead)^{1/i}, rounded up
    BigInt ratio = (c + lead - 1) / lead;
    BigInt r;
    mpz_root(r.get_mpz_t(), ratio.get_mpz_t(), static_cast<unsigned long>(i));
    r += 1;
    if (r > best) best = r;
  }
  return 2 * best;
}

}  // namespace

IntegerRootSplit split_integer_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("split_integer_roots of the zero polynomial");
  IntegerRootSplit out;
  IntPolynomial rest = p;
  if (rest.degree() <= 0) {
    out.residual = rest;
    return out;
  }
  const BigInt bound = root_bound(rest);
  for (BigInt k = -bound; k <= bound; ++k) {
    unsigned mult = 0;
    while (rest.degree() >= 1 && rest.evaluate(k) == 0) {
      auto q = rest.divide_exact(IntPolynomial::linear(k));
      if (!q) break;  // non-monic residue with a rational, non-integer cofactor
      rest = *q;
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(k, mult);
  }
  out.residual = rest;
  return out;
}

std::optional<IntPolynomial> polynomial_from_spectrum(
    const std::vector<std::pair<AlgebraicNumber, unsigned>>& spectrum) {
  std::vector<AlgebraicNumber> c{AlgebraicNumber(1L)};
  for (const auto& [lambda, mult] : spectrum) {
    for (unsigned m = 0; m < mult; ++m) {
      std::vector<AlgebraicNumber> next(c.size() + 1, AlgebraicNumber(0L));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= lambda * c[i];
      }
      c = std::move(next);
    }
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(c.size());
  for (const auto& v : c) {
    auto z = v.as_integer();
    if (!z) return std::nullopt;
    coeffs.push_back(*z);
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace starcomp
