#include "starcomp/exact/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "starcomp/errors.hpp"

namespace starcomp {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in difference");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

FieldMatrix::FieldMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  data_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) data_.emplace_back(m(i, j));
  }
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = AlgebraicNumber(1L);
  return m;
}

FieldPtr FieldMatrix::field() const {
  FieldPtr f;
  for (const auto& v : data_) {
    if (v.is_rational() || !v.field()) continue;
    if (!f) {
      f = v.field();
    } else if (!(*f == *v.field())) {
      throw FieldError("matrix entries span two quadratic fields");
    }
  }
  return f;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  FieldMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const AlgebraicNumber& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

FieldMatrix operator*(const AlgebraicNumber& s, const FieldMatrix& m) {
  FieldMatrix c = m;
  for (auto& v : c.data_) v = s * v;
  return c;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
  FieldMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in difference");
  FieldMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

BigInt determinant(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

IntPolynomial char_polynomial(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("char_polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return IntPolynomial({BigInt(1)});

  // Values p(k) = det(kI - A) at k = 0..n.
  std::vector<BigInt> diff(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = -a(i, j);
      m(i, i) += static_cast<unsigned long>(k);
    }
    diff[k] = determinant(m);
  }
  // Forward differences: diff[k] becomes Delta^k p(0).
  for (std::size_t level = 1; level <= n; ++level) {
    for (std::size_t k = n; k >= level; --k) diff[k] -= diff[k - 1];
  }
  // p(x) = sum_k (Delta^k p(0) / k!) * x(x-1)...(x-k+1); the falling-factorial
  // coefficients of an integer polynomial are integers.
  IntPolynomial result;
  IntPolynomial falling({BigInt(1)});
  BigInt factorial = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      factorial *= static_cast<unsigned long>(k);
      falling = falling * IntPolynomial::linear(BigInt(static_cast<unsigned long>(k - 1)));
    }
    if (!mpz_divisible_p(diff[k].get_mpz_t(), factorial.get_mpz_t())) {
      throw std::logic_error("char_polynomial: non-integral interpolation coefficient");
    }
    BigInt coeff = diff[k] / factorial;
    result = result + falling * IntPolynomial({coeff});
  }
  if (result.degree() != static_cast<int>(n) || !result.is_monic()) {
    throw std::logic_error("char_polynomial: interpolation did not produce a monic degree-n polynomial");
  }
  return result;
}

IntMatrix evaluate(const IntPolynomial& p, const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix acc(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * a;
    const BigInt& c = p.coeff(static_cast<unsigned>(i));
    for (std::size_t d = 0; d < n; ++d) acc(d, d) += c;
  }
  return acc;
}

IntPolynomial minimal_polynomial(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("minimal_polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return IntPolynomial({BigInt(1)});
  const std::size_t len = n * n;

  struct BasisRow {
    std::size_t pivot;
    std::vector<Rational> values;  // vec of some combination of powers
    std::vector<Rational> combo;   // coefficients on A^0..A^k
  };
  std::vector<BasisRow> basis;
  IntMatrix power = IntMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rational> v(len);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = Rational(power(i, j));
    }
    std::vector<Rational> combo(k + 1, Rational(0));
    combo[k] = 1;
    for (const auto& row : basis) {
      if (sgn(v[row.pivot]) == 0) continue;
      Rational f = v[row.pivot] / row.values[row.pivot];
      for (std::size_t c = 0; c < len; ++c) {
        if (sgn(row.values[c]) != 0) v[c] -= f * row.values[c];
      }
      for (std::size_t c = 0; c < row.combo.size(); ++c) combo[c] -= f * row.combo[c];
    }
    std::size_t pivot = 0;
    while (pivot < len && sgn(v[pivot]) == 0) ++pivot;
    if (pivot == len) {
      std::vector<BigInt> coeffs;
      coeffs.reserve(combo.size());
      for (auto& c : combo) {
        if (c.get_den() != 1) throw std::logic_error("minimal_polynomial: non-integral coefficient");
        coeffs.emplace_back(c.get_num());
      }
      return IntPolynomial(std::move(coeffs));
    }
    basis.push_back({pivot, std::move(v), std::move(combo)});
    power = power * a;
  }
  throw std::logic_error("minimal_polynomial: no relation up to degree n");
}

ScaledResolvent scaled_resolvent(const IntMatrix& c, const AlgebraicNumber& mu) {
  if (!c.square()) throw std::invalid_argument("scaled_resolvent of a non-square matrix");
  const std::size_t n = c.rows();
  IntPolynomial m = minimal_polynomial(c);
  AlgebraicNumber mval = m.evaluate(mu);
  if (mval.is_zero()) {
    throw MuIsEigenvalue("mu = " + mu.to_string() + " is a root of the minimal polynomial " + m.to_string());
  }
  const int d = m.degree() - 1;

  // a_d = 1, a_{j-1} = mu * a_j + c_j.
  std::vector<AlgebraicNumber> a(static_cast<std::size_t>(d) + 1);
  a[d] = AlgebraicNumber(1L);
  for (int j = d; j >= 1; --j) a[j - 1] = mu * a[j] + AlgebraicNumber(m.coeff(static_cast<unsigned>(j)));

  FieldMatrix result(n, n);
  IntMatrix power = IntMatrix::identity(n);
  for (int j = 0; j <= d; ++j) {
    if (j > 0) power = power * c;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        if (power(r, s) != 0) result(r, s) += a[j] * AlgebraicNumber(power(r, s));
      }
    }
  }

  FieldMatrix shifted = mu * FieldMatrix::identity(n) - FieldMatrix(c);
  if (!(result * shifted == mval * FieldMatrix::identity(n))) {
    throw std::logic_error("scaled_resolvent: N (mu I - C) != m(mu) I");
  }
  return {std::move(result), std::move(mval), std::move(m)};
}

std::size_t field_rank(const FieldMatrix& input) {
  FieldMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && m(p, col).is_zero()) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(rank, j));
    }
    AlgebraicNumber inv = m(rank, col).inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m(i, col).is_zero()) continue;
      AlgebraicNumber f = m(i, col) * inv;
      for (std::size_t j = col; j < cols; ++j) {
        if (!m(rank, j).is_zero()) m(i, j) -= f * m(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace starcomp
