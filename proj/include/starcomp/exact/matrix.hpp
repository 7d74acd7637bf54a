#pragma once

#include <cstddef>
#include <vector>

#include "starcomp/exact/algebraic.hpp"
#include "starcomp/exact/polynomial.hpp"

namespace starcomp {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Dense matrix over Q or a single real quadratic field.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, AlgebraicNumber(0L)) {}
  explicit FieldMatrix(const IntMatrix& m);

  static FieldMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  AlgebraicNumber& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const AlgebraicNumber& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// The quadratic field shared by the entries, null when all are rational.
  /// Throws FieldError when two entries disagree.
  FieldPtr field() const;

  FieldMatrix transpose() const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator*(const AlgebraicNumber& s, const FieldMatrix& m);
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<AlgebraicNumber> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& a);

/// det(xI - A), interpolated exactly from det(kI - A) at k = 0..n.
IntPolynomial char_polynomial(const IntMatrix& a);

/// Monic minimal polynomial over Q of an integer square matrix.
IntPolynomial minimal_polynomial(const IntMatrix& a);

/// p(A) for an integer polynomial p.
IntMatrix evaluate(const IntPolynomial& p, const IntMatrix& a);

struct ScaledResolvent {
  FieldMatrix n;          // m(mu) * (mu I - C)^{-1}, a polynomial in C
  AlgebraicNumber mval;   // m(mu)
  IntPolynomial minpoly;  // m
};

/// N = a_d C^d + ... + a_0 I with a_d = 1 and a_{d-i} = mu^i + c_d mu^{i-1} + ... + c_{d-i+1},
/// where m(x) = x^{d+1} + c_d x^d + ... + c_0 is the minimal polynomial of C.
/// Guarantees N (mu I - C) = m(mu) I. Throws MuIsEigenvalue when m(mu) = 0.
ScaledResolvent scaled_resolvent(const IntMatrix& c, const AlgebraicNumber& mu);

/// Rank by exact Gaussian elimination, pivoting on the first nonzero entry.
std::size_t field_rank(const FieldMatrix& m);

}  // namespace starcomp
