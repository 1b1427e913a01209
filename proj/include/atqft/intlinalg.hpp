#pragma once

// Exact integer and rational linear algebra: Smith normal form with
// transforms, fraction-free determinants and rational inverses.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace atqft {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);
  static IntMatrix diagonal(std::initializer_list<long> entries);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntMatrix transpose() const;
  IntMatrix operator-() const;
  /// Rows [r0, r1) and columns [c0, c1).
  IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Matrix of exact rationals; entries are kept canonical by GMP.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(const IntMatrix& m);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  RationalMatrix transpose() const;
  bool is_integral() const;
  /// Throws InvalidArgumentError unless every entry is an integer.
  IntMatrix to_integer() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// u * m * v == d with u, v unimodular and d in Smith normal form.
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  /// The min(rows, cols) diagonal entries of d.
  std::vector<Integer> diagonal() const;
  /// Number of nonzero invariant factors.
  std::size_t rank() const;
};

SnfDecomposition snf(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant. Throws NonSquareError.
Integer det(const IntMatrix& m);

/// Exact inverse over Q. Throws NonSquareError or SingularMatrixError.
RationalMatrix rational_inverse(const IntMatrix& m);

/// Inverse of a unimodular matrix, as an integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Representative of r in [0, 1).
Rational mod_one(const Rational& r);

/// floor(a / b), b != 0.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace atqft
