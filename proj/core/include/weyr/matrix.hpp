#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "weyr/scalar.hpp"

namespace weyr {

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws DimensionError unless entries.size() == rows*cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
  /// Convenience for small literals: Matrix{{1, 2}, {3, 4}}. Rows must be equally long.
  Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix diagonal(std::span<const GaussianRational> d);
  /// Single column.
  static Matrix column(std::span<const GaussianRational> v);
  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<GaussianRational>& entries() const { return data_; }

  Vector col(std::size_t c) const;
  Vector row(std::size_t r) const;
  bool is_zero() const;

  Matrix transpose() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const GaussianRational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const GaussianRational& s) { return a *= s; }
  friend Matrix operator*(const GaussianRational& s, Matrix a) { return a *= s; }
  Matrix operator-() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const GaussianRational> x);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// [a b]; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a; b]; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);

/// u * v^T.
Matrix outer(std::span<const GaussianRational> u, std::span<const GaussianRational> v);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws PreconditionError if m is singular, DimensionError if not square.
Matrix inverse(const Matrix& m);
/// Exact determinant of a constant matrix.
GaussianRational determinant(const Matrix& m);

}  // namespace weyr
