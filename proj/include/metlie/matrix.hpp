#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "metlie/rational.hpp"

namespace metlie {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vector& d);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  Rational trace() const;
  Matrix power(std::size_t k) const;

  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  /// Horizontal and vertical concatenation.
  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);

  Vector operator*(const Vector& v) const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b);

  const std::vector<Rational>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);

}  // namespace metlie
