#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

/// Dense square matrix over a FieldSpec, row-major, rows/columns indexed 0..n-1.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix of size n (n >= 1).
  Matrix(FieldSpec field, std::size_t n);

  static Matrix zero(FieldSpec field, std::size_t n) { return Matrix(field, n); }
  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix diagonal(const std::vector<Scalar>& diag);
  /// Builds from integer rows; throws DimensionMismatch unless square.
  static Matrix from_rows(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return n_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  /// Bounds-checked access; throws IndexOutOfRange.
  const Scalar& at(std::size_t i, std::size_t j) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const Scalar& c) { return lhs *= c; }
  friend Matrix operator*(const Scalar& c, Matrix rhs) { return rhs *= c; }
  /// Matrix product (dispatches to mat_mul).
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

  friend bool operator==(const Matrix& lhs, const Matrix& rhs);
  friend bool operator!=(const Matrix& lhs, const Matrix& rhs) { return !(lhs == rhs); }

  bool is_zero() const;
  Scalar trace() const;
  Matrix transpose() const;
  /// Exact Gauss-Jordan with first-nonzero pivoting; throws SingularMatrix.
  Matrix inverse() const;
  /// A - c I.
  Matrix shifted(const Scalar& c) const;
  /// Column j as a vector.
  std::vector<Scalar> column(std::size_t j) const;
  /// Matrix-vector product.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  /// Positions (i, j) of nonzero entries, row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> nonzero_positions() const;

  std::string to_string() const;

 private:
  void require_compatible(const Matrix& rhs) const;

  FieldSpec field_;
  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

/// Exact product, rows distributed across OpenMP threads.
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Single-threaded reference product; kept for testing and benchmarking.
Matrix mat_mul_serial(const Matrix& a, const Matrix& b);

/// The commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace leonard
