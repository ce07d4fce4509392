#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxeter/algebraic_real.hpp"

namespace coxeter {

/// A vector of V in simple-root coordinates.
class RootVector {
 public:
  RootVector(const FieldContext& field, std::size_t dim);
  explicit RootVector(std::vector<AlgReal> coords);
  /// Rational coordinates, e.g. {2, 1} for 2a_1 + a_2.
  RootVector(const FieldContext& field, const std::vector<long>& coords);
  static RootVector simple_root(const FieldContext& field, std::size_t dim, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const AlgReal& operator[](std::size_t i) const { return coords_[i]; }
  AlgReal& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<AlgReal>& coords() const { return coords_; }
  const FieldContext& field() const { return coords_.front().field(); }

  bool is_zero() const;
  RootVector& operator+=(const RootVector& rhs);
  RootVector& operator-=(const RootVector& rhs);
  RootVector& operator*=(const AlgReal& s);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator-(RootVector a);
  friend RootVector operator*(const AlgReal& s, RootVector v) { return v *= s; }
  friend bool operator==(const RootVector& a, const RootVector& b) { return a.coords_ == b.coords_; }

  /// Exact, canonical serialization; equal vectors give equal strings.
  std::string key() const;
  std::string to_string() const;

 private:
  std::vector<AlgReal> coords_;
};

/// Dense row-major matrix over Q(theta).
class Matrix {
 public:
  Matrix(const FieldContext& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldContext& field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldContext& field() const { return *field_; }

  const AlgReal& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  AlgReal& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RootVector column(std::size_t c) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend RootVector operator*(const Matrix& a, const RootVector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.data_ == b.data_; }

  bool is_identity() const;
  std::string key() const;
  std::string to_string() const;

 private:
  const FieldContext* field_;
  std::size_t rows_, cols_;
  std::vector<AlgReal> data_;
};

/// v^T M w.
AlgReal bilinear(const Matrix& m, const RootVector& v, const RootVector& w);

/// Determinant by Gaussian elimination over the field.
AlgReal determinant(Matrix m);

/// Basis of the right kernel, by exact Gaussian elimination with full pivoting.
std::vector<RootVector> kernel_basis(Matrix m);

enum class Definiteness { kPositiveDefinite, kPositiveSemidefinite, kIndefinite };

/// Classifies a symmetric matrix by symmetric elimination with positive
/// diagonal pivots. A psd matrix with a zero diagonal entry has that whole
/// row zero, which is what makes the test exact.
Definiteness classify_symmetric(Matrix m);

}  // namespace coxeter
