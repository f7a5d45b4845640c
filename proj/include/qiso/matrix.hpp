#pragma once

#include "qiso/cyclotomic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qiso {

/// Dense matrix over Q(zeta_N). All entries share the matrix order N;
/// mixing matrices of different order lifts both to the common order.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, int order = 1);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries);

  static Matrix identity(std::size_t n, int order = 1);
  static Matrix zeros(std::size_t rows, std::size_t cols, int order = 1) { return Matrix(rows, cols, order); }
  static Matrix scalar(const Cyclotomic& value, std::size_t n = 1);
  /// Builds from a row-major grid of scalars.
  static Matrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  int order() const { return order_; }

  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Sets an entry, lifting the matrix or value to their common order.
  void set(std::size_t r, std::size_t c, const Cyclotomic& value);

  bool is_zero() const;
  std::size_t nonzero_count() const;

  Matrix lifted(int order) const;
  Matrix adjoint() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Cyclotomic& s, const Matrix& m);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Squared Frobenius norm sum |m_ij|^2 as an exact (real) cyclotomic value.
  Cyclotomic frobenius_norm_sq() const;

  /// Row-major grid of scalar literals.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int order_ = 1;
  std::vector<Cyclotomic> entries_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& m, unsigned exponent);
/// Assembles a block matrix; every block in a block-row shares its height and
/// every block in a block-column shares its width.
Matrix block_matrix(const std::vector<std::vector<Matrix>>& blocks);

struct MatrixFlags {
  bool is_unitary = false;
  bool is_projection = false;
  bool is_partial_isometry = false;
  bool is_self_adjoint = false;
};

/// Exact structural classification; square-only flags are false for
/// non-square input.
MatrixFlags classify(const Matrix& m);

struct MagicUnitaryReport {
  bool ok = false;
  /// Human-readable description of the first failure, if any.
  std::string first_failure;
};

/// Checks that every cell is an orthogonal projection and every row and column
/// sums to the identity. Throws std::invalid_argument when the cells are not
/// square matrices of one common dimension.
MagicUnitaryReport is_magic_unitary(const std::vector<std::vector<Matrix>>& grid);

}  // namespace qiso
