#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qit {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Dense matrix of exact rationals, row-major. Zero-sized shapes are valid.
///
/// Linear maps act on row vectors from the right (v -> v * M), matching the
/// right-module convention used by representations.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<std::vector<Rational>>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values);
  /// Stacks `other` below this matrix; column counts must agree.
  void append_rows(const Matrix& other);

  [[nodiscard]] Matrix transposed() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Matrix operator*(const Matrix& rhs) const;
  Matrix& operator+=(const Matrix& rhs);
  [[nodiscard]] Matrix scaled(const Rational& s) const;
  /// Copy of the block [r0, r0+nr) x [c0, c0+nc).
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  bool operator==(const Matrix& other) const = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::vector<Rational> operator*(std::span<const Rational> v, const Matrix& m);

/// Reduced row echelon form. `pivots[i]` is the pivot column of row i of `rref`;
/// only the first `pivots.size()` rows of `rref` are nonzero.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of the row space (the nonzero rows of the RREF).
Matrix row_space_basis(const Matrix& m);
/// Basis (as rows) of { x : x * m = 0 }.
Matrix left_kernel(const Matrix& m);
/// Basis (as rows) of { x : m * x^T = 0 }.
Matrix right_kernel(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Coordinates with respect to a basis given as the rows of a full-row-rank
/// matrix B: solve(v) returns x with x * B = v.
class RowSpaceCoordinates {
 public:
  explicit RowSpaceCoordinates(const Matrix& basis);

  [[nodiscard]] std::size_t dimension() const { return pivots_.size(); }
  /// Throws std::domain_error when v is not in the row space.
  [[nodiscard]] std::vector<Rational> solve(std::span<const Rational> v) const;
  [[nodiscard]] Matrix solve(const Matrix& rows) const;
  [[nodiscard]] bool contains(std::span<const Rational> v) const;

 private:
  Matrix rref_;
  Matrix transform_;  // rref_ = transform_ * basis
  std::vector<std::size_t> pivots_;
};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t integer_rank(std::vector<std::vector<Integer>> rows);

}  // namespace qit
