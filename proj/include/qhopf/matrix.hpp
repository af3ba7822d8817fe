#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/rational.hpp"

namespace qhopf {

/// Sparse vector: entries sorted by index, no explicit zeros.
struct SparseVector {
  std::vector<std::pair<std::size_t, Rational>> entries;

  bool empty() const { return entries.empty(); }
  std::size_t nnz() const { return entries.size(); }
  Rational get(std::size_t i) const;
  /// Sorts, merges duplicates and drops zeros.
  void normalize();
  void scale(const Rational& c);

  static SparseVector unit(std::size_t i, const Rational& c = Rational(1));
  static SparseVector from_dense(const std::vector<Rational>& v);
  std::vector<Rational> to_dense(std::size_t n) const;

  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries == b.entries; }
};

/// x + c*y
SparseVector axpy(const SparseVector& x, const Rational& c, const SparseVector& y);

/// Dense scratch accumulator reused across many sparse combinations.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n = 0) : val_(n), live_(n, 0) {}
  void resize(std::size_t n);
  void add(std::size_t i, const Rational& c);
  void add(const SparseVector& v, const Rational& c);
  /// Returns accumulated vector and resets the accumulator.
  SparseVector take();

 private:
  std::vector<Rational> val_;
  std::vector<char> live_;
  std::vector<std::size_t> touched_;
};

/// Exact matrix over Q, stored by sparse columns.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_(cols) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Rational& c);
  /// Row-major dense data.
  static Matrix from_dense(std::size_t rows, std::size_t cols, const std::vector<Rational>& data);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_columns(std::size_t rows, std::vector<SparseVector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }
  bool is_identity() const;

  Rational at(std::size_t r, std::size_t c) const { return col_.at(c).get(r); }
  void set(std::size_t r, std::size_t c, const Rational& v);
  const SparseVector& column(std::size_t c) const { return col_[c]; }
  void set_column(std::size_t c, SparseVector v);
  const std::vector<SparseVector>& columns() const { return col_; }

  std::vector<Rational> to_dense() const;  ///< row-major
  Matrix transpose() const;
  SparseVector apply(const SparseVector& v) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  /// Columns [first, first+count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix row_block(std::size_t first, std::size_t count) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Rational& c) const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVector> col_;
};

/// Kronecker product, left factor slowest.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const std::vector<const Matrix*>& factors);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);
/// Block diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Dimensions of a tensor product of legs; leftmost leg varies slowest.
class LegShape {
 public:
  LegShape() = default;
  explicit LegShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}
  std::size_t legs() const { return dims_.size(); }
  std::size_t dim(std::size_t leg) const { return dims_.at(leg); }
  std::size_t total() const;
  std::size_t flatten(const std::vector<std::size_t>& idx) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;
  const std::vector<std::size_t>& dims() const { return dims_; }

 private:
  std::vector<std::size_t> dims_;
};

/// I_outer (x) op (x) I_inner.
Matrix embed_block(const Matrix& op, std::size_t outer, std::size_t inner);

/// Permutation matrix moving leg perm[k] of the input into position k.
Matrix leg_permutation(const LegShape& in, const std::vector<std::size_t>& perm);

}  // namespace qhopf
