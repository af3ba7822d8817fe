#pragma once

#include <optional>
#include <vector>

#include "qhopf/matrix.hpp"

namespace qhopf {

/// Incremental exact row echelon form over sparse vectors.
/// insert() keeps a semi-reduced basis; finalize() brings it to reduced form.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  /// Returns true when v was independent of the current span.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v);
  /// Reduces v against the current basis; result is zero iff v is in the span.
  SparseVector reduce(const SparseVector& v);
  /// Full back-substitution, pivots scaled to 1.
  void finalize();
  bool finalized() const { return finalized_; }

  /// Basis rows in insertion order (reduced form after finalize()).
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivot_col_; }
  /// Columns without a pivot, ascending.
  std::vector<std::size_t> free_columns() const;

 private:
  SparseVector reduce_impl(const SparseVector& v);

  std::size_t width_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivot_col_;
  std::vector<long> pivot_row_;  // per column, -1 if none
  bool finalized_ = false;
  std::vector<Rational> dense_;
  std::vector<char> live_;
  std::vector<std::size_t> touched_;
};

std::size_t rank(const Matrix& a);

/// Columns form a basis of {x : a x = 0}.
Matrix kernel(const Matrix& a);

struct SolveResult {
  std::optional<Matrix> particular;  ///< cols = number of right-hand sides
  Matrix kernel;
};

/// Solves a x = b for every column of b. particular is empty when any
/// column is inconsistent.
SolveResult solve(const Matrix& a, const Matrix& b);

struct Cokernel {
  Matrix projection;  ///< (rows(a) - rank) x rows(a)
  Matrix section;     ///< rows(a) x (rows(a) - rank), projection * section = id
};

Cokernel cokernel(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

/// Basis (as columns) of the column space of a.
Matrix column_space(const Matrix& a);

/// Basis of the intersection of the column spans of a and b.
Matrix intersect_spans(const Matrix& a, const Matrix& b);

/// True when every column of b lies in the column span of a.
bool span_contains(const Matrix& a, const Matrix& b);

}  // namespace qhopf
