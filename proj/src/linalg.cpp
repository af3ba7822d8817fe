#include "qhopf/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace qhopf {

RowEchelon::RowEchelon(std::size_t width)
    : width_(width), pivot_row_(width, -1), dense_(width), live_(width, 0) {}

SparseVector RowEchelon::reduce_impl(const SparseVector& v) {
  std::priority_queue<long, std::vector<long>, std::greater<>> todo;
  auto touch = [&](std::size_t j) {
    if (!live_[j]) {
      live_[j] = 1;
      touched_.push_back(j);
    }
  };
  for (const auto& [j, x] : v.entries) {
    if (j >= width_) throw std::out_of_range("RowEchelon: vector index beyond width");
    touch(j);
    dense_[j] = x;
    if (pivot_row_[j] >= 0) todo.push(pivot_row_[j]);
  }
  long last = -1;
  while (!todo.empty()) {
    long k = todo.top();
    todo.pop();
    if (k == last) continue;
    last = k;
    std::size_t p = pivot_col_[k];
    if (dense_[p].is_zero()) continue;
    Rational c = dense_[p];
    for (const auto& [j, x] : rows_[k].entries) {
      if (!live_[j]) {
        touch(j);
        dense_[j] = -(c * x);
        if (pivot_row_[j] > k) todo.push(pivot_row_[j]);
      } else {
        bool was_zero = dense_[j].is_zero();
        dense_[j] -= c * x;
        if (was_zero && pivot_row_[j] > k) todo.push(pivot_row_[j]);
      }
    }
  }
  std::sort(touched_.begin(), touched_.end());
  SparseVector r;
  for (std::size_t j : touched_) {
    if (!dense_[j].is_zero()) r.entries.emplace_back(j, std::move(dense_[j]));
    dense_[j] = Rational();
    live_[j] = 0;
  }
  touched_.clear();
  return r;
}

SparseVector RowEchelon::reduce(const SparseVector& v) { return reduce_impl(v); }

bool RowEchelon::contains(const SparseVector& v) { return reduce_impl(v).empty(); }

bool RowEchelon::insert(const SparseVector& v) {
  SparseVector r = reduce_impl(v);
  if (r.empty()) return false;
  std::size_t p = r.entries.front().first;
  Rational inv = r.entries.front().second.inverse();
  r.scale(inv);
  pivot_row_[p] = static_cast<long>(rows_.size());
  pivot_col_.push_back(p);
  rows_.push_back(std::move(r));
  finalized_ = false;
  return true;
}

void RowEchelon::finalize() {
  if (finalized_) return;
  Accumulator acc(width_);
  for (std::size_t k = rows_.size(); k-- > 0;) {
    bool needs = false;
    for (const auto& [j, x] : rows_[k].entries)
      if (j != pivot_col_[k] && pivot_row_[j] >= 0) needs = true;
    if (!needs) continue;
    acc.add(rows_[k], Rational(1));
    for (const auto& [j, x] : rows_[k].entries)
      if (j != pivot_col_[k] && pivot_row_[j] >= 0) acc.add(rows_[pivot_row_[j]], -x);
    rows_[k] = acc.take();
  }
  finalized_ = true;
}

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> f;
  for (std::size_t j = 0; j < width_; ++j)
    if (pivot_row_[j] < 0) f.push_back(j);
  return f;
}

std::size_t rank(const Matrix& a) {
  RowEchelon e(a.rows());
  for (const auto& c : a.columns()) e.insert(c);
  return e.rank();
}

namespace {

Matrix kernel_from_echelon(const RowEchelon& e, std::size_t n) {
  std::vector<long> pos(e.width(), -1);
  auto freec = e.free_columns();
  std::vector<std::size_t> kept;
  for (std::size_t f : freec)
    if (f < n) {
      pos[f] = static_cast<long>(kept.size());
      kept.push_back(f);
    }
  std::vector<SparseVector> cols(kept.size());
  for (std::size_t k = 0; k < e.rank(); ++k) {
    std::size_t p = e.pivots()[k];
    if (p >= n) continue;
    for (const auto& [j, x] : e.rows()[k].entries)
      if (j != p && j < n && pos[j] >= 0) cols[pos[j]].entries.emplace_back(p, -x);
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    cols[i].entries.emplace_back(kept[i], Rational(1));
    cols[i].normalize();
  }
  return Matrix::from_columns(n, std::move(cols));
}

}  // namespace

Matrix kernel(const Matrix& a) {
  Matrix t = a.transpose();
  RowEchelon e(a.cols());
  for (const auto& row : t.columns()) e.insert(row);
  e.finalize();
  return kernel_from_echelon(e, a.cols());
}

SolveResult solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  std::size_t n = a.cols(), m = b.cols();
  Matrix aug = hstack({a, b}).transpose();
  RowEchelon e(n + m);
  for (const auto& row : aug.columns()) e.insert(row);
  e.finalize();
  SolveResult res;
  res.kernel = kernel_from_echelon(e, n);
  for (std::size_t p : e.pivots())
    if (p >= n) return res;
  Matrix x(n, m);
  std::vector<SparseVector> cols(m);
  for (std::size_t k = 0; k < e.rank(); ++k)
    for (const auto& [j, v] : e.rows()[k].entries)
      if (j >= n) cols[j - n].entries.emplace_back(e.pivots()[k], v);
  for (std::size_t t = 0; t < m; ++t) {
    cols[t].normalize();
    x.set_column(t, std::move(cols[t]));
  }
  res.particular = std::move(x);
  return res;
}

Cokernel cokernel(const Matrix& a) {
  std::size_t m = a.rows();
  RowEchelon e(m);
  for (const auto& c : a.columns()) e.insert(c);
  e.finalize();
  auto freec = e.free_columns();
  std::vector<long> pos(m, -1);
  for (std::size_t i = 0; i < freec.size(); ++i) pos[freec[i]] = static_cast<long>(i);
  Matrix proj(freec.size(), m);
  for (std::size_t f : freec) proj.set_column(f, SparseVector::unit(pos[f]));
  for (std::size_t k = 0; k < e.rank(); ++k) {
    SparseVector v;
    for (const auto& [j, x] : e.rows()[k].entries)
      if (j != e.pivots()[k]) v.entries.emplace_back(pos[j], -x);
    v.normalize();
    proj.set_column(e.pivots()[k], std::move(v));
  }
  Matrix sec(m, freec.size());
  for (std::size_t i = 0; i < freec.size(); ++i) sec.set_column(i, SparseVector::unit(freec[i]));
  return {std::move(proj), std::move(sec)};
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (a.is_identity()) return a;
  SolveResult r = solve(a, Matrix::identity(a.rows()));
  if (!r.particular || r.kernel.cols() != 0) return std::nullopt;
  return r.particular;
}

Matrix column_space(const Matrix& a) {
  RowEchelon e(a.rows());
  for (const auto& c : a.columns()) e.insert(c);
  e.finalize();
  return Matrix::from_columns(a.rows(), e.rows());
}

Matrix intersect_spans(const Matrix& a, const Matrix& b) {
  Matrix k = kernel(hstack({a, b * Rational(-1)}));
  return column_space(a * k.row_block(0, a.cols()));
}

bool span_contains(const Matrix& a, const Matrix& b) {
  RowEchelon e(a.rows());
  for (const auto& c : a.columns()) e.insert(c);
  for (const auto& c : b.columns())
    if (!e.contains(c)) return false;
  return true;
}

}  // namespace qhopf
