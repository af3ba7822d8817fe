#include "qhopf/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhopf {

Rational SparseVector::get(std::size_t i) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), i,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != entries.end() && it->first == i) return it->second;
  return Rational();
}

void SparseVector::normalize() {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::size_t, Rational>> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  entries = std::move(out);
}

void SparseVector::scale(const Rational& c) {
  if (c.is_zero()) {
    entries.clear();
    return;
  }
  for (auto& e : entries) e.second *= c;
}

SparseVector SparseVector::unit(std::size_t i, const Rational& c) {
  SparseVector v;
  if (!c.is_zero()) v.entries.emplace_back(i, c);
  return v;
}

SparseVector SparseVector::from_dense(const std::vector<Rational>& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.entries.emplace_back(i, v[i]);
  return s;
}

std::vector<Rational> SparseVector::to_dense(std::size_t n) const {
  std::vector<Rational> d(n);
  for (const auto& [i, c] : entries) d.at(i) = c;
  return d;
}

SparseVector axpy(const SparseVector& x, const Rational& c, const SparseVector& y) {
  SparseVector r;
  r.entries.reserve(x.nnz() + y.nnz());
  std::size_t i = 0, j = 0;
  while (i < x.nnz() || j < y.nnz()) {
    if (j == y.nnz() || (i < x.nnz() && x.entries[i].first < y.entries[j].first)) {
      r.entries.push_back(x.entries[i++]);
    } else if (i == x.nnz() || y.entries[j].first < x.entries[i].first) {
      Rational v = c * y.entries[j].second;
      if (!v.is_zero()) r.entries.emplace_back(y.entries[j].first, std::move(v));
      ++j;
    } else {
      Rational v = x.entries[i].second + c * y.entries[j].second;
      if (!v.is_zero()) r.entries.emplace_back(x.entries[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

void Accumulator::resize(std::size_t n) {
  val_.assign(n, Rational());
  live_.assign(n, 0);
  touched_.clear();
}

void Accumulator::add(std::size_t i, const Rational& c) {
  if (c.is_zero()) return;
  if (!live_[i]) {
    live_[i] = 1;
    touched_.push_back(i);
    val_[i] = c;
  } else {
    val_[i] += c;
  }
}

void Accumulator::add(const SparseVector& v, const Rational& c) {
  if (c.is_zero()) return;
  if (c.is_one()) {
    for (const auto& [i, x] : v.entries) add(i, x);
  } else {
    for (const auto& [i, x] : v.entries) add(i, x * c);
  }
}

SparseVector Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVector r;
  r.entries.reserve(touched_.size());
  for (std::size_t i : touched_) {
    if (!val_[i].is_zero()) r.entries.emplace_back(i, std::move(val_[i]));
    val_[i] = Rational();
    live_[i] = 0;
  }
  touched_.clear();
  return r;
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

Matrix Matrix::scalar(std::size_t n, const Rational& c) {
  Matrix m(n, n);
  if (!c.is_zero())
    for (std::size_t i = 0; i < n; ++i) m.col_[i] = SparseVector::unit(i, c);
  return m;
}

Matrix Matrix::from_dense(std::size_t rows, std::size_t cols, const std::vector<Rational>& data) {
  if (data.size() != rows * cols) throw std::invalid_argument("from_dense: size mismatch");
  Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if (!data[r * cols + c].is_zero()) m.col_[c].entries.emplace_back(r, data[r * cols + c]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
  std::vector<Rational> flat;
  flat.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_dense(r, c, flat);
}

Matrix Matrix::from_columns(std::size_t rows, std::vector<SparseVector> cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!cols[c].empty() && cols[c].entries.back().first >= rows)
      throw std::out_of_range("from_columns: row index out of range");
    m.col_[c] = std::move(cols[c]);
  }
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : col_) n += c.nnz();
  return n;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t c = 0; c < cols_; ++c)
    if (col_[c].nnz() != 1 || col_[c].entries[0].first != c || !col_[c].entries[0].second.is_one())
      return false;
  return true;
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::set");
  auto& e = col_[c].entries;
  auto it = std::lower_bound(e.begin(), e.end(), r, [](const auto& x, std::size_t k) { return x.first < k; });
  if (it != e.end() && it->first == r) {
    if (v.is_zero())
      e.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    e.insert(it, {r, v});
  }
}

void Matrix::set_column(std::size_t c, SparseVector v) {
  if (!v.empty() && v.entries.back().first >= rows_) throw std::out_of_range("set_column");
  col_.at(c) = std::move(v);
}

std::vector<Rational> Matrix::to_dense() const {
  std::vector<Rational> d(rows_ * cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : col_[c].entries) d[r * cols_ + c] = v;
  return d;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : col_[c].entries) t.col_[r].entries.emplace_back(c, v);
  return t;
}

SparseVector Matrix::apply(const SparseVector& v) const {
  Accumulator acc(rows_);
  for (const auto& [j, x] : v.entries) acc.add(col_.at(j), x);
  return acc.take();
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  return apply(SparseVector::from_dense(v)).to_dense(rows_);
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  Matrix m(rows_, count);
  for (std::size_t c = 0; c < count; ++c) m.col_[c] = col_.at(first + c);
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) m.col_[c] = col_.at(idx[c]);
  return m;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  Matrix m(count, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : col_[c].entries)
      if (r >= first && r < first + count) m.col_[c].entries.emplace_back(r - first, v);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix product: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " times " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Matrix m(rows_, o.cols_);
  Accumulator acc(rows_);
  for (std::size_t j = 0; j < o.cols_; ++j) {
    const auto& oc = o.col_[j];
    if (oc.empty()) continue;
    if (oc.nnz() == 1 && oc.entries[0].second.is_one()) {
      m.col_[j] = col_[oc.entries[0].first];
      continue;
    }
    for (const auto& [k, x] : oc.entries) acc.add(col_[k], x);
    m.col_[j] = acc.take();
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) m.col_[c] = axpy(col_[c], Rational(1), o.col_[c]);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) m.col_[c] = axpy(col_[c], Rational(-1), o.col_[c]);
  return m;
}

Matrix Matrix::operator*(const Rational& c) const {
  Matrix m = *this;
  for (auto& col : m.col_) col.scale(c);
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_ == b.col_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ca = 0; ca < a.cols(); ++ca) {
    const auto& ac = a.column(ca);
    for (std::size_t cb = 0; cb < b.cols(); ++cb) {
      const auto& bc = b.column(cb);
      SparseVector v;
      v.entries.reserve(ac.nnz() * bc.nnz());
      for (const auto& [ra, xa] : ac.entries)
        for (const auto& [rb, xb] : bc.entries) v.entries.emplace_back(ra * b.rows() + rb, xa * xb);
      m.set_column(ca * b.cols() + cb, std::move(v));
    }
  }
  return m;
}

Matrix kron(const std::vector<const Matrix*>& factors) {
  Matrix r = Matrix::identity(1);
  for (const Matrix* f : factors) r = kron(r, *f);
  return r;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t rows = blocks[0].rows();
  std::vector<SparseVector> cols;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols.insert(cols.end(), b.columns().begin(), b.columns().end());
  }
  return Matrix::from_columns(rows, std::move(cols));
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t cols = blocks[0].cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  std::vector<SparseVector> out(cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t c = 0; c < cols; ++c)
      for (const auto& [r, v] : b.column(c).entries) out[c].entries.emplace_back(r + off, v);
    off += b.rows();
  }
  return Matrix::from_columns(rows, std::move(out));
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) m.set_column(c, a.column(c));
  for (std::size_t c = 0; c < b.cols(); ++c) {
    SparseVector v;
    for (const auto& [r, x] : b.column(c).entries) v.entries.emplace_back(r + a.rows(), x);
    m.set_column(a.cols() + c, std::move(v));
  }
  return m;
}

std::size_t LegShape::total() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

std::size_t LegShape::flatten(const std::vector<std::size_t>& idx) const {
  if (idx.size() != dims_.size()) throw std::invalid_argument("flatten: leg count mismatch");
  std::size_t f = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (idx[k] >= dims_[k]) throw std::out_of_range("flatten: index out of range");
    f = f * dims_[k] + idx[k];
  }
  return f;
}

std::vector<std::size_t> LegShape::unflatten(std::size_t flat) const {
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return idx;
}

Matrix embed_block(const Matrix& op, std::size_t outer, std::size_t inner) {
  return kron(kron(Matrix::identity(outer), op), Matrix::identity(inner));
}

Matrix leg_permutation(const LegShape& in, const std::vector<std::size_t>& perm) {
  if (perm.size() != in.legs()) throw std::invalid_argument("leg_permutation: wrong arity");
  std::vector<std::size_t> out_dims;
  for (std::size_t p : perm) out_dims.push_back(in.dim(p));
  LegShape out(out_dims);
  std::size_t n = in.total();
  Matrix m(n, n);
  std::vector<std::size_t> oi(perm.size());
  for (std::size_t f = 0; f < n; ++f) {
    auto ii = in.unflatten(f);
    for (std::size_t k = 0; k < perm.size(); ++k) oi[k] = ii[perm[k]];
    m.set_column(f, SparseVector::unit(out.flatten(oi)));
  }
  return m;
}

}  // namespace qhopf
