#include "qhopf/quasi_hopf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qhopf/linalg.hpp"

namespace qhopf {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void require_size(const std::vector<Rational>& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw StructureError(std::string(what) + ": expected " + std::to_string(n) + " entries, got " +
                         std::to_string(v.size()));
}

}  // namespace

Tensor::Tensor(std::size_t n_, std::size_t legs_) : n(n_), legs(legs_), c(ipow(n_, legs_)) {}

bool Tensor::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_zero(); });
}

void Tensor::for_each(const std::function<void(const std::vector<std::size_t>&, const Rational&)>& fn) const {
  std::vector<std::size_t> idx(legs, 0);
  for (std::size_t f = 0; f < c.size(); ++f) {
    if (!c[f].is_zero()) {
      std::size_t r = f;
      for (std::size_t k = legs; k-- > 0;) {
        idx[k] = r % n;
        r /= n;
      }
      fn(idx, c[f]);
    }
  }
}

std::size_t Tensor::flat(const std::vector<std::size_t>& idx) const {
  std::size_t f = 0;
  for (std::size_t i : idx) f = f * n + i;
  return f;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (o.legs != legs || o.n != n) throw std::invalid_argument("tensor sum: shape mismatch");
  Tensor r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + o * Rational(-1); }

Tensor Tensor::operator*(const Rational& s) const {
  Tensor r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

std::string Tensor::str(const std::vector<std::string>& basis) const {
  std::ostringstream os;
  bool first = true;
  for_each([&](const std::vector<std::size_t>& idx, const Rational& x) {
    os << (first ? "" : " + ") << "(" << x << ")";
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "(x)" : " ") << basis[idx[k]];
    first = false;
  });
  if (first) os << "0";
  return os.str();
}

QuasiHopfAlgebra::QuasiHopfAlgebra(AlgebraData data) : d_(std::move(data)) {
  const std::size_t n = d_.dim;
  if (n == 0) throw StructureError("algebra dimension must be positive");
  if (d_.basis.empty())
    for (std::size_t i = 0; i < n; ++i) d_.basis.push_back("e" + std::to_string(i));
  if (d_.basis.size() != n) throw StructureError("basis: expected " + std::to_string(n) + " names");
  require_size(d_.mult, n * n * n, "mult");
  require_size(d_.unit, n, "unit");
  require_size(d_.comult, n * n * n, "comult");
  require_size(d_.counit, n, "counit");
  require_size(d_.phi, n * n * n, "phi");
  if (!d_.phi_inv.empty()) require_size(d_.phi_inv, n * n * n, "phi_inv");
  require_size(d_.antipode, n * n, "antipode");
  if (!d_.antipode_inv.empty()) require_size(d_.antipode_inv, n * n, "antipode_inv");
  require_size(d_.alpha, n, "alpha");
  require_size(d_.beta, n, "beta");

  prod_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& x = d_.mult[(i * n + j) * n + k];
        if (!x.is_zero()) prod_[i * n + j].entries.emplace_back(k, x);
      }
  coprod_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jk = 0; jk < n * n; ++jk) {
      const Rational& x = d_.comult[i * n * n + jk];
      if (!x.is_zero()) coprod_[i].entries.emplace_back(jk, x);
    }
  s_ = Matrix::from_dense(n, n, d_.antipode);

  if (!d_.antipode_inv.empty()) {
    s_inv_ = Matrix::from_dense(n, n, d_.antipode_inv);
  } else {
    s_inv_ = inverse(s_);
    if (s_inv_) d_.antipode_inv = s_inv_->to_dense();
  }

  if (!d_.phi_inv.empty()) {
    Tensor t(n, 3);
    t.c = d_.phi_inv;
    phi_inv_ = t;
  } else {
    // Solve Phi * X = 1 in H^(x)3 through the left-multiplication matrix.
    Tensor p = phi();
    Matrix lm(n * n * n, n * n * n);
    for (std::size_t f = 0; f < n * n * n; ++f) {
      Tensor e(n, 3);
      e.c[f] = Rational(1);
      lm.set_column(f, SparseVector::from_dense(mul(p, e).c));
    }
    Tensor u = one(3);
    auto sol = solve(lm, Matrix::from_columns(n * n * n, {SparseVector::from_dense(u.c)}));
    if (sol.particular && sol.kernel.cols() == 0) {
      Tensor t(n, 3);
      t.c = sol.particular->column(0).to_dense(n * n * n);
      phi_inv_ = t;
      d_.phi_inv = t.c;
    }
  }
}

Tensor QuasiHopfAlgebra::one(std::size_t legs) const {
  Tensor t(d_.dim, 0);
  t.c = {Rational(1)};
  Tensor u = element(d_.unit);
  for (std::size_t k = 0; k < legs; ++k) t = outer(t, u);
  return t;
}

Tensor QuasiHopfAlgebra::element(const std::vector<Rational>& v) const {
  require_size(v, d_.dim, "element");
  Tensor t(d_.dim, 1);
  t.c = v;
  return t;
}

Tensor QuasiHopfAlgebra::basis_element(std::size_t i) const {
  Tensor t(d_.dim, 1);
  t.c.at(i) = Rational(1);
  return t;
}

Tensor QuasiHopfAlgebra::phi() const {
  Tensor t(d_.dim, 3);
  t.c = d_.phi;
  return t;
}

Tensor QuasiHopfAlgebra::outer(const Tensor& a, const Tensor& b) const {
  Tensor r(d_.dim, a.legs + b.legs);
  std::size_t m = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j)
      if (!b.c[j].is_zero()) r.c[i * m + j] = a.c[i] * b.c[j];
  }
  return r;
}

Tensor QuasiHopfAlgebra::mul(const Tensor& a, const Tensor& b) const {
  if (a.legs != b.legs) throw std::invalid_argument("tensor product of different leg counts");
  const std::size_t n = d_.dim, k = a.legs;
  Tensor r(n, k);
  std::vector<const SparseVector*> fac(k);
  std::vector<std::size_t> pos(k);
  a.for_each([&](const std::vector<std::size_t>& ia, const Rational& x) {
    b.for_each([&](const std::vector<std::size_t>& ib, const Rational& y) {
      for (std::size_t l = 0; l < k; ++l) {
        fac[l] = &prod(ia[l], ib[l]);
        if (fac[l]->empty()) return;
        pos[l] = 0;
      }
      Rational xy = x * y;
      // odometer over the legwise product terms
      while (true) {
        std::size_t f = 0;
        Rational c = xy;
        for (std::size_t l = 0; l < k; ++l) {
          const auto& e = fac[l]->entries[pos[l]];
          f = f * n + e.first;
          c *= e.second;
        }
        r.c[f] += c;
        bool done = true;
        for (std::size_t l = k; l-- > 0;) {
          if (++pos[l] < fac[l]->nnz()) {
            done = false;
            break;
          }
          pos[l] = 0;
        }
        if (done) break;
      }
    });
  });
  return r;
}

Tensor QuasiHopfAlgebra::mul(std::initializer_list<Tensor> fs) const {
  auto it = fs.begin();
  Tensor r = *it;
  for (++it; it != fs.end(); ++it) r = mul(r, *it);
  return r;
}

Tensor QuasiHopfAlgebra::delta(const Tensor& t, std::size_t leg) const {
  if (leg >= t.legs) throw std::out_of_range("delta: leg out of range");
  const std::size_t n = d_.dim;
  Tensor r(n, t.legs + 1);
  std::vector<std::size_t> out(t.legs + 1);
  t.for_each([&](const std::vector<std::size_t>& idx, const Rational& x) {
    for (const auto& [jk, y] : coprod_[idx[leg]].entries) {
      for (std::size_t l = 0, o = 0; l < t.legs; ++l) {
        if (l == leg) {
          out[o++] = jk / n;
          out[o++] = jk % n;
        } else {
          out[o++] = idx[l];
        }
      }
      r.c[r.flat(out)] += x * y;
    }
  });
  return r;
}

Tensor QuasiHopfAlgebra::eps(const Tensor& t, std::size_t leg) const {
  if (leg >= t.legs) throw std::out_of_range("eps: leg out of range");
  Tensor r(d_.dim, t.legs - 1);
  std::vector<std::size_t> out(t.legs - 1);
  t.for_each([&](const std::vector<std::size_t>& idx, const Rational& x) {
    const Rational& e = d_.counit[idx[leg]];
    if (e.is_zero()) return;
    for (std::size_t l = 0, o = 0; l < t.legs; ++l)
      if (l != leg) out[o++] = idx[l];
    r.c[r.flat(out)] += x * e;
  });
  return r;
}

Tensor QuasiHopfAlgebra::antipode(const Tensor& t, std::size_t leg, bool inv) const {
  if (leg >= t.legs) throw std::out_of_range("antipode: leg out of range");
  if (inv && !s_inv_) throw std::domain_error("antipode is not invertible");
  const Matrix& m = inv ? *s_inv_ : s_;
  Tensor r(d_.dim, t.legs);
  std::vector<std::size_t> out(t.legs);
  t.for_each([&](const std::vector<std::size_t>& idx, const Rational& x) {
    out = idx;
    for (const auto& [j, y] : m.column(idx[leg]).entries) {
      out[leg] = j;
      r.c[r.flat(out)] += x * y;
    }
  });
  return r;
}

Tensor QuasiHopfAlgebra::insert(const Tensor& t, std::size_t pos, const Tensor& x) const {
  if (x.legs != 1 || pos > t.legs) throw std::invalid_argument("insert: bad arguments");
  std::vector<std::size_t> perm;
  Tensor o = outer(t, x);
  for (std::size_t l = 0; l < pos; ++l) perm.push_back(l);
  perm.push_back(t.legs);
  for (std::size_t l = pos; l < t.legs; ++l) perm.push_back(l);
  return permute(o, perm);
}

Tensor QuasiHopfAlgebra::merge(const Tensor& t, std::size_t pos) const {
  if (pos + 1 >= t.legs) throw std::out_of_range("merge: leg out of range");
  Tensor r(d_.dim, t.legs - 1);
  std::vector<std::size_t> out(t.legs - 1);
  t.for_each([&](const std::vector<std::size_t>& idx, const Rational& x) {
    for (std::size_t l = 0, o = 0; l < t.legs; ++l) {
      if (l == pos + 1) continue;
      out[o++] = idx[l];
    }
    for (const auto& [k, y] : prod(idx[pos], idx[pos + 1]).entries) {
      out[pos] = k;
      r.c[r.flat(out)] += x * y;
    }
  });
  return r;
}

Tensor QuasiHopfAlgebra::permute(const Tensor& t, const std::vector<std::size_t>& perm) const {
  if (perm.size() != t.legs) throw std::invalid_argument("permute: wrong arity");
  Tensor r(d_.dim, t.legs);
  std::vector<std::size_t> out(t.legs);
  t.for_each([&](const std::vector<std::size_t>& idx, const Rational& x) {
    for (std::size_t k = 0; k < perm.size(); ++k) out[k] = idx[perm[k]];
    r.c[r.flat(out)] += x;
  });
  return r;
}

Tensor QuasiHopfAlgebra::spread(const Tensor& t, const std::vector<std::vector<std::size_t>>& groups,
                                std::size_t total) const {
  if (groups.size() != t.legs) throw std::invalid_argument("spread: one group per leg required");
  Tensor r = t;
  std::vector<std::size_t> order;  // output position of each current leg
  std::size_t leg = 0;
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument("spread: empty group");
    for (std::size_t k = 1; k < g.size(); ++k) r = delta(r, leg);
    order.insert(order.end(), g.begin(), g.end());
    leg += g.size();
  }
  std::vector<char> used(total, 0);
  for (std::size_t p : order) {
    if (p >= total || used[p]) throw std::invalid_argument("spread: bad placement");
    used[p] = 1;
  }
  Tensor u = element(d_.unit);
  for (std::size_t p = 0; p < total; ++p)
    if (!used[p]) {
      r = outer(r, u);
      order.push_back(p);
    }
  std::vector<std::size_t> perm(total);
  for (std::size_t l = 0; l < total; ++l) perm[order[l]] = l;
  return permute(r, perm);
}

Tensor QuasiHopfAlgebra::collapse(const Tensor& t) const {
  Tensor r = t;
  while (r.legs > 1) r = merge(r, 0);
  return r;
}

Matrix QuasiHopfAlgebra::left_mult(std::size_t i) const {
  const std::size_t n = d_.dim;
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, prod(i, j));
  return m;
}

Matrix QuasiHopfAlgebra::right_mult(std::size_t i) const {
  const std::size_t n = d_.dim;
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, prod(j, i));
  return m;
}

Matrix QuasiHopfAlgebra::left_mult(const Tensor& a) const {
  Matrix m(d_.dim, d_.dim);
  for (std::size_t i = 0; i < d_.dim; ++i)
    if (!a.c[i].is_zero()) m = m + left_mult(i) * a.c[i];
  return m;
}

Matrix QuasiHopfAlgebra::right_mult(const Tensor& a) const {
  Matrix m(d_.dim, d_.dim);
  for (std::size_t i = 0; i < d_.dim; ++i)
    if (!a.c[i].is_zero()) m = m + right_mult(i) * a.c[i];
  return m;
}

}  // namespace qhopf
