#include "qhopf/module.hpp"

#include "qhopf/linalg.hpp"

namespace qhopf {

HModule HModule::unchecked(const Algebra& alg, std::vector<Matrix> action, std::string name) {
  if (action.size() != alg.dim()) throw StructureError("module: need one matrix per basis element");
  std::size_t d = action[0].rows();
  for (const auto& m : action)
    if (m.rows() != d || m.cols() != d) throw StructureError("module: action matrices must be square of equal size");
  HModule r;
  auto data = std::make_shared<Data>();
  data->alg = alg;
  data->dim = d;
  data->action = std::move(action);
  data->name = std::move(name);
  r.d_ = std::move(data);
  return r;
}

HModule HModule::create(const Algebra& alg, std::vector<Matrix> action, std::string name) {
  HModule r = unchecked(alg, std::move(action), std::move(name));
  Report rep = r.verify();
  if (!rep.all_pass()) throw ValidationError("not a module: " + rep.failures().front(), rep);
  return r;
}

Matrix HModule::act(const Tensor& h) const {
  if (h.legs != 1) throw std::invalid_argument("act: expected a one-leg element");
  Matrix r(dim(), dim());
  for (std::size_t i = 0; i < h.c.size(); ++i)
    if (!h.c[i].is_zero()) r = r + act(i) * h.c[i];
  return r;
}

Report HModule::verify() const {
  Report rep;
  const auto& q = algebra().qha();
  const std::size_t n = q.dim();
  rep.add("module.unit", act(q.one()).is_identity());
  bool ok = true;
  std::string where;
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = 0; j < n && ok; ++j) {
      Matrix rhs(dim(), dim());
      for (const auto& [k, c] : q.prod(i, j).entries) rhs = rhs + act(k) * c;
      if (act(i) * act(j) != rhs) {
        ok = false;
        where = q.basis_names()[i] + " " + q.basis_names()[j];
      }
    }
  rep.add("module.multiplicative", ok, where);
  return rep;
}

bool HModule::equals(const HModule& o) const {
  if (same_as(o)) return true;
  return d_ && o.d_ && dim() == o.dim() && action() == o.action();
}

HModule unit_module(const Algebra& alg) {
  std::vector<Matrix> a;
  for (std::size_t i = 0; i < alg.dim(); ++i) a.push_back(Matrix::scalar(1, alg.qha().counit(i)));
  return HModule::unchecked(alg, std::move(a), "I");
}

HModule regular_module(const Algebra& alg) {
  std::vector<Matrix> a;
  for (std::size_t i = 0; i < alg.dim(); ++i) a.push_back(alg.qha().left_mult(i));
  return HModule::unchecked(alg, std::move(a), "C");
}

HModule tensor(const HModule& m, const HModule& n) {
  const auto& q = m.algebra().qha();
  const std::size_t k = q.dim();
  std::vector<Matrix> a;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix r(m.dim() * n.dim(), m.dim() * n.dim());
    for (const auto& [jk, c] : q.coprod(i).entries) r = r + kron(m.act(jk / k), n.act(jk % k)) * c;
    a.push_back(std::move(r));
  }
  std::string name = m.name().empty() || n.name().empty() ? "" : "(" + m.name() + "*" + n.name() + ")";
  return HModule::unchecked(m.algebra(), std::move(a), name);
}

Matrix act_element(const Tensor& t, const std::vector<HModule>& mods) {
  if (mods.size() != t.legs) throw std::invalid_argument("act_element: leg count mismatch");
  std::size_t dim = 1;
  for (const auto& m : mods) dim *= m.dim();
  const auto& q = mods.front().algebra().qha();
  if (t == q.one(t.legs)) return Matrix::identity(dim);
  Matrix r(dim, dim);
  t.for_each([&](const std::vector<std::size_t>& idx, const Rational& c) {
    Matrix k = Matrix::identity(1);
    for (std::size_t l = 0; l < idx.size(); ++l) k = kron(k, mods[l].act(idx[l]));
    r = r + k * c;
  });
  return r;
}

HMap make_map(const HModule& src, const HModule& tgt, Matrix m) {
  if (m.rows() != tgt.dim() || m.cols() != src.dim())
    throw StructureError("map shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " does not match " + std::to_string(tgt.dim()) + "x" + std::to_string(src.dim()));
  return {src, tgt, std::move(m)};
}

bool is_h_linear(const HMap& f) {
  for (std::size_t i = 0; i < f.src.algebra().dim(); ++i)
    if (f.tgt.act(i) * f.m != f.m * f.src.act(i)) return false;
  return true;
}

HMap identity(const HModule& m) { return {m, m, Matrix::identity(m.dim())}; }

HMap compose(const HMap& g, const HMap& f) {
  if (f.tgt.dim() != g.src.dim()) throw StructureError("compose: endpoint mismatch");
  return {f.src, g.tgt, g.m * f.m};
}

HMap tensor(const HMap& f, const HMap& g) {
  return {tensor(f.src, g.src), tensor(f.tgt, g.tgt), kron(f.m, g.m)};
}

HMap associator(const HModule& m, const HModule& n, const HModule& p) {
  HModule s = tensor(tensor(m, n), p), t = tensor(m, tensor(n, p));
  return {s, t, act_element(m.algebra().f().phi, {m, n, p})};
}

HMap associator_inv(const HModule& m, const HModule& n, const HModule& p) {
  HModule s = tensor(m, tensor(n, p)), t = tensor(tensor(m, n), p);
  return {s, t, act_element(m.algebra().f().phi_inv, {m, n, p})};
}

std::vector<Matrix> intertwiners(const std::vector<Matrix>& ops_a, const std::vector<Matrix>& ops_b,
                                 std::size_t da, std::size_t db) {
  if (ops_a.size() != ops_b.size()) throw std::invalid_argument("intertwiners: operator count mismatch");
  RowEchelon e(da * db);
  for (std::size_t o = 0; o < ops_a.size(); ++o) {
    const Matrix& a = ops_a[o];
    Matrix bt = ops_b[o].transpose();
    // (f a - b f)_{ij} = sum_k f_ik a_kj - sum_k b_ik f_kj
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        SparseVector row;
        for (const auto& [k, x] : a.column(j).entries) row.entries.emplace_back(i * da + k, x);
        for (const auto& [k, x] : bt.column(i).entries) row.entries.emplace_back(k * da + j, -x);
        row.normalize();
        if (!row.empty()) e.insert(row);
      }
  }
  e.finalize();
  std::vector<long> pos(da * db, -1);
  auto freec = e.free_columns();
  for (std::size_t i = 0; i < freec.size(); ++i) pos[freec[i]] = static_cast<long>(i);
  std::vector<SparseVector> cols(freec.size());
  for (std::size_t k = 0; k < e.rank(); ++k) {
    std::size_t p = e.pivots()[k];
    for (const auto& [j, x] : e.rows()[k].entries)
      if (j != p) cols[pos[j]].entries.emplace_back(p, -x);
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < freec.size(); ++i) {
    cols[i].entries.emplace_back(freec[i], Rational(1));
    cols[i].normalize();
    out.push_back(mat_of(cols[i], db, da));
  }
  return out;
}

std::vector<Matrix> hom_space(const HModule& m, const HModule& n) {
  return intertwiners(m.action(), n.action(), m.dim(), n.dim());
}

SparseVector vec_of(const Matrix& f) {
  SparseVector v;
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (const auto& [r, x] : f.column(c).entries) v.entries.emplace_back(r * f.cols() + c, x);
  v.normalize();
  return v;
}

Matrix mat_of(const SparseVector& v, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  std::vector<SparseVector> cs(cols);
  for (const auto& [i, x] : v.entries) cs[i % cols].entries.emplace_back(i / cols, x);
  for (std::size_t c = 0; c < cols; ++c) m.set_column(c, std::move(cs[c]));
  return m;
}

namespace {

// Row-major vectorisation of a square matrix as a column (d^2 x 1) or row (1 x d^2).
Matrix vec_column(const Matrix& b) { return Matrix::from_columns(b.rows() * b.cols(), {vec_of(b)}); }
Matrix vec_row(const Matrix& b) { return vec_column(b).transpose(); }

template <class Fn>
Matrix sum_terms(const Tensor& t, std::size_t rows, std::size_t cols, Fn fn) {
  Matrix r(rows, cols);
  t.for_each([&](const std::vector<std::size_t>& idx, const Rational& c) { r = r + fn(idx) * c; });
  return r;
}

}  // namespace

HModule inner_hom(const HModule& m, const HModule& n) {
  const auto& q = m.algebra().qha();
  const std::size_t k = q.dim();
  std::vector<Matrix> st;
  for (std::size_t i = 0; i < k; ++i) st.push_back(m.act(q.antipode(q.basis_element(i), 0)).transpose());
  std::vector<Matrix> a;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix r(m.dim() * n.dim(), m.dim() * n.dim());
    for (const auto& [jk, c] : q.coprod(i).entries) r = r + kron(n.act(jk / k), st[jk % k]) * c;
    a.push_back(std::move(r));
  }
  return HModule::unchecked(m.algebra(), std::move(a), "[" + m.name() + "," + n.name() + "]");
}

HMap inner_eta(const HModule& m, const HModule& p) {
  HModule tgt = inner_hom(p, tensor(m, p));
  Matrix e = sum_terms(m.algebra().f().eta, tgt.dim(), m.dim(), [&](const std::vector<std::size_t>& i) {
    return kron(m.act(i[0]), vec_column(p.act(i[1])));
  });
  return {m, tgt, std::move(e)};
}

HMap inner_eps(const HModule& n, const HModule& p) {
  HModule src = tensor(inner_hom(p, n), p);
  Matrix e = sum_terms(n.algebra().f().harpoon, n.dim(), src.dim(), [&](const std::vector<std::size_t>& i) {
    return kron(n.act(i[0]), vec_row(p.act(i[1])));
  });
  return {src, n, std::move(e)};
}

HMap inner_compose(const HModule& x, const HModule& y, const HModule& z) {
  HModule src = tensor(inner_hom(y, z), inner_hom(x, y)), tgt = inner_hom(x, z);
  Matrix e = sum_terms(x.algebra().f().icomp, tgt.dim(), src.dim(), [&](const std::vector<std::size_t>& i) {
    return kron(kron(z.act(i[0]), vec_row(y.act(i[1]))), x.act(i[2]).transpose());
  });
  return {src, tgt, std::move(e)};
}

HMap inner_in_map(const HModule& m, const HModule& x, const HModule& y) {
  HModule src = tensor(m, inner_hom(x, y)), tgt = inner_hom(x, tensor(m, y));
  Matrix e = sum_terms(m.algebra().f().in_map, tgt.dim(), src.dim(), [&](const std::vector<std::size_t>& i) {
    return kron(kron(m.act(i[0]), y.act(i[1])), x.act(i[2]).transpose());
  });
  return {src, tgt, std::move(e)};
}

HMap inner_post(const HModule& p, const HMap& f) {
  return {inner_hom(p, f.src), inner_hom(p, f.tgt), kron(f.m, Matrix::identity(p.dim()))};
}

Report verify_adjunction(const HModule& m, const HModule& p) {
  Report rep;
  HMap eta = inner_eta(m, p);
  HMap eps = inner_eps(tensor(m, p), p);
  rep.add("eta.h_linear", is_h_linear(eta));
  rep.add("eps.h_linear", is_h_linear(eps));
  Matrix t1 = eps.m * kron(eta.m, Matrix::identity(p.dim()));
  rep.add("triangle.left", t1.is_identity());
  HModule x = inner_hom(p, m);
  HMap eta2 = inner_eta(x, p);
  HMap eps2 = inner_eps(m, p);
  Matrix t2 = inner_post(p, eps2).m * eta2.m;
  rep.add("triangle.right", t2.is_identity());
  return rep;
}

Report verify_inner_compose(const HModule& x, const HModule& y, const HModule& z) {
  Report rep;
  HMap c = inner_compose(x, y, z);
  rep.add("icomp.h_linear", is_h_linear(c));
  // ev_{Z,X} o (icomp (x) id_X) = ev_{Z,Y} o (id (x) ev_{Y,X}) o a
  HModule yz = inner_hom(y, z), xy = inner_hom(x, y);
  Matrix lhs = inner_eps(z, x).m * kron(c.m, Matrix::identity(x.dim()));
  Matrix rhs = inner_eps(z, y).m * kron(Matrix::identity(yz.dim()), inner_eps(y, x).m) * associator(yz, xy, x).m;
  rep.add("icomp.evaluation_square", lhs == rhs);
  return rep;
}

Report verify_in_map(const HModule& m, const HModule& x, const HModule& y) {
  Report rep;
  HMap f = inner_in_map(m, x, y);
  rep.add("in_map.h_linear", is_h_linear(f));
  HModule xy = inner_hom(x, y);
  Matrix lhs = inner_eps(tensor(m, y), x).m * kron(f.m, Matrix::identity(x.dim()));
  Matrix rhs = kron(Matrix::identity(m.dim()), inner_eps(y, x).m) * associator(m, xy, x).m;
  rep.add("in_map.evaluation_square", lhs == rhs);
  return rep;
}

Dual left_dual(const HModule& m) {
  const auto& q = m.algebra().qha();
  const auto& f = m.algebra().f();
  std::vector<Matrix> a;
  for (std::size_t i = 0; i < q.dim(); ++i) a.push_back(m.act(q.antipode(q.basis_element(i), 0)).transpose());
  HModule d = HModule::unchecked(m.algebra(), std::move(a), m.name() + "^*");
  HModule one = unit_module(m.algebra());
  HMap ev{tensor(d, m), one, vec_row(m.act(f.alpha))};
  HMap coev{one, tensor(m, d), vec_column(m.act(f.beta))};
  return {d, ev, coev};
}

Dual right_dual(const HModule& m) {
  const auto& q = m.algebra().qha();
  const auto& f = m.algebra().f();
  std::vector<Matrix> a;
  for (std::size_t i = 0; i < q.dim(); ++i)
    a.push_back(m.act(q.antipode(q.basis_element(i), 0, true)).transpose());
  HModule d = HModule::unchecked(m.algebra(), std::move(a), "^*" + m.name());
  HModule one = unit_module(m.algebra());
  // ev(e_j (x) e^i) = <e^i, S^-1(alpha) e_j>, coev = sum e^i (x) S^-1(beta) e_i
  Matrix sa = m.act(q.antipode(f.alpha, 0, true)), sb = m.act(q.antipode(f.beta, 0, true));
  HMap ev{tensor(m, d), one, vec_row(sa.transpose())};
  HMap coev{one, tensor(d, m), vec_column(sb.transpose())};
  return {d, ev, coev};
}

Report verify_duals(const HModule& m) {
  Report rep;
  const std::size_t d = m.dim();
  Matrix id = Matrix::identity(d);
  {
    Dual l = left_dual(m);
    rep.add("left.module", l.obj.verify().all_pass());
    rep.add("left.ev_h_linear", is_h_linear(l.ev));
    rep.add("left.coev_h_linear", is_h_linear(l.coev));
    Matrix s1 = kron(id, l.ev.m) * associator(m, l.obj, m).m * kron(l.coev.m, id);
    rep.add("left.snake_1", s1.is_identity());
    Matrix s2 = kron(l.ev.m, id) * associator_inv(l.obj, m, l.obj).m * kron(id, l.coev.m);
    rep.add("left.snake_2", s2.is_identity());
  }
  {
    Dual r = right_dual(m);
    rep.add("right.module", r.obj.verify().all_pass());
    rep.add("right.ev_h_linear", is_h_linear(r.ev));
    rep.add("right.coev_h_linear", is_h_linear(r.coev));
    Matrix s1 = kron(r.ev.m, id) * associator_inv(m, r.obj, m).m * kron(id, r.coev.m);
    rep.add("right.snake_1", s1.is_identity());
    Matrix s2 = kron(id, r.ev.m) * associator(r.obj, m, r.obj).m * kron(r.coev.m, id);
    rep.add("right.snake_2", s2.is_identity());
  }
  return rep;
}

EndResult end_over_regular(const HModule& p, const HModule& q) {
  const Algebra& alg = p.algebra();
  const auto& h = alg.qha();
  const std::size_t n = h.dim();
  HModule c = regular_module(alg);
  HModule z = tensor(tensor(p, c), q);
  EndResult res;
  res.ambient = inner_hom(c, z);
  const std::size_t dz = z.dim();
  // g -> g o r_e  minus  (id (x) r_e (x) id) o g, stacked over the basis e
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix r = h.right_mult(i);
    Matrix pre = kron(Matrix::identity(dz), r.transpose());
    Matrix post = kron(kron(kron(Matrix::identity(p.dim()), r), Matrix::identity(q.dim())), Matrix::identity(n));
    blocks.push_back(pre - post);
  }
  res.basis = kernel(vstack(blocks));
  // l_t(c) = t with the middle leg multiplied by c on the right
  std::vector<SparseVector> cf;
  LegShape zs({p.dim(), n, q.dim()});
  for (std::size_t t = 0; t < dz; ++t) {
    auto idx = zs.unflatten(t);
    Matrix l(dz, n);
    for (std::size_t cc = 0; cc < n; ++cc) {
      SparseVector col;
      for (const auto& [k, x] : h.prod(idx[1], cc).entries) col.entries.emplace_back(zs.flatten({idx[0], k, idx[2]}), x);
      col.normalize();
      l.set_column(cc, std::move(col));
    }
    cf.push_back(vec_of(l));
  }
  res.closed_form = Matrix::from_columns(res.ambient.dim(), std::move(cf));
  res.report.add("end.dimension", res.basis.cols() == p.dim() * n * q.dim(),
                 std::to_string(res.basis.cols()) + " vs " + std::to_string(p.dim() * n * q.dim()));
  res.report.add("end.closed_form_in_end", span_contains(res.basis, res.closed_form));
  res.report.add("end.end_in_closed_form", span_contains(res.closed_form, res.basis));
  bool sub = true;
  for (std::size_t i = 0; i < n && sub; ++i) sub = span_contains(res.basis, res.ambient.act(i) * res.basis);
  res.report.add("end.submodule", sub);
  return res;
}

}  // namespace qhopf
