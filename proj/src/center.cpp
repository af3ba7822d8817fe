#include "qhopf/center.hpp"

#include "qhopf/linalg.hpp"

namespace qhopf {

CenterObject CenterObject::unchecked(HModule base, Matrix coaction) {
  const std::size_t n = base.algebra().dim(), d = base.dim();
  if (coaction.rows() != n * d || coaction.cols() != d)
    throw StructureError("coaction must be " + std::to_string(n * d) + "x" + std::to_string(d));
  CenterObject c;
  c.base_ = std::move(base);
  c.coaction_ = std::move(coaction);
  return c;
}

CenterObject CenterObject::create(HModule base, Matrix coaction) {
  CenterObject c = unchecked(std::move(base), std::move(coaction));
  Report r = validate_center(c);
  if (!r.all_pass()) throw ValidationError("not a center object: " + r.failures().front(), r);
  return c;
}

Matrix CenterObject::component(std::size_t h) const { return coaction_.row_block(h * dim(), dim()); }

HMap braiding(const CenterObject& m, const HModule& x) {
  const std::size_t n = m.algebra().dim();
  Matrix s(m.dim() * x.dim(), m.dim() * x.dim());
  for (std::size_t h = 0; h < n; ++h) {
    Matrix d = m.component(h);
    if (!d.is_zero()) s = s + kron(d, x.act(h));
  }
  Matrix swap = leg_permutation(LegShape({m.dim(), x.dim()}), {1, 0});
  return {tensor(m.base(), x), tensor(x, m.base()), swap * s};
}

HMap braiding_inv(const CenterObject& m, const HModule& x) {
  HMap b = braiding(m, x);
  auto inv = inverse(b.m);
  if (!inv) throw ValidationError("braiding is not invertible", Report());
  return {b.tgt, b.src, *inv};
}

Report validate_center(const CenterObject& m) {
  Report rep;
  const Algebra& alg = m.algebra();
  const auto& q = alg.qha();
  const std::size_t n = q.dim(), d = m.dim();
  HModule c = regular_module(alg), mb = m.base();

  Matrix counit(d, d);
  for (std::size_t h = 0; h < n; ++h)
    if (!q.counit(h).is_zero()) counit = counit + m.component(h) * q.counit(h);
  rep.add("center.counit", counit.is_identity());

  HMap b = braiding(m, c);
  rep.add("center.h_linear", is_h_linear(b));
  auto inv = inverse(b.m);
  rep.add("center.invertible", inv.has_value());

  bool nat = true;
  for (std::size_t i = 0; i < n && nat; ++i) {
    Matrix r = q.right_mult(i);
    nat = kron(r, Matrix::identity(d)) * b.m == b.m * kron(Matrix::identity(d), r);
  }
  rep.add("center.natural", nat);

  HModule cc = tensor(c, c);
  Matrix lhs = braiding(m, cc).m;
  Matrix rhs = associator_inv(c, c, mb).m * kron(Matrix::identity(n), b.m) * associator(c, mb, c).m *
               kron(b.m, Matrix::identity(n)) * associator_inv(mb, c, c).m;
  rep.add("center.hexagon", lhs == rhs);
  return rep;
}

CenterObject unit_center(const Algebra& alg) {
  HModule i = unit_module(alg);
  Matrix co(alg.dim(), 1);
  co.set_column(0, SparseVector::from_dense(alg.f().one.c));
  return CenterObject::unchecked(i, co);
}

CenterObject trivial_center(const HModule& m) {
  const std::size_t d = m.dim();
  Matrix one_col = Matrix::from_columns(m.algebra().dim(), {SparseVector::from_dense(m.algebra().f().one.c)});
  return CenterObject::unchecked(m, kron(one_col, Matrix::identity(d)));
}

CenterObject regular_center(const Algebra& alg) {
  const auto& q = alg.qha();
  const std::size_t n = q.dim();
  Matrix co(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Tensor t = q.merge(q.permute(q.antipode(q.delta(q.delta(q.basis_element(i), 0), 0), 2), {0, 2, 1}), 0);
    co.set_column(i, SparseVector::from_dense(t.c));
  }
  return CenterObject::unchecked(regular_module(alg), co);
}

Matrix coaction_from_braiding(const Matrix& beta_c, std::size_t dim, const Algebra& alg) {
  Matrix one_col = Matrix::from_columns(alg.dim(), {SparseVector::from_dense(alg.f().one.c)});
  return beta_c * kron(Matrix::identity(dim), one_col);
}

CenterObject tensor_center(const CenterObject& m, const CenterObject& n) {
  const Algebra& alg = m.algebra();
  HModule c = regular_module(alg), mb = m.base(), nb = n.base();
  Matrix bm = braiding(m, c).m, bn = braiding(n, c).m;
  Matrix b = associator(c, mb, nb).m * kron(bm, Matrix::identity(nb.dim())) * associator_inv(mb, c, nb).m *
             kron(Matrix::identity(mb.dim()), bn) * associator(mb, nb, c).m;
  return CenterObject::unchecked(tensor(mb, nb), coaction_from_braiding(b, mb.dim() * nb.dim(), alg));
}

namespace {

std::vector<Matrix> center_ops(const CenterObject& m) {
  std::vector<Matrix> ops = m.base().action();
  for (std::size_t h = 0; h < m.algebra().dim(); ++h) ops.push_back(m.component(h));
  return ops;
}

}  // namespace

std::vector<Matrix> center_hom_space(const CenterObject& m, const CenterObject& n) {
  return intertwiners(center_ops(m), center_ops(n), m.dim(), n.dim());
}

bool is_center_morphism(const CenterObject& m, const CenterObject& n, const Matrix& f) {
  auto a = center_ops(m), b = center_ops(n);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (f * a[k] != b[k] * f) return false;
  return true;
}

}  // namespace qhopf
