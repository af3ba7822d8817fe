#include <sstream>

#include "qhopf/linalg.hpp"
#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

namespace {

// Records the first failing basis witness, if any.
struct Witness {
  bool ok = true;
  std::string detail;
  void fail(const std::string& d) {
    if (ok) detail = d;
    ok = false;
  }
};

Tensor scalar_tensor(std::size_t n, const Rational& x) {
  Tensor t(n, 0);
  t.c = {x};
  return t;
}

}  // namespace

Report verify_axioms(const QuasiHopfAlgebra& h) {
  Report rep;
  const std::size_t n = h.dim();
  const auto& names = h.basis_names();
  std::vector<Tensor> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(h.basis_element(i));
  const Tensor one = h.one();

  Witness assoc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (h.mul(h.mul(e[i], e[j]), e[k]) != h.mul(e[i], h.mul(e[j], e[k])))
          assoc.fail("(" + names[i] + " " + names[j] + ") " + names[k]);
  rep.add("algebra.associative", assoc.ok, assoc.detail);

  Witness unit;
  for (std::size_t i = 0; i < n; ++i)
    if (h.mul(one, e[i]) != e[i] || h.mul(e[i], one) != e[i]) unit.fail("at " + names[i]);
  rep.add("algebra.unit", unit.ok, unit.detail);

  Witness dmul;
  if (h.delta(one, 0) != h.one(2)) dmul.fail("D(1) != 1(x)1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h.delta(h.mul(e[i], e[j]), 0) != h.mul(h.delta(e[i], 0), h.delta(e[j], 0)))
        dmul.fail("at " + names[i] + ", " + names[j]);
  rep.add("coalgebra.delta_multiplicative", dmul.ok, dmul.detail);

  Witness emul;
  if (h.eps(one, 0) != scalar_tensor(n, Rational(1))) emul.fail("e(1) != 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h.eps(h.mul(e[i], e[j]), 0) != scalar_tensor(n, h.counit(i) * h.counit(j)))
        emul.fail("at " + names[i] + ", " + names[j]);
  rep.add("coalgebra.counit_multiplicative", emul.ok, emul.detail);

  Witness santi;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h.antipode(h.mul(e[i], e[j]), 0) != h.mul(h.antipode(e[j], 0), h.antipode(e[i], 0)))
        santi.fail("at " + names[i] + ", " + names[j]);
  rep.add("antipode.anti_multiplicative", santi.ok, santi.detail);

  const auto& sinv = h.antipode_inv_matrix();
  bool sinv_ok = sinv && (h.antipode_matrix() * *sinv).is_identity() && (*sinv * h.antipode_matrix()).is_identity();
  rep.add("antipode.invertible", sinv_ok, sinv ? "" : "S is singular");

  const Tensor phi = h.phi();
  const auto& phinv = h.phi_inv();
  bool phinv_ok = phinv && h.mul(phi, *phinv) == h.one(3) && h.mul(*phinv, phi) == h.one(3);
  rep.add("phi.invertible", phinv_ok, phinv ? "" : "Phi is not invertible");

  Witness b1;
  for (std::size_t i = 0; i < n; ++i) {
    Tensor d = h.delta(e[i], 0);
    Tensor l = h.delta(d, 1), r = h.delta(d, 0);
    if (h.mul(l, phi) != h.mul(phi, r)) b1.fail("a = " + names[i]);
  }
  rep.add("B1", b1.ok, b1.detail);

  {
    Tensor lhs = h.mul(h.spread(phi, {{0}, {1}, {2, 3}}, 4), h.spread(phi, {{0, 1}, {2}, {3}}, 4));
    Tensor rhs = h.mul({h.spread(phi, {{1}, {2}, {3}}, 4), h.spread(phi, {{0}, {1, 2}, {3}}, 4),
                        h.spread(phi, {{0}, {1}, {2}}, 4)});
    rep.add("B2", lhs == rhs, lhs == rhs ? "" : "pentagon differs");
  }

  Witness b3;
  for (std::size_t i = 0; i < n; ++i) {
    Tensor d = h.delta(e[i], 0);
    if (h.eps(d, 0) != e[i]) b3.fail("(e(x)id)D at " + names[i]);
    if (h.eps(d, 1) != e[i]) b3.fail("(id(x)e)D at " + names[i]);
  }
  rep.add("B3", b3.ok, b3.detail);

  bool b4 = h.eps(phi, 1) == h.one(2);
  rep.add("B4", b4, b4 ? "" : "(id(x)e(x)id)Phi != 1(x)1");

  const Tensor alpha = h.alpha(), beta = h.beta();
  Witness h1, h2;
  for (std::size_t i = 0; i < n; ++i) {
    Tensor d = h.delta(e[i], 0);
    Tensor l = h.merge(h.merge(h.insert(h.antipode(d, 0), 1, alpha), 0), 0);
    if (l != alpha * h.counit(i)) h1.fail("a = " + names[i]);
    Tensor r = h.merge(h.merge(h.insert(h.antipode(d, 1), 1, beta), 0), 0);
    if (r != beta * h.counit(i)) h2.fail("a = " + names[i]);
  }
  rep.add("H1", h1.ok, h1.detail);
  rep.add("H2", h2.ok, h2.detail);

  {
    Tensor t = h.insert(h.insert(h.antipode(phi, 1), 1, beta), 3, alpha);
    Tensor v = h.collapse(t);
    rep.add("H3", v == one, v == one ? "" : "P1 b S(P2) a P3 = " + v.str(names));
  }
  if (phinv) {
    Tensor t = h.antipode(h.antipode(*phinv, 0), 2);
    t = h.insert(h.insert(t, 1, alpha), 3, beta);
    Tensor v = h.collapse(t);
    rep.add("H4", v == one, v == one ? "" : "S(f1) a f2 b S(f3) = " + v.str(names));
  } else {
    rep.add("H4", false, "Phi is not invertible");
  }
  return rep;
}

Algebra Algebra::validate(QuasiHopfAlgebra h) {
  Report r = verify_axioms(h);
  if (!r.all_pass()) {
    std::string msg = "quasi-Hopf axioms fail:";
    for (const auto& id : r.failures()) msg += " " + id;
    throw ValidationError(msg, r);
  }
  Algebra a;
  auto hp = std::make_shared<const QuasiHopfAlgebra>(std::move(h));
  const QuasiHopfAlgebra& q = *hp;
  auto f = std::make_shared<Formulas>();
  f->one = q.one();
  f->alpha = q.alpha();
  f->beta = q.beta();
  f->phi = q.phi();
  f->phi_inv = *q.phi_inv();
  f->trivial_phi = f->phi == q.one(3) && f->phi_inv == q.one(3);
  const Tensor& P = f->phi;
  const Tensor& p = f->phi_inv;

  f->kappa = q.mul(q.spread(p, {{1}, {2}, {3}}, 5), q.spread(P, {{0, 4}, {1}, {2, 3}}, 5));
  f->kappa_inv = q.mul(q.spread(p, {{0, 4}, {1}, {2, 3}}, 5), q.spread(P, {{1}, {2}, {3}}, 5));
  f->lambda = q.mul({q.spread(p, {{2}, {3}, {4}}, 5), q.spread(P, {{1}, {2}, {3, 4}}, 5),
                     q.spread(P, {{0}, {1, 2}, {3, 4}}, 5)});

  f->eta = q.merge(q.merge(q.insert(q.antipode(p, 2), 2, f->beta), 1), 1);
  f->harpoon = q.merge(q.merge(q.insert(q.antipode(P, 1), 2, f->alpha), 1), 1);
  f->in_map = q.antipode(p, 2);
  {
    Tensor t = q.mul(q.spread(p, {{1}, {2}, {3}}, 4), q.spread(P, {{0}, {1}, {2, 3}}, 4));
    t = q.merge(q.merge(q.insert(q.antipode(t, 1), 2, f->alpha), 1), 1);
    f->icomp = q.antipode(t, 2);
  }
  {
    Tensor t = q.insert(q.antipode(q.delta(P, 0), 2), 3, f->alpha);
    f->diamond = q.permute(q.merge(q.merge(t, 2), 2), {0, 2, 1});
  }
  {
    Tensor t = q.insert(q.antipode(f->kappa, 1), 2, f->alpha);
    f->right_act = q.antipode(q.merge(q.merge(t, 1), 1), 2);
    f->product = q.eps(f->right_act, 3);
  }
  f->l_map = q.permute(q.antipode(q.delta(p, 1), 3), {0, 1, 3, 2});
  f->slnko = q.mul(f->kappa_inv, q.permute(f->lambda, {1, 2, 3, 4, 0}));
  for (std::size_t i = 0; i < q.dim(); ++i) {
    Tensor t = q.delta(q.delta(q.basis_element(i), 0), 0);
    f->heart_act.push_back(q.permute(q.antipode(t, 2), {0, 2, 1}));
  }
  f->eps_alpha = q.eps(f->alpha, 0).c[0];
  a.h_ = std::move(hp);
  a.f_ = std::move(f);
  return a;
}

Report verify_derived_identities(const Algebra& a) {
  const QuasiHopfAlgebra& q = a.qha();
  const Formulas& f = a.f();
  const Tensor& P = f.phi;
  const Tensor& p = f.phi_inv;
  const Tensor &al = f.alpha, &be = f.beta;
  Report rep;
  auto put = [&](const std::string& id, const Tensor& l, const Tensor& r) {
    rep.add(id, l == r, l == r ? "" : "lhs - rhs = " + (l - r).str(q.basis_names()));
  };

  {
    Tensor t = q.insert(q.antipode(q.delta(p, 1), 2), 2, be);
    put("pomocna1", q.merge(q.merge(t, 1), 1), q.spread(be, {{1}}, 3));
  }
  {
    Tensor t = q.insert(q.antipode(q.delta(P, 2), 2), 3, al);
    put("pomocna2", q.merge(q.merge(t, 2), 2), q.spread(al, {{2}}, 3));
  }
  put("pomocna3",
      q.mul({q.spread(P, {{0}, {1}, {2, 3}}, 4), q.spread(P, {{0, 1}, {2}, {3}}, 4),
             q.spread(p, {{0}, {1}, {2}}, 4), q.spread(p, {{0}, {1, 2}, {3}}, 4)}),
      q.spread(P, {{1}, {2}, {3}}, 4));
  {
    Tensor t = q.insert(q.antipode(q.delta(p, 2), 3), 3, be);
    put("tmp1", q.merge(q.merge(t, 2), 2), q.spread(be, {{2}}, 3));
  }
  {
    Tensor t = q.insert(q.antipode(q.delta(P, 1), 1), 2, al);
    put("tmp2", q.antipode(q.merge(q.merge(t, 1), 1), 2), q.spread(al, {{1}}, 3));
  }
  put("tmp3",
      q.mul({q.spread(P, {{0}, {1, 2}, {3}}, 4), q.spread(P, {{0}, {1}, {2}}, 4),
             q.spread(p, {{0, 1}, {2}, {3}}, 4), q.spread(p, {{0}, {1}, {2, 3}}, 4)}),
      q.spread(p, {{1}, {2}, {3}}, 4));
  {
    Tensor t = q.insert(q.antipode(q.delta(p, 1), 1), 2, al);
    put("hsko", q.merge(q.merge(t, 1), 1), q.spread(al, {{1}}, 3));
  }
  {
    Tensor t = q.delta(q.delta(P, 0), 1);
    t = q.insert(q.antipode(t, 1), 2, al);
    put("hskoo", q.merge(q.merge(t, 1), 1), q.insert(P, 1, al));
  }
  {
    Tensor t = q.insert(q.antipode(q.delta(p, 2), 2), 3, al);
    t = q.delta(q.merge(q.merge(t, 2), 2), 0);
    put("hsko4", t, q.spread(al, {{3}}, 4));
  }
  for (std::size_t l = 0; l < 3; ++l) {
    put("claim.eps_phi_" + std::to_string(l + 1), q.eps(P, l), q.one(2));
    put("claim.eps_phiinv_" + std::to_string(l + 1), q.eps(p, l), q.one(2));
  }
  put("kappa.eps", q.eps(q.eps(f.kappa, 3), 2), q.one(3));
  put("lambda.eps", q.eps(q.eps(f.lambda, 4), 3), q.one(3));
  put("kappa.inverse_right", q.mul(f.kappa, f.kappa_inv), q.one(5));
  put("kappa.inverse_left", q.mul(f.kappa_inv, f.kappa), q.one(5));
  {
    Tensor u = q.merge(q.merge(q.insert(q.antipode(q.eps(p, 0), 1), 1, be), 0), 0);
    put("unit_of_A", u, be);
  }
  return rep;
}

}  // namespace qhopf
