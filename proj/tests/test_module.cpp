#include "doctest.h"
#include "qhopf/linalg.hpp"
#include "qhopf/module.hpp"

using namespace qhopf;

namespace {

Algebra alg(const std::string& name) { return Algebra::validate(QuasiHopfAlgebra(builtin(name))); }

// Hom dimension through the Kronecker formulation and the generic kernel,
// a separate code path from the equation builder in intertwiners().
std::size_t hom_dim_oracle(const HModule& m, const HModule& n) {
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i)
    blocks.push_back(kron(Matrix::identity(n.dim()), m.act(i).transpose()) - kron(n.act(i), Matrix::identity(m.dim())));
  return kernel(vstack(blocks)).cols();
}

}  // namespace

TEST_CASE("regular, unit and tensor modules are modules") {
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    HModule c = regular_module(a), i = unit_module(a);
    CHECK(c.verify().all_pass());
    CHECK(i.verify().all_pass());
    CHECK(tensor(c, c).verify().all_pass());
    CHECK(tensor(tensor(c, i), c).verify().all_pass());
    CHECK(inner_hom(c, c).verify().all_pass());
  }
}

TEST_CASE("hom spaces") {
  Algebra z2 = alg("group_z2");
  HModule c = regular_module(z2), i = unit_module(z2);
  CHECK(hom_space(c, c).size() == 2);
  CHECK(hom_space(i, c).size() == 1);
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    HModule c2 = regular_module(a), i2 = unit_module(a), cc = tensor(c2, c2);
    for (auto [m, n] : {std::pair{c2, c2}, {i2, c2}, {c2, i2}, {cc, c2}, {c2, cc}}) {
      auto hs = hom_space(m, n);
      CHECK(hs.size() == hom_dim_oracle(m, n));
      for (const auto& f : hs) CHECK(is_h_linear(make_map(m, n, f)));
    }
    CHECK(hom_space(c2, c2).size() == a.dim());
  }
  Algebra sw = alg("sweedler_h4");
  CHECK(hom_space(unit_module(sw), regular_module(sw)).size() == 1);
}

TEST_CASE("associators are H-linear and satisfy the pentagon") {
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    HModule c = regular_module(a), i = unit_module(a);
    HMap as = associator(c, c, c);
    CHECK(is_h_linear(as));
    CHECK((associator_inv(c, c, c).m * as.m).is_identity());
    // pentagon on C^4
    HModule cc = tensor(c, c);
    Matrix id = Matrix::identity(c.dim());
    Matrix lhs = associator(c, c, cc).m * associator(cc, c, c).m;
    Matrix rhs = kron(id, associator(c, c, c).m) * associator(c, cc, c).m * kron(associator(c, c, c).m, id);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("inner hom adjunction triangles") {
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    HModule c = regular_module(a), i = unit_module(a), cc = tensor(c, c);
    for (const auto& m : {i, c, cc})
      for (const auto& p : {i, c, cc}) {
        Report r = verify_adjunction(m, p);
        INFO(name << " " << m.name() << " " << p.name() << "\n" << r.to_text());
        CHECK(r.all_pass());
      }
  }
}

TEST_CASE("internal composition and the in-map") {
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    HModule c = regular_module(a), i = unit_module(a);
    Report r1 = verify_inner_compose(c, i, c);
    Report r2 = verify_inner_compose(c, c, c);
    Report r3 = verify_in_map(c, c, c);
    Report r4 = verify_in_map(c, i, c);
    INFO(name << "\n" << r1.to_text() << r2.to_text() << r3.to_text() << r4.to_text());
    CHECK(r1.all_pass());
    CHECK(r2.all_pass());
    CHECK(r3.all_pass());
    CHECK(r4.all_pass());
  }
}

TEST_CASE("icomp is associative up to the associator") {
  Algebra a = alg("drinfeld_h2");
  HModule c = regular_module(a);
  HModule e = inner_hom(c, c);
  HMap m = inner_compose(c, c, c);
  Matrix id = Matrix::identity(e.dim());
  Matrix lhs = m.m * kron(m.m, id);
  Matrix rhs = m.m * kron(id, m.m) * associator(e, e, e).m;
  CHECK(lhs == rhs);
}

TEST_CASE("duals") {
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    HModule c = regular_module(a);
    for (const auto& m : {unit_module(a), c, tensor(c, c)}) {
      Report r = verify_duals(m);
      INFO(name << "\n" << r.to_text());
      CHECK(r.all_pass());
    }
  }
}

TEST_CASE("end over the regular module") {
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    HModule c = regular_module(a), i = unit_module(a);
    for (const auto& p : {i, c})
      for (const auto& q : {i, c}) {
        EndResult e = end_over_regular(p, q);
        INFO(name << "\n" << e.report.to_text());
        CHECK(e.report.all_pass());
        CHECK(e.basis.cols() == p.dim() * a.dim() * q.dim());
      }
  }
}

TEST_CASE("rejects malformed modules") {
  Algebra a = alg("group_z2");
  CHECK_THROWS_AS(HModule::create(a, {Matrix::identity(1), Matrix::scalar(1, Rational(2))}), ValidationError);
  CHECK_THROWS_AS(HModule::create(a, {Matrix::identity(1)}), StructureError);
  CHECK_NOTHROW(HModule::create(a, {Matrix::identity(1), Matrix::scalar(1, Rational(-1))}));
}
