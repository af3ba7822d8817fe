#include "doctest.h"
#include "qhopf/heart.hpp"

using namespace qhopf;

namespace {
Algebra alg(const std::string& name) { return Algebra::validate(QuasiHopfAlgebra(builtin(name))); }
}  // namespace

TEST_CASE("algebra A") {
  for (const auto& name : builtin_names()) {
    Report r = verify_algebra_a(alg(name));
    INFO(name << "\n" << r.to_text());
    CHECK(r.all_pass());
  }
}

TEST_CASE("hearts") {
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    HModule c = regular_module(a), i = unit_module(a);
    for (const auto& m : {i, c, tensor(c, c)}) {
      Report r = verify_heart(m);
      INFO(name << " " << m.name() << "\n" << r.to_text());
      CHECK(r.all_pass());
    }
  }
}

TEST_CASE("s and t between heart(M) and the free module") {
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    AlgebraA aa = algebra_a(a);
    for (const auto& m : {aa.center, tensor_center(aa.center, aa.center), unit_center(a)}) {
      StIsos st = s_t_isos(m);
      INFO(name << " dim " << m.dim() << "\n" << st.report.to_text());
      CHECK(st.report.all_pass());
    }
  }
}

TEST_CASE("s and t are the identity on A for the unit object") {
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    StIsos st = s_t_isos(unit_center(a));
    CHECK(st.s.m.is_identity());
    CHECK(st.t.m.is_identity());
  }
}

TEST_CASE("diamond is natural and harpoon commutes with H-linear maps") {
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    HModule c = regular_module(a), i = unit_module(a), cc = tensor(c, c);
    for (auto [m, n] : {std::pair{c, c}, {c, cc}, {i, c}})
      for (const auto& f : hom_space(m, n))
        for (const auto& x : {i, c}) {
          Matrix lhs = kron(Matrix::identity(x.dim()), f) * diamond(m, x).m;
          Matrix rhs = diamond(n, x).m * kron(heart_map(make_map(m, n, f)).m, Matrix::identity(x.dim()));
          CHECK(lhs == rhs);
        }
    for (auto [x, y] : {std::pair{c, c}, {c, cc}, {i, c}})
      for (const auto& f : hom_space(x, y))
        CHECK(f * harpoon(x).m == harpoon(y).m * kron(Matrix::identity(a.dim()), f));
  }
}

TEST_CASE("reversed commutativity outcome") {
  for (const auto& name : builtin_names()) {
    Algebra a = alg(name);
    HModule c = regular_module(a), i = unit_module(a);
    CHECK(heart_reversed_commutativity(i));
    MESSAGE(name << ": reversed identity on heart(C) " << (heart_reversed_commutativity(c) ? "holds" : "fails"));
  }
}
