#include "doctest.h"
#include "qhopf/dsl.hpp"
#include "qhopf/linalg.hpp"

using namespace qhopf;

namespace {

Algebra alg(const std::string& name) { return Algebra::validate(QuasiHopfAlgebra(builtin(name))); }

void holds(Context& ctx, const std::string& lhs, const std::string& rhs) {
  CheckResult r = check_equal(ctx, lhs, rhs);
  INFO(lhs << "  vs  " << rhs << ": " << r.message);
  CHECK(r.pass);
}

}  // namespace

TEST_CASE("parse and print") {
  Expr e = parse_expr("eta(C,C) ; eps(C\xE2\x8A\x97" "C, C)");
  CHECK(e.kind == Expr::Kind::Seq);
  REQUIRE(e.args.size() == 2);
  CHECK(e.args[0].name == "eta");
  CHECK(e.args[1].args[0].kind == Expr::Kind::Tensor);

  Expr t = parse_expr("id(A) * mu(M)");
  CHECK(t.kind == Expr::Kind::Tensor);
  CHECK(t.args[1].args[0].name == "M");

  // ';' binds looser than '*'
  Expr p = parse_expr("f * g ; h");
  CHECK(p.kind == Expr::Kind::Seq);
  CHECK(p.args[0].kind == Expr::Kind::Tensor);

  for (const char* s : {"eta(C,C) ; eps(C*C, C)", "id(A) * mu(M)", "(f ; g) * h", "f ; (g ; h)", "(f * g) * h",
                        "f * (g * h)", "heart(bud(mu(ihom(C, I))))", "a;b;c", "  x\n*\ty  ", "inv((f;g))"}) {
    Expr a = parse_expr(s);
    std::string printed = print_expr(a);
    Expr b = parse_expr(printed);
    INFO(s << " -> " << printed);
    CHECK(same_tree(a, b));
    CHECK(print_expr(b) == printed);
  }
  CHECK_FALSE(same_tree(parse_expr("(f * g) * h"), parse_expr("f * (g * h)")));
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_expr("mu(M");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 5);
    CHECK(std::string(e.what()).find("end of input") != std::string::npos);
  }
  try {
    parse_expr("id(A) ;\n  ; mu(A)");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 3);
  }
  CHECK_THROWS_AS(parse_expr("f $ g"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("f(g,)"), ParseError);
  CHECK_THROWS_AS(parse_expr("f g"), ParseError);
}

TEST_CASE("elaboration types") {
  Context ctx(alg("group_z2"));
  Typed t = ctx.elaborate(parse_expr("eta(C,C) * id(C) ; eps(C*C, C)"));
  CHECK(t.src->key == "(C*C)");
  CHECK(t.tgt->key == "(C*C)");

  Typed m = ctx.elaborate(parse_expr("id(A) * id(A) ; mu(A)"));
  CHECK(m.src->key == "(A*A)");
  CHECK(m.tgt->key == "A");

  CHECK(ctx.object("heart(I)")->key == "A");
  CHECK(ctx.object("unit")->key == "I");
  CHECK(ctx.object("C\xE2\x8A\x97" "C")->key == "(C*C)");

  try {
    ctx.elaborate(parse_expr("pi(C) ; mu(C*A)"));
    FAIL("no error");
  } catch (const ElabError& e) {
    std::string msg = e.what();
    CHECK(msg.find("C") != std::string::npos);
    CHECK(msg.find("((C*A)*A)") != std::string::npos);
  }
  CHECK_THROWS_AS(ctx.elaborate(parse_expr("pi(M)")), ElabError);
  CHECK_THROWS_AS(ctx.elaborate(parse_expr("frob(C)")), ElabError);
  CHECK_THROWS_AS(ctx.elaborate(parse_expr("A")), ElabError);
  CHECK_THROWS_AS(ctx.elaborate(parse_expr("mu(C)")), ElabError);
  CHECK_THROWS_AS(ctx.elaborate(parse_expr("id(A ; A)")), ElabError);
  CHECK_THROWS_AS(ctx.elaborate(parse_expr("assoc(A, A)")), ElabError);
  CHECK_THROWS_AS(ctx.run("inv(counit(A))"), ElabError);
}

TEST_CASE("evaluation matches library maps") {
  Algebra a = alg("sweedler_h4");
  Context ctx(a);
  AlgebraA aa = algebra_a(a);
  CHECK(ctx.run("mu(A)").m == aa.product.m);
  CHECK(ctx.run("unit(A)").m == aa.unit.m);
  HModule c = regular_module(a);
  CHECK(ctx.run("assoc(C, C, A)").m == associator(c, c, aa.obj).m);
  CHECK(ctx.run("pi(C)").m == pi_map(c).m);
  CHECK(ctx.run("inv(braid(C, C))").m == braiding_inv(regular_center(a), c).m);
  // compose is diagrammatic
  CHECK(ctx.run("unit(A) ; counit(A)").m == aa.counit.m * aa.unit.m);
}

TEST_CASE("scripted identities on every built-in") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    Context ctx(alg(name));
    // triangle identities of the inner hom
    for (const char* m : {"I", "C", "C*C"})
      for (const char* p : {"I", "C", "C*C"}) {
        const std::string M = std::string("(") + m + ")", P = std::string("(") + p + ")";
        holds(ctx, "eta(" + M + "," + P + ") * id(" + P + ") ; eps(" + M + "*" + P + "," + P + ")",
              "id(" + M + "*" + P + ")");
        holds(ctx, "eta(ihom(" + P + "," + M + ")," + P + ") ; ipost(" + P + ", eps(" + M + "," + P + "))",
              "id(ihom(" + P + "," + M + "))");
      }
    // algebra A
    holds(ctx, "mu(A) * id(A) ; mu(A)", "assoc(A,A,A) ; id(A) * mu(A) ; mu(A)");
    holds(ctx, "unit(A) * id(A) ; mu(A)", "lunit(A)");
    holds(ctx, "id(A) * unit(A) ; mu(A)", "runit(A)");
    holds(ctx, "braid(A,A) ; mu(A)", "mu(A)");
    holds(ctx, "mu(A) ; counit(A)", "counit(A) * counit(A) ; lunit(I)");
    holds(ctx, "lambda(A)", "mu(A)");
    // free-module isomorphisms
    for (const char* m : {"A", "A*A", "I"}) {
      const std::string M = m;
      holds(ctx, "s(" + M + ") ; t(" + M + ")", "id(heart(" + M + "))");
      holds(ctx, "t(" + M + ") ; s(" + M + ")", "id(" + M + "*A)");
    }
    holds(ctx, "xi(A) ; zeta(A)", "id(heart(bud(A)))");
    holds(ctx, "zeta(heart(C)) ; xi(heart(C))", "id(heart(C))");
    holds(ctx, "counit_iso(C) ; inv(counit_iso(C))", "id(bud(heart(C)))");
    holds(ctx, "braid(A, C) ; braid_inv(A, C)", "id(A*C)");
    holds(ctx, "p(heart(C)) ; bud(id(heart(C)))", "p(heart(C))");
    holds(ctx, "heart(pi(C)) ; heart(id(C))", "heart(pi(C))");
  }
}

TEST_CASE("failed checks report a witness") {
  Context ctx(alg("group_z2"));
  CheckResult r = check_equal(ctx, "id(C)", "braid(C, I)");
  CHECK_FALSE(r.pass);
  CHECK(r.message.find("endpoints") != std::string::npos);
  CHECK_THROWS_AS(check_equal(ctx, "mu(A)", "mu(A) ; unit(A) * counit(A) ; mu(A)"), ElabError);
  r = check_equal(ctx, "braid(C, C)", "id(C*C)");
  CHECK_FALSE(r.pass);
  CHECK(r.message.find("basis vector") != std::string::npos);
  CHECK(check_equal(ctx, "counit(A) ; unit(A)", "id(A)").pass == false);
}

TEST_CASE("context files") {
  Algebra a = alg("group_z2");
  HModule c = regular_module(a);
  json j;
  j["modules"]["M"] = module_to_json(c);
  j["centers"]["Z"] = center_to_json(regular_center(a));
  j["amodules"]["F"] = amodule_to_json(free_amodule(regular_center(a)));
  j["morphisms"]["sw"] = json{{"src", "Z*Z"}, {"tgt", "Z*Z"}, {"matrix", matrix_to_json(braiding(regular_center(a), c).m)}};
  Context ctx = Context::from_json(a, j);
  holds(ctx, "sw", "braid(Z, Z)");
  holds(ctx, "sw ; braid_inv(Z, Z)", "id(Z*Z)");
  // same module under another name is a different object
  CHECK_FALSE(check_equal(ctx, "id(M)", "id(C)").pass);
}

TEST_CASE("bad context files") {
  Algebra a = alg("group_z2");
  json bad;
  bad["modules"]["M"] = json{{"dim", 1}, {"action", {"1", "2"}}};
  CHECK_THROWS_AS(Context::from_json(a, bad), IoError);
  json clash;
  clash["modules"]["A"] = module_to_json(unit_module(a));
  CHECK_THROWS_AS(Context::from_json(a, clash), IoError);
  json wrong;
  wrong["morphisms"]["f"] = json{{"src", "C"}, {"tgt", "I"}, {"matrix", {"1", "0"}}};
  try {
    Context::from_json(a, wrong);
    FAIL("no error");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("H-linear") != std::string::npos);
  }
  json shape;
  shape["morphisms"]["f"] = json{{"src", "C"}, {"tgt", "I"}, {"matrix", {"1"}}};
  try {
    Context::from_json(a, shape);
    FAIL("no error");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("/morphisms/f/matrix") == 0);
  }
}

TEST_CASE("json round trips") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    const std::string text = dump(algebra_to_json(builtin(name)));
    AlgebraData back = algebra_from_json(json::parse(text));
    CHECK(dump(algebra_to_json(back)) == text);
    Algebra a = Algebra::validate(QuasiHopfAlgebra(back));
    CHECK(verify_axioms(QuasiHopfAlgebra(back)).all_pass());

    AModule f = free_amodule(algebra_a(a).center);
    AModule g = amodule_from_json(a, json::parse(dump(amodule_to_json(f))));
    CHECK(g.mu() == f.mu());
    CHECK(g.center().coaction() == f.center().coaction());
    CHECK(g.base().action() == f.base().action());
  }
}

TEST_CASE("malformed json names the path") {
  json j = algebra_to_json(builtin("group_z2"));
  auto path_of = [](const json& bad) {
    try {
      algebra_from_json(bad);
    } catch (const IoError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  json a = j;
  a["mult"][3] = "x/0";
  CHECK(path_of(a).rfind("/mult/3", 0) == 0);
  json b = j;
  b.erase("alpha");
  CHECK(path_of(b).rfind("/alpha", 0) == 0);
  json c = j;
  c["counit"] = json::array({"1"});
  CHECK(path_of(c).rfind("/counit", 0) == 0);
  json d = j;
  d["antipode"][0] = true;
  CHECK(path_of(d).rfind("/antipode/0", 0) == 0);
  json e = j;
  e["beta"][1] = "\xE2\x88\x92" "1/2";
  CHECK(algebra_from_json(e).beta[1] == Rational(-1, 2));
}
