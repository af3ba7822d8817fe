#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhopf/io.hpp"

namespace qhopf {

/// Untyped syntax tree. Objects and morphisms share the grammar
///   expr := ten (';' ten)* ;  ten := atom ('*' atom)* ;
///   atom := NAME | NAME '(' expr (',' expr)* ')' | '(' expr ')'
struct Expr {
  enum class Kind { Name, Call, Seq, Tensor };
  Kind kind = Kind::Name;
  std::string name;
  std::vector<Expr> args;
  std::size_t line = 1, col = 1;
};
bool same_tree(const Expr& a, const Expr& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg);
  std::size_t line, col;
};

/// Ill-typed expression, unknown identifier or singular inverse.
class ElabError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Expr parse_expr(std::string_view text);
/// Inverse of parse_expr up to positions and whitespace.
std::string print_expr(const Expr& e);

/// Object together with whatever extra structure it carries.
struct Object {
  std::string key;
  HModule mod;
  std::optional<CenterObject> center;
  std::optional<AModule> amod;
  std::shared_ptr<const Bud> bud;  ///< set for bud(M)
  std::shared_ptr<const Object> bud_of;
};
using ObjectPtr = std::shared_ptr<const Object>;

class Context;

/// Expression with endpoints attached; evaluation is deferred.
struct Typed {
  std::string op;
  std::vector<ObjectPtr> objs;
  std::vector<Typed> kids;
  ObjectPtr src, tgt;
  std::string named;
};

/// Named objects and morphisms over one algebra. Built-in objects: I (also
/// "unit"), C, A. Everything added is validated first.
class Context {
 public:
  explicit Context(Algebra alg);
  /// {"modules": {...}, "centers": {...}, "amodules": {...},
  ///  "morphisms": {name: {"src", "tgt", "matrix"}}}
  static Context from_json(Algebra alg, const json& j);

  const Algebra& algebra() const { return alg_; }
  void add_module(const std::string& name, const HModule& m);
  void add_center(const std::string& name, const CenterObject& c);
  void add_amodule(const std::string& name, const AModule& m);
  void add_morphism(const std::string& name, const std::string& src, const std::string& tgt, const Matrix& m);

  ObjectPtr object(const Expr& e);
  ObjectPtr object(std::string_view text) { return object(parse_expr(text)); }
  Typed elaborate(const Expr& e);
  Matrix eval(const Typed& t);
  /// Parses, elaborates and evaluates; asserts the result is H-linear.
  HMap run(std::string_view text);

 private:
  ObjectPtr intern(Object o);
  ObjectPtr tensor_obj(const ObjectPtr& a, const ObjectPtr& b);
  ObjectPtr heart_obj(const ObjectPtr& x);
  ObjectPtr bud_obj(const ObjectPtr& m);
  ObjectPtr ihom_obj(const ObjectPtr& p, const ObjectPtr& n);
  const AlgebraA& alg_a();

  Algebra alg_;
  std::shared_ptr<AlgebraA> a_;
  std::map<std::string, ObjectPtr> names_;
  std::map<std::string, ObjectPtr> cache_;
  struct NamedMap {
    ObjectPtr src, tgt;
    Matrix m;
  };
  std::map<std::string, NamedMap> morphisms_;
};

struct CheckResult {
  bool pass = false;
  std::string message;
};
/// Compares endpoints, then entries; on failure names a witness basis vector.
CheckResult check_equal(Context& ctx, std::string_view lhs, std::string_view rhs);

}  // namespace qhopf
