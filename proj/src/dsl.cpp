#include "qhopf/dsl.hpp"

#include <sstream>

#include "qhopf/linalg.hpp"

namespace qhopf {

ParseError::ParseError(std::size_t l, std::size_t c, const std::string& msg)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_tree(a.args[i], b.args[i])) return false;
  return true;
}

namespace {

enum class Tok { Name, Semi, Star, LParen, RParen, Comma, End };

struct Token {
  Tok t;
  std::string text;
  std::size_t line, col;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Name, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (s.substr(i, 3) == "\xE2\x8A\x97") {  // tensor sign
      out.push_back({Tok::Star, "*", l, cl});
      advance(3);
      continue;
    }
    Tok t;
    switch (c) {
      case ';': t = Tok::Semi; break;
      case '*': t = Tok::Star; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case ',': t = Tok::Comma; break;
      default: throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({t, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr parse() {
    Expr e = expr();
    if (cur().t != Tok::End) fail("expected end of input");
    return e;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = cur();
    throw ParseError(t.line, t.col, msg + (t.t == Tok::End ? " at end of input" : " near '" + t.text + "'"));
  }
  void expect(Tok t, const char* what) {
    if (cur().t != t) fail(std::string("expected ") + what);
    ++pos_;
  }

  Expr expr() {
    Expr first = ten();
    if (cur().t != Tok::Semi) return first;
    Expr seq;
    seq.kind = Expr::Kind::Seq;
    seq.line = first.line;
    seq.col = first.col;
    seq.args.push_back(std::move(first));
    while (cur().t == Tok::Semi) {
      ++pos_;
      seq.args.push_back(ten());
    }
    return seq;
  }

  Expr ten() {
    Expr first = atom();
    if (cur().t != Tok::Star) return first;
    Expr t;
    t.kind = Expr::Kind::Tensor;
    t.line = first.line;
    t.col = first.col;
    t.args.push_back(std::move(first));
    while (cur().t == Tok::Star) {
      ++pos_;
      t.args.push_back(atom());
    }
    return t;
  }

  Expr atom() {
    const Token& t = cur();
    if (t.t == Tok::LParen) {
      ++pos_;
      Expr e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.t != Tok::Name) fail("expected a name or '('");
    Expr e;
    e.name = t.text;
    e.line = t.line;
    e.col = t.col;
    ++pos_;
    if (cur().t != Tok::LParen) return e;
    ++pos_;
    e.kind = Expr::Kind::Call;
    e.args.push_back(expr());
    while (cur().t == Tok::Comma) {
      ++pos_;
      e.args.push_back(expr());
    }
    expect(Tok::RParen, "')' or ','");
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_to(const Expr& e, std::ostream& os, bool nested) {
  switch (e.kind) {
    case Expr::Kind::Name: os << e.name; return;
    case Expr::Kind::Call:
      os << e.name << "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) os << ", ";
        print_to(e.args[i], os, false);
      }
      os << ")";
      return;
    case Expr::Kind::Seq:
    case Expr::Kind::Tensor: {
      const bool seq = e.kind == Expr::Kind::Seq;
      if (nested) os << "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) os << (seq ? " ; " : " * ");
        const auto k = e.args[i].kind;
        print_to(e.args[i], os, k == Expr::Kind::Seq || k == Expr::Kind::Tensor);
      }
      if (nested) os << ")";
      return;
    }
  }
}

std::string where(const Expr& e) { return std::to_string(e.line) + ":" + std::to_string(e.col) + ": "; }

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string print_expr(const Expr& e) {
  std::ostringstream os;
  print_to(e, os, false);
  return os.str();
}

Context::Context(Algebra alg) : alg_(std::move(alg)) {
  Object i{"I", unit_module(alg_), unit_center(alg_), std::nullopt, nullptr, nullptr};
  names_["I"] = names_["unit"] = intern(std::move(i));
  Object c{"C", regular_module(alg_), std::nullopt, std::nullopt, nullptr, nullptr};
  CenterObject rc = regular_center(alg_);
  if (validate_center(rc).all_pass()) c.center = rc;
  names_["C"] = intern(std::move(c));
  const AlgebraA& a = alg_a();
  Object ao{"A", a.obj, a.center, algebra_amodule(alg_), nullptr, nullptr};
  names_["A"] = intern(std::move(ao));
}

const AlgebraA& Context::alg_a() {
  if (!a_) a_ = std::make_shared<AlgebraA>(algebra_a(alg_));
  return *a_;
}

ObjectPtr Context::intern(Object o) {
  auto it = cache_.find(o.key);
  if (it != cache_.end()) return it->second;
  auto p = std::make_shared<const Object>(std::move(o));
  cache_[p->key] = p;
  return p;
}

namespace {
void check_name(const std::map<std::string, ObjectPtr>& names, const std::string& name) {
  static const std::vector<std::string> reserved = {"I", "unit", "C", "A"};
  for (const auto& r : reserved)
    if (r == name) throw ElabError("'" + name + "' is a built-in object name");
  if (names.count(name)) throw ElabError("duplicate name '" + name + "'");
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    throw ElabError("bad name '" + name + "'");
}
}  // namespace

void Context::add_module(const std::string& name, const HModule& m) {
  check_name(names_, name);
  names_[name] = intern(Object{name, m, std::nullopt, std::nullopt, nullptr, nullptr});
}

void Context::add_center(const std::string& name, const CenterObject& c) {
  check_name(names_, name);
  Report r = validate_center(c);
  if (!r.all_pass()) throw ValidationError(name + ": not a center object", r);
  names_[name] = intern(Object{name, c.base(), c, std::nullopt, nullptr, nullptr});
}

void Context::add_amodule(const std::string& name, const AModule& m) {
  check_name(names_, name);
  Report r = validate_amodule(m);
  if (!r.all_pass()) throw ValidationError(name + ": not an A-module", r);
  names_[name] = intern(Object{name, m.base(), m.center(), m, nullptr, nullptr});
}

void Context::add_morphism(const std::string& name, const std::string& src, const std::string& tgt, const Matrix& m) {
  if (morphisms_.count(name) || names_.count(name)) throw ElabError("duplicate name '" + name + "'");
  ObjectPtr s = object(src), t = object(tgt);
  if (m.rows() != t->mod.dim() || m.cols() != s->mod.dim())
    throw ElabError(name + ": matrix must be " + std::to_string(t->mod.dim()) + "x" + std::to_string(s->mod.dim()));
  if (!is_h_linear(HMap{s->mod, t->mod, m})) throw ElabError(name + ": not H-linear");
  morphisms_[name] = {s, t, m};
}

Context Context::from_json(Algebra alg, const json& j) {
  Context ctx(std::move(alg));
  if (!j.is_object()) throw IoError("/: expected an object");
  auto section = [&](const char* key) -> const json* {
    auto it = j.find(key);
    if (it == j.end()) return nullptr;
    if (!it->is_object()) throw IoError(std::string("/") + key + ": expected an object");
    return &*it;
  };
  try {
    if (auto s = section("modules"))
      for (const auto& [k, v] : s->items()) ctx.add_module(k, module_from_json(ctx.alg_, v, "/modules/" + k));
    if (auto s = section("centers"))
      for (const auto& [k, v] : s->items()) ctx.add_center(k, center_from_json(ctx.alg_, v, "/centers/" + k));
    if (auto s = section("amodules"))
      for (const auto& [k, v] : s->items()) ctx.add_amodule(k, amodule_from_json(ctx.alg_, v, "/amodules/" + k));
    if (auto s = section("morphisms"))
      for (const auto& [k, v] : s->items()) {
        const std::string path = "/morphisms/" + k;
        if (!v.is_object() || !v.contains("src") || !v.contains("tgt") || !v.contains("matrix"))
          throw IoError(path + ": expected {src, tgt, matrix}");
        if (!v["src"].is_string() || !v["tgt"].is_string()) throw IoError(path + ": src and tgt must be strings");
        const std::string src = v["src"].get<std::string>(), tgt = v["tgt"].get<std::string>();
        ObjectPtr so = ctx.object(src), to = ctx.object(tgt);
        ctx.add_morphism(k, src, tgt, matrix_from_json(v["matrix"], to->mod.dim(), so->mod.dim(), path + "/matrix"));
      }
  } catch (const ElabError& e) {
    throw IoError(e.what());
  } catch (const ParseError& e) {
    throw IoError(std::string("object expression: ") + e.what());
  }
  return ctx;
}

ObjectPtr Context::tensor_obj(const ObjectPtr& a, const ObjectPtr& b) {
  const std::string key = "(" + a->key + "*" + b->key + ")";
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Object o{key, tensor(a->mod, b->mod), std::nullopt, std::nullopt, nullptr, nullptr};
  if (a->center && b->center) o.center = tensor_center(*a->center, *b->center);
  if (a->center && b->key == "A") o.amod = free_amodule(*a->center);
  return intern(std::move(o));
}

ObjectPtr Context::heart_obj(const ObjectPtr& x) {
  if (x->key == "I") return names_.at("A");
  const std::string key = "heart(" + x->key + ")";
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  AModule am = heart_amodule(x->mod);
  return intern(Object{key, am.base(), am.center(), am, nullptr, nullptr});
}

ObjectPtr Context::bud_obj(const ObjectPtr& m) {
  if (!m->amod) throw ElabError("bud needs an A-module, got " + m->key);
  const std::string key = "bud(" + m->key + ")";
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto b = std::make_shared<const Bud>(budzogan(*m->amod));
  return intern(Object{key, b->obj, std::nullopt, std::nullopt, b, m});
}

ObjectPtr Context::ihom_obj(const ObjectPtr& p, const ObjectPtr& n) {
  const std::string key = "ihom(" + p->key + "," + n->key + ")";
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  return intern(Object{key, inner_hom(p->mod, n->mod), std::nullopt, std::nullopt, nullptr, nullptr});
}

ObjectPtr Context::object(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Name: {
      auto it = names_.find(e.name);
      if (it == names_.end()) {
        if (morphisms_.count(e.name)) throw ElabError(where(e) + "'" + e.name + "' is a morphism, not an object");
        throw ElabError(where(e) + "unknown object '" + e.name + "'");
      }
      return it->second;
    }
    case Expr::Kind::Tensor: {
      ObjectPtr acc = object(e.args[0]);
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = tensor_obj(acc, object(e.args[i]));
      return acc;
    }
    case Expr::Kind::Seq: throw ElabError(where(e) + "';' is not allowed in an object");
    case Expr::Kind::Call: {
      auto arity = [&](std::size_t k) {
        if (e.args.size() != k)
          throw ElabError(where(e) + e.name + " takes " + std::to_string(k) + " object argument(s)");
      };
      if (e.name == "heart") {
        arity(1);
        return heart_obj(object(e.args[0]));
      }
      if (e.name == "bud") {
        arity(1);
        return bud_obj(object(e.args[0]));
      }
      if (e.name == "ihom") {
        arity(2);
        return ihom_obj(object(e.args[0]), object(e.args[1]));
      }
      throw ElabError(where(e) + "unknown object constructor '" + e.name + "'");
    }
  }
  throw ElabError("unreachable");
}

Typed Context::elaborate(const Expr& e) {
  Typed t;
  if (e.kind == Expr::Kind::Name) {
    auto it = morphisms_.find(e.name);
    if (it == morphisms_.end()) {
      if (names_.count(e.name))
        throw ElabError(where(e) + "'" + e.name + "' is an object; write id(" + e.name + ")");
      throw ElabError(where(e) + "unknown morphism '" + e.name + "'");
    }
    t.op = "named";
    t.named = e.name;
    t.src = it->second.src;
    t.tgt = it->second.tgt;
    return t;
  }
  if (e.kind == Expr::Kind::Seq) {
    t.op = "seq";
    for (const auto& a : e.args) t.kids.push_back(elaborate(a));
    for (std::size_t i = 0; i + 1 < t.kids.size(); ++i)
      if (t.kids[i].tgt->key != t.kids[i + 1].src->key)
        throw ElabError(where(e.args[i + 1]) + "type mismatch: " + t.kids[i].tgt->key + " is followed by a map from " +
                        t.kids[i + 1].src->key);
    t.src = t.kids.front().src;
    t.tgt = t.kids.back().tgt;
    return t;
  }
  if (e.kind == Expr::Kind::Tensor) {
    t.op = "tensor";
    for (const auto& a : e.args) t.kids.push_back(elaborate(a));
    t.src = t.kids[0].src;
    t.tgt = t.kids[0].tgt;
    for (std::size_t i = 1; i < t.kids.size(); ++i) {
      t.src = tensor_obj(t.src, t.kids[i].src);
      t.tgt = tensor_obj(t.tgt, t.kids[i].tgt);
    }
    return t;
  }

  const std::string& f = e.name;
  t.op = f;
  auto arity = [&](std::size_t k) {
    if (e.args.size() != k) throw ElabError(where(e) + f + " takes " + std::to_string(k) + " argument(s)");
  };
  auto obj = [&](std::size_t k) {
    t.objs.push_back(object(e.args[k]));
    return t.objs.back();
  };
  auto T = [&](const ObjectPtr& a, const ObjectPtr& b) { return tensor_obj(a, b); };
  auto need_center = [&](const ObjectPtr& m) {
    if (!m->center) throw ElabError(where(e) + f + ": " + m->key + " carries no center structure");
  };
  auto need_amod = [&](const ObjectPtr& m) {
    if (!m->amod) throw ElabError(where(e) + f + ": " + m->key + " is not an A-module");
  };
  const ObjectPtr A = names_.at("A"), I = names_.at("I");

  if (f == "id") {
    arity(1);
    t.src = t.tgt = obj(0);
  } else if (f == "lunit" || f == "runit") {
    arity(1);
    ObjectPtr x = obj(0);
    t.src = f == "lunit" ? T(I, x) : T(x, I);
    t.tgt = x;
  } else if (f == "assoc" || f == "assoc_inv") {
    arity(3);
    ObjectPtr m = obj(0), n = obj(1), p = obj(2);
    t.src = T(T(m, n), p);
    t.tgt = T(m, T(n, p));
    if (f == "assoc_inv") std::swap(t.src, t.tgt);
  } else if (f == "eta") {
    arity(2);
    ObjectPtr m = obj(0), p = obj(1);
    t.src = m;
    t.tgt = ihom_obj(p, T(m, p));
  } else if (f == "eps") {
    arity(2);
    ObjectPtr n = obj(0), p = obj(1);
    t.src = T(ihom_obj(p, n), p);
    t.tgt = n;
  } else if (f == "icomp") {
    arity(3);
    ObjectPtr x = obj(0), y = obj(1), z = obj(2);
    t.src = T(ihom_obj(y, z), ihom_obj(x, y));
    t.tgt = ihom_obj(x, z);
  } else if (f == "in_map") {
    arity(3);
    ObjectPtr m = obj(0), x = obj(1), y = obj(2);
    t.src = T(m, ihom_obj(x, y));
    t.tgt = ihom_obj(x, T(m, y));
  } else if (f == "ipost") {
    arity(2);
    ObjectPtr p = obj(0);
    t.kids.push_back(elaborate(e.args[1]));
    t.src = ihom_obj(p, t.kids[0].src);
    t.tgt = ihom_obj(p, t.kids[0].tgt);
  } else if (f == "braid" || f == "braid_inv") {
    arity(2);
    ObjectPtr m = obj(0), x = obj(1);
    need_center(m);
    t.src = T(m, x);
    t.tgt = T(x, m);
    if (f == "braid_inv") std::swap(t.src, t.tgt);
  } else if (f == "diamond") {
    arity(2);
    ObjectPtr m = obj(0), x = obj(1);
    t.src = T(heart_obj(m), x);
    t.tgt = T(x, m);
  } else if (f == "pi") {
    arity(1);
    ObjectPtr m = obj(0);
    t.src = heart_obj(m);
    t.tgt = m;
  } else if (f == "harpoon") {
    arity(1);
    ObjectPtr x = obj(0);
    t.src = T(A, x);
    t.tgt = x;
  } else if (f == "hcomp") {
    arity(2);
    ObjectPtr m = obj(0), n = obj(1);
    t.src = T(heart_obj(m), heart_obj(n));
    t.tgt = heart_obj(T(m, n));
  } else if (f == "mu" || f == "lambda") {
    arity(1);
    ObjectPtr m = obj(0);
    need_amod(m);
    t.src = f == "mu" ? T(m, A) : T(A, m);
    t.tgt = m;
  } else if (f == "unit" || f == "counit") {
    arity(1);
    ObjectPtr a = obj(0);
    if (a->key != "A") throw ElabError(where(e) + f + " is only defined for A");
    t.src = f == "unit" ? I : A;
    t.tgt = f == "unit" ? A : I;
  } else if (f == "s" || f == "t") {
    arity(1);
    ObjectPtr m = obj(0);
    need_center(m);
    t.src = f == "s" ? heart_obj(m) : T(m, A);
    t.tgt = f == "s" ? T(m, A) : heart_obj(m);
  } else if (f == "xi" || f == "zeta") {
    arity(1);
    ObjectPtr m = obj(0);
    need_amod(m);
    ObjectPtr hb = heart_obj(bud_obj(m));
    t.src = f == "xi" ? hb : m;
    t.tgt = f == "xi" ? m : hb;
  } else if (f == "p") {
    arity(1);
    ObjectPtr m = obj(0);
    t.src = m;
    t.tgt = bud_obj(m);
  } else if (f == "counit_iso") {
    arity(1);
    ObjectPtr x = obj(0);
    t.src = bud_obj(heart_obj(x));
    t.tgt = x;
  } else if (f == "heart") {
    arity(1);
    t.kids.push_back(elaborate(e.args[0]));
    t.src = heart_obj(t.kids[0].src);
    t.tgt = heart_obj(t.kids[0].tgt);
  } else if (f == "bud") {
    arity(1);
    t.kids.push_back(elaborate(e.args[0]));
    t.src = bud_obj(t.kids[0].src);
    t.tgt = bud_obj(t.kids[0].tgt);
  } else if (f == "inv") {
    arity(1);
    t.kids.push_back(elaborate(e.args[0]));
    t.src = t.kids[0].tgt;
    t.tgt = t.kids[0].src;
  } else {
    throw ElabError(where(e) + "unknown morphism constructor '" + f + "'");
  }
  return t;
}

Matrix Context::eval(const Typed& t) {
  const std::string& f = t.op;
  auto o = [&](std::size_t k) -> const Object& { return *t.objs[k]; };
  if (f == "named") return morphisms_.at(t.named).m;
  if (f == "seq") {
    Matrix m = eval(t.kids[0]);
    for (std::size_t i = 1; i < t.kids.size(); ++i) m = eval(t.kids[i]) * m;
    return m;
  }
  if (f == "tensor") {
    Matrix m = eval(t.kids[0]);
    for (std::size_t i = 1; i < t.kids.size(); ++i) m = kron(m, eval(t.kids[i]));
    return m;
  }
  if (f == "id" || f == "lunit" || f == "runit") return Matrix::identity(t.tgt->mod.dim());
  if (f == "assoc") return associator(o(0).mod, o(1).mod, o(2).mod).m;
  if (f == "assoc_inv") return associator_inv(o(0).mod, o(1).mod, o(2).mod).m;
  if (f == "eta") return inner_eta(o(0).mod, o(1).mod).m;
  if (f == "eps") return inner_eps(o(0).mod, o(1).mod).m;
  if (f == "icomp") return inner_compose(o(0).mod, o(1).mod, o(2).mod).m;
  if (f == "in_map") return inner_in_map(o(0).mod, o(1).mod, o(2).mod).m;
  if (f == "ipost") {
    const Typed& k = t.kids[0];
    return inner_post(o(0).mod, HMap{k.src->mod, k.tgt->mod, eval(k)}).m;
  }
  if (f == "braid") return braiding(*o(0).center, o(1).mod).m;
  if (f == "braid_inv") return braiding_inv(*o(0).center, o(1).mod).m;
  if (f == "diamond") return diamond(o(0).mod, o(1).mod).m;
  if (f == "pi") return pi_map(o(0).mod).m;
  if (f == "harpoon") return harpoon(o(0).mod).m;
  if (f == "hcomp") return heart_compose(o(0).mod, o(1).mod).g.m;
  if (f == "mu") return o(0).amod->mu();
  if (f == "lambda") return left_action(*o(0).amod).m;
  if (f == "unit") return alg_a().unit.m;
  if (f == "counit") return alg_a().counit.m;
  if (f == "s") return s_t_isos(*o(0).center).s.m;
  if (f == "t") return s_t_isos(*o(0).center).t.m;
  if (f == "xi" || f == "zeta") {
    UnitIso u = unit_iso(*o(0).amod);
    return f == "xi" ? u.xi.m : u.zeta.m;
  }
  if (f == "p") return t.tgt->bud->q.projection;
  if (f == "counit_iso") return counit_iso(o(0).mod).map.m;
  if (f == "heart") return kron(Matrix::identity(alg_.dim()), eval(t.kids[0]));
  if (f == "bud") return budzogan_map(*t.src->bud, *t.tgt->bud, eval(t.kids[0])).m;
  if (f == "inv") {
    auto inv = inverse(eval(t.kids[0]));
    if (!inv) throw ElabError("inv: map " + t.tgt->key + " -> " + t.src->key + " is not invertible");
    return *inv;
  }
  throw ElabError("cannot evaluate '" + f + "'");
}

HMap Context::run(std::string_view text) {
  Typed t = elaborate(parse_expr(text));
  HMap m{t.src->mod, t.tgt->mod, eval(t)};
  if (!is_h_linear(m)) throw ElabError("result is not H-linear");
  return m;
}

CheckResult check_equal(Context& ctx, std::string_view lhs, std::string_view rhs) {
  Typed l = ctx.elaborate(parse_expr(lhs)), r = ctx.elaborate(parse_expr(rhs));
  if (l.src->key != r.src->key || l.tgt->key != r.tgt->key)
    return {false, "endpoints differ: " + l.src->key + " -> " + l.tgt->key + " vs " + r.src->key + " -> " + r.tgt->key};
  Matrix a = ctx.eval(l), b = ctx.eval(r);
  for (const auto& m : {a, b})
    if (!is_h_linear(HMap{l.src->mod, l.tgt->mod, m})) return {false, "a side is not H-linear"};
  for (std::size_t c = 0; c < a.cols(); ++c) {
    SparseVector u = a.column(c), v = b.column(c);
    if (u.entries != v.entries) {
      std::ostringstream os;
      os << "differ on basis vector " << c << " of " << l.src->key << ":";
      Matrix d = Matrix::from_columns(a.rows(), {u}) - Matrix::from_columns(a.rows(), {v});
      std::size_t shown = 0;
      for (const auto& [row, x] : d.column(0).entries) {
        if (shown++ == 4) {
          os << " ...";
          break;
        }
        os << " [" << row << "] lhs-rhs=" << x.str();
      }
      return {false, os.str()};
    }
  }
  return {true, "equal as maps " + l.src->key + " -> " + l.tgt->key};
}

}  // namespace qhopf
