#include <stdexcept>

#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

namespace {

struct Builder {
  AlgebraData d;
  std::size_t n;

  Builder(std::string name, std::vector<std::string> basis) : n(basis.size()) {
    d.name = std::move(name);
    d.dim = n;
    d.basis = std::move(basis);
    d.mult.assign(n * n * n, Rational());
    d.comult.assign(n * n * n, Rational());
    d.phi.assign(n * n * n, Rational());
    d.antipode.assign(n * n, Rational());
    d.unit.assign(n, Rational());
    d.counit.assign(n, Rational());
    d.alpha.assign(n, Rational());
    d.beta.assign(n, Rational());
    d.unit[0] = d.alpha[0] = d.beta[0] = Rational(1);
    d.phi[0] = Rational(1);
  }
  void mul(std::size_t i, std::size_t j, std::size_t k, Rational c = 1) { d.mult[(i * n + j) * n + k] = c; }
  void com(std::size_t i, std::size_t j, std::size_t k, Rational c = 1) { d.comult[i * n * n + j * n + k] = c; }
  void ant(std::size_t from, std::size_t to, Rational c = 1) { d.antipode[to * n + from] = c; }
};

}  // namespace

AlgebraData group_z2() {
  Builder b("group_z2", {"1", "g"});
  b.mul(0, 0, 0);
  b.mul(0, 1, 1);
  b.mul(1, 0, 1);
  b.mul(1, 1, 0);
  b.com(0, 0, 0);
  b.com(1, 1, 1);
  b.d.counit = {1, 1};
  b.ant(0, 0);
  b.ant(1, 1);
  return b.d;
}

AlgebraData sweedler_h4() {
  enum { E = 0, G = 1, X = 2, GX = 3 };
  Builder b("sweedler_h4", {"1", "g", "x", "gx"});
  for (std::size_t i = 0; i < 4; ++i) {
    b.mul(E, i, i);
    b.mul(i, E, i);
  }
  b.mul(G, G, E);
  b.mul(G, X, GX);
  b.mul(G, GX, X);
  b.mul(X, G, GX, -1);
  b.mul(GX, G, X, -1);
  b.com(E, E, E);
  b.com(G, G, G);
  b.com(X, X, E);
  b.com(X, G, X);
  b.com(GX, GX, G);
  b.com(GX, E, GX);
  b.d.counit = {1, 1, 0, 0};
  b.ant(E, E);
  b.ant(G, G);
  b.ant(X, GX, -1);
  b.ant(GX, X);
  return b.d;
}

AlgebraData drinfeld_h2() {
  Builder b("drinfeld_h2", {"1", "g"});
  b.mul(0, 0, 0);
  b.mul(0, 1, 1);
  b.mul(1, 0, 1);
  b.mul(1, 1, 0);
  b.com(0, 0, 0);
  b.com(1, 1, 1);
  b.d.counit = {1, 1};
  b.ant(0, 0);
  b.ant(1, 1);
  // Phi = 1(x)1(x)1 - 2 p(x)p(x)p with p = (1 - g)/2
  for (std::size_t f = 0; f < 8; ++f) {
    int gs = __builtin_popcount(static_cast<unsigned>(f));
    b.d.phi[f] = (f == 0 ? Rational(1) : Rational(0)) - Rational(gs % 2 ? -1 : 1, 4);
  }
  b.d.alpha = {0, 1};
  return b.d;
}

std::vector<std::string> builtin_names() { return {"group_z2", "sweedler_h4", "drinfeld_h2"}; }

AlgebraData builtin(const std::string& name) {
  if (name == "group_z2") return group_z2();
  if (name == "sweedler_h4") return sweedler_h4();
  if (name == "drinfeld_h2") return drinfeld_h2();
  throw std::invalid_argument("unknown built-in algebra: " + name);
}

}  // namespace qhopf
