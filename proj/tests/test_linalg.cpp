#include <random>

#include "doctest.h"
#include "qhopf/linalg.hpp"

using namespace qhopf;

namespace {

// Plain dense Gauss-Jordan on mpq, independent of the library's sparse engine.
std::size_t oracle_rank(const Matrix& a) {
  std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a.at(r, c).to_mpq();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < a.cols() && rk < a.rows(); ++c) {
    std::size_t p = rk;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rk]);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rk || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rk][c];
      for (std::size_t k = c; k < a.cols(); ++k) m[r][k] -= f * m[rk][k];
    }
    ++rk;
  }
  return rk;
}

Matrix random_matrix(std::mt19937& g, std::size_t r, std::size_t c, int density_pct, std::size_t rank_cap = 0) {
  std::uniform_int_distribution<int> val(-5, 5), pct(0, 99);
  auto gen = [&](std::size_t rr, std::size_t cc) {
    std::vector<Rational> d(rr * cc);
    for (auto& x : d)
      if (pct(g) < density_pct) x = Rational(val(g), 1 + (pct(g) % 3));
    return Matrix::from_dense(rr, cc, d);
  };
  if (rank_cap == 0) return gen(r, c);
  return gen(r, rank_cap) * gen(rank_cap, c);
}

}  // namespace

TEST_CASE("rational arithmetic and promotion") {
  Rational a(1, 3), b(-2, 6);
  CHECK((a + b).is_zero());
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  Rational big(INT64_MAX);
  Rational sq = big * big;
  CHECK(!sq.is_small());
  CHECK((sq / big) == big);
  CHECK((sq / big).is_small());
  mpz_class expect = mpz_class("9223372036854775807") * mpz_class("9223372036854775807");
  CHECK(sq.to_mpq() == mpq_class(expect));
  Rational s = Rational(INT64_MAX) + Rational(INT64_MAX);
  CHECK(s.to_mpq() == mpq_class(mpz_class("18446744073709551614")));
  CHECK((s - Rational(INT64_MAX)) == Rational(INT64_MAX));
  Rational m(INT64_MIN);
  CHECK((-m).to_mpq() == -mpq_class(mpz_class("-9223372036854775808")));
  CHECK(Rational(1, 3).inverse() == Rational(3));
}

TEST_CASE("solve: identity system") {
  Matrix a = Matrix::identity(3);
  Matrix b = Matrix::from_rows({{Rational(1)}, {Rational(2)}, {Rational(3)}});
  auto r = solve(a, b);
  REQUIRE(r.particular);
  CHECK(*r.particular == b);
  CHECK(r.kernel.cols() == 0);
}

TEST_CASE("solve: one equation two unknowns") {
  Matrix a = Matrix::from_rows({{Rational(1), Rational(1)}});
  Matrix b = Matrix::from_rows({{Rational(0)}});
  auto r = solve(a, b);
  REQUIRE(r.particular);
  CHECK(r.kernel.cols() == 1);
  CHECK(r.kernel.at(0, 0) == -r.kernel.at(1, 0));
  CHECK(!r.kernel.at(0, 0).is_zero());
}

TEST_CASE("solve: inconsistent") {
  Matrix a = Matrix::from_rows({{Rational(1)}, {Rational(2)}});
  Matrix b = Matrix::from_rows({{Rational(1)}, {Rational(3)}});
  CHECK(!solve(a, b).particular);
}

TEST_CASE("cokernel edge cases") {
  auto z = cokernel(Matrix(3, 2));
  CHECK(z.projection == Matrix::identity(3));
  auto i = cokernel(Matrix::identity(2));
  CHECK(i.projection.rows() == 0);
  CHECK(i.projection.cols() == 2);
  auto c = cokernel(Matrix::from_rows({{Rational(1)}, {Rational(1)}}));
  REQUIRE(c.projection.rows() == 1);
  CHECK(c.projection.at(0, 0) == -c.projection.at(0, 1));
  CHECK(!c.projection.at(0, 0).is_zero());
}

TEST_CASE("kron basics") {
  Matrix a = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
  Matrix b = Matrix::from_rows({{Rational(0), Rational(5)}, {Rational(6), Rational(7)}});
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  CHECK(kron(Matrix::scalar(1, Rational(3)), a) == a * Rational(3));
  CHECK(kron(a, b).at(2, 1) == Rational(3 * 5));
  Matrix c = Matrix::from_rows({{Rational(1, 2), Rational(-1)}, {Rational(0), Rational(2)}});
  Matrix d = Matrix::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(1)}});
  CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
}

TEST_CASE("randomized kernel, cokernel, inverse against dense oracle") {
  std::mt19937 g(12345);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + g() % 9, c = 1 + g() % 9;
    std::size_t cap = (t % 3 == 0) ? 1 + g() % std::min(r, c) : 0;
    Matrix a = random_matrix(g, r, c, 40 + (t % 5) * 12, cap);
    std::size_t rk = oracle_rank(a);
    CHECK(rank(a) == rk);
    Matrix k = kernel(a);
    CHECK(k.cols() == c - rk);
    CHECK((a * k).is_zero());
    CHECK(oracle_rank(k) == k.cols());
    auto ck = cokernel(a);
    CHECK(ck.projection.rows() == r - rk);
    CHECK((ck.projection * a).is_zero());
    CHECK(ck.projection * ck.section == Matrix::identity(r - rk));
    Matrix x = random_matrix(g, c, 2, 60);
    Matrix b = a * x;
    auto s = solve(a, b);
    REQUIRE(s.particular);
    CHECK(a * *s.particular == b);
    if (r == c) {
      auto inv = inverse(a);
      CHECK(inv.has_value() == (rk == r));
      if (inv) CHECK(a * *inv == Matrix::identity(r));
    }
  }
}

TEST_CASE("span helpers") {
  Matrix a = Matrix::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(0), Rational(0)}});
  Matrix b = Matrix::from_rows({{Rational(1)}, {Rational(1)}, {Rational(1)}});
  Matrix c = Matrix::from_rows({{Rational(2)}, {Rational(3)}, {Rational(0)}});
  CHECK(!span_contains(a, b));
  CHECK(span_contains(a, c));
  CHECK(intersect_spans(a, hstack({b, c})).cols() == 1);
  Matrix p = leg_permutation(LegShape({2, 3}), {1, 0});
  Matrix x = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
  Matrix y = Matrix::from_rows({{Rational(1), Rational(0), Rational(5)}, {Rational(0), Rational(1), Rational(0)}, {Rational(2), Rational(0), Rational(1)}});
  CHECK(p * kron(x, y) == kron(y, x) * p);
}
