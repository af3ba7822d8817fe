#include "qhopf/rational.hpp"

#include <limits>
#include <stdexcept>

namespace qhopf {

namespace {

using u128 = unsigned __int128;

u128 uabs(__int128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if (a <= UINT64_MAX && b <= UINT64_MAX) {
      std::uint64_t x = static_cast<std::uint64_t>(a), y = static_cast<std::uint64_t>(b);
      while (y != 0) {
        std::uint64_t t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from_i128(__int128 x) {
  bool neg = x < 0;
  u128 u = uabs(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational Rational::from_i128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Rational r;
  if (n == 0) return r;
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g != 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  if (fits64(n) && fits64(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const { return big_ ? big_->get_d() : double(num_) / double(den_); }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
  s = s.substr(b);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // U+2212 minus sign
  if (s.rfind("\xE2\x88\x92", 0) == 0) s = "-" + s.substr(3);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string ns = s.substr(0, slash), ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(ns) || !valid_int(ds)) throw std::invalid_argument("bad rational literal: " + s);
  if (ns[0] == '+') ns = ns.substr(1);
  if (ds[0] == '+') ds = ds.substr(1);
  mpz_class n(ns, 10), d(ds, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  return from_mpq(mpq_class(n, d));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  return from_i128(-static_cast<__int128>(num_), den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (big_) return from_mpq(1 / *big_);
  return from_i128(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() + b.to_mpq());
  if (b.num_ == 0) return a;
  if (a.num_ == 0) return b;
  if (a.den_ == b.den_) {
    __int128 n = static_cast<__int128>(a.num_) + b.num_;
    if (a.den_ == 1 && fits64(n)) return Rational(static_cast<std::int64_t>(n));
    return Rational::from_i128(n, a.den_);
  }
  __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Rational::from_i128(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.big_ || b.big_) return Rational::from_mpq(a.to_mpq() * b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    if (fits64(n)) return Rational(static_cast<std::int64_t>(n));
  }
  std::int64_t g1 = static_cast<std::int64_t>(gcd128(uabs(a.num_), static_cast<u128>(b.den_)));
  std::int64_t g2 = static_cast<std::int64_t>(gcd128(uabs(b.num_), static_cast<u128>(a.den_)));
  __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
  __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
  if (fits64(n) && fits64(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return Rational::from_i128(n, d);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical form: a small value is never stored big
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qhopf
