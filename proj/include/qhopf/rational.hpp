#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qhopf {

/// Exact rational number. Values that fit in int64 numerator/denominator stay
/// on the machine-word path; anything larger is promoted to GMP.
/// Always kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT implicit
  Rational(int n) : num_(n) {}           // NOLINT implicit
  Rational(std::int64_t n, std::int64_t d);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  std::string str() const;
  mpq_class to_mpq() const;
  double to_double() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const;

  Rational operator-() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

 private:
  static Rational from_mpq(mpq_class q);
  static Rational from_i128(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qhopf
