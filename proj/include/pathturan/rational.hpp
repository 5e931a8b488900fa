#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pathturan {

using Int = boost::multiprecision::cpp_int;

// Exact fraction of arbitrary-precision integers. Always canonical:
// denominator > 0, gcd(|num|, den) == 1, zero stored as 0/1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(Int value) : num_(std::move(value)), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(int value) : num_(value), den_(1) {}

  // p/q with q != 0; the sign moves to the numerator.
  Rational(Int p, Int q);
  Rational(std::int64_t p, std::int64_t q) : Rational(Int(p), Int(q)) {}

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b); // b != 0

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Accepts "p/q" and plain integers, with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  std::string str() const; // "p/q", e.g. "1688/8427", "-1/2", "0/1"

  // Plain decimal with the given number of significant digits,
  // round-half-even. Deterministic; no exponent notation.
  std::string decimal(int significant = 10) const;

  double to_double() const;

private:
  void canonicalize();

  Int num_;
  Int den_;
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace pathturan
