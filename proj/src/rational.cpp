#include "pathturan/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace pathturan {

namespace mp = boost::multiprecision;

Rational::Rational(Int p, Int q) : num_(std::move(p)), den_(std::move(q)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  canonicalize();
}

void Rational::canonicalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = mp::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Cross-multiplication; denominators are positive.
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace {

Int parse_integer(std::string_view text) {
  size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size())
    throw std::invalid_argument("empty integer in rational literal");
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("bad integer in rational literal");
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? Int(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Int p = parse_integer(trim(text.substr(0, slash)));
  Int q = parse_integer(trim(text.substr(slash + 1)));
  if (q == 0) throw std::domain_error("rational with zero denominator");
  return Rational(std::move(p), std::move(q));
}

std::string Rational::str() const {
  return num_.str() + "/" + den_.str();
}

namespace {

Int pow10(int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

int digit_count(const Int& x) { return int(x.str().size()); }

} // namespace

std::string Rational::decimal(int significant) const {
  if (significant < 1) throw std::invalid_argument("significant digits < 1");
  if (num_ == 0) return "0";
  Int a = mp::abs(num_);
  const Int& b = den_;

  // Scale so the quotient has exactly `significant` digits, then round the
  // remainder half-to-even.
  int exp10 = digit_count(a) - digit_count(b); // within 1 of the true exponent
  int shift = significant - 1 - exp10;
  Int q, r, scaled_den;
  auto divide = [&](int sh) {
    Int n = a, d = b;
    if (sh >= 0)
      n *= pow10(sh);
    else
      d *= pow10(-sh);
    q = n / d;
    r = n % d;
    scaled_den = d;
  };
  divide(shift);
  while (digit_count(q) > significant) {
    --shift;
    ++exp10;
    divide(shift);
  }
  while (digit_count(q) < significant) {
    ++shift;
    --exp10;
    divide(shift);
  }
  Int twice = r * 2;
  if (twice > scaled_den || (twice == scaled_den && q % 2 != 0)) ++q;
  if (digit_count(q) > significant) { // 999..9 rounded up to 100..0
    q /= 10;
    ++exp10;
  }

  std::string digits = q.str();
  std::string out;
  int int_digits = exp10 + 1;
  if (int_digits <= 0) {
    out = "0." + std::string(size_t(-int_digits), '0') + digits;
  } else if (int_digits >= significant) {
    out = digits + std::string(size_t(int_digits - significant), '0');
  } else {
    out = digits.substr(0, size_t(int_digits)) + "." +
          digits.substr(size_t(int_digits));
  }
  return (num_ < 0 ? "-" : "") + out;
}

double Rational::to_double() const {
  if (num_ == 0) return 0.0;
  return std::stod(decimal(17));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

} // namespace pathturan
