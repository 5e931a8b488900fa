#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pathturan/rational.hpp"
#include "pathturan/splitmix64.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace pathturan;
namespace mp = boost::multiprecision;

TEST_CASE("construction reduces to canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(3, -6).num() == -1);
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational(0, -7).str() == "0/1");
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(71, 6) * Rational(1, 81) == Rational(71, 486));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0, 5), std::domain_error);
}

TEST_CASE("comparison is exact") {
  CHECK(Rational(1688, 8427) > Rational(1, 5));
  CHECK(Rational(1, 5) < Rational(1688, 8427));
  CHECK(Rational(1, 3) <= Rational(2, 6));
  CHECK(Rational(-1, 2) < Rational(0));
  std::vector<Rational> xs = {Rational(1, 2), Rational(-3, 7), Rational(0),
                              Rational(5, 11), Rational(1, 3)};
  std::sort(xs.begin(), xs.end());
  CHECK(xs.front() == Rational(-3, 7));
  CHECK(xs.back() == Rational(1, 2));
}

TEST_CASE("p/q equals cp/cq for any nonzero c") {
  SplitMix64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::int64_t p = std::int64_t(rng.next_below(2001)) - 1000;
    std::int64_t q = std::int64_t(rng.next_below(2000)) - 1000;
    if (q >= 0) ++q;
    std::int64_t c = std::int64_t(rng.next_below(40)) - 20;
    if (c >= 0) ++c;
    CHECK(Rational(p, q) == Rational(p * c, q * c));
  }
}

TEST_CASE("canonical form survives operation chains") {
  SplitMix64 rng(5);
  Rational acc(1, 3);
  for (int i = 0; i < 500; ++i) {
    Rational r(std::int64_t(rng.next_below(199)) - 99,
               1 + std::int64_t(rng.next_below(99)));
    switch (rng.next_below(4)) {
      case 0: acc += r; break;
      case 1: acc -= r; break;
      case 2: acc *= r; break;
      default:
        if (!r.is_zero()) acc /= r;
    }
    REQUIRE(acc.den() > 0);
    REQUIRE(mp::gcd(mp::abs(acc.num()), acc.den()) == 1);
  }
}

TEST_CASE("agreement with double arithmetic on small inputs") {
  SplitMix64 rng(7);
  auto close = [](double x, double y) {
    return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
  };
  for (int i = 0; i < 300; ++i) {
    Rational a(std::int64_t(rng.next_below(401)) - 200,
               1 + std::int64_t(rng.next_below(200)));
    Rational b(std::int64_t(rng.next_below(401)) - 200,
               1 + std::int64_t(rng.next_below(200)));
    double da = a.to_double(), db = b.to_double();
    CHECK(close((a + b).to_double(), da + db));
    CHECK(close((a - b).to_double(), da - db));
    CHECK(close((a * b).to_double(), da * db));
    if (!b.is_zero()) CHECK(close((a / b).to_double(), da / db));
  }
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("1688/8427") == Rational(1688, 8427));
  CHECK(Rational::parse(" -3/6 ") == Rational(-1, 2));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("+2/+4") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("fraction rendering") {
  CHECK(Rational(1688, 8427).str() == "1688/8427");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(5).str() == "5/1");
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(Rational(1688, 8427).decimal() == "0.2003085321");
  CHECK(Rational(71, 486).decimal() == "0.1460905350");
  CHECK(Rational(1, 8).decimal() == "0.1250000000");
  CHECK(Rational(25, 2).decimal() == "12.50000000");
  CHECK(Rational(1, 3).decimal(3) == "0.333");
  CHECK(Rational(2, 3).decimal(3) == "0.667");
  CHECK(Rational(999, 1000).decimal(2) == "1.0");
  CHECK(Rational(1).decimal() == "1.000000000");
  CHECK(Rational(0).decimal() == "0");
  CHECK(Rational(-1, 2).decimal() == "-0.5000000000");
  CHECK(Rational(Int("10000000000000")).decimal() == "10000000000000");
  // ties at the 11th significant digit
  CHECK(Rational(12345678905LL, 100000000000LL).decimal() == "0.1234567890");
  CHECK(Rational(12345678915LL, 100000000000LL).decimal() == "0.1234567892");
}

TEST_CASE("to_double") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(0).to_double() == 0.0);
  CHECK(std::abs(Rational(1, 3).to_double() - 1.0 / 3.0) < 1e-15);
}
