#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pathturan/bound.hpp"
#include "pathturan/catalog.hpp"
#include "test_util.hpp"

#include <stdexcept>

using namespace pathturan;

namespace {

AtomMatrix example() { return AtomMatrix(3, 2, {1, 3, 0, 2, 2, 1}); }

AtomMatrix all_ones_column(int k) {
  return AtomMatrix(k, 1, std::vector<std::int64_t>(size_t(k), 1));
}

} // namespace

TEST_CASE("objective at the worked example") {
  AtomMatrix D = example();
  EdgeMatrix M = edge_matrix(D);
  CHECK(objective(D, M, 1, Rational(0)) == Rational(71, 486));
  CHECK(objective(D, M, 2, Rational(0)) == Rational(149, 864));
  CHECK(objective(D, M, 2, Rational(1)) == Rational(71, 486));
}

TEST_CASE("objective is constant for the all-ones column") {
  AtomMatrix D = all_ones_column(2);
  EdgeMatrix M = edge_matrix(D);
  CHECK(objective(D, M, 1, Rational(1, 2)) == Rational(1, 8));
  CHECK(objective(D, M, 1, Rational(0)) == Rational(1, 8));
  CHECK(objective(D, M, 1, Rational(3, 7)) == Rational(1, 8));
}

TEST_CASE("objective domain errors") {
  AtomMatrix D = example();
  EdgeMatrix M = edge_matrix(D);
  CHECK_THROWS_AS(objective(D, M, 0, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(objective(D, M, 3, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(objective(D, M, 1, Rational(-1, 2)), std::domain_error);
  CHECK_THROWS_AS(objective(D, M, 1, Rational(3, 2)), std::domain_error);
  EdgeMatrix wrong = edge_matrix(all_ones_column(2));
  CHECK_THROWS_AS(objective(D, wrong, 1, Rational(0)), std::domain_error);
}

TEST_CASE("epsilon minimization at the worked example") {
  AtomMatrix D = example();
  EdgeMatrix M = edge_matrix(D);
  EpsilonMinimum m1 = minimize_over_epsilon(D, M, 1);
  CHECK(m1.eps == Rational(0));
  CHECK(m1.value == Rational(71, 486));
  EpsilonMinimum m2 = minimize_over_epsilon(D, M, 2);
  CHECK(m2.eps == Rational(1));
  CHECK(m2.value == Rational(71, 486));
}

TEST_CASE("epsilon ties break toward zero") {
  AtomMatrix D = all_ones_column(2);
  EdgeMatrix M = edge_matrix(D);
  EpsilonMinimum m = minimize_over_epsilon(D, M, 1);
  CHECK(m.eps == Rational(0));
  CHECK(m.value == Rational(1, 8));
}

TEST_CASE("lower bound of the worked example") {
  BoundCertificate cert = lower_bound(example());
  CHECK(cert.value == Rational(71, 486));
  CHECK(cert.t_star == 1);
  CHECK(cert.epsilon_star == Rational(0));
  CHECK(cert.baseline == Rational(1, 6));
  CHECK_FALSE(cert.improves_baseline);
}

TEST_CASE("lower bound reproduces the published fractions") {
  CHECK(lower_bound(catalog::get("D5")).value == Rational(1688, 8427));
  CHECK(lower_bound(catalog::get("D4")).value == Rational(109513, 584064));
  CHECK(lower_bound(catalog::get("D4")).improves_baseline);
}

TEST_CASE("all-ones column hits the baseline exactly") {
  for (int k = 2; k <= 32; ++k) {
    BoundCertificate cert = lower_bound(all_ones_column(k));
    CHECK(cert.value == Rational(k - 1, 4 * std::int64_t(k)));
    CHECK(cert.value == cert.baseline);
    CHECK_FALSE(cert.improves_baseline);
  }
  CHECK(lower_bound(all_ones_column(2)).value == Rational(1, 8));
  CHECK(lower_bound(all_ones_column(3)).value == Rational(1, 6));
}

TEST_CASE("grid oracle") {
  CHECK(grid_oracle(all_ones_column(2), 2) == Rational(1, 8));
  Rational g = grid_oracle(example(), 1000);
  CHECK(g >= Rational(71, 486));
  CHECK(g - Rational(71, 486) <= Rational(1, 10000));
  Rational g5 = grid_oracle(catalog::get("D5"), 1000);
  CHECK(g5 >= Rational(1688, 8427));
  CHECK(g5 - Rational(1688, 8427) <= Rational(1, 10000));
  CHECK_THROWS_AS(grid_oracle(example(), 1), std::domain_error);
}

TEST_CASE("wrap-around and continuity identities") {
  SplitMix64 rng(77);
  for (int round = 0; round < 50; ++round) {
    AtomMatrix D = testutil::random_matrix(rng, 6, 5, 6);
    EdgeMatrix M = edge_matrix(D);
    int l = D.atom_count();
    Rational whole = M.w / Rational(Int(D.total_length()) * D.total_length());
    REQUIRE(objective(D, M, l, Rational(1)) == objective(D, M, 1, Rational(0)));
    REQUIRE(objective(D, M, 1, Rational(0)) == whole);
    for (int t = 1; t < l; ++t)
      REQUIRE(objective(D, M, t, Rational(1)) ==
              objective(D, M, t + 1, Rational(0)));
  }
}

TEST_CASE("closed-form minimum is at most any grid value") {
  SplitMix64 rng(123);
  for (int round = 0; round < 30; ++round) {
    AtomMatrix D = testutil::random_matrix(rng, 5, 4, 5);
    Rational lb = lower_bound(D).value;
    REQUIRE(lb <= grid_oracle(D, 7));
    REQUIRE(lb <= grid_oracle(D, 23));
  }
}

TEST_CASE("uniform scaling leaves the bound unchanged") {
  SplitMix64 rng(321);
  for (int round = 0; round < 30; ++round) {
    AtomMatrix D = testutil::random_matrix(rng, 5, 4, 5);
    std::vector<std::int64_t> scaled;
    for (int i = 1; i <= D.symbol_count(); ++i)
      for (int j = 1; j <= D.atom_count(); ++j)
        scaled.push_back(3 * D.entry(i, j));
    AtomMatrix D3(D.symbol_count(), D.atom_count(), std::move(scaled));
    REQUIRE(lower_bound(D).value == lower_bound(D3).value);
  }
}

TEST_CASE("certificate is self-consistent") {
  SplitMix64 rng(55);
  for (int round = 0; round < 30; ++round) {
    AtomMatrix D = testutil::random_matrix(rng, 6, 5, 6);
    EdgeMatrix M = edge_matrix(D);
    BoundCertificate cert = lower_bound(D);
    REQUIRE(cert.t_star >= 1);
    REQUIRE(cert.t_star <= D.atom_count());
    REQUIRE(cert.epsilon_star >= Rational(0));
    REQUIRE(cert.epsilon_star <= Rational(1));
    REQUIRE(objective(D, M, cert.t_star, cert.epsilon_star) == cert.value);
    REQUIRE(cert.improves_baseline == (cert.value > cert.baseline));
  }
}
