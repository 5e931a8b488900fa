// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fail. Run via `ctest -R acceptance` or directly.

#include "pathturan/bound.hpp"
#include "pathturan/catalog.hpp"
#include "pathturan/cuts.hpp"
#include "pathturan/search.hpp"
#include "pathturan/sequence.hpp"
#include "test_util.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

using namespace pathturan;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

int failures = 0;

template <class Body>
void criterion(int id, const std::string& title, Body&& body) {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
    ++failures;
  }
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("[%s] %2d %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id,
              title.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

AtomMatrix all_ones_column(int k) {
  return AtomMatrix(k, 1, std::vector<std::int64_t>(size_t(k), 1));
}

std::string criterion_table() {
  auto start = std::chrono::steady_clock::now();
  for (int k = catalog::first_k; k <= catalog::last_k; ++k) {
    Rational computed = lower_bound(catalog::get("D" + std::to_string(k))).value;
    require(computed == catalog::published_bound(k),
            "bound mismatch at k=" + std::to_string(k) + ": " + computed.str());
  }
  double elapsed = seconds_since(start);
  require(elapsed < 1.0, "table run exceeded 1s");
  return "12/12 published fractions exact";
}

std::string criterion_baseline() {
  for (int k = 2; k <= 32; ++k) {
    Rational value = lower_bound(all_ones_column(k)).value;
    require(value == Rational(k - 1, 4 * std::int64_t(k)),
            "baseline mismatch at k=" + std::to_string(k));
  }
  require(lower_bound(all_ones_column(2)).value == Rational(1, 8),
          "k=2 is not 1/8");
  require(lower_bound(all_ones_column(3)).value == Rational(1, 6),
          "k=3 is not 1/6");
  return "(k-1)/(4k) exact for k=2..32";
}

std::string criterion_improvement() {
  for (int k = catalog::first_k; k <= catalog::last_k; ++k) {
    BoundCertificate cert = lower_bound(catalog::get("D" + std::to_string(k)));
    require(cert.value > Rational(k - 1, 4 * std::int64_t(k)),
            "no strict improvement at k=" + std::to_string(k));
    require(cert.improves_baseline, "certificate flag wrong at k=" +
                                        std::to_string(k));
  }
  Rational margin =
      lower_bound(catalog::get("D4")).value - Rational(3, 16);
  require(margin == Rational(1, 584064),
          "k=4 margin is " + margin.str() + ", expected 1/584064");
  return "strict improvement for k=4..15, k=4 margin exactly 1/584064";
}

std::string criterion_edge_oracle() {
  SplitMix64 rng(1001);
  for (int round = 0; round < 500; ++round) {
    AtomMatrix D = testutil::random_matrix(rng, 6, 5, 6);
    EdgeMatrix M = edge_matrix(D);
    for (int i = 1; i <= D.atom_count(); ++i)
      for (int j = 1; j <= D.atom_count(); ++j)
        require(M.entry(i, j) == edge_count_oracle(D, i, j),
                "edge count mismatch in round " + std::to_string(round));
  }
  return "edge matrix equals the exhaustive oracle on 500 random matrices";
}

std::string criterion_s_count() {
  SplitMix64 rng(2002);
  for (int round = 0; round < 100; ++round) {
    AtomMatrix D = testutil::random_matrix(rng, 6, 5, 6);
    SequencePrefix gen = generate_prefix(D, 2000);
    const auto& seq = gen.symbols;
    // brute per-prefix counts by direct pair enumeration
    Int brute = 0;
    SequencePrefix incremental(D.symbol_count());
    for (size_t j = 0; j < seq.size(); ++j) {
      std::int64_t inc = 0;
      for (size_t i = 0; i < j; ++i)
        if (seq[i] < seq[j]) ++inc;
      brute += inc;
      incremental.append(seq[j]);
      require(incremental.s_value == brute,
              "prefix count mismatch at n=" + std::to_string(j + 1));
    }
    require(gen.s_value == brute, "generator count mismatch");
    require(s_count_oracle(seq) == brute, "oracle count mismatch");
  }
  return "incremental count exact on all prefixes, 100 matrices, n=2000";
}

std::string criterion_objective_identities() {
  SplitMix64 rng(3003);
  for (int round = 0; round < 300; ++round) {
    AtomMatrix D = testutil::random_matrix(rng, 6, 5, 6);
    EdgeMatrix M = edge_matrix(D);
    int l = D.atom_count();
    Rational whole = M.w / Rational(Int(D.total_length()) * D.total_length());
    require(objective(D, M, l, Rational(1)) == whole,
            "wrap-around mismatch in round " + std::to_string(round));
    require(objective(D, M, 1, Rational(0)) == whole,
            "w/T^2 mismatch in round " + std::to_string(round));
    for (int t = 1; t < l; ++t)
      require(objective(D, M, t, Rational(1)) ==
                  objective(D, M, t + 1, Rational(0)),
              "continuity mismatch in round " + std::to_string(round));
  }
  return "wrap-around and continuity exact on 300 random matrices";
}

std::string criterion_convergence() {
  std::string detail;
  for (const char* name : {"D4", "D5"}) {
    auto start = std::chrono::steady_clock::now();
    const AtomMatrix& D = catalog::get(name);
    Rational bound = lower_bound(D).value;
    std::vector<Rational> minima = per_block_minima(D, 13);
    auto gap = [&](int m) { return abs(minima[size_t(m)] - bound); };
    require(gap(12) <= Rational(5, 1000),
            std::string(name) + " gap(12) above 5e-3");
    for (int m = 8; m <= 11; ++m)
      require(gap(m + 1) <= Rational(3, 4) * gap(m) + Rational(1, 1000000),
              std::string(name) + " decay fails at m=" + std::to_string(m));
    double elapsed = seconds_since(start);
    require(elapsed < 60.0, std::string(name) + " exceeded 60s");
    detail += std::string(name) + " gap(12)=" + gap(12).decimal(3) + " ";
  }
  return detail + "decay factor <= 0.75 for m=8..11";
}

std::string criterion_freeness() {
  for (const std::string& name : catalog::names()) {
    const AtomMatrix& D = catalog::get(name);
    SequencePrefix p = generate_prefix(D, 100000);
    require(longest_increasing_path(p.symbols) <= D.symbol_count() - 1,
            "path too long for " + name);
  }
  SplitMix64 rng(4004);
  for (int round = 0; round < 100; ++round) {
    AtomMatrix D = testutil::random_matrix(rng, 6, 5, 6);
    SequencePrefix p = generate_prefix(D, 100000);
    require(longest_increasing_path(p.symbols) <= D.symbol_count() - 1,
            "path too long in round " + std::to_string(round));
  }
  return "longest path <= k-1 on 10^5-symbol prefixes, 14 built-ins + 100 "
         "random";
}

void check_sequence_everywhere(const std::vector<std::int32_t>& seq) {
  UvwDecomposition d = derive_uvw(seq);
  for (std::int64_t n = 1; n <= d.length(); ++n) {
    Cut cut = find_cut(d, n);
    require(check_double_counts(d, cut).both_equal,
            "double count failed at n=" + std::to_string(n));
    require(check_first_ub(d, cut).holds,
            "first bound failed at n=" + std::to_string(n));
    if (cut.j >= 1 && cut.k >= 1 && cut.l >= 1)
      require(check_second_ub(d, cut).holds,
              "second bound failed at n=" + std::to_string(n));
    if (cut.j >= 1)
      require(check_estimates(d, cut).holds,
              "estimates failed at n=" + std::to_string(n));
  }
}

std::string criterion_cut_machinery() {
  std::vector<std::int32_t> ex = {1, 2, 1, 3, 2, 4, 1, 4, 2, 3};
  UvwDecomposition d = derive_uvw(ex);
  require(d.u == std::vector<std::int64_t>{2, 4, 5, 6, 8, 9, 10}, "u wrong");
  require(d.v == std::vector<std::int64_t>{2, 4, 5, 7}, "v wrong");
  require(d.w == std::vector<std::int64_t>{2, 3}, "w wrong");
  require(find_cut(d, 9) == Cut{9, 6, 3, 2}, "cut at 9 wrong");
  require(find_cut(d, 10) == Cut{10, 7, 4, 2}, "cut at 10 wrong");

  // the walkthrough's alpha_4 breakdown 0 + 0 + 1 + 2
  std::vector<std::int64_t> terms;
  Cut cut = find_cut(d, 10);
  for (std::int64_t i = 1; i <= cut.k; ++i)
    terms.push_back(
        d.prefix_4[size_t(d.u[size_t(d.v[size_t(i - 1)] - 1)] - 1)]);
  require(terms == std::vector<std::int64_t>{0, 0, 1, 2},
          "alpha_4 breakdown wrong");

  check_sequence_everywhere(ex);
  check_sequence_everywhere(std::vector<std::int32_t>(200, 1));
  check_sequence_everywhere(std::vector<std::int32_t>(200, 4));
  std::vector<std::int32_t> sorted, reversed;
  for (int c = 1; c <= 4; ++c) sorted.insert(sorted.end(), 50, c);
  reversed.assign(sorted.rbegin(), sorted.rend());
  check_sequence_everywhere(sorted);
  check_sequence_everywhere(reversed);

  SplitMix64 rng(5005);
  for (int round = 0; round < 500; ++round)
    check_sequence_everywhere(
        testutil::random_sequence(rng, 1 + std::int64_t(rng.next_below(200))));
  return "walkthrough exact; identities and bounds hold on 500 random "
         "sequences + adversarial patterns";
}

std::string criterion_search() {
  SearchConfig cfg;
  cfg.k = 5;
  cfg.l = 3;
  cfg.seed = 31;
  cfg.iterations = 50;
  cfg.init = "R5";
  SearchResult a = hill_climb(cfg);
  SearchResult b = hill_climb(cfg);
  require(a.best == b.best, "best matrices differ between identical runs");
  require(a.best.to_file_text() == b.best.to_file_text(),
          "matrix renderings differ");
  require(a.history.size() == b.history.size(), "history sizes differ");
  for (size_t i = 0; i < a.history.size(); ++i)
    require(a.history[i] == b.history[i], "history entries differ");
  Rational prev = a.start_certificate.value;
  for (const auto& [iter, value] : a.history) {
    require(value > prev, "history not strictly increasing");
    prev = value;
  }
  require(a.best_certificate.value >= a.start_certificate.value,
          "result fell below the start");

  SearchConfig from_d5 = cfg;
  from_d5.init = "D5";
  from_d5.seed = 77;
  from_d5.iterations = 30;
  SearchResult c = hill_climb(from_d5);
  require(c.best_certificate.value >= Rational(1688, 8427),
          "result fell below 1688/8427");
  return "identical seeds identical results; strictly increasing history; "
         "D5 start never drops";
}

} // namespace

int main() {
  criterion(1, "published table reproduction", criterion_table);
  criterion(2, "baseline identity", criterion_baseline);
  criterion(3, "strict improvement over the baseline", criterion_improvement);
  criterion(4, "edge matrix oracle equivalence", criterion_edge_oracle);
  criterion(5, "pair count oracle equivalence", criterion_s_count);
  criterion(6, "objective wrap-around and continuity", criterion_objective_identities);
  criterion(7, "simulation converges to the bound", criterion_convergence);
  criterion(8, "generated prefixes are path-free", criterion_freeness);
  criterion(9, "cut machinery identities and bounds", criterion_cut_machinery);
  criterion(10, "search determinism and monotonicity", criterion_search);
  if (failures == 0) {
    std::printf("RESULT: 10/10 criteria passed\n");
    return 0;
  }
  std::printf("RESULT: %d/10 criteria FAILED\n", failures);
  return 1;
}
