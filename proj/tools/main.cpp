#include "CLI11.hpp"

#include "pathturan/bound.hpp"
#include "pathturan/catalog.hpp"
#include "pathturan/cuts.hpp"
#include "pathturan/parse_error.hpp"
#include "pathturan/search.hpp"
#include "pathturan/sequence.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace pathturan;

// Exit codes: 0 success, 1 failed checks, 2 parse error, 3 I/O error,
// 4 simulation budget exceeded.
constexpr int kExitChecks = 1;
constexpr int kExitParse = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

constexpr std::int64_t kSymbolBudget = 100'000'000;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matrix argument is a file path when one exists, otherwise the name of a
// built-in matrix (D4..D15, R5, R8).
AtomMatrix load_matrix(const std::string& spec) {
  if (std::filesystem::exists(spec)) return AtomMatrix::parse_file(spec);
  if (catalog::has(spec)) return catalog::get(spec);
  throw std::ios_base::failure("no such file or built-in matrix: '" + spec +
                               "'");
}

std::string frac(const Rational& r) {
  return r.str() + " (≈" + r.decimal() + ")";
}

int cmd_bound(const std::string& matrix_spec) {
  AtomMatrix D = load_matrix(matrix_spec);
  BoundCertificate cert = lower_bound(D);
  std::cout << "matrix: " << D.symbol_count() << " symbols, " << D.atom_count()
            << " atoms, block length " << D.total_length() << "\n";
  std::cout << "bound: " << frac(cert.value) << "\n";
  std::cout << "witness: t=" << cert.t_star << " eps=" << cert.epsilon_star
            << "\n";
  std::cout << "baseline: " << frac(cert.baseline) << "\n";
  std::cout << "value=" << cert.value << " (≈" << cert.value.decimal()
            << ") t=" << cert.t_star << " eps=" << cert.epsilon_star
            << " baseline=" << cert.baseline
            << " improved=" << (cert.improves_baseline ? "yes" : "no") << "\n";
  return 0;
}

int cmd_table() {
  int matches = 0;
  const int total = catalog::last_k - catalog::first_k + 1;
  for (int k = catalog::first_k; k <= catalog::last_k; ++k) {
    const AtomMatrix& D = catalog::get("D" + std::to_string(k));
    BoundCertificate cert = lower_bound(D);
    const Rational& published = catalog::published_bound(k);
    bool match = cert.value == published;
    matches += match;
    std::cout << "k=" << k << " computed=" << cert.value
              << " published=" << published
              << " match=" << (match ? "yes" : "no") << "\n";
  }
  std::cout << "matches=" << matches << "/" << total
            << " ok=" << (matches == total ? "yes" : "no") << "\n";
  return matches == total ? 0 : kExitChecks;
}

int cmd_simulate(const std::string& matrix_spec, int blocks,
                 const std::string& out_path, std::int64_t stride) {
  AtomMatrix D = load_matrix(matrix_spec);
  Int streamed = blocks_length(D, blocks + 1);
  if (streamed > kSymbolBudget)
    throw BudgetExceeded("simulation would stream " + streamed.str() +
                         " symbols (budget " + std::to_string(kSymbolBudget) +
                         ")");
  std::ofstream out(out_path);
  if (!out)
    throw std::ios_base::failure("cannot open output file '" + out_path + "'");
  out << "n,s,ratio_decimal,block\n";
  std::int64_t rows = 0;
  density_profile(D, blocks, stride, [&](const DensitySample& sample) {
    out << sample.n << ',' << sample.s << ',' << sample.ratio.decimal() << ','
        << sample.block << '\n';
    ++rows;
  });
  if (!out)
    throw std::ios_base::failure("failed writing '" + out_path + "'");

  // Minima per block, including the sweep through the partial block that
  // follows the profiled range.
  std::vector<Rational> minima = per_block_minima(D, blocks + 1);
  for (int b = 1; b <= blocks; ++b)
    std::cout << "block=" << b << " min=" << frac(minima[size_t(b - 1)])
              << "\n";
  const Rational& empirical = minima[size_t(blocks)];
  BoundCertificate cert = lower_bound(D);
  Rational gap = abs(empirical - cert.value);
  std::cout << "empirical_min=" << empirical << " (≈" << empirical.decimal()
            << ") bound=" << cert.value << " (≈" << cert.value.decimal()
            << ") gap=" << gap.decimal() << " blocks=" << blocks
            << " rows=" << rows << "\n";
  return 0;
}

void print_uvw_table(const UvwDecomposition& d) {
  const std::int64_t n = d.length();
  // Positions marked u/v/w: v_i sits at position u_{v_i}, w_i at u_{v_{w_i}}.
  std::vector<std::string> umark(size_t(n) + 1), vmark(size_t(n) + 1),
      wmark(size_t(n) + 1);
  for (size_t i = 0; i < d.u.size(); ++i)
    umark[size_t(d.u[i])] = "u" + std::to_string(i + 1) + "=" +
                            std::to_string(d.u[i]);
  for (size_t i = 0; i < d.v.size(); ++i)
    vmark[size_t(d.u[size_t(d.v[i] - 1)])] =
        "v" + std::to_string(i + 1) + "=" + std::to_string(d.v[i]);
  for (size_t i = 0; i < d.w.size(); ++i)
    wmark[size_t(d.u[size_t(d.v[size_t(d.w[i] - 1)] - 1)])] =
        "w" + std::to_string(i + 1) + "=" + std::to_string(d.w[i]);

  constexpr std::int64_t band = 16;
  for (std::int64_t lo = 1; lo <= n; lo += band) {
    std::int64_t hi = std::min(n, lo + band - 1);
    std::vector<size_t> width(size_t(hi - lo + 1));
    for (std::int64_t p = lo; p <= hi; ++p) {
      size_t w = std::to_string(p).size();
      w = std::max(w, umark[size_t(p)].size());
      w = std::max(w, vmark[size_t(p)].size());
      w = std::max(w, wmark[size_t(p)].size());
      width[size_t(p - lo)] = w;
    }
    auto row = [&](const std::string& label, auto&& cell) {
      std::cout << label << " |";
      for (std::int64_t p = lo; p <= hi; ++p) {
        std::string c = cell(p);
        std::cout << ' ' << std::string(width[size_t(p - lo)] - c.size(), ' ')
                  << c;
      }
      std::cout << "\n";
    };
    row("n  ", [&](std::int64_t p) { return std::to_string(p); });
    row("c_n", [&](std::int64_t p) {
      return std::to_string(d.base[size_t(p - 1)]);
    });
    row("u  ", [&](std::int64_t p) { return umark[size_t(p)]; });
    row("v  ", [&](std::int64_t p) { return vmark[size_t(p)]; });
    row("w  ", [&](std::int64_t p) { return wmark[size_t(p)]; });
    if (hi < n) std::cout << "\n";
  }
}

int cmd_cuts(const std::string& sequence_path) {
  std::ifstream in(sequence_path);
  if (!in)
    throw std::ios_base::failure("cannot open sequence file '" +
                                 sequence_path + "'");
  std::vector<std::int32_t> seq = parse_symbol_sequence(in, 4);
  UvwDecomposition d = derive_uvw(seq);
  print_uvw_table(d);
  if (seq.empty()) {
    std::cout << "n=0 j=0 k=0 l=0 dc=ok ub1=ok ub2=ok estimates=ok "
                 "result=pass\n";
    return 0;
  }

  bool dc_ok = true, ub1_ok = true, ub2_ok = true, est_ok = true;
  for (std::int64_t n = 1; n <= d.length(); ++n) {
    Cut cut = find_cut(d, n);
    dc_ok = dc_ok && check_double_counts(d, cut).both_equal;
    ub1_ok = ub1_ok && check_first_ub(d, cut).holds;
    if (cut.j >= 1 && cut.k >= 1 && cut.l >= 1)
      ub2_ok = ub2_ok && check_second_ub(d, cut).holds;
    if (cut.j >= 1) est_ok = est_ok && check_estimates(d, cut).holds;
  }

  Cut cut = find_cut(d, d.length());
  std::cout << "cut: (" << cut.n << "," << cut.j << "," << cut.k << ","
            << cut.l << ")\n";
  DoubleCountReport dc = check_double_counts(d, cut);
  std::cout << "jk = " << dc.jk << " = " << dc.v_sum << " + " << dc.alpha34_sum
            << "\n";
  std::cout << "kl = " << dc.kl << " = " << dc.w_sum << " + " << dc.alpha4_sum
            << "\n";
  if (cut.k >= 1) {
    std::cout << "sum alpha_4(u_v_i) =";
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i <= cut.k; ++i) {
      std::int64_t term =
          d.prefix_4[size_t(d.u[size_t(d.v[size_t(i - 1)] - 1)] - 1)];
      std::cout << (i == 1 ? " " : " + ") << term;
      sum += term;
    }
    std::cout << " = " << sum << "\n";
  }
  FirstUbReport ub1 = check_first_ub(d, cut);
  std::cout << "edges = " << ub1.edges << ", first bound = " << ub1.u_term
            << " + " << ub1.v_term << " + " << ub1.w_term << " = " << ub1.rhs
            << "\n";

  bool pass = dc_ok && ub1_ok && ub2_ok && est_ok;
  std::cout << "n=" << cut.n << " j=" << cut.j << " k=" << cut.k
            << " l=" << cut.l << " dc=" << (dc_ok ? "ok" : "FAIL")
            << " ub1=" << (ub1_ok ? "ok" : "FAIL")
            << " ub2=" << (ub2_ok ? "ok" : "FAIL")
            << " estimates=" << (est_ok ? "ok" : "FAIL")
            << " result=" << (pass ? "pass" : "fail") << "\n";
  return pass ? 0 : kExitChecks;
}

int cmd_freeness(const std::string& matrix_spec, std::int64_t length) {
  AtomMatrix D = load_matrix(matrix_spec);
  if (length > kSymbolBudget)
    throw BudgetExceeded("prefix of " + std::to_string(length) +
                         " symbols exceeds the budget");
  SequencePrefix prefix = generate_prefix(D, length);
  std::int64_t path = longest_increasing_path(prefix.symbols);
  std::int64_t limit = D.symbol_count() - 1;
  bool ok = path <= limit;
  std::cout << "length=" << length << " longest_path=" << path
            << " limit=" << limit << " ok=" << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : kExitChecks;
}

int cmd_search(const std::string& config_path, const std::string& out_path,
               std::optional<std::uint64_t> seed,
               std::optional<std::uint64_t> iters) {
  SearchConfig config = SearchConfig::parse_file(config_path);
  if (seed) config.seed = *seed;
  if (iters) config.iterations = *iters;
  SearchResult result = hill_climb(config);

  std::ofstream out(out_path);
  if (!out)
    throw std::ios_base::failure("cannot open output file '" + out_path + "'");
  out << result.best.to_file_text();
  if (!out)
    throw std::ios_base::failure("failed writing '" + out_path + "'");

  std::cout << "start=" << frac(result.start_certificate.value)
            << " accepted=" << result.history.size() << " out=" << out_path
            << "\n";
  std::cout << "value=" << result.best_certificate.value << " (≈"
            << result.best_certificate.value.decimal()
            << ") baseline=" << result.best_certificate.baseline << " improved="
            << (result.best_certificate.improves_baseline ? "yes" : "no")
            << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Increasing-path density bounds for doubling block "
               "constructions"};
  app.require_subcommand(1);

  std::string matrix_spec, config_path, sequence_path;
  std::string sim_out;
  std::string search_out = "best_matrix.txt";
  int blocks = 1;
  std::int64_t stride = 1;
  std::int64_t length = 100'000;
  std::optional<std::uint64_t> seed_opt, iters_opt;

  CLI::App* bound_cmd =
      app.add_subcommand("bound", "Exact density bound for a matrix");
  bound_cmd->add_option("matrix", matrix_spec, "matrix file or built-in name")
      ->required();

  CLI::App* table_cmd = app.add_subcommand(
      "table", "Recompute the built-in D4..D15 bounds and compare");
  (void)table_cmd;

  CLI::App* sim_cmd = app.add_subcommand(
      "simulate", "Stream the sequence and profile S(n)/n^2 into a CSV");
  sim_cmd->add_option("matrix", matrix_spec, "matrix file or built-in name")
      ->required();
  sim_cmd->add_option("--blocks", blocks, "number of blocks to profile")
      ->required()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--out", sim_out, "CSV output path")->required();
  sim_cmd->add_option("--stride", stride, "write every stride-th row")
      ->check(CLI::PositiveNumber);

  CLI::App* search_cmd =
      app.add_subcommand("search", "Hill-climb for a better matrix");
  search_cmd->add_option("--config", config_path, "search config file")
      ->required();
  search_cmd->add_option("--out", search_out, "best matrix output path")
      ->capture_default_str();
  search_cmd->add_option("--seed", seed_opt, "override the config seed");
  search_cmd->add_option("--iters", iters_opt,
                         "override the config iteration budget");

  CLI::App* cuts_cmd = app.add_subcommand(
      "cuts", "Derive u/v/w for a 4-symbol sequence and verify the counts");
  cuts_cmd->add_option("sequence", sequence_path, "sequence file")->required();

  CLI::App* free_cmd = app.add_subcommand(
      "freeness", "Longest increasing path of a generated prefix");
  free_cmd->add_option("matrix", matrix_spec, "matrix file or built-in name")
      ->required();
  free_cmd->add_option("--length", length, "prefix length")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound_cmd->parsed()) return cmd_bound(matrix_spec);
    if (table_cmd->parsed()) return cmd_table();
    if (sim_cmd->parsed())
      return cmd_simulate(matrix_spec, blocks, sim_out, stride);
    if (search_cmd->parsed())
      return cmd_search(config_path, search_out, seed_opt, iters_opt);
    if (cuts_cmd->parsed()) return cmd_cuts(sequence_path);
    if (free_cmd->parsed()) return cmd_freeness(matrix_spec, length);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitChecks;
  }
  return 0;
}
