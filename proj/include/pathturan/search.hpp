#pragma once

#include "pathturan/atoms.hpp"
#include "pathturan/bound.hpp"
#include "pathturan/splitmix64.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathturan {

// Hill-climbing setup. Each perturbation draw is -1 with probability
// p_minus, +1 with probability p_plus, 0 otherwise. init names a built-in
// matrix ("R5", "R8", "D4".."D15"), a cyclic diagonal "cyclic(<weight>)"
// on the configured k and l, or a matrix file path.
struct SearchConfig {
  int k = 0;
  int l = 0;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 1000;
  double p_plus = 0.15;
  double p_minus = 0.15;
  std::optional<std::int64_t> entry_cap;
  std::string init = "cyclic(1)";

  // key = value lines; keys k, l, seed, iterations, p_plus, p_minus,
  // entry_cap, init; '#' comments.
  static SearchConfig parse(std::istream& in);
  static SearchConfig parse_file(const std::string& path);
};

struct SearchResult {
  AtomMatrix best;
  BoundCertificate best_certificate;
  BoundCertificate start_certificate;
  // (iteration, bound value) at each accepted strict improvement.
  std::vector<std::pair<std::uint64_t, Rational>> history;
};

// Raised when a perturbed column stays empty after 100 redraws.
struct PerturbationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Row i carries `weight` in column ((i-1) mod l) + 1, zeros elsewhere.
AtomMatrix seed_matrix(int k, int l, std::int64_t weight);

AtomMatrix resolve_init(const SearchConfig& config);

// One perturbation pass: every entry gets an independent draw, clamped
// below at 0 and above at entry_cap when set. A column whose sum drops to
// zero is redrawn, at most 100 times, before giving up.
AtomMatrix perturb(const AtomMatrix& D, SplitMix64& rng,
                   const SearchConfig& config);

// Strict-improvement hill climbing from the resolved init matrix; exact
// bound comparisons, deterministic for a given config.
SearchResult hill_climb(const SearchConfig& config);

} // namespace pathturan
