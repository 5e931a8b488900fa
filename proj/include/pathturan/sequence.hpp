#pragma once

#include "pathturan/atoms.hpp"
#include "pathturan/rational.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace pathturan {

// A growing prefix of a symbol sequence together with its running
// increasing-pair count S(n) = |{(i,j) : i < j <= n, c_i < c_j}|.
struct SequencePrefix {
  explicit SequencePrefix(int symbol_limit);

  int symbol_limit; // k
  std::vector<std::int32_t> symbols;
  std::vector<std::int64_t> symbol_counts; // per symbol, 1-based; [0] unused
  Int s_value;

  std::int64_t length() const { return std::int64_t(symbols.size()); }

  // Appends one symbol; S grows by the count of earlier strictly smaller
  // symbols (O(k) via symbol_counts).
  void append(int symbol);
};

Int block_length(const AtomMatrix& D, int m);  // 2^(m-1) * T, m >= 1
Int blocks_length(const AtomMatrix& D, int m); // length of blocks 1..m, m >= 0

// First n symbols of C(D) = B1 B2 B3 ...; block Bm holds 2^(m-1)
// consecutive copies of each atom in order.
SequencePrefix generate_prefix(const AtomMatrix& D, std::int64_t n);

// Quadratic exhaustive pair count; independent check of SequencePrefix.
Int s_count_oracle(std::span<const std::int32_t> symbols);

struct DensitySample {
  std::int64_t n = 0;
  Int s;
  Rational ratio; // s/n^2, exact
  int block = 0;  // 1-based index of the block containing position n
};

// Streams C(D) through blocks 1..m_max in one pass, invoking sink at every
// stride-th position and always at the last one. Counts stay exact at every
// position regardless of stride.
void density_profile(const AtomMatrix& D, int m_max, std::int64_t stride,
                     const std::function<void(const DensitySample&)>& sink);

// Minimum of S(n)/n^2 over the positions inside each of blocks 1..m_max;
// result[b-1] is the minimum over block b.
std::vector<Rational> per_block_minima(const AtomMatrix& D, int m_max);

// Minimum of S(n)/n^2 over blocks_length(m) < n <= blocks_length(m+1), the
// sweep of every cut through the partial block following B1..Bm. m >= 1.
Rational empirical_min(const AtomMatrix& D, int m);

// Longest strictly increasing subsequence of the symbol values, counted in
// edges (i.e. length - 1; 0 for sequences shorter than 2). Symbols >= 1.
std::int64_t longest_increasing_path(std::span<const std::int32_t> symbols);

} // namespace pathturan
