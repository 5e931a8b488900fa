#pragma once

#include "pathturan/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace pathturan {

// Subset of the symbols {1,2,3,4}.
class SymbolSet {
public:
  SymbolSet() = default;
  SymbolSet(std::initializer_list<int> symbols) {
    for (int s : symbols) mask_ |= 1u << s;
  }
  bool contains(int symbol) const {
    return symbol >= 1 && symbol <= 4 && (mask_ & (1u << symbol)) != 0;
  }

private:
  unsigned mask_ = 0;
};

// Index hierarchy of a 4-symbol sequence:
//   u_i = position of the i-th symbol in {2,3,4},
//   v_i = index into u of the i-th symbol in {3,4},
//   w_i = index into v of the i-th symbol equal to 4.
// All values are 1-based. The prefix_* members are caches derived from the
// base sequence so the per-cut checks run in O(j + k + l).
struct UvwDecomposition {
  std::vector<std::int32_t> base;
  std::vector<std::int64_t> u, v, w;

  std::vector<std::int64_t> prefix_34;    // # of {3,4} among the first i symbols
  std::vector<std::int64_t> prefix_4;     // # of 4s among the first i symbols
  std::vector<std::int64_t> prefix_edges; // S(i) for the length-i prefix

  std::int64_t length() const { return std::int64_t(base.size()); }
};

UvwDecomposition derive_uvw(std::span<const std::int32_t> seq);

// (n, j, k, l) with u_j <= n < u_{j+1}, v_k <= j < v_{k+1}, w_l <= k < w_{l+1},
// where a missing next element acts as +infinity and indices may be 0 when
// no element qualifies.
struct Cut {
  std::int64_t n = 0, j = 0, k = 0, l = 0;

  bool operator==(const Cut&) const = default;
};

Cut find_cut(const UvwDecomposition& d, std::int64_t n); // 1 <= n <= length

// Count of positions r < i whose symbol lies in S; 1 <= i <= length + 1.
std::int64_t alpha(std::span<const std::int32_t> seq, SymbolSet S,
                   std::int64_t i);

// jk = sum v_i + sum alpha_{3,4}(u_i)  and  kl = sum w_i + sum alpha_4(u_{v_i});
// both are counting identities and must hold at every cut.
struct DoubleCountReport {
  std::int64_t jk = 0, v_sum = 0, alpha34_sum = 0;
  std::int64_t kl = 0, w_sum = 0, alpha4_sum = 0;
  bool both_equal = false;
};
DoubleCountReport check_double_counts(const UvwDecomposition& d,
                                      const Cut& cut);

// edges <= sum (u_i - i) + sum (v_i - i) + sum (w_i - i): the three sums
// count the increasing pairs whose smaller endpoint is a 1, a 2, and a 3.
struct FirstUbReport {
  std::int64_t edges = 0;
  std::int64_t u_term = 0, v_term = 0, w_term = 0;
  std::int64_t rhs = 0;
  bool holds = false;
};
FirstUbReport check_first_ub(const UvwDecomposition& d, const Cut& cut);

// The edge bound obtained by substituting both double-count identities
// into the first bound:
//   edges <= sum (u_i - alpha_{3,4}(u_i)) - sum alpha_4(u_{v_i}) + jk + kl
//            - (j(j+1) + k(k+1) + l(l+1)) / 2.
// Requires j, k, l >= 1; smaller cuts are skipped by callers.
struct SecondUbReport {
  std::int64_t edges = 0;
  Rational rhs;
  bool holds = false;
};
SecondUbReport check_second_ub(const UvwDecomposition& d, const Cut& cut);

// sum_{i<=k} alpha_4(u_{v_i}) >= l(l-1)/2  and  alpha_{3,4}(u_j) >= k - 1.
// Requires j >= 1.
struct EstimateReport {
  std::int64_t alpha4_sum = 0, l_pairs = 0;
  std::int64_t alpha34_at_uj = 0, k_minus_1 = 0;
  bool holds = false;
};
EstimateReport check_estimates(const UvwDecomposition& d, const Cut& cut);

// Whitespace-separated symbols in 1..max_symbol; '#' starts a comment that
// runs to the end of the line.
std::vector<std::int32_t> parse_symbol_sequence(std::istream& in,
                                                int max_symbol = 4);

} // namespace pathturan
