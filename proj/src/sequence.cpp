#include "pathturan/sequence.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pathturan {

SequencePrefix::SequencePrefix(int symbol_limit)
    : symbol_limit(symbol_limit), s_value(0) {
  if (symbol_limit < 1)
    throw std::invalid_argument("symbol limit must be positive");
  symbol_counts.assign(size_t(symbol_limit) + 1, 0);
}

void SequencePrefix::append(int symbol) {
  if (symbol < 1 || symbol > symbol_limit)
    throw std::domain_error("symbol out of range");
  std::int64_t below = 0;
  for (int x = 1; x < symbol; ++x) below += symbol_counts[size_t(x)];
  s_value += std::uint64_t(below);
  ++symbol_counts[size_t(symbol)];
  symbols.push_back(symbol);
}

Int block_length(const AtomMatrix& D, int m) {
  if (m < 1) throw std::domain_error("block index must be >= 1");
  return (Int(1) << (m - 1)) * D.total_length();
}

Int blocks_length(const AtomMatrix& D, int m) {
  if (m < 0) throw std::domain_error("block count must be >= 0");
  return ((Int(1) << m) - 1) * D.total_length();
}

namespace {

struct Run {
  int symbol;
  std::int64_t reps;
};

std::vector<std::vector<Run>> column_runs(const AtomMatrix& D) {
  std::vector<std::vector<Run>> cols(size_t(D.atom_count()));
  for (int j = 1; j <= D.atom_count(); ++j)
    for (int i = 1; i <= D.symbol_count(); ++i)
      if (std::int64_t reps = D.entry(i, j); reps > 0)
        cols[size_t(j - 1)].push_back({i, reps});
  return cols;
}

// Walks the first `limit` positions of C(D), calling
// visit(n, symbol, s, block) at every one. The pair count s is maintained
// per run: within a run of equal symbols the increment is constant.
template <class Counter, class Visit>
void stream(const AtomMatrix& D, std::int64_t limit, Visit&& visit) {
  if (limit <= 0) return;
  const std::vector<std::vector<Run>> cols = column_runs(D);
  std::vector<std::int64_t> cnt(size_t(D.symbol_count()) + 1, 0);
  Counter s{0};
  std::int64_t n = 0;
  int block = 0;
  for (unsigned long long copies = 1;; copies <<= 1) {
    ++block;
    for (const auto& runs : cols) {
      for (unsigned long long c = 0; c < copies; ++c) {
        for (const Run& run : runs) {
          std::int64_t below = 0;
          for (int x = 1; x < run.symbol; ++x) below += cnt[size_t(x)];
          const std::int64_t todo = std::min(run.reps, limit - n);
          for (std::int64_t r = 0; r < todo; ++r) {
            s += std::uint64_t(below);
            ++n;
            visit(n, run.symbol, s, block);
          }
          cnt[size_t(run.symbol)] += todo;
          if (n == limit) return;
        }
      }
    }
  }
}

// The 64-bit counter is enough whenever limit^2/2 stays below 2^63; past
// that every count and comparison is promoted to arbitrary precision.
constexpr std::int64_t kSmallCounterLimit = 3'000'000'000;

bool ratio_less(std::uint64_t s1, std::int64_t n1, std::uint64_t s2,
                std::int64_t n2) {
  using u128 = unsigned __int128;
  return u128(s1) * (u128(n2) * u128(n2)) < u128(s2) * (u128(n1) * u128(n1));
}

bool ratio_less(const Int& s1, std::int64_t n1, const Int& s2,
                std::int64_t n2) {
  return s1 * Int(n2) * Int(n2) < s2 * Int(n1) * Int(n1);
}

std::int64_t checked_blocks_length(const AtomMatrix& D, int m_max) {
  Int total = blocks_length(D, m_max);
  if (total > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("sequence length exceeds 2^63");
  return total.convert_to<std::int64_t>();
}

template <class Counter>
std::vector<Rational> per_block_minima_impl(const AtomMatrix& D, int m_max,
                                            std::int64_t limit) {
  std::vector<Rational> out;
  out.reserve(size_t(m_max));
  Counter best_s{0};
  std::int64_t best_n = 0;
  int open_block = 1;
  stream<Counter>(D, limit,
                  [&](std::int64_t n, int, const Counter& s, int block) {
                    if (block != open_block) {
                      out.emplace_back(Int(best_s), Int(best_n) * best_n);
                      open_block = block;
                      best_n = 0;
                    }
                    if (best_n == 0 || ratio_less(s, n, best_s, best_n)) {
                      best_s = s;
                      best_n = n;
                    }
                  });
  out.emplace_back(Int(best_s), Int(best_n) * best_n);
  return out;
}

} // namespace

SequencePrefix generate_prefix(const AtomMatrix& D, std::int64_t n) {
  if (n < 0) throw std::domain_error("prefix length must be >= 0");
  SequencePrefix prefix(D.symbol_count());
  prefix.symbols.reserve(size_t(n));
  if (n <= kSmallCounterLimit) {
    std::uint64_t s = 0;
    stream<std::uint64_t>(D, n,
                          [&](std::int64_t, int symbol, std::uint64_t sv, int) {
                            prefix.symbols.push_back(symbol);
                            s = sv;
                          });
    prefix.s_value = s;
  } else {
    Int s = 0;
    stream<Int>(D, n, [&](std::int64_t, int symbol, const Int& sv, int) {
      prefix.symbols.push_back(symbol);
      s = sv;
    });
    prefix.s_value = std::move(s);
  }
  for (int c : prefix.symbols) ++prefix.symbol_counts[size_t(c)];
  return prefix;
}

Int s_count_oracle(std::span<const std::int32_t> symbols) {
  Int count = 0;
  for (size_t j = 1; j < symbols.size(); ++j)
    for (size_t i = 0; i < j; ++i)
      if (symbols[i] < symbols[j]) ++count;
  return count;
}

void density_profile(const AtomMatrix& D, int m_max, std::int64_t stride,
                     const std::function<void(const DensitySample&)>& sink) {
  if (m_max < 1) throw std::domain_error("need at least one block");
  if (stride < 1) throw std::domain_error("stride must be >= 1");
  const std::int64_t limit = checked_blocks_length(D, m_max);
  auto emit = [&](std::int64_t n, const Int& s, int block) {
    if (n % stride != 0 && n != limit) return;
    DensitySample sample;
    sample.n = n;
    sample.s = s;
    sample.ratio = Rational(s, Int(n) * n);
    sample.block = block;
    sink(sample);
  };
  if (limit <= kSmallCounterLimit)
    stream<std::uint64_t>(D, limit,
                          [&](std::int64_t n, int, std::uint64_t s, int block) {
                            if (n % stride == 0 || n == limit)
                              emit(n, Int(s), block);
                          });
  else
    stream<Int>(D, limit, [&](std::int64_t n, int, const Int& s, int block) {
      emit(n, s, block);
    });
}

std::vector<Rational> per_block_minima(const AtomMatrix& D, int m_max) {
  if (m_max < 1) throw std::domain_error("need at least one block");
  const std::int64_t limit = checked_blocks_length(D, m_max);
  if (limit <= kSmallCounterLimit)
    return per_block_minima_impl<std::uint64_t>(D, m_max, limit);
  return per_block_minima_impl<Int>(D, m_max, limit);
}

Rational empirical_min(const AtomMatrix& D, int m) {
  if (m < 1) throw std::domain_error("block index must be >= 1");
  return per_block_minima(D, m + 1).back();
}

std::int64_t longest_increasing_path(std::span<const std::int32_t> symbols) {
  std::vector<std::int32_t> tails; // smallest tail of a chain of each length
  for (std::int32_t c : symbols) {
    if (c < 1) throw std::domain_error("symbol out of range");
    auto it = std::lower_bound(tails.begin(), tails.end(), c);
    if (it == tails.end())
      tails.push_back(c);
    else
      *it = c;
  }
  return tails.empty() ? 0 : std::int64_t(tails.size()) - 1;
}

} // namespace pathturan
