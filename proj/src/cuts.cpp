#include "pathturan/cuts.hpp"

#include "pathturan/parse_error.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <stdexcept>
#include <string>

namespace pathturan {

UvwDecomposition derive_uvw(std::span<const std::int32_t> seq) {
  UvwDecomposition d;
  d.base.assign(seq.begin(), seq.end());
  d.prefix_34.assign(seq.size() + 1, 0);
  d.prefix_4.assign(seq.size() + 1, 0);
  d.prefix_edges.assign(seq.size() + 1, 0);
  std::int64_t cnt[5] = {0, 0, 0, 0, 0};
  for (size_t p = 0; p < seq.size(); ++p) {
    int c = seq[p];
    if (c < 1 || c > 4) throw std::domain_error("symbol out of range 1..4");
    std::int64_t pos = std::int64_t(p) + 1;
    if (c >= 2) {
      d.u.push_back(pos);
      if (c >= 3) {
        d.v.push_back(std::int64_t(d.u.size()));
        if (c == 4) d.w.push_back(std::int64_t(d.v.size()));
      }
    }
    d.prefix_34[p + 1] = d.prefix_34[p] + (c >= 3 ? 1 : 0);
    d.prefix_4[p + 1] = d.prefix_4[p] + (c == 4 ? 1 : 0);
    std::int64_t below = 0;
    for (int x = 1; x < c; ++x) below += cnt[x];
    d.prefix_edges[p + 1] = d.prefix_edges[p] + below;
    ++cnt[c];
  }
  return d;
}

namespace {

std::int64_t count_le(const std::vector<std::int64_t>& xs, std::int64_t bound) {
  return std::upper_bound(xs.begin(), xs.end(), bound) - xs.begin();
}

void require_cut(const UvwDecomposition& d, const Cut& cut) {
  if (cut.n < 1 || cut.n > d.length())
    throw std::domain_error("cut position out of range");
  if (cut.j != count_le(d.u, cut.n) || cut.k != count_le(d.v, cut.j) ||
      cut.l != count_le(d.w, cut.k))
    throw std::domain_error("tuple is not a cut of this sequence");
}

} // namespace

Cut find_cut(const UvwDecomposition& d, std::int64_t n) {
  if (n < 1 || n > d.length())
    throw std::domain_error("cut position out of range");
  Cut cut;
  cut.n = n;
  cut.j = count_le(d.u, n);
  cut.k = count_le(d.v, cut.j);
  cut.l = count_le(d.w, cut.k);
  return cut;
}

std::int64_t alpha(std::span<const std::int32_t> seq, SymbolSet S,
                   std::int64_t i) {
  if (i < 1 || i > std::int64_t(seq.size()) + 1)
    throw std::out_of_range("alpha position out of range");
  std::int64_t count = 0;
  for (std::int64_t r = 1; r < i; ++r)
    if (S.contains(seq[size_t(r - 1)])) ++count;
  return count;
}

DoubleCountReport check_double_counts(const UvwDecomposition& d,
                                      const Cut& cut) {
  require_cut(d, cut);
  DoubleCountReport rep;
  rep.jk = cut.j * cut.k;
  rep.kl = cut.k * cut.l;
  for (std::int64_t i = 1; i <= cut.k; ++i) rep.v_sum += d.v[size_t(i - 1)];
  for (std::int64_t i = 1; i <= cut.j; ++i)
    rep.alpha34_sum += d.prefix_34[size_t(d.u[size_t(i - 1)] - 1)];
  for (std::int64_t i = 1; i <= cut.l; ++i) rep.w_sum += d.w[size_t(i - 1)];
  for (std::int64_t i = 1; i <= cut.k; ++i) {
    std::int64_t pos = d.u[size_t(d.v[size_t(i - 1)] - 1)];
    rep.alpha4_sum += d.prefix_4[size_t(pos - 1)];
  }
  rep.both_equal = rep.jk == rep.v_sum + rep.alpha34_sum &&
                   rep.kl == rep.w_sum + rep.alpha4_sum;
  return rep;
}

FirstUbReport check_first_ub(const UvwDecomposition& d, const Cut& cut) {
  require_cut(d, cut);
  FirstUbReport rep;
  rep.edges = d.prefix_edges[size_t(cut.n)];
  for (std::int64_t i = 1; i <= cut.j; ++i) rep.u_term += d.u[size_t(i - 1)] - i;
  for (std::int64_t i = 1; i <= cut.k; ++i) rep.v_term += d.v[size_t(i - 1)] - i;
  for (std::int64_t i = 1; i <= cut.l; ++i) rep.w_term += d.w[size_t(i - 1)] - i;
  rep.rhs = rep.u_term + rep.v_term + rep.w_term;
  rep.holds = rep.edges <= rep.rhs;
  return rep;
}

SecondUbReport check_second_ub(const UvwDecomposition& d, const Cut& cut) {
  require_cut(d, cut);
  if (cut.j < 1 || cut.k < 1 || cut.l < 1)
    throw std::domain_error("second bound needs j, k, l >= 1");
  SecondUbReport rep;
  rep.edges = d.prefix_edges[size_t(cut.n)];
  std::int64_t u_alpha = 0;
  for (std::int64_t i = 1; i <= cut.j; ++i) {
    std::int64_t pos = d.u[size_t(i - 1)];
    u_alpha += pos - d.prefix_34[size_t(pos - 1)];
  }
  std::int64_t alpha4 = 0;
  for (std::int64_t i = 1; i <= cut.k; ++i) {
    std::int64_t pos = d.u[size_t(d.v[size_t(i - 1)] - 1)];
    alpha4 += d.prefix_4[size_t(pos - 1)];
  }
  rep.rhs = Rational(u_alpha - alpha4 + cut.j * cut.k + cut.k * cut.l) -
            Rational(cut.j * (cut.j + 1) + cut.k * (cut.k + 1) +
                         cut.l * (cut.l + 1),
                     2);
  rep.holds = Rational(rep.edges) <= rep.rhs;
  return rep;
}

EstimateReport check_estimates(const UvwDecomposition& d, const Cut& cut) {
  require_cut(d, cut);
  if (cut.j < 1) throw std::domain_error("estimates need j >= 1");
  EstimateReport rep;
  for (std::int64_t i = 1; i <= cut.k; ++i) {
    std::int64_t pos = d.u[size_t(d.v[size_t(i - 1)] - 1)];
    rep.alpha4_sum += d.prefix_4[size_t(pos - 1)];
  }
  rep.l_pairs = cut.l * (cut.l - 1) / 2;
  std::int64_t uj = d.u[size_t(cut.j - 1)];
  rep.alpha34_at_uj = d.prefix_34[size_t(uj - 1)];
  rep.k_minus_1 = cut.k - 1;
  rep.holds =
      rep.alpha4_sum >= rep.l_pairs && rep.alpha34_at_uj >= rep.k_minus_1;
  return rep;
}

std::vector<std::int32_t> parse_symbol_sequence(std::istream& in,
                                                int max_symbol) {
  std::vector<std::int32_t> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
      if (*p == ' ' || *p == '\t' || *p == '\r') {
        ++p;
        continue;
      }
      int v = 0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc() || (next != end && *next != ' ' &&
                                *next != '\t' && *next != '\r'))
        throw ParseError(lineno, "expected a symbol, got '" +
                                     std::string(p, next == p ? end : next) +
                                     "'");
      if (v < 1 || v > max_symbol)
        throw ParseError(lineno, "symbol " + std::to_string(v) +
                                     " outside 1.." +
                                     std::to_string(max_symbol));
      out.push_back(v);
      p = next;
    }
  }
  return out;
}

} // namespace pathturan
