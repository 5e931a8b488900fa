#include "pathturan/atoms.hpp"

#include "pathturan/parse_error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pathturan {

AtomMatrix::AtomMatrix(int symbols, int atoms, std::vector<std::int64_t> entries)
    : k_(symbols), l_(atoms), e_(std::move(entries)) {
  if (k_ < 2) throw std::invalid_argument("need at least 2 symbols");
  if (l_ < 1) throw std::invalid_argument("need at least 1 atom");
  if (e_.size() != size_t(k_) * size_t(l_))
    throw std::invalid_argument("entry count does not match dimensions");
  for (std::int64_t v : e_)
    if (v < 0) throw std::invalid_argument("negative entry");
  for (int j = 0; j < l_; ++j) {
    std::int64_t col = 0;
    for (int i = 0; i < k_; ++i) col += e_[size_t(i) * l_ + j];
    if (col == 0)
      throw std::invalid_argument("empty atom column " + std::to_string(j + 1));
  }
  total_ = 0;
  for (std::int64_t v : e_) total_ += v;
}

std::int64_t AtomMatrix::entry(int symbol, int atom) const {
  if (symbol < 1 || symbol > k_) throw std::out_of_range("symbol out of range");
  if (atom < 1 || atom > l_) throw std::out_of_range("atom index out of range");
  return e_[size_t(symbol - 1) * l_ + (atom - 1)];
}

std::int64_t AtomMatrix::atom_length(int atom) const {
  if (atom < 1 || atom > l_) throw std::out_of_range("atom index out of range");
  std::int64_t sum = 0;
  for (int i = 0; i < k_; ++i) sum += e_[size_t(i) * l_ + (atom - 1)];
  return sum;
}

std::vector<int> AtomMatrix::atom_string(int atom) const {
  if (atom < 1 || atom > l_) throw std::out_of_range("atom index out of range");
  std::vector<int> out;
  out.reserve(size_t(atom_length(atom)));
  for (int i = 1; i <= k_; ++i)
    for (std::int64_t c = 0; c < e_[size_t(i - 1) * l_ + (atom - 1)]; ++c)
      out.push_back(i);
  return out;
}

namespace {

std::vector<std::int64_t> parse_int_line(const std::string& line, int lineno) {
  std::vector<std::int64_t> values;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p != end) {
    if (*p == ' ' || *p == '\t' || *p == '\r') {
      ++p;
      continue;
    }
    std::int64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t' &&
                              *next != '\r'))
      throw ParseError(lineno, "expected an integer, got '" +
                                   std::string(p, next == p ? end : next) + "'");
    values.push_back(v);
    p = next;
  }
  return values;
}

bool content_line(const std::string& line) {
  for (char c : line) {
    if (c == '#') return false;
    if (c != ' ' && c != '\t' && c != '\r') return true;
  }
  return false;
}

} // namespace

AtomMatrix AtomMatrix::parse(std::istream& in) {
  std::string line;
  int lineno = 0;
  int k = -1, l = -1;
  int header_line = 0;
  std::vector<std::int64_t> entries;
  int rows_seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!content_line(line)) continue;
    std::vector<std::int64_t> values = parse_int_line(line, lineno);
    if (k < 0) {
      if (values.size() != 2)
        throw ParseError(lineno, "header must be 'k l'");
      if (values[0] < 2 || values[0] > 1'000'000)
        throw ParseError(lineno, "symbol count k must be at least 2");
      if (values[1] < 1 || values[1] > 1'000'000)
        throw ParseError(lineno, "atom count l must be at least 1");
      k = int(values[0]);
      l = int(values[1]);
      header_line = lineno;
      entries.reserve(size_t(k) * size_t(l));
      continue;
    }
    if (rows_seen == k)
      throw ParseError(lineno, "unexpected content after " +
                                   std::to_string(k) + " matrix rows");
    if (int(values.size()) != l)
      throw ParseError(lineno, "expected " + std::to_string(l) +
                                   " entries, got " +
                                   std::to_string(values.size()));
    for (std::int64_t v : values) {
      if (v < 0) throw ParseError(lineno, "negative entry");
      entries.push_back(v);
    }
    ++rows_seen;
  }
  if (k < 0) throw ParseError(lineno, "missing header line");
  if (rows_seen != k)
    throw ParseError(lineno, "expected " + std::to_string(k) + " rows, got " +
                                 std::to_string(rows_seen));
  for (int j = 0; j < l; ++j) {
    std::int64_t col = 0;
    for (int i = 0; i < k; ++i) col += entries[size_t(i) * l + j];
    if (col == 0)
      throw ParseError(header_line,
                       "empty atom column " + std::to_string(j + 1));
  }
  return AtomMatrix(k, l, std::move(entries));
}

AtomMatrix AtomMatrix::parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

AtomMatrix AtomMatrix::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::ios_base::failure("cannot open matrix file '" + path + "'");
  return parse(in);
}

std::string AtomMatrix::to_file_text() const {
  std::string out = std::to_string(k_) + " " + std::to_string(l_) + "\n";
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < l_; ++j) {
      if (j) out += ' ';
      out += std::to_string(e_[size_t(i) * l_ + j]);
    }
    out += '\n';
  }
  return out;
}

const Int& EdgeMatrix::entry(int i, int j) const {
  if (i < 1 || i > l || j < 1 || j > l)
    throw std::out_of_range("edge matrix index out of range");
  return m[size_t(i - 1) * l + (j - 1)];
}

EdgeMatrix edge_matrix(const AtomMatrix& D) {
  const int k = D.symbol_count();
  const int l = D.atom_count();
  // suffix[j][x] = number of symbols > x in atom j
  std::vector<std::vector<std::int64_t>> suffix(size_t(l),
                                                std::vector<std::int64_t>(size_t(k) + 1, 0));
  for (int j = 1; j <= l; ++j)
    for (int x = k - 1; x >= 1; --x)
      suffix[size_t(j - 1)][size_t(x)] =
          suffix[size_t(j - 1)][size_t(x) + 1] + D.entry(x + 1, j);

  EdgeMatrix M;
  M.l = l;
  M.m.assign(size_t(l) * l, Int(0));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      Int sum = 0;
      for (int x = 1; x <= k - 1; ++x)
        sum += Int(D.entry(x, i)) * suffix[size_t(j - 1)][size_t(x)];
      M.m[size_t(i - 1) * l + (j - 1)] = std::move(sum);
    }
  M.w1 = 0;
  M.w2 = 0;
  M.w3 = 0;
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      const Int& v = M.entry(i, j);
      M.w1 += v;
      if (i < j) M.w2 += v;
      if (i == j) M.w3 += v;
    }
  M.w = Rational(M.w1, 3) + Rational(M.w2, 3) + Rational(M.w3, 6);
  return M;
}

Int edge_count_oracle(const AtomMatrix& D, int i, int j) {
  std::vector<int> a = D.atom_string(i);
  std::vector<int> b = D.atom_string(j);
  Int count = 0;
  for (int x : a)
    for (int y : b)
      if (x < y) ++count;
  return count;
}

} // namespace pathturan
