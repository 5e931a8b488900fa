#include "pathturan/search.hpp"

#include "pathturan/catalog.hpp"
#include "pathturan/parse_error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace pathturan {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& value, int lineno) {
  T out{};
  auto [next, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || next != value.data() + value.size())
    throw ParseError(lineno, "bad numeric value '" + value + "'");
  return out;
}

void validate(const SearchConfig& c) {
  if (c.k < 2) throw std::invalid_argument("search config: k must be >= 2");
  if (c.l < 1) throw std::invalid_argument("search config: l must be >= 1");
  if (c.iterations < 1)
    throw std::invalid_argument("search config: iterations must be >= 1");
  if (c.p_plus < 0 || c.p_minus < 0 || c.p_plus + c.p_minus > 1)
    throw std::invalid_argument("search config: perturbation probabilities "
                                "must be non-negative and sum to at most 1");
}

} // namespace

SearchConfig SearchConfig::parse(std::istream& in) {
  SearchConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::string body = strip(line);
    if (body.empty()) continue;
    size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw ParseError(lineno, "expected 'key = value'");
    std::string key = strip(body.substr(0, eq));
    std::string value = strip(body.substr(eq + 1));
    if (value.empty()) throw ParseError(lineno, "missing value for " + key);
    if (key == "k")
      c.k = parse_number<int>(value, lineno);
    else if (key == "l")
      c.l = parse_number<int>(value, lineno);
    else if (key == "seed")
      c.seed = parse_number<std::uint64_t>(value, lineno);
    else if (key == "iterations")
      c.iterations = parse_number<std::uint64_t>(value, lineno);
    else if (key == "p_plus")
      c.p_plus = parse_number<double>(value, lineno);
    else if (key == "p_minus")
      c.p_minus = parse_number<double>(value, lineno);
    else if (key == "entry_cap")
      c.entry_cap = parse_number<std::int64_t>(value, lineno);
    else if (key == "init")
      c.init = value;
    else
      throw ParseError(lineno, "unknown key '" + key + "'");
  }
  return c;
}

SearchConfig SearchConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::ios_base::failure("cannot open config file '" + path + "'");
  return parse(in);
}

AtomMatrix seed_matrix(int k, int l, std::int64_t weight) {
  if (k < 2 || l < 1) throw std::invalid_argument("bad seed dimensions");
  if (weight < 1) throw std::invalid_argument("seed weight must be positive");
  std::vector<std::int64_t> entries(size_t(k) * size_t(l), 0);
  for (int i = 0; i < k; ++i) entries[size_t(i) * l + (i % l)] = weight;
  return AtomMatrix(k, l, std::move(entries));
}

AtomMatrix resolve_init(const SearchConfig& config) {
  const std::string& spec = config.init;
  if (catalog::has(spec)) return catalog::get(spec);
  if (spec.rfind("cyclic(", 0) == 0 && spec.back() == ')') {
    std::string inner = spec.substr(7, spec.size() - 8);
    std::int64_t weight = 0;
    auto [next, ec] =
        std::from_chars(inner.data(), inner.data() + inner.size(), weight);
    if (ec != std::errc() || next != inner.data() + inner.size())
      throw std::invalid_argument("bad cyclic weight in '" + spec + "'");
    return seed_matrix(config.k, config.l, weight);
  }
  return AtomMatrix::parse_file(spec);
}

AtomMatrix perturb(const AtomMatrix& D, SplitMix64& rng,
                   const SearchConfig& config) {
  const int k = D.symbol_count();
  const int l = D.atom_count();
  auto draw = [&]() -> int {
    double u = rng.next_unit();
    if (u < config.p_minus) return -1;
    if (u < config.p_minus + config.p_plus) return 1;
    return 0;
  };
  auto apply = [&](std::int64_t v) {
    v = std::max<std::int64_t>(0, v + draw());
    if (config.entry_cap) v = std::min(v, *config.entry_cap);
    return v;
  };
  std::vector<std::int64_t> entries(size_t(k) * size_t(l));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j)
      entries[size_t(i - 1) * l + (j - 1)] = apply(D.entry(i, j));
  for (int j = 1; j <= l; ++j) {
    int attempts = 0;
    for (;;) {
      std::int64_t col = 0;
      for (int i = 1; i <= k; ++i) col += entries[size_t(i - 1) * l + (j - 1)];
      if (col > 0) break;
      if (++attempts > 100)
        throw PerturbationError("column " + std::to_string(j) +
                                " stayed empty after 100 redraws");
      for (int i = 1; i <= k; ++i)
        entries[size_t(i - 1) * l + (j - 1)] = apply(D.entry(i, j));
    }
  }
  return AtomMatrix(k, l, std::move(entries));
}

SearchResult hill_climb(const SearchConfig& config) {
  validate(config);
  AtomMatrix current = resolve_init(config);
  if (current.symbol_count() != config.k || current.atom_count() != config.l)
    throw std::invalid_argument(
        "init matrix dimensions do not match the configured k and l");
  if (config.entry_cap) {
    for (int i = 1; i <= config.k; ++i)
      for (int j = 1; j <= config.l; ++j)
        if (current.entry(i, j) > *config.entry_cap)
          throw std::invalid_argument("entry_cap below an init matrix entry");
  }

  SplitMix64 rng(config.seed);
  BoundCertificate current_cert = lower_bound(current);
  SearchResult result{current, current_cert, current_cert, {}};
  for (std::uint64_t iter = 1; iter <= config.iterations; ++iter) {
    AtomMatrix candidate = perturb(current, rng, config);
    BoundCertificate cert = lower_bound(candidate);
    if (cert.value > current_cert.value) {
      current = std::move(candidate);
      current_cert = cert;
      result.history.emplace_back(iter, cert.value);
    }
  }
  result.best = std::move(current);
  result.best_certificate = current_cert;
  return result;
}

} // namespace pathturan
