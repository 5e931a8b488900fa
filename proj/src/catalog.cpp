#include "pathturan/catalog.hpp"

#include <map>
#include <stdexcept>

namespace pathturan::catalog {

namespace {

struct Entry {
  int k;
  int l;
  std::vector<std::int64_t> entries; // row-major
};

const std::map<std::string, Entry>& raw() {
  static const std::map<std::string, Entry> table = {
      {"D4",
       {4, 8,
        {6, 2, 5, 8, 4, 6, 6, 9,
         7, 5, 7, 6, 5, 5, 4, 4,
         4, 5, 7, 6, 5, 8, 4, 7,
         7, 2, 5, 8, 4, 5, 6, 8}}},
      {"D5",
       {5, 3,
        {6, 2, 1,
         1, 7, 3,
         2, 2, 8,
         6, 2, 2,
         4, 5, 2}}},
      {"D6",
       {6, 3,
        {6, 0, 2,
         3, 6, 0,
         2, 3, 5,
         2, 5, 3,
         3, 2, 4,
         6, 2, 0}}},
      {"D7",
       {7, 4,
        {3, 0, 2, 3,
         3, 4, 2, 0,
         1, 2, 5, 1,
         0, 2, 4, 3,
         2, 0, 4, 3,
         3, 1, 3, 4,
         3, 3, 2, 0}}},
      {"D8",
       {8, 4,
        {5, 2, 0, 0,
         0, 5, 2, 2,
         0, 2, 7, 1,
         0, 1, 2, 7,
         1, 1, 4, 3,
         2, 0, 1, 6,
         4, 2, 2, 0,
         1, 5, 2, 0}}},
      {"D9",
       {9, 5,
        {7, 0, 0, 1, 2,
         0, 6, 0, 1, 3,
         1, 1, 6, 2, 1,
         1, 2, 2, 6, 2,
         1, 1, 1, 0, 8,
         2, 2, 6, 2, 1,
         0, 1, 2, 6, 0,
         3, 2, 0, 1, 7,
         5, 3, 1, 0, 0}}},
      {"D10",
       {10, 5,
        {10, 7, 2, 5, 8,
         6, 10, 11, 4, 3,
         4, 7, 11, 9, 6,
         4, 3, 9, 14, 9,
         9, 3, 2, 9, 10,
         10, 9, 6, 3, 7,
         9, 11, 6, 4, 4,
         6, 9, 12, 8, 1,
         7, 5, 7, 9, 8,
         7, 7, 6, 6, 9}}},
      {"D11",
       {11, 6,
        {7, 1, 0, 1, 2, 1,
         0, 7, 1, 0, 0, 0,
         0, 1, 6, 0, 0, 2,
         1, 0, 0, 6, 0, 2,
         1, 1, 0, 1, 6, 1,
         0, 0, 2, 1, 1, 6,
         1, 1, 0, 6, 0, 2,
         1, 1, 0, 2, 6, 2,
         0, 1, 2, 2, 1, 5,
         7, 0, 1, 0, 0, 0,
         2, 6, 2, 1, 0, 0}}},
      {"D12",
       {12, 6,
        {6, 1, 0, 0, 0, 0,
         0, 6, 1, 0, 0, 0,
         0, 1, 7, 0, 0, 1,
         0, 0, 1, 6, 1, 0,
         0, 1, 0, 1, 6, 1,
         0, 0, 1, 1, 0, 6,
         1, 0, 0, 6, 1, 1,
         1, 0, 1, 1, 6, 0,
         1, 0, 1, 0, 1, 6,
         6, 0, 1, 1, 1, 0,
         1, 7, 1, 0, 0, 0,
         1, 1, 6, 0, 0, 0}}},
      {"D13",
       {13, 7,
        {7, 0, 0, 0, 0, 1, 0,
         1, 7, 0, 0, 0, 0, 1,
         1, 1, 8, 0, 0, 1, 1,
         0, 1, 0, 7, 0, 1, 0,
         0, 0, 0, 0, 8, 1, 1,
         1, 0, 1, 1, 1, 7, 1,
         0, 1, 0, 1, 0, 1, 8,
         1, 1, 0, 0, 8, 0, 0,
         1, 0, 1, 1, 1, 7, 1,
         0, 0, 0, 1, 0, 1, 8,
         8, 0, 1, 0, 0, 0, 0,
         1, 7, 0, 0, 0, 1, 1,
         1, 1, 7, 0, 1, 1, 1}}},
      {"D14",
       {14, 7,
        {7, 1, 1, 0, 0, 0, 0,
         1, 7, 0, 1, 1, 1, 0,
         0, 0, 7, 0, 0, 1, 0,
         1, 1, 0, 7, 1, 0, 1,
         0, 1, 1, 1, 7, 1, 0,
         1, 0, 1, 0, 0, 8, 1,
         0, 1, 0, 0, 0, 1, 8,
         1, 0, 1, 8, 0, 1, 1,
         0, 1, 1, 0, 7, 1, 0,
         1, 0, 0, 0, 1, 7, 0,
         1, 0, 1, 0, 0, 0, 8,
         8, 0, 0, 1, 1, 0, 0,
         0, 8, 0, 1, 0, 0, 1,
         1, 1, 8, 1, 1, 0, 0}}},
      {"D15",
       {15, 8,
        {9, 0, 0, 0, 0, 0, 0, 0,
         0, 8, 0, 0, 0, 0, 1, 1,
         0, 1, 9, 0, 0, 0, 0, 0,
         0, 1, 0, 9, 0, 1, 0, 1,
         0, 1, 0, 0, 9, 0, 1, 0,
         0, 0, 1, 0, 1, 9, 1, 1,
         0, 0, 1, 1, 0, 1, 9, 1,
         0, 1, 1, 1, 1, 0, 1, 8,
         0, 0, 1, 0, 9, 1, 0, 0,
         0, 0, 1, 0, 1, 9, 0, 0,
         1, 1, 1, 0, 1, 0, 9, 0,
         1, 1, 0, 0, 0, 1, 0, 8,
         9, 1, 1, 0, 0, 0, 0, 1,
         0, 8, 0, 0, 1, 0, 0, 1,
         1, 0, 9, 1, 1, 1, 1, 0}}},
      {"R5",
       {5, 3,
        {3, 0, 0,
         0, 3, 0,
         0, 0, 3,
         3, 0, 0,
         0, 3, 0}}},
      {"R8",
       {8, 4,
        {4, 0, 0, 0,
         0, 4, 0, 0,
         0, 0, 4, 0,
         0, 0, 0, 4,
         0, 0, 4, 0,
         0, 0, 0, 4,
         4, 0, 0, 0,
         0, 4, 0, 0}}},
  };
  return table;
}

const std::map<int, Rational>& bounds() {
  static const std::map<int, Rational> table = {
      {4, {109513, 584064}}, {5, {1688, 8427}},    {6, {3683, 17672}},
      {7, {365, 1701}},      {8, {19325, 87846}},  {9, {9448, 42483}},
      {10, {83234, 369603}}, {11, {18033, 79202}}, {12, {13511, 58482}},
      {13, {57931, 249696}}, {14, {16743, 71824}}, {15, {36251, 154568}},
  };
  return table;
}

} // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> list = [] {
    std::vector<std::string> out;
    for (int k = first_k; k <= last_k; ++k) out.push_back("D" + std::to_string(k));
    out.push_back("R5");
    out.push_back("R8");
    return out;
  }();
  return list;
}

bool has(const std::string& name) { return raw().count(name) != 0; }

const AtomMatrix& get(const std::string& name) {
  static std::map<std::string, AtomMatrix> built;
  auto it = built.find(name);
  if (it == built.end()) {
    auto rit = raw().find(name);
    if (rit == raw().end())
      throw std::out_of_range("unknown built-in matrix '" + name + "'");
    const Entry& e = rit->second;
    it = built.emplace(name, AtomMatrix(e.k, e.l, e.entries)).first;
  }
  return it->second;
}

const Rational& published_bound(int k) {
  auto it = bounds().find(k);
  if (it == bounds().end())
    throw std::out_of_range("no published bound for k=" + std::to_string(k));
  return it->second;
}

} // namespace pathturan::catalog
