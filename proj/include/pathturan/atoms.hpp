#pragma once

#include "pathturan/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pathturan {

// k x l grid of non-negative integers. Column j spells out "atom" j: the
// sorted run of entry(1,j) ones, entry(2,j) twos, ..., entry(k,j) k's.
// Symbols (1..k) and atom indices (1..l) are 1-based throughout.
//
// Invariants enforced on construction: k >= 2, l >= 1, entries >= 0, and
// every column sum >= 1 (no empty atoms). A symbol row may be all zeros.
class AtomMatrix {
public:
  AtomMatrix(int symbols, int atoms, std::vector<std::int64_t> entries);

  // Matrix file format: header "k l", then k rows of l non-negative
  // integers; '#'-prefixed and blank lines are skipped.
  static AtomMatrix parse(std::istream& in);
  static AtomMatrix parse_text(std::string_view text);
  static AtomMatrix parse_file(const std::string& path); // throws std::ios_base::failure if unreadable

  int symbol_count() const { return k_; }
  int atom_count() const { return l_; }

  std::int64_t entry(int symbol, int atom) const;

  std::int64_t atom_length(int atom) const;      // sum of column `atom`
  std::vector<int> atom_string(int atom) const;  // the sorted symbol run
  std::int64_t total_length() const { return total_; } // T, sum of all entries

  std::string to_file_text() const; // round-trips through parse()

  bool operator==(const AtomMatrix& o) const {
    return k_ == o.k_ && l_ == o.l_ && e_ == o.e_;
  }

private:
  int k_;
  int l_;
  std::vector<std::int64_t> e_; // row-major
  std::int64_t total_;
};

// l x l matrix of inter-atom increasing-pair counts: entry (i,j) counts
// pairs with the smaller symbol in an earlier copy of atom i and the larger
// symbol in a later copy of atom j, plus the derived weights.
struct EdgeMatrix {
  int l = 0;
  std::vector<Int> m; // row-major
  Int w1;             // total of m
  Int w2;             // strict upper triangle
  Int w3;             // diagonal
  Rational w;         // w1/3 + w2/3 + w3/6

  const Int& entry(int i, int j) const; // 1-based
};

EdgeMatrix edge_matrix(const AtomMatrix& D);

// Exhaustive pair enumeration over atom_string(i) concatenated with
// atom_string(j); quadratic, kept as an independent check of edge_matrix.
Int edge_count_oracle(const AtomMatrix& D, int i, int j);

} // namespace pathturan
