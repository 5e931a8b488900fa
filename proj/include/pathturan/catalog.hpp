#pragma once

#include "pathturan/atoms.hpp"
#include "pathturan/rational.hpp"

#include <string>
#include <vector>

namespace pathturan::catalog {

inline constexpr int first_k = 4;
inline constexpr int last_k = 15;

// "D4".."D15" plus the two search seeds "R5" and "R8".
const std::vector<std::string>& names();

bool has(const std::string& name);

const AtomMatrix& get(const std::string& name); // std::out_of_range if unknown

// Published lower bound on p(k) attained by D<k>, 4 <= k <= 15.
const Rational& published_bound(int k);

} // namespace pathturan::catalog
