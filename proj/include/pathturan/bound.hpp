#pragma once

#include "pathturan/atoms.hpp"
#include "pathturan/rational.hpp"

namespace pathturan {

// Exact minimum of the block-construction density objective, with the
// minimizing cut position as a witness. baseline is (k-1)/(4k), the value
// of the single all-ones-atom construction.
struct BoundCertificate {
  Rational value;
  int t_star = 1;        // minimizing atom index, 1-based
  Rational epsilon_star; // minimizing partial-atom fraction in [0,1]
  Rational baseline;
  bool improves_baseline = false;
};

// Density of a cut that sees every full block, then atoms 1..t-1 of the
// partial block, then an eps fraction of the copies of atom t:
//
//   w + sum_{j<t}(colsum(j) + m_jj/2 + upper(j)) + eps*colsum(t)
//     + eps^2*m_tt/2 + eps*upper(t)
//   -------------------------------------------------------------
//          (T + sum_{j<t} L_j + eps*L_t)^2
//
// where colsum(j) = sum_i m_ij and upper(j) = sum_{i<j} m_ij.
// Requires 1 <= t <= l and 0 <= eps <= 1 (std::domain_error otherwise).
Rational objective(const AtomMatrix& D, const EdgeMatrix& M, int t,
                   const Rational& eps);

struct EpsilonMinimum {
  Rational eps;
  Rational value;
};

// Exact minimizer over eps in [0,1] for fixed t. The objective is
// (A e^2 + B e + C)/(D e + E)^2 whose derivative sign is that of
// (2AE - BD)e + (BE - 2CD), so it suffices to compare the endpoints with
// the unique interior critical point e* = (2CD - BE)/(2AE - BD) when that
// lies in (0,1). Ties break toward smaller eps.
EpsilonMinimum minimize_over_epsilon(const AtomMatrix& D, const EdgeMatrix& M,
                                     int t);

// Minimum over all t (ties toward smaller t) of minimize_over_epsilon.
BoundCertificate lower_bound(const AtomMatrix& D);

// Minimum of the objective over all t and eps in {0, 1/steps, ..., 1};
// an upper bound on lower_bound(D).value. steps >= 2.
Rational grid_oracle(const AtomMatrix& D, int steps);

} // namespace pathturan
