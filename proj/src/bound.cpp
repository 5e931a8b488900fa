#include "pathturan/bound.hpp"

#include <stdexcept>

namespace pathturan {

namespace {

// Coefficients of the density objective at fixed t, as a function of eps:
// (A eps^2 + B eps + C) / (D eps + E)^2.
struct Slice {
  Rational a; // m_tt / 2
  Int b;      // colsum(t) + upper(t)
  Rational c; // w + sum_{j<t}(colsum(j) + m_jj/2 + upper(j))
  Int d;      // L(D_t)
  Int e;      // T + sum_{j<t} L(D_j)

  Rational value(const Rational& eps) const {
    Rational numer = a * eps * eps + Rational(b) * eps + c;
    Rational lin = Rational(d) * eps + Rational(e);
    return numer / (lin * lin);
  }
};

Slice slice_at(const AtomMatrix& D, const EdgeMatrix& M, int t) {
  const int l = D.atom_count();
  auto colsum = [&](int j) {
    Int s = 0;
    for (int i = 1; i <= l; ++i) s += M.entry(i, j);
    return s;
  };
  auto upper = [&](int j) {
    Int s = 0;
    for (int i = 1; i < j; ++i) s += M.entry(i, j);
    return s;
  };
  Slice s;
  s.a = Rational(M.entry(t, t), 2);
  s.b = colsum(t) + upper(t);
  s.c = M.w;
  for (int j = 1; j < t; ++j)
    s.c += Rational(colsum(j)) + Rational(M.entry(j, j), 2) + Rational(upper(j));
  s.d = D.atom_length(t);
  s.e = D.total_length();
  for (int j = 1; j < t; ++j) s.e += D.atom_length(j);
  return s;
}

void require_valid(const AtomMatrix& D, const EdgeMatrix& M, int t) {
  if (M.l != D.atom_count())
    throw std::domain_error("edge matrix does not match the atom matrix");
  if (t < 1 || t > D.atom_count())
    throw std::domain_error("atom index t out of range");
}

} // namespace

Rational objective(const AtomMatrix& D, const EdgeMatrix& M, int t,
                   const Rational& eps) {
  require_valid(D, M, t);
  if (eps.sign() < 0 || eps > Rational(1))
    throw std::domain_error("eps outside [0,1]");
  return slice_at(D, M, t).value(eps);
}

EpsilonMinimum minimize_over_epsilon(const AtomMatrix& D, const EdgeMatrix& M,
                                     int t) {
  require_valid(D, M, t);
  Slice s = slice_at(D, M, t);

  // The derivative numerator is (2AE - BD) eps + (BE - 2CD); a nonzero
  // slope gives one interior candidate, otherwise the endpoints suffice.
  Rational slope = Rational(2) * s.a * Rational(s.e) - Rational(s.b * s.d);
  Rational intercept = Rational(s.b * s.e) - Rational(2) * s.c * Rational(s.d);

  EpsilonMinimum best{Rational(0), s.value(Rational(0))};
  auto consider = [&](const Rational& eps) {
    Rational v = s.value(eps);
    if (v < best.value) best = {eps, v};
  };
  if (!slope.is_zero()) {
    Rational critical = -intercept / slope;
    if (critical.sign() > 0 && critical < Rational(1)) consider(critical);
  }
  consider(Rational(1));
  return best;
}

BoundCertificate lower_bound(const AtomMatrix& D) {
  EdgeMatrix M = edge_matrix(D);
  BoundCertificate cert;
  bool first = true;
  for (int t = 1; t <= D.atom_count(); ++t) {
    EpsilonMinimum em = minimize_over_epsilon(D, M, t);
    if (first || em.value < cert.value) {
      cert.value = em.value;
      cert.t_star = t;
      cert.epsilon_star = em.eps;
      first = false;
    }
  }
  const int k = D.symbol_count();
  cert.baseline = Rational(k - 1, std::int64_t(4) * k);
  cert.improves_baseline = cert.value > cert.baseline;
  return cert;
}

Rational grid_oracle(const AtomMatrix& D, int steps) {
  if (steps < 2) throw std::domain_error("grid oracle needs steps >= 2");
  EdgeMatrix M = edge_matrix(D);
  Rational best;
  bool first = true;
  for (int t = 1; t <= D.atom_count(); ++t) {
    Slice s = slice_at(D, M, t);
    for (int i = 0; i <= steps; ++i) {
      Rational v = s.value(Rational(i, steps));
      if (first || v < best) {
        best = v;
        first = false;
      }
    }
  }
  return best;
}

} // namespace pathturan
