#pragma once

// Solver for the functional equation
//   (n+1) A(n+1) - A(n)/x = n^k + u
// in the unknowns A (degree k-1, monic) and the constant u.

#include <stdexcept>

#include "padicsum/polynomial.hpp"
#include "padicsum/rational_function.hpp"

namespace padicsum {

template <typename F>
struct TelescopeSolution {
  Polynomial<F> A;  ///< degree k-1 in n
  F u;              ///< n^k + u makes the series summable at x
  F v;              ///< the resulting sum, -A(0)/x
};

/// Coefficients of n^j are matched from j = k down to 0. The system is
/// triangular: the n^j equation fixes a_{j-1} from a_j, ..., a_{k-1}.
template <typename F>
TelescopeSolution<F> solve_telescoping_in(unsigned k, const F& x) {
  if (k < 1) throw std::invalid_argument("telescoping solver needs k >= 1");
  if (x == F(0)) throw std::invalid_argument("telescoping solver needs x != 0");
  const F inv_x = F(F(1) / x);
  std::vector<F> a(k, F(0));
  a[k - 1] = F(1);
  // (n+1)A(n+1) = sum_i a_i (n+1)^(i+1); its n^j coefficient is sum_{i>=j-1} a_i C(i+1, j).
  for (unsigned j = k - 1; j >= 1; --j) {
    F rhs = F(a[j] * inv_x);
    for (unsigned i = j; i < k; ++i) rhs -= F(a[i] * F(Rational(binomial(i + 1, j))));
    a[j - 1] = std::move(rhs);
  }
  F u(0);
  for (const auto& ai : a) u += ai;
  u -= F(a[0] * inv_x);
  F v = F(-(a[0] * inv_x));
  return {Polynomial<F>(std::move(a)), std::move(u), std::move(v)};
}

/// Numeric mode.
inline TelescopeSolution<Rational> solve_telescoping(unsigned k, const Rational& x) {
  return solve_telescoping_in<Rational>(k, x);
}

/// Symbolic mode: all outputs live in Q(x).
inline TelescopeSolution<RationalFunction> solve_telescoping_symbolic(unsigned k) {
  return solve_telescoping_in<RationalFunction>(k, RationalFunction::variable());
}

}  // namespace padicsum
