#pragma once

// R-modified generalized hypergeometric series
//   sum_n  prod_i (alpha_i)_n / prod_j (beta_j)_n * R(n) * x^n / n!
// with positive-integer parameters: term values, p-adic convergence region,
// certified p-adic evaluation, and the formal ODE checks.

#include <optional>
#include <string>
#include <vector>

#include "padicsum/exact_arith.hpp"
#include "padicsum/laurent_series.hpp"
#include "padicsum/padic_num.hpp"
#include "padicsum/rational_function.hpp"

namespace padicsum {

class HyperSpec {
 public:
  /// Throws std::invalid_argument if a parameter is < 1 or R's denominator
  /// vanishes at some n >= 0.
  HyperSpec(std::vector<long> alphas, std::vector<long> betas, RationalFunction R);

  /// The factorial series sum n! P(n)/Q(n) x^n: alphas (1,1), no betas.
  static HyperSpec factorial_series(RationalFunction R);
  /// Gauss 2F1(a, b; c; x) with R = 1.
  static HyperSpec gauss(long a, long b, long c);

  const std::vector<long>& alphas() const { return alphas_; }
  const std::vector<long>& betas() const { return betas_; }
  const RationalFunction& R() const { return R_; }
  std::size_t r() const { return alphas_.size(); }
  std::size_t s() const { return betas_.size(); }

  std::string to_string() const;

 private:
  std::vector<long> alphas_;
  std::vector<long> betas_;
  RationalFunction R_;
};

/// prod (alpha_i)_n / (prod (beta_j)_n * n!); the R-free coefficient.
Rational hyper_coefficient(const HyperSpec& spec, unsigned long n);

/// The n-th term, exactly.
Rational term(const HyperSpec& spec, unsigned long n, const Rational& x);

/// Exact exponent bound (r - s - 1)/(p - 1): the series converges iff
/// |x|_p < p^bound.
Rational convergence_exponent(const HyperSpec& spec, const Prime& p);

enum class RegionMembership { kInside, kBoundary, kOutside };

/// Where x sits relative to the convergence region at p.
RegionMembership region_membership(const HyperSpec& spec, const Rational& x, const Prime& p);

/// v_p of term n via Legendre's formula (no term is formed). nullopt when the
/// term is zero.
std::optional<long> term_valuation(const HyperSpec& spec, unsigned long n, const Rational& x, const Prime& p);

struct TermValuationProfile {
  /// Exact valuations for n in [0, window); nullopt marks a zero term.
  std::vector<std::optional<long>> valuations;
  /// delta = (r - s - 1)/(p - 1) + v_p(x); positive inside the region.
  Rational slope;
  /// All terms with index >= crossover have valuation >= target.
  unsigned long crossover = 0;
  long target = 0;
};

/// Certified crossover: the smallest scanned n* such that every term with
/// index >= n* has valuation >= target. Requires x strictly inside the region.
unsigned long certified_crossover(const HyperSpec& spec, const Rational& x, const Prime& p, long target);

TermValuationProfile term_profile(const HyperSpec& spec, const Rational& x, const Prime& p, long target,
                                  unsigned long window);

/// Thrown when x lies outside (or on the boundary of) the convergence region.
class RegionError : public std::invalid_argument {
 public:
  RegionError(const std::string& what, RegionMembership where) : std::invalid_argument(what), where_(where) {}
  RegionMembership where() const { return where_; }

 private:
  RegionMembership where_;
};

/// Sum of the series in Q_p with absolute error of norm <= p^-target. Terms are
/// accumulated exactly up to the certified crossover, then embedded once.
/// Throws RegionError outside the region or on its boundary.
PadicApprox evaluate_padic(const HyperSpec& spec, const Rational& x, const Prime& p, long target);

/// Same, but sums the first `terms` terms regardless of the certificate.
/// Used to show the certificate is window-independent.
PadicApprox evaluate_padic_with_terms(const HyperSpec& spec, const Rational& x, const Prime& p, long target,
                                      unsigned long terms);

/// Checks sum n! t^n = S_n(t) + n! t^n sum_j (n+1)_j t^j in Q_p to target digits.
bool tail_identity_check(const Integer& t, unsigned long n, const Prime& p, long target);

/// F(x) = sum n! x^n truncated at order T.
TruncatedLaurentSeries factorial_generating_series(long T);
/// x^2 F'' + (3x - 1) F' + F for a given (possibly perturbed) F.
TruncatedLaurentSeries ode_residual_F(const TruncatedLaurentSeries& F);
/// Residual for F truncated at T; its known coefficients must all vanish.
TruncatedLaurentSeries ode_check_F(long T);

/// F_nu(x) = sum n! x^(n+nu), truncated at T.
TruncatedLaurentSeries shifted_factorial_series(unsigned nu, long T);
/// f_nu(x) = -sum_{l<nu} l!/x^(nu-l), an exact Laurent polynomial.
TruncatedLaurentSeries f_nu(unsigned nu);
/// d^nu/dx^nu G - x^(-2 nu) G - f_nu for an arbitrary G.
TruncatedLaurentSeries ode_residual_Fnu(unsigned nu, const TruncatedLaurentSeries& G);
TruncatedLaurentSeries ode_check_Fnu(unsigned nu, long T);

/// 2F1(a, b; c; x) truncated at T.
TruncatedLaurentSeries gauss_series(long a, long b, long c, long T);
/// x(1-x) w'' + [c - (a+b+1) x] w' - ab w.
TruncatedLaurentSeries gauss_ode_residual(long a, long b, long c, const TruncatedLaurentSeries& w);
TruncatedLaurentSeries gauss_ode_check(long a, long b, long c, long T);

}  // namespace padicsum
