#pragma once

// Telescoping summation certificates and the recurrence engines for the
// factorial series sum n! P(n) x^n.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "padicsum/hyper_series.hpp"
#include "padicsum/padic_num.hpp"
#include "padicsum/rational_function.hpp"
#include "padicsum/telescoping.hpp"

namespace padicsum {

/// Parameters of a telescoping series: the term is d_{n+1} - d_n with
/// d_n = prod (alpha)_n / (prod (beta)_n n!) * A(n)/B(n) * t^n.
class TelescopeSpec {
 public:
  /// Throws std::invalid_argument on non-positive parameters or a B that
  /// vanishes on the non-negative integers.
  TelescopeSpec(std::vector<long> alphas, std::vector<long> betas, RationalPolynomial A, RationalPolynomial B,
                Rational t);

  const std::vector<long>& alphas() const { return alphas_; }
  const std::vector<long>& betas() const { return betas_; }
  const RationalPolynomial& A() const { return A_; }
  const RationalPolynomial& B() const { return B_; }
  const Rational& t() const { return t_; }

  /// -A(0)/B(0).
  Rational expected_sum() const;
  /// d_n as defined above.
  Rational d(unsigned long n) const;

 private:
  std::vector<long> alphas_;
  std::vector<long> betas_;
  RationalPolynomial A_;
  RationalPolynomial B_;
  Rational t_;
};

/// R(n) = [prod(alpha_i+n)/prod(beta_j+n)] * t/(n+1) * A(n+1)/B(n+1) - A(n)/B(n).
RationalFunction build_R(const TelescopeSpec& ts);

/// The R-modified series whose value at x = t telescopes.
HyperSpec induced_spec(const TelescopeSpec& ts);

/// Exact check sum_{n<N} term_n == d_N - d_0.
bool verify_telescope_exact(const TelescopeSpec& ts, unsigned long N);

struct TelescopePadicResult {
  PadicApprox value;
  Rational expected;
  bool matches;
};

/// Evaluates the induced series at t in Q_p and compares with -A(0)/B(0)
/// modulo p^target. Throws RegionError if t is not inside the region at p.
TelescopePadicResult verify_telescope_padic_detail(const TelescopeSpec& ts, const Prime& p, long target);
bool verify_telescope_padic(const TelescopeSpec& ts, const Prime& p, long target);

/// A(n) = n * prod(beta_j + n - 1) * B(n): A(0) = 0 and R reduces to the
/// polynomial t*prod(alpha_i + n) - n*prod(beta_j + n - 1).
TelescopeSpec zero_sum_spec(std::vector<long> alphas, std::vector<long> betas, RationalPolynomial B, Rational t);
RationalPolynomial zero_sum_polynomial(const std::vector<long>& alphas, const std::vector<long>& betas,
                                       const Rational& t);

/// Random TelescopeSpec: r, s <= 3, parameters <= 5, deg A, deg B <= 3,
/// coefficients in [-9, 9], B a product of (n + c) with c in [1, 5], and t a
/// multiple of 2*3*5*7 raised far enough to sit inside the region at 2, 3, 5, 7.
TelescopeSpec random_telescope_spec(std::mt19937_64& rng);
/// Same family with A(0) = 0 forced.
TelescopeSpec random_zero_sum_spec(std::mt19937_64& rng);

/// S^(k)_n = sum_{i<n} i! i^k, directly.
Integer partial_sum_direct(unsigned long n, unsigned k);
/// S^(0..kmax)_n, with S^(0) summed directly and the rest by the recurrence
/// S^(k+1) = -[k=0] - k S^(k) - sum_{l<k} C(k+1,l) S^(l) + n! n^k.
std::vector<Integer> partial_sums_recurrence(unsigned long n, unsigned kmax);
Integer partial_sum_recurrence(unsigned long n, unsigned k);

struct UVEntry {
  Integer u;
  Integer v;
};

/// k -> (u_k, v_k) for k = 1..K, built from the integer recurrences.
using UVTable = std::map<unsigned, UVEntry>;
UVTable uv_table(unsigned K);

struct ClosedForm {
  Integer u;
  Integer v;
  RationalPolynomial A;  ///< degree k-1
};

/// sum_{i<n} i!(i^k + u_k) = v_k + n! A_{k-1}(n), obtained by unrolling the
/// partial-sum recurrence in terms of S^(0).
ClosedForm closed_form(unsigned k);

/// sum_{i<n} i! (i^k + u_k) - v_k - n! A(n); zero iff the identity holds at n.
Integer closed_form_defect(const ClosedForm& cf, unsigned k, unsigned long n);

/// Thrown when C_0 does not make sum i! P(i) rational.
class ConstantTermMismatch : public std::invalid_argument {
 public:
  ConstantTermMismatch(const Rational& required, const Rational& given);
  const Rational& required() const { return required_; }

 private:
  Rational required_;
};

struct GeneralPkSum {
  Rational V;
  RationalPolynomial B;
  bool identity_holds;
};

/// For P(i) = sum_r C_r i^r with C_0 = sum_{r>=1} C_r u_r:
/// sum_{i<n} i! P(i) = V + n! B(n). Throws ConstantTermMismatch otherwise.
GeneralPkSum general_Pk_sum(const std::vector<Rational>& C, unsigned long n);

struct SymbolicUV {
  RationalFunction u;
  RationalFunction v;
  RationalPolynomial F;       ///< x^k u_k(x) + 1 = x F(x)
  bool F_is_polynomial;       ///< false would contradict the expected shape
};

/// u_k(x), v_k(x) in Q(x) for the series sum n!(n^k + u_k(x)) x^n = v_k(x).
SymbolicUV generalized_uv(unsigned k);

/// u_{q+1} = 1 and v_{q+1} = 1 (mod q).
bool prop4_check(std::uint64_t q);

}  // namespace padicsum
