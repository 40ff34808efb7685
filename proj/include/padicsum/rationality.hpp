#pragma once

// Rationality experiments for sum n! n^k t^n: congruence-based exclusion of
// candidate rational sums, the polynomial criterion for t >= 2, and the
// multi-prime reconstruction harness.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "padicsum/exact_arith.hpp"
#include "padicsum/padic_num.hpp"
#include "padicsum/polynomial.hpp"

namespace padicsum {

/// a/b in lowest terms with b >= 1.
class CandidateRational {
 public:
  /// Throws std::invalid_argument if b < 1 or gcd(a, b) != 1.
  CandidateRational(Integer a, Integer b);
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  std::string to_string() const;

 private:
  Integer a_;
  Integer b_;
};

/// S_n(t) = sum_{i<n} i! t^i.
Integer S_n_t(unsigned long n, const Integer& t);

/// 0 < S_n(t) < n! t^n and 0 < b S_n(t) < n! t^n. Throws std::invalid_argument
/// unless n > 2, t >= 1, b >= 1 and 2b < nt.
bool inequality_check(unsigned long n, const Integer& t, const Integer& b);

enum class ExclusionOutcome {
  kCongruenceFails,   ///< a != b S_n(t) mod n! t^n at the witness n
  kForcedValuesDiffer,  ///< the n-dependent forced values of a disagree
  kNotExcluded,
};

/// Sign class of the candidate numerator: a > 0, a < 0, a = 0.
enum class SignCase { kPositive, kNegative, kZero };

struct ExclusionReport {
  Integer t;
  CandidateRational candidate;
  SignCase sign_case;
  ExclusionOutcome outcome;
  std::optional<unsigned long> witness;         ///< smallest failing n
  std::optional<unsigned long> second_witness;  ///< for kForcedValuesDiffer
  /// For kForcedValuesDiffer: the forced values of a at the two witnesses.
  std::optional<Integer> forced_first, forced_second;

  bool excluded() const { return outcome != ExclusionOutcome::kNotExcluded; }
};

/// Scans n = 3..n_max in increasing order.
ExclusionReport exclude_candidate(const Integer& t, const CandidateRational& cand, unsigned long n_max);

struct GridExclusion {
  Integer t;
  long a_max = 0;
  long b_max = 0;
  unsigned long n_max = 0;
  Integer candidates;                         ///< reduced a/b in the grid
  std::map<unsigned long, Integer> witness_histogram;  ///< n -> count
  std::vector<CandidateRational> survivors;   ///< not excluded by n_max

  bool all_excluded() const { return survivors.empty(); }
};

/// Every reduced a/b with |a| <= a_max, 1 <= b <= b_max. The congruence at n+1
/// implies the one at n, so the candidates alive after n form a single
/// residue class mod n! t^n; only that class is enumerated.
GridExclusion exclude_grid(const Integer& t, long a_max, long b_max, unsigned long n_max);

struct UVPair {
  Integer u;
  Integer v;
};

/// sum n!(n^k + u_k) = v_k, hence sum n! n^k = v_k - u_k sum n!.
UVPair rationality_reduction(unsigned k);

struct PrimeEvaluation {
  Prime p;
  PadicApprox value;
  std::optional<Rational> reconstruction;
  bool reconstruction_attempted;
};

struct MultiPrimeResult {
  unsigned k;
  Integer t;
  long target;
  Integer num_bound, den_bound;
  std::vector<PrimeEvaluation> per_prime;
  /// The single bounded rational consistent with every prime, if any.
  std::optional<Rational> common;
  bool agreement() const { return common.has_value(); }
};

/// Evaluates sum n! n^k t^n in every Z_p and looks for one bounded rational
/// consistent with all of them. Evidence only: agreement at finite precision
/// is not a proof of rationality.
MultiPrimeResult multi_prime_experiment(unsigned k, const Integer& t, const std::vector<Prime>& primes, long target,
                                        const Integer& num_bound, const Integer& den_bound);

struct Theorem2Result {
  unsigned k;
  RationalPolynomial F;
  bool integer_coefficients;
  /// First x in [2, x_max] with -1 + x F(x) = 0, if any.
  std::optional<long> root;
  bool holds() const { return integer_coefficients && !root; }
};

/// Extracts F_{k-1} with x^k u_k(x) + 1 = x F_{k-1}(x) and checks
/// -1 + x F(x) != 0 on [2, x_max].
Theorem2Result theorem2_criterion(unsigned k, long x_max);

}  // namespace padicsum
