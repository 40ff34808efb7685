#pragma once

// Elements of Q_p known to finite precision, stored as p^valuation * unit with
// the unit known modulo p^N (relative precision N).

#include <optional>
#include <string>
#include <vector>

#include "padicsum/exact_arith.hpp"

namespace padicsum {

class PadicApprox {
 public:
  enum class State { kExactZero, kApproxZero, kValue };

  /// Embeds q with N relative digits. q == 0 maps to the exact zero.
  static PadicApprox from_rational(const Rational& q, const Prime& p, unsigned long N);
  static PadicApprox exact_zero(const Prime& p);
  /// Zero known only modulo p^absolute_precision.
  static PadicApprox approx_zero(const Prime& p, long absolute_precision);

  const Prime& prime() const { return prime_; }
  State state() const { return state_; }
  bool is_exact_zero() const { return state_ == State::kExactZero; }
  bool is_zero() const { return state_ != State::kValue; }

  /// Valuation of a nonzero value. For an approximate zero this is the lower
  /// bound it is known to (its absolute precision). Throws for exact zero.
  long valuation() const;
  /// Unit part in [1, p^N - 1], coprime to p. Throws unless state is kValue.
  const Integer& unit() const;
  /// Relative precision N (0 for the zero states).
  unsigned long precision() const { return precision_; }
  /// valuation + N; nullopt for the exact zero (known to infinite precision).
  std::optional<long> absolute_precision() const;

  /// Base-p digits of the unit, least significant first, exactly N of them.
  /// Empty for the zero states.
  std::vector<unsigned long> digits() const;

  /// True iff this and q agree modulo p^abs_prec, and this is known to at
  /// least that absolute precision.
  bool congruent_to(const Rational& q, long abs_prec) const;
  bool congruent_to(const PadicApprox& other, long abs_prec) const;

  /// Drops digits so that the absolute precision is at most abs_prec.
  PadicApprox reduce(long abs_prec) const;

  /// Representative r in [0, p^A) with this == r mod p^A, A = absolute precision.
  /// Requires valuation >= 0 (or a zero state); throws std::domain_error otherwise.
  Integer residue(long abs_prec) const;

  /// `p-adic(p=5, val=0, digits=[4,4,4,4,...], N=4)`
  std::string to_string() const;

  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator-(const PadicApprox& a);

  /// Structural equality of every stored field.
  friend bool operator==(const PadicApprox& a, const PadicApprox& b);

 private:
  explicit PadicApprox(const Prime& p) : prime_(p) {}

  Prime prime_;
  State state_ = State::kExactZero;
  long valuation_ = 0;
  Integer unit_ = 0;
  unsigned long precision_ = 0;
};

/// Finds the unique a/b with |a| <= num_bound, 1 <= b <= den_bound,
/// gcd(b, p) = 1 and a = b*x mod p^A (A = absolute precision of x).
/// Requires 2*num_bound*den_bound < p^A and den_bound >= 1, otherwise throws
/// std::invalid_argument.
std::optional<Rational> rational_reconstruct(const PadicApprox& x, const Integer& num_bound,
                                             const Integer& den_bound);

}  // namespace padicsum
