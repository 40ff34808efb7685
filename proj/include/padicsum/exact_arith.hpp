#pragma once

// Exact integer/rational arithmetic, p-adic valuations and norms, and the
// combinatorial helpers (factorials, Pochhammer symbols, binomials) used by
// every other module.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace padicsum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Deterministic Miller-Rabin for n < 3.3e14.
bool is_prime_u64(std::uint64_t n);

/// A prime p, checked at construction. Values >= 3.3e14 are rejected.
class Prime {
 public:
  static constexpr std::uint64_t kLimit = 330'000'000'000'000ULL;

  explicit Prime(std::uint64_t value);
  explicit Prime(const Integer& value);

  std::uint64_t value() const { return value_; }
  Integer as_integer() const { return Integer(static_cast<unsigned long>(value_)); }
  Integer pow(unsigned long e) const;

  friend bool operator==(const Prime&, const Prime&) = default;
  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

/// Exponent e of a p-adic norm p^e, or the distinguished marker for |0|_p,
/// which orders strictly below every finite norm.
class NormExponent {
 public:
  static NormExponent zero() { return NormExponent(); }
  static NormExponent finite(Rational exponent) { return NormExponent(std::move(exponent)); }

  bool is_zero() const { return !exponent_.has_value(); }
  /// Throws std::logic_error on the zero marker.
  const Rational& exponent() const;

  friend bool operator==(const NormExponent& a, const NormExponent& b);
  friend std::strong_ordering operator<=>(const NormExponent& a, const NormExponent& b);

  /// "p^e" or "0".
  std::string to_string(const Prime& p) const;

 private:
  NormExponent() = default;
  explicit NormExponent(Rational e) : exponent_(std::move(e)) {}
  std::optional<Rational> exponent_;
};

/// Largest e with p^e | n. Throws std::domain_error for n == 0.
unsigned long vp(const Integer& n, const Prime& p);

/// Signed valuation of a nonzero rational. Throws std::domain_error for 0.
long valuation(const Rational& q, const Prime& p);

/// |q|_p as an exact exponent: vp(den) - vp(num).
NormExponent padic_norm(const Rational& q, const Prime& p);

/// Sum of base-p digits of m >= 0.
Integer digit_sum(const Integer& m, const Prime& p);

/// Number of base-p digits of m >= 1 (0 has zero digits).
unsigned long digit_count(const Integer& m, const Prime& p);

/// vp(m!) via (m - digit_sum(m, p)) / (p - 1). Throws std::logic_error if the
/// division is not exact.
Integer factorial_val(const Integer& m, const Prime& p);

Integer factorial(unsigned long m);

/// C(n, k). Throws std::out_of_range unless 0 <= k <= n.
Integer binomial(long n, long k);

/// Rising factorial u(u+1)...(u+n-1), with (u)_0 = 1.
Rational pochhammer(const Rational& u, unsigned long n);

/// Non-negative residue of a modulo m > 0.
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace padicsum
