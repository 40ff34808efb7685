#pragma once

#include <map>
#include <optional>
#include <string>

#include "padicsum/exact_arith.hpp"

namespace padicsum {

/// Laurent series sum c_e x^e with exact rational coefficients. Coefficients
/// with exponent >= truncation are unknown; an exact series (a Laurent
/// polynomial) has no truncation.
class TruncatedLaurentSeries {
 public:
  /// The exact zero series.
  TruncatedLaurentSeries() = default;
  /// Zero known for all exponents < truncation.
  static TruncatedLaurentSeries zero(long truncation);
  static TruncatedLaurentSeries exact(std::map<long, Rational> coeffs);
  /// Throws std::invalid_argument if a stored exponent is >= truncation.
  static TruncatedLaurentSeries truncated(std::map<long, Rational> coeffs, long truncation);
  static TruncatedLaurentSeries monomial(long exponent, Rational c = 1);

  bool is_exact() const { return !truncation_.has_value(); }
  const std::optional<long>& truncation() const { return truncation_; }
  /// Nonzero coefficients only.
  const std::map<long, Rational>& coeffs() const { return c_; }
  /// Throws std::out_of_range for an exponent at or beyond the truncation.
  Rational coefficient(long exponent) const;
  /// Smallest exponent with a nonzero coefficient, if any.
  std::optional<long> min_exponent() const;
  std::optional<long> max_exponent() const;

  /// True iff every known coefficient is zero.
  bool is_zero() const { return c_.empty(); }

  TruncatedLaurentSeries derivative() const;
  /// k-fold derivative.
  TruncatedLaurentSeries derivative(unsigned k) const;

  friend TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
  friend TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a);
  friend TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
  /// Product. A truncated factor's truncation shifts by the other factor's
  /// lowest exponent; two truncated factors keep the smaller of both bounds.
  friend TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
  friend TruncatedLaurentSeries operator*(const Rational& s, const TruncatedLaurentSeries& a);

  friend bool operator==(const TruncatedLaurentSeries&, const TruncatedLaurentSeries&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void drop_zeros();

  std::map<long, Rational> c_;
  std::optional<long> truncation_;
};

}  // namespace padicsum
