#pragma once

#include <string>

#include "padicsum/polynomial.hpp"

namespace padicsum {

/// num/den over Q, kept gcd-reduced with a monic denominator. Doubles as the
/// coefficient field Q(x) for symbolic computations.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(RationalPolynomial::constant(1)) {}
  RationalFunction(int c) : RationalFunction(Rational(c)) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}
  RationalFunction(const Rational& c) : num_(RationalPolynomial::constant(c)), den_(RationalPolynomial::constant(1)) {}
  RationalFunction(RationalPolynomial p) : num_(std::move(p)), den_(RationalPolynomial::constant(1)) {}
  /// Throws std::domain_error on a zero denominator.
  RationalFunction(RationalPolynomial num, RationalPolynomial den);

  /// The variable itself.
  static RationalFunction variable() { return RationalFunction(RationalPolynomial::identity()); }

  const RationalPolynomial& numerator() const { return num_; }
  const RationalPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws std::domain_error where the denominator vanishes.
  Rational evaluate(const Rational& point) const;

  /// R(n) -> R(n + 1).
  RationalFunction shift() const { return RationalFunction(num_.shift(), den_.shift()); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws std::domain_error when b is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  /// Equality by cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// "(-1+3x-x^2)/x^2"; polynomials are printed without a denominator.
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();

  RationalPolynomial num_;
  RationalPolynomial den_;
};

using SymbolicPolynomial = Polynomial<RationalFunction>;

template <>
std::string Polynomial<RationalFunction>::to_string(const std::string& var) const;

}  // namespace padicsum
