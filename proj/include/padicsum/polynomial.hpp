#pragma once

// Dense univariate polynomials over an exact field F. F is Rational for the
// polynomials in n, and RationalFunction when the coefficients themselves
// depend on a symbolic x.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "padicsum/exact_arith.hpp"

namespace padicsum {

template <typename F>
class Polynomial {
 public:
  using Coeff = F;

  Polynomial() = default;
  Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(F c) { return Polynomial(std::vector<F>{std::move(c)}); }
  /// The variable itself.
  static Polynomial identity() { return Polynomial(std::vector<F>{F(0), F(1)}); }
  static Polynomial monomial(std::size_t degree, F c = F(1)) {
    std::vector<F> v(degree + 1, F(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  const F& leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  template <typename X>
  X evaluate(const X& point) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      X next = acc * point;
      next += X(*it);
      acc = std::move(next);
    }
    return acc;
  }

  Polynomial scale(const F& s) const {
    std::vector<F> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(F(c * s));
    return Polynomial(std::move(v));
  }

  /// P(n) -> P(n + 1).
  Polynomial shift() const { return shift_by(F(1)); }

  /// P(n) -> P(n + h), by Horner composition.
  Polynomial shift_by(const F& h) const {
    Polynomial acc;
    const Polynomial lin{h, F(1)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> v;
    v.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(F(c_[i] * F(static_cast<long>(i))));
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<F> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(F(-c));
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += F(a.c_[i] * b.c_[j]);
    return Polynomial(std::move(v));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(F(1));
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> rem = c_;
    if (rem.size() < d.c_.size()) return {Polynomial{}, *this};
    std::vector<F> quot(rem.size() - d.c_.size() + 1, F(0));
    const F& lead = d.c_.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
      F q = F(rem[k + d.c_.size() - 1] / lead);
      if (q == F(0)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= F(q * d.c_[j]);
      quot[k] = std::move(q);
    }
    rem.resize(d.c_.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(F(F(1) / leading()));
  }

  /// Ascending-power rendering in the style "-1+3x-x^2".
  std::string to_string(const std::string& var = "n") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Monic gcd over a field.
template <typename F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

using RationalPolynomial = Polynomial<Rational>;

template <>
std::string Polynomial<Rational>::to_string(const std::string& var) const;

/// Least common multiple of the coefficient denominators times the polynomial,
/// so the result has integer coefficients (same roots).
std::vector<Integer> clear_denominators(const RationalPolynomial& p);

/// True iff every coefficient is an integer.
bool has_integer_coefficients(const RationalPolynomial& p);

/// True iff Q(n) != 0 for all integers n >= 0. Candidates are scanned up to
/// the Cauchy root bound. Throws std::invalid_argument on the zero polynomial.
bool qcheck_no_nonneg_integer_roots(const RationalPolynomial& q);

}  // namespace padicsum
