#include "padicsum/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicsum {

RationalFunction::RationalFunction(RationalPolynomial num, RationalPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = RationalPolynomial::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    auto g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }
}

Rational RationalFunction::evaluate(const Rational& point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw std::domain_error("rational function pole at " + point.get_str());
  return num_.evaluate(point) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  std::string n = num_.to_string(var);
  std::string d = den_.to_string(var);
  if (num_.coeffs().size() > 1) n = "(" + n + ")";
  if (den_.coeffs().size() > 1 && std::count(den_.coeffs().begin(), den_.coeffs().end(), Rational(0)) + 1 !=
                                      static_cast<long>(den_.coeffs().size()))
    d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace padicsum
