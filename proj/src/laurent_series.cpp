#include "padicsum/laurent_series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace padicsum {

TruncatedLaurentSeries TruncatedLaurentSeries::zero(long truncation) {
  TruncatedLaurentSeries s;
  s.truncation_ = truncation;
  return s;
}

TruncatedLaurentSeries TruncatedLaurentSeries::exact(std::map<long, Rational> coeffs) {
  TruncatedLaurentSeries s;
  s.c_ = std::move(coeffs);
  s.drop_zeros();
  return s;
}

TruncatedLaurentSeries TruncatedLaurentSeries::truncated(std::map<long, Rational> coeffs, long truncation) {
  if (!coeffs.empty() && coeffs.rbegin()->first >= truncation)
    throw std::invalid_argument("coefficient stored beyond the truncation order");
  TruncatedLaurentSeries s;
  s.c_ = std::move(coeffs);
  s.truncation_ = truncation;
  s.drop_zeros();
  return s;
}

TruncatedLaurentSeries TruncatedLaurentSeries::monomial(long exponent, Rational c) {
  return exact({{exponent, std::move(c)}});
}

void TruncatedLaurentSeries::drop_zeros() {
  std::erase_if(c_, [](const auto& kv) { return kv.second == 0; });
  if (truncation_) {
    const long t = *truncation_;
    std::erase_if(c_, [t](const auto& kv) { return kv.first >= t; });
  }
}

Rational TruncatedLaurentSeries::coefficient(long exponent) const {
  if (truncation_ && exponent >= *truncation_)
    throw std::out_of_range("coefficient of x^" + std::to_string(exponent) + " is beyond the truncation order");
  auto it = c_.find(exponent);
  return it == c_.end() ? Rational(0) : it->second;
}

std::optional<long> TruncatedLaurentSeries::min_exponent() const {
  if (c_.empty()) return std::nullopt;
  return c_.begin()->first;
}

std::optional<long> TruncatedLaurentSeries::max_exponent() const {
  if (c_.empty()) return std::nullopt;
  return c_.rbegin()->first;
}

TruncatedLaurentSeries TruncatedLaurentSeries::derivative() const {
  TruncatedLaurentSeries r;
  for (const auto& [e, c] : c_)
    if (e != 0) r.c_.emplace(e - 1, c * Rational(e));
  if (truncation_) r.truncation_ = *truncation_ - 1;
  return r;
}

TruncatedLaurentSeries TruncatedLaurentSeries::derivative(unsigned k) const {
  TruncatedLaurentSeries r = *this;
  for (unsigned i = 0; i < k; ++i) r = r.derivative();
  return r;
}

namespace {

std::optional<long> min_truncation(const std::optional<long>& a, const std::optional<long>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  TruncatedLaurentSeries r = a;
  for (const auto& [e, c] : b.c_) r.c_[e] += c;
  r.truncation_ = min_truncation(a.truncation_, b.truncation_);
  r.drop_zeros();
  return r;
}

TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a) {
  TruncatedLaurentSeries r = a;
  for (auto& kv : r.c_) kv.second = -kv.second;
  return r;
}

TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  return a + (-b);
}

TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  TruncatedLaurentSeries r;
  if ((a.is_exact() && a.c_.empty()) || (b.is_exact() && b.c_.empty())) return r;
  // Lowest exponent that may carry a nonzero coefficient, known or not.
  auto low = [](const TruncatedLaurentSeries& s) {
    long m = s.c_.empty() ? std::numeric_limits<long>::max() : s.c_.begin()->first;
    return s.truncation_ ? std::min(m, *s.truncation_) : m;
  };
  // A product coefficient at e is known iff no unknown coefficient of one
  // factor pairs with a possibly-nonzero coefficient of the other.
  std::optional<long> ta, tb;
  if (a.truncation_) ta = *a.truncation_ + low(b);
  if (b.truncation_) tb = *b.truncation_ + low(a);
  r.truncation_ = min_truncation(ta, tb);
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) {
      if (r.truncation_ && ea + eb >= *r.truncation_) break;
      r.c_[ea + eb] += ca * cb;
    }
  r.drop_zeros();
  return r;
}

TruncatedLaurentSeries operator*(const Rational& s, const TruncatedLaurentSeries& a) {
  TruncatedLaurentSeries r = a;
  for (auto& kv : r.c_) kv.second *= s;
  r.drop_zeros();
  return r;
}

std::string TruncatedLaurentSeries::to_string(const std::string& var) const {
  std::string out;
  for (const auto& [e, c] : c_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    out += Rational(abs(c)).get_str();
    if (e != 0) out += "*" + var + "^" + std::to_string(e);
  }
  if (out.empty()) out = "0";
  if (truncation_) out += " + O(" + var + "^" + std::to_string(*truncation_) + ")";
  return out;
}

}  // namespace padicsum
