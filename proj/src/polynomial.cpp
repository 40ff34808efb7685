#include "padicsum/polynomial.hpp"

#include <stdexcept>

#include "padicsum/rational_function.hpp"

namespace padicsum {

namespace {

// Appends one term c*var^i (c != 0) to out, with the sign joining it to what
// came before.
void append_term(std::string& out, const Rational& c, std::size_t i, const std::string& var) {
  const bool negative = c < 0;
  const Rational mag = abs(c);
  if (negative)
    out += "-";
  else if (!out.empty())
    out += "+";
  std::string power = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
  if (i == 0) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += power;
  } else if (mag.get_den() == 1) {
    out += mag.get_str() + power;
  } else {
    out += "(" + mag.get_str() + ")" + power;
  }
}

}  // namespace

template <>
std::string Polynomial<Rational>::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) append_term(out, c_[i], i, var);
  return out;
}

template <>
std::string Polynomial<RationalFunction>::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + c_[i].to_string() + "]";
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<Integer> clear_denominators(const RationalPolynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * Rational(l);
    out.push_back(scaled.get_num());
  }
  return out;
}

bool has_integer_coefficients(const RationalPolynomial& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

bool qcheck_no_nonneg_integer_roots(const RationalPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("qcheck on the zero polynomial");
  const auto ints = clear_denominators(q);
  if (ints.front() == 0) return false;  // root at n = 0
  if (ints.size() == 1) return true;
  // Cauchy: every root satisfies |z| <= 1 + max_i |a_i / a_d|.
  Integer max_ratio = 0;
  const Integer lead = abs(ints.back());
  for (std::size_t i = 0; i + 1 < ints.size(); ++i) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), Integer(abs(ints[i])).get_mpz_t(), lead.get_mpz_t());
    if (r > max_ratio) max_ratio = r;
  }
  const Integer bound = 1 + max_ratio;
  if (bound > Integer(100'000'000))
    throw std::invalid_argument("Cauchy root bound too large for an exhaustive scan: " + bound.get_str());
  const long limit = bound.get_si();
  const Integer& constant = ints.front();
  for (long n = 1; n <= limit; ++n) {
    // An integer root must divide the constant term.
    if (!mpz_divisible_ui_p(constant.get_mpz_t(), static_cast<unsigned long>(n))) continue;
    Integer acc = 0;
    for (auto it = ints.rbegin(); it != ints.rend(); ++it) acc = acc * n + *it;
    if (acc == 0) return false;
  }
  return true;
}

}  // namespace padicsum
