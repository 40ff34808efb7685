#include "padicsum/exact_arith.hpp"

#include <array>
#include <stdexcept>

namespace padicsum {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return Rational(to_int(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer d = to_int(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(to_int(num), d);
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<u64, 7> bases{2, 3, 5, 7, 11, 13, 17};
  for (u64 b : bases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases up to 17 are deterministic below 3.4e14.
  for (u64 a : bases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value >= kLimit) throw std::invalid_argument("prime candidate too large: " + std::to_string(value));
  if (!is_prime_u64(value)) throw std::invalid_argument("not a prime: " + std::to_string(value));
}

Prime::Prime(const Integer& value) : Prime([&] {
    if (value < 2 || value >= Integer(std::to_string(kLimit)))
      throw std::invalid_argument("prime candidate out of range: " + value.get_str());
    return static_cast<std::uint64_t>(std::stoull(value.get_str()));
  }()) {}

Integer Prime::pow(unsigned long e) const {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(value_), e);
  return r;
}

const Rational& NormExponent::exponent() const {
  if (!exponent_) throw std::logic_error("zero norm has no finite exponent");
  return *exponent_;
}

bool operator==(const NormExponent& a, const NormExponent& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return *a.exponent_ == *b.exponent_;
}

std::strong_ordering operator<=>(const NormExponent& a, const NormExponent& b) {
  if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
  if (a.is_zero()) return std::strong_ordering::less;
  if (b.is_zero()) return std::strong_ordering::greater;
  int c = cmp(*a.exponent_, *b.exponent_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string NormExponent::to_string(const Prime& p) const {
  if (is_zero()) return "0";
  return std::to_string(p.value()) + "^" + padicsum::to_string(*exponent_);
}

unsigned long vp(const Integer& n, const Prime& p) {
  if (n == 0) throw std::domain_error("vp(0) is infinite; use the zero marker");
  Integer rest;
  Integer pz = p.as_integer();
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
}

long valuation(const Rational& q, const Prime& p) {
  if (q == 0) throw std::domain_error("valuation of 0 is infinite");
  return static_cast<long>(vp(q.get_num(), p)) - static_cast<long>(vp(q.get_den(), p));
}

NormExponent padic_norm(const Rational& q, const Prime& p) {
  if (q == 0) return NormExponent::zero();
  return NormExponent::finite(Rational(-valuation(q, p)));
}

Integer digit_sum(const Integer& m, const Prime& p) {
  if (m < 0) throw std::domain_error("digit_sum of a negative number");
  Integer rest = m, sum = 0, digit;
  const Integer base = p.as_integer();
  while (rest > 0) {
    mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    sum += digit;
  }
  return sum;
}

unsigned long digit_count(const Integer& m, const Prime& p) {
  if (m < 0) throw std::domain_error("digit_count of a negative number");
  unsigned long count = 0;
  Integer rest = m;
  const Integer base = p.as_integer();
  while (rest > 0) {
    mpz_fdiv_q(rest.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    ++count;
  }
  return count;
}

Integer factorial_val(const Integer& m, const Prime& p) {
  if (m < 0) throw std::domain_error("factorial of a negative number");
  Integer numer = m - digit_sum(m, p);
  Integer denom = p.as_integer() - 1;
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
  if (r != 0) throw std::logic_error("Legendre division not exact: arithmetic bug");
  return q;
}

Integer factorial(unsigned long m) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    throw std::out_of_range("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") out of range");
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational pochhammer(const Rational& u, unsigned long n) {
  Rational r = 1;
  Rational factor = u;
  for (unsigned long i = 0; i < n; ++i) {
    r *= factor;
    factor += 1;
  }
  return r;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace padicsum
