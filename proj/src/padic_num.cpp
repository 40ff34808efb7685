#include "padicsum/padic_num.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicsum {

namespace {

void require_same_prime(const PadicApprox& a, const PadicApprox& b) {
  if (a.prime() != b.prime())
    throw std::invalid_argument("p-adic operands over different primes: " + std::to_string(a.prime().value()) +
                                " vs " + std::to_string(b.prime().value()));
}

// Splits n != 0 into p^v * rest, returning v.
unsigned long strip(Integer& n, const Prime& p) {
  Integer pz = p.as_integer();
  return mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("unit not invertible modulo p^N");
  return r;
}

// Normalizes value = p^base * s known modulo p^abs_prec into a PadicApprox.
PadicApprox normalize(const Prime& p, long base, Integer s, long abs_prec) {
  if (abs_prec <= base) return PadicApprox::approx_zero(p, abs_prec);
  s = mod_floor(s, p.pow(static_cast<unsigned long>(abs_prec - base)));
  if (s == 0) return PadicApprox::approx_zero(p, abs_prec);
  long v = base + static_cast<long>(strip(s, p));
  return PadicApprox::from_rational(Rational(s) * (v >= 0 ? Rational(p.pow(v)) : Rational(1, 1) / Rational(p.pow(-v))),
                                    p, static_cast<unsigned long>(abs_prec - v));
}

}  // namespace

PadicApprox PadicApprox::from_rational(const Rational& q, const Prime& p, unsigned long N) {
  if (N < 1) throw std::invalid_argument("p-adic precision must be >= 1");
  PadicApprox r(p);
  if (q == 0) return r;
  Integer num = q.get_num();
  Integer den = q.get_den();
  long a = static_cast<long>(strip(num, p));
  long b = static_cast<long>(strip(den, p));
  Integer modulus = p.pow(N);
  r.state_ = State::kValue;
  r.valuation_ = a - b;
  r.unit_ = mod_floor(num * inverse_mod(mod_floor(den, modulus), modulus), modulus);
  r.precision_ = N;
  return r;
}

PadicApprox PadicApprox::exact_zero(const Prime& p) { return PadicApprox(p); }

PadicApprox PadicApprox::approx_zero(const Prime& p, long absolute_precision) {
  PadicApprox r(p);
  r.state_ = State::kApproxZero;
  r.valuation_ = absolute_precision;
  return r;
}

long PadicApprox::valuation() const {
  if (state_ == State::kExactZero) throw std::domain_error("exact zero has infinite valuation");
  return valuation_;
}

const Integer& PadicApprox::unit() const {
  if (state_ != State::kValue) throw std::domain_error("zero has no unit part");
  return unit_;
}

std::optional<long> PadicApprox::absolute_precision() const {
  switch (state_) {
    case State::kExactZero:
      return std::nullopt;
    case State::kApproxZero:
      return valuation_;
    case State::kValue:
      return valuation_ + static_cast<long>(precision_);
  }
  return std::nullopt;
}

std::vector<unsigned long> PadicApprox::digits() const {
  std::vector<unsigned long> out;
  if (state_ != State::kValue) return out;
  out.reserve(precision_);
  Integer rest = unit_, digit;
  const Integer base = prime_.as_integer();
  for (unsigned long i = 0; i < precision_; ++i) {
    mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    out.push_back(digit.get_ui());
  }
  return out;
}

bool PadicApprox::congruent_to(const PadicApprox& other, long abs_prec) const {
  require_same_prime(*this, other);
  auto mine = absolute_precision();
  auto theirs = other.absolute_precision();
  if ((mine && *mine < abs_prec) || (theirs && *theirs < abs_prec)) return false;
  PadicApprox diff = *this - other;
  if (diff.is_exact_zero()) return true;
  return diff.valuation_ >= abs_prec;
}

bool PadicApprox::congruent_to(const Rational& q, long abs_prec) const {
  if (q == 0) return congruent_to(exact_zero(prime_), abs_prec);
  long v = padicsum::valuation(q, prime_);
  long rel = std::max(1L, abs_prec - v);
  return congruent_to(from_rational(q, prime_, static_cast<unsigned long>(rel)), abs_prec);
}

PadicApprox PadicApprox::reduce(long abs_prec) const {
  switch (state_) {
    case State::kExactZero:
      return approx_zero(prime_, abs_prec);
    case State::kApproxZero:
      return approx_zero(prime_, std::min(abs_prec, valuation_));
    case State::kValue:
      break;
  }
  if (abs_prec <= valuation_) return approx_zero(prime_, abs_prec);
  if (abs_prec >= valuation_ + static_cast<long>(precision_)) return *this;
  PadicApprox r = *this;
  r.precision_ = static_cast<unsigned long>(abs_prec - valuation_);
  r.unit_ = mod_floor(unit_, prime_.pow(r.precision_));
  return r;
}

Integer PadicApprox::residue(long abs_prec) const {
  if (abs_prec < 0) throw std::domain_error("negative absolute precision");
  if (state_ != State::kValue) return 0;
  if (valuation_ < 0) throw std::domain_error("p-adic value is not integral");
  if (abs_prec <= valuation_) return 0;
  Integer modulus = prime_.pow(static_cast<unsigned long>(abs_prec));
  return mod_floor(unit_ * prime_.pow(static_cast<unsigned long>(valuation_)), modulus);
}

std::string PadicApprox::to_string() const {
  std::string p = std::to_string(prime_.value());
  switch (state_) {
    case State::kExactZero:
      return "p-adic(p=" + p + ", exact zero)";
    case State::kApproxZero:
      return "p-adic(p=" + p + ", zero, O(" + p + "^" + std::to_string(valuation_) + "))";
    case State::kValue:
      break;
  }
  std::string out = "p-adic(p=" + p + ", val=" + std::to_string(valuation_) + ", digits=[";
  for (unsigned long d : digits()) out += std::to_string(d) + ",";
  out += "...], N=" + std::to_string(precision_) + ")";
  return out;
}

PadicApprox operator-(const PadicApprox& a) {
  if (a.state_ != PadicApprox::State::kValue) return a;
  PadicApprox r = a;
  r.unit_ = mod_floor(-a.unit_, a.prime_.pow(a.precision_));
  return r;
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
  require_same_prime(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const long abs_prec = std::min(*a.absolute_precision(), *b.absolute_precision());
  if (a.state_ == PadicApprox::State::kApproxZero && b.state_ == PadicApprox::State::kApproxZero)
    return PadicApprox::approx_zero(a.prime_, abs_prec);
  // At least one operand carries a value; align both at the lower valuation.
  const PadicApprox& x = a.is_zero() ? b : a;
  const PadicApprox& y = a.is_zero() ? a : b;
  if (y.is_zero()) return normalize(a.prime_, x.valuation_, x.unit_, abs_prec);
  const long base = std::min(x.valuation_, y.valuation_);
  Integer s = x.unit_ * a.prime_.pow(static_cast<unsigned long>(x.valuation_ - base)) +
              y.unit_ * a.prime_.pow(static_cast<unsigned long>(y.valuation_ - base));
  return normalize(a.prime_, base, s, abs_prec);
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) { return a + (-b); }

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
  require_same_prime(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicApprox::exact_zero(a.prime_);
  if (a.is_zero() || b.is_zero()) {
    // zero to precision k times a value of valuation v is zero to precision k + v
    return PadicApprox::approx_zero(a.prime_, a.valuation_ + b.valuation_);
  }
  PadicApprox r(a.prime_);
  r.state_ = PadicApprox::State::kValue;
  r.valuation_ = a.valuation_ + b.valuation_;
  r.precision_ = std::min(a.precision_, b.precision_);
  r.unit_ = mod_floor(a.unit_ * b.unit_, a.prime_.pow(r.precision_));
  return r;
}

bool operator==(const PadicApprox& a, const PadicApprox& b) {
  return a.prime_ == b.prime_ && a.state_ == b.state_ && a.valuation_ == b.valuation_ &&
         a.precision_ == b.precision_ && a.unit_ == b.unit_;
}

std::optional<Rational> rational_reconstruct(const PadicApprox& x, const Integer& num_bound,
                                             const Integer& den_bound) {
  if (den_bound < 1 || num_bound < 0) throw std::invalid_argument("reconstruction bounds must be positive");
  if (x.is_exact_zero()) return Rational(0);
  const long abs_prec = *x.absolute_precision();
  if (abs_prec < 1) throw std::invalid_argument("nothing known about the p-adic value");
  const Integer modulus = x.prime().pow(static_cast<unsigned long>(abs_prec));
  if (2 * num_bound * den_bound >= modulus)
    throw std::invalid_argument("reconstruction bounds too large for the available precision: need 2AB < p^" +
                                std::to_string(abs_prec));
  // A negative valuation means a denominator divisible by p, which is excluded.
  if (!x.is_zero() && x.valuation() < 0) return std::nullopt;
  const Integer target = x.residue(abs_prec);

  // Half-extended Euclid on (modulus, target): stop at the first remainder <= num_bound.
  Integer r0 = modulus, r1 = target;
  Integer s0 = 0, s1 = 1;
  while (r1 > num_bound) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Integer a = r1, b = s1;
  if (b < 0) {
    a = -a;
    b = -b;
  }
  if (b == 0 || b > den_bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) return std::nullopt;
  if (mod_floor(b, x.prime().as_integer()) == 0) return std::nullopt;
  if (mod_floor(a - b * target, modulus) != 0) return std::nullopt;
  return make_rational(a, b);
}

}  // namespace padicsum
