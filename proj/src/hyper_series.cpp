#include "padicsum/hyper_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicsum {

HyperSpec::HyperSpec(std::vector<long> alphas, std::vector<long> betas, RationalFunction R)
    : alphas_(std::move(alphas)), betas_(std::move(betas)), R_(std::move(R)) {
  for (long a : alphas_)
    if (a < 1) throw std::invalid_argument("alpha parameters must be positive integers, got " + std::to_string(a));
  for (long b : betas_)
    if (b < 1) throw std::invalid_argument("beta parameters must be positive integers, got " + std::to_string(b));
  if (!qcheck_no_nonneg_integer_roots(R_.denominator()))
    throw std::invalid_argument("denominator of R vanishes at a non-negative integer: " +
                                R_.denominator().to_string("n"));
}

HyperSpec HyperSpec::factorial_series(RationalFunction R) { return HyperSpec({1, 1}, {}, std::move(R)); }

HyperSpec HyperSpec::gauss(long a, long b, long c) { return HyperSpec({a, b}, {c}, RationalFunction(1)); }

std::string HyperSpec::to_string() const {
  auto join = [](const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  return std::to_string(r()) + "F" + std::to_string(s()) + "(" + join(alphas_) + "; " + join(betas_) +
         "; R=" + R_.to_string("n") + ")";
}

Rational hyper_coefficient(const HyperSpec& spec, unsigned long n) {
  Rational c = 1;
  for (long a : spec.alphas()) c *= pochhammer(Rational(a), n);
  for (long b : spec.betas()) c /= pochhammer(Rational(b), n);
  c /= Rational(factorial(n));
  return c;
}

Rational term(const HyperSpec& spec, unsigned long n, const Rational& x) {
  Rational xn;
  mpz_pow_ui(xn.get_num_mpz_t(), x.get_num_mpz_t(), n);
  mpz_pow_ui(xn.get_den_mpz_t(), x.get_den_mpz_t(), n);
  return hyper_coefficient(spec, n) * spec.R().evaluate(Rational(static_cast<long>(n))) * xn;
}

Rational convergence_exponent(const HyperSpec& spec, const Prime& p) {
  return make_rational(static_cast<long>(spec.r()) - static_cast<long>(spec.s()) - 1,
                       Integer(static_cast<unsigned long>(p.value() - 1)));
}

RegionMembership region_membership(const HyperSpec& spec, const Rational& x, const Prime& p) {
  if (x == 0) return RegionMembership::kInside;
  const Rational norm_exp = -valuation(x, p);
  const int c = cmp(norm_exp, convergence_exponent(spec, p));
  return c < 0 ? RegionMembership::kInside : c == 0 ? RegionMembership::kBoundary : RegionMembership::kOutside;
}

std::optional<long> term_valuation(const HyperSpec& spec, unsigned long n, const Rational& x, const Prime& p) {
  if (n > 0 && x == 0) return std::nullopt;
  const Rational rn = spec.R().evaluate(Rational(static_cast<long>(n)));
  if (rn == 0) return std::nullopt;
  const Integer nn(n);
  Integer v = 0;
  for (long a : spec.alphas()) v += factorial_val(nn + a - 1, p) - factorial_val(Integer(a - 1), p);
  for (long b : spec.betas()) v -= factorial_val(nn + b - 1, p) - factorial_val(Integer(b - 1), p);
  v -= factorial_val(nn, p);
  if (n > 0) v += Integer(static_cast<long>(n)) * valuation(x, p);
  v += valuation(rn, p);
  return v.get_si();
}

namespace {

// Everything the linear lower bound needs, computed once per (spec, x, p).
struct ValuationBound {
  Rational slope;          // delta
  Rational constant;       // C
  std::vector<Integer> q_abs;  // |coefficients| of the integer-cleared denominator
  unsigned long q_degree = 0;

  // Nondecreasing deviation: sum_i D(alpha_i + n - 1) + D(M(n)) - 1, with
  // D the base-p digit count and M(n) >= |Q~(n)|.
  Integer deviation(const HyperSpec& spec, const Integer& n, const Prime& p) const {
    Integer dev = 0;
    for (long a : spec.alphas()) dev += digit_count(n + a - 1, p);
    Integer m = 0;
    for (auto it = q_abs.rbegin(); it != q_abs.rend(); ++it) m = m * n + *it;
    dev += digit_count(m, p);
    dev -= 1;
    return dev;
  }

  Rational lower_bound(const HyperSpec& spec, const Integer& n, const Prime& p) const {
    return slope * Rational(n) + constant - Rational(deviation(spec, n, p));
  }
};

ValuationBound make_bound(const HyperSpec& spec, const Rational& x, const Prime& p) {
  ValuationBound b;
  const Rational pm1(Integer(static_cast<unsigned long>(p.value() - 1)));
  b.slope = convergence_exponent(spec, p) + Rational(valuation(x, p));
  // v((a+n-1)!) >= (a+n-1)/(p-1) - D(a+n-1); v((b+n-1)!) <= (b+n-1)/(p-1); v(n!) <= n/(p-1).
  Rational c = 0;
  for (long a : spec.alphas()) c += Rational(a - 1) / pm1 - Rational(factorial_val(Integer(a - 1), p));
  for (long bb : spec.betas()) c -= Rational(bb - 1) / pm1 - Rational(factorial_val(Integer(bb - 1), p));
  // R = P/Q with P~ = L_P P and Q~ = L_Q Q integral: v(P(n)) >= -v(L_P) and
  // v(Q(n)) <= D(M(n)) - 1 - v(L_Q).
  auto lcm_den = [](const RationalPolynomial& poly) {
    Integer l = 1;
    for (const auto& co : poly.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), co.get_den_mpz_t());
    return l;
  };
  const Integer lp = lcm_den(spec.R().numerator());
  const Integer lq = lcm_den(spec.R().denominator());
  c -= Rational(static_cast<long>(vp(lp, p)));
  c += Rational(static_cast<long>(vp(lq, p)));
  b.constant = c;
  for (const auto& co : clear_denominators(spec.R().denominator())) b.q_abs.push_back(abs(co));
  b.q_degree = static_cast<unsigned long>(spec.R().denominator().degree());
  return b;
}

void require_inside(const HyperSpec& spec, const Rational& x, const Prime& p) {
  const auto where = region_membership(spec, x, p);
  if (where == RegionMembership::kInside) return;
  const std::string ps = std::to_string(p.value());
  const std::string msg = "x = " + to_string(x) + " is " +
                          (where == RegionMembership::kBoundary ? "on the boundary of" : "outside") +
                          " the convergence region at p = " + ps + ": |x|_" + ps + " = " +
                          padic_norm(x, p).to_string(p) + " is not < " + ps + "^" +
                          to_string(convergence_exponent(spec, p));
  throw RegionError(msg, where);
}

PadicApprox embed_sum(const Rational& sum, const Prime& p, long target) {
  if (sum == 0) return PadicApprox::approx_zero(p, target);
  const long v = valuation(sum, p);
  if (v >= target) return PadicApprox::approx_zero(p, target);
  return PadicApprox::from_rational(sum, p, static_cast<unsigned long>(target - v));
}

Rational partial_sum(const HyperSpec& spec, const Rational& x, unsigned long terms) {
  Rational sum = 0;
  Rational coeff = 1;  // prod (alpha)_n / prod (beta)_n * x^n / n!
  for (unsigned long n = 0; n < terms; ++n) {
    const Rational rn = spec.R().evaluate(Rational(static_cast<long>(n)));
    if (rn != 0) sum += coeff * rn;
    Rational step = x / Rational(static_cast<long>(n + 1));
    for (long a : spec.alphas()) step *= Rational(a + static_cast<long>(n));
    for (long b : spec.betas()) step /= Rational(b + static_cast<long>(n));
    coeff *= step;
  }
  return sum;
}

}  // namespace

unsigned long certified_crossover(const HyperSpec& spec, const Rational& x, const Prime& p, long target) {
  require_inside(spec, x, p);
  if (x == 0) return 1;
  const ValuationBound bound = make_bound(spec, x, p);
  // Neg(2n) <= Neg(n) + r + deg Q, so once slope * a >= r + deg Q a certified
  // block [a, 2a) implies every later block is certified too.
  const Rational growth(static_cast<long>(spec.r() + bound.q_degree));
  Integer a = 1;
  while (true) {
    const Rational ar(a);
    if (bound.slope * ar >= growth &&
        bound.slope * ar + bound.constant - Rational(bound.deviation(spec, Integer(2 * a), p)) >= Rational(target))
      break;
    a *= 2;
  }
  // Walk down from a using exact per-term valuations.
  unsigned long n_star = a.get_ui();
  while (n_star > 1) {
    auto v = term_valuation(spec, n_star - 1, x, p);
    if (v && *v < target) break;
    --n_star;
  }
  return n_star;
}

TermValuationProfile term_profile(const HyperSpec& spec, const Rational& x, const Prime& p, long target,
                                  unsigned long window) {
  TermValuationProfile prof;
  prof.target = target;
  prof.slope = x == 0 ? Rational(0) : convergence_exponent(spec, p) + Rational(valuation(x, p));
  prof.valuations.reserve(window);
  for (unsigned long n = 0; n < window; ++n) prof.valuations.push_back(term_valuation(spec, n, x, p));
  prof.crossover = certified_crossover(spec, x, p, target);
  return prof;
}

PadicApprox evaluate_padic(const HyperSpec& spec, const Rational& x, const Prime& p, long target) {
  require_inside(spec, x, p);
  if (spec.R().is_zero()) return PadicApprox::exact_zero(p);
  if (x == 0) {
    const Rational r0 = spec.R().evaluate(0);
    if (r0 == 0) return PadicApprox::exact_zero(p);
    return embed_sum(r0, p, target);
  }
  return embed_sum(partial_sum(spec, x, certified_crossover(spec, x, p, target)), p, target);
}

PadicApprox evaluate_padic_with_terms(const HyperSpec& spec, const Rational& x, const Prime& p, long target,
                                      unsigned long terms) {
  require_inside(spec, x, p);
  if (spec.R().is_zero()) return PadicApprox::exact_zero(p);
  return embed_sum(partial_sum(spec, x, terms), p, target);
}

bool tail_identity_check(const Integer& t, unsigned long n, const Prime& p, long target) {
  if (t < 1) throw std::invalid_argument("tail identity needs t >= 1");
  const Rational x(t);
  const PadicApprox whole = evaluate_padic(HyperSpec::factorial_series(1), x, p, target);

  Integer s = 0, power = 1;
  for (unsigned long i = 0; i < n; ++i) {
    s += factorial(i) * power;
    power *= t;
  }
  const Integer scale = factorial(n) * power;  // n! t^n
  const long v_scale = static_cast<long>(vp(scale, p));
  const HyperSpec tail_spec({static_cast<long>(n) + 1, 1}, {}, RationalFunction(1));
  const PadicApprox tail = evaluate_padic(tail_spec, x, p, std::max(1L, target - v_scale));
  const PadicApprox head = s == 0 ? PadicApprox::exact_zero(p) : embed_sum(Rational(s), p, target);
  const PadicApprox rhs = head + PadicApprox::from_rational(Rational(scale), p, static_cast<unsigned long>(target) + 1) * tail;
  return whole.congruent_to(rhs, target);
}

TruncatedLaurentSeries factorial_generating_series(long T) {
  std::map<long, Rational> c;
  Integer f = 1;
  for (long n = 0; n < T; ++n) {
    if (n > 0) f *= n;
    c.emplace(n, Rational(f));
  }
  return TruncatedLaurentSeries::truncated(std::move(c), T);
}

TruncatedLaurentSeries ode_residual_F(const TruncatedLaurentSeries& F) {
  const auto three_x_minus_one = TruncatedLaurentSeries::exact({{0, -1}, {1, 3}});
  return TruncatedLaurentSeries::monomial(2) * F.derivative(2) + three_x_minus_one * F.derivative() + F;
}

TruncatedLaurentSeries ode_check_F(long T) {
  if (T < 3) throw std::invalid_argument("ode_check_F needs T >= 3");
  return ode_residual_F(factorial_generating_series(T));
}

TruncatedLaurentSeries shifted_factorial_series(unsigned nu, long T) {
  std::map<long, Rational> c;
  Integer f = 1;
  for (long n = 0; n + static_cast<long>(nu) < T; ++n) {
    if (n > 0) f *= n;
    c.emplace(n + static_cast<long>(nu), Rational(f));
  }
  return TruncatedLaurentSeries::truncated(std::move(c), T);
}

TruncatedLaurentSeries f_nu(unsigned nu) {
  std::map<long, Rational> c;
  for (unsigned l = 0; l < nu; ++l) c.emplace(-static_cast<long>(nu - l), Rational(-factorial(l)));
  return TruncatedLaurentSeries::exact(std::move(c));
}

TruncatedLaurentSeries ode_residual_Fnu(unsigned nu, const TruncatedLaurentSeries& G) {
  return G.derivative(nu) - TruncatedLaurentSeries::monomial(-2 * static_cast<long>(nu)) * G - f_nu(nu);
}

TruncatedLaurentSeries ode_check_Fnu(unsigned nu, long T) {
  if (nu < 1 || static_cast<long>(nu) > T) throw std::invalid_argument("ode_check_Fnu needs 1 <= nu <= T");
  return ode_residual_Fnu(nu, shifted_factorial_series(nu, T));
}

TruncatedLaurentSeries gauss_series(long a, long b, long c, long T) {
  if (c < 1) throw std::invalid_argument("Gauss series needs c >= 1");
  std::map<long, Rational> coeffs;
  Rational term = 1;
  for (long n = 0; n < T; ++n) {
    coeffs.emplace(n, term);
    term *= Rational(a + n) * Rational(b + n) / (Rational(c + n) * Rational(n + 1));
  }
  return TruncatedLaurentSeries::truncated(std::move(coeffs), T);
}

TruncatedLaurentSeries gauss_ode_residual(long a, long b, long c, const TruncatedLaurentSeries& w) {
  const auto x_one_minus_x = TruncatedLaurentSeries::exact({{1, 1}, {2, -1}});
  const auto linear = TruncatedLaurentSeries::exact({{0, Rational(c)}, {1, Rational(-(a + b + 1))}});
  return x_one_minus_x * w.derivative(2) + linear * w.derivative() - Rational(a * b) * w;
}

TruncatedLaurentSeries gauss_ode_check(long a, long b, long c, long T) {
  return gauss_ode_residual(a, b, c, gauss_series(a, b, c, T));
}

}  // namespace padicsum
