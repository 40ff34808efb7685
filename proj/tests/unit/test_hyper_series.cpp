#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "padicsum/hyper_series.hpp"
#include "padicsum/telescoping.hpp"

using namespace padicsum;

namespace {

RationalPolynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPolynomial(v);
}

HyperSpec factorial_with(const RationalPolynomial& num) { return HyperSpec::factorial_series(RationalFunction(num)); }

// Term formed from scratch, independent of hyper_coefficient.
Rational term_oracle(const HyperSpec& spec, unsigned long n, const Rational& x) {
  Rational t = spec.R().evaluate(Rational(static_cast<long>(n)));
  for (long a : spec.alphas())
    for (unsigned long i = 0; i < n; ++i) t *= a + static_cast<long>(i);
  for (long b : spec.betas())
    for (unsigned long i = 0; i < n; ++i) t /= b + static_cast<long>(i);
  for (unsigned long i = 1; i <= n; ++i) t /= static_cast<long>(i);
  for (unsigned long i = 0; i < n; ++i) t *= x;
  return t;
}

std::optional<long> valuation_oracle(const Rational& q, const Prime& p) {
  if (q == 0) return std::nullopt;
  return valuation(q, p);
}

HyperSpec random_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 3), param(1, 5), deg(0, 3), shift(1, 5);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<long> alphas(count(rng)), betas(count(rng));
  for (auto& a : alphas) a = param(rng);
  for (auto& b : betas) b = param(rng);
  std::vector<Rational> num(deg(rng) + 1);
  for (auto& c : num) c = coeff(rng);
  if (num.back() == 0) num.back() = 1;
  RationalPolynomial den = P({1});
  for (int i = deg(rng); i > 0; --i) den = den * P({shift(rng), 1});
  return HyperSpec(alphas, betas, RationalFunction(RationalPolynomial(num), den));
}

}  // namespace

TEST_CASE("terms") {
  auto f = factorial_with(P({1}));
  CHECK(term(f, 3, Rational(1)) == 6);
  CHECK(term(HyperSpec::gauss(2, 1, 3), 2, Rational(1)) == Rational(1, 2));
  auto g = HyperSpec({2, 3}, {4}, RationalFunction(P({5, 1}), P({2, 1})));
  CHECK(term(g, 0, Rational(7)) == Rational(5, 2));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    auto spec = random_spec(rng);
    for (unsigned long n = 0; n < 25; ++n) REQUIRE(term(spec, n, Rational(3, 2)) == term_oracle(spec, n, Rational(3, 2)));
  }
  CHECK_THROWS_AS(HyperSpec({0}, {}, RationalFunction(1)), std::invalid_argument);
  CHECK_THROWS_AS(HyperSpec({1}, {}, RationalFunction(P({1}), P({-3, 1}))), std::invalid_argument);
}

TEST_CASE("convergence region") {
  for (unsigned long pv : {2ul, 3ul, 5ul, 7ul}) {
    const Prime p(pv);
    CHECK(convergence_exponent(factorial_with(P({1})), p) == Rational(1, static_cast<long>(pv - 1)));
    CHECK(convergence_exponent(HyperSpec::gauss(1, 2, 3), p) == 0);
    CHECK(convergence_exponent(HyperSpec({1}, {1}, RationalFunction(1)), p) == Rational(-1, static_cast<long>(pv - 1)));
    // factorial series: the region is exactly Z_p.
    CHECK(region_membership(factorial_with(P({1})), Rational(static_cast<long>(pv) * 7 + 1), p) ==
          RegionMembership::kInside);
    CHECK(region_membership(factorial_with(P({1})), Rational(1, static_cast<long>(pv * pv)), p) ==
          RegionMembership::kOutside);
    CHECK(region_membership(HyperSpec::gauss(1, 2, 3), Rational(1), p) == RegionMembership::kBoundary);
    CHECK(region_membership(HyperSpec({1}, {1}, RationalFunction(1)), Rational(1), p) == RegionMembership::kOutside);
    CHECK(region_membership(HyperSpec({1}, {1}, RationalFunction(1)), Rational(static_cast<long>(pv * pv)), p) ==
          RegionMembership::kInside);
  }
}

TEST_CASE("term valuations against exact terms") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    auto spec = random_spec(rng);
    for (unsigned long pv : {2ul, 3ul, 5ul}) {
      const Prime p(pv);
      for (const Rational& x : {Rational(1), Rational(static_cast<long>(pv) * 2), Rational(3, static_cast<long>(pv))})
        for (unsigned long n = 0; n < 40; ++n)
          REQUIRE(term_valuation(spec, n, x, p) == valuation_oracle(term_oracle(spec, n, x), p));
    }
  }
}

TEST_CASE("region soundness") {
  std::mt19937_64 rng(12);
  const unsigned long n_max = 500;
  int inside_seen = 0, outside_seen = 0;
  for (int i = 0; i < 50; ++i) {
    auto spec = random_spec(rng);
    if (spec.R().is_zero()) continue;
    for (unsigned long pv : {2ul, 3ul, 5ul}) {
      const Prime p(pv);
      // Pick the smallest p-power inside and the largest outside.
      const Rational e = convergence_exponent(spec, p);
      for (long v = -3; v <= 3; ++v) {
        Rational x = v >= 0 ? Rational(p.pow(v)) : Rational(1, p.pow(-v));
        const Rational norm_exp = -v;
        if (norm_exp == e) continue;
        long lo = std::numeric_limits<long>::max(), hi = std::numeric_limits<long>::min();
        for (unsigned long n = 450; n <= n_max; ++n)
          if (auto tv = term_valuation(spec, n, x, p)) {
            lo = std::min(lo, *tv);
            hi = std::max(hi, *tv);
          }
        if (norm_exp < e) {
          ++inside_seen;
          REQUIRE(lo >= 10);
        } else {
          ++outside_seen;
          REQUIRE(hi <= 0);
        }
      }
    }
  }
  CHECK(inside_seen > 100);
  CHECK(outside_seen > 100);
}

TEST_CASE("certified crossover is sound") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    auto spec = random_spec(rng);
    if (spec.R().is_zero()) continue;
    for (unsigned long pv : {2ul, 3ul, 5ul, 7ul}) {
      const Prime p(pv);
      Rational x = convergence_exponent(spec, p) > 0 ? Rational(1) : Rational(p.pow(1 + (spec.s() + 1)));
      if (region_membership(spec, x, p) != RegionMembership::kInside) continue;
      for (long target : {5L, 20L}) {
        const unsigned long c = certified_crossover(spec, x, p, target);
        for (unsigned long n = c; n < 3 * c + 20; ++n) {
          auto tv = term_valuation(spec, n, x, p);
          REQUIRE((!tv || *tv >= target));
        }
      }
    }
  }
}

TEST_CASE("evaluation") {
  for (unsigned long pv : {2ul, 3ul, 5ul, 7ul, 11ul}) {
    const Prime p(pv);
    CHECK(evaluate_padic(factorial_with(P({0, 1})), Rational(1), p, 40).congruent_to(Rational(-1), 40));
    CHECK(evaluate_padic(factorial_with(P({1, 0, 1})), Rational(1), p, 30).congruent_to(Rational(1), 30));
  }
  CHECK(evaluate_padic(factorial_with(RationalPolynomial()), Rational(1), Prime(5), 10).is_exact_zero());
  CHECK_THROWS_AS(evaluate_padic(factorial_with(P({1})), Rational(1, 5), Prime(5), 10), RegionError);
  CHECK_THROWS_AS(evaluate_padic(HyperSpec::gauss(2, 1, 3), Rational(1), Prime(5), 10), RegionError);
  try {
    evaluate_padic(HyperSpec::gauss(2, 1, 3), Rational(1), Prime(5), 10);
  } catch (const RegionError& e) {
    CHECK(e.where() == RegionMembership::kBoundary);
  }
  // Gauss 2F1(1,1;1;x) = 1/(1-x).
  auto geo = evaluate_padic(HyperSpec::gauss(1, 1, 1), Rational(5), Prime(5), 30);
  CHECK(geo.congruent_to(Rational(-1, 4), 30));
}

TEST_CASE("sum n! (n^k + u_k) = v_k") {
  for (unsigned k = 1; k <= 8; ++k) {
    auto sol = solve_telescoping(k, Rational(1));
    RationalPolynomial R = RationalPolynomial::monomial(k) + RationalPolynomial::constant(sol.u);
    for (unsigned long pv : {2ul, 3ul, 5ul, 7ul}) {
      auto val = evaluate_padic(factorial_with(R), Rational(1), Prime(pv), 30);
      REQUIRE(val.congruent_to(sol.v, 30));
    }
  }
}

TEST_CASE("window independence and target coherence") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 30; ++i) {
    auto spec = random_spec(rng);
    if (spec.R().is_zero()) continue;
    for (unsigned long pv : {2ul, 3ul, 5ul}) {
      const Prime p(pv);
      Rational x = convergence_exponent(spec, p) > 0 ? Rational(1) : Rational(p.pow(1 + spec.s()));
      if (region_membership(spec, x, p) != RegionMembership::kInside) continue;
      auto v40 = evaluate_padic(spec, x, p, 40);
      const unsigned long c = certified_crossover(spec, x, p, 40);
      auto doubled = evaluate_padic_with_terms(spec, x, p, 40, 2 * c + 1);
      REQUIRE(v40.congruent_to(doubled, 40));
      REQUIRE(v40.reduce(40) == doubled.reduce(40));
      auto v20 = evaluate_padic(spec, x, p, 20);
      REQUIRE(v20.reduce(20) == v40.reduce(20));
    }
  }
}

TEST_CASE("tail identity") {
  CHECK(tail_identity_check(1, 3, Prime(7), 30));
  CHECK(tail_identity_check(1, 0, Prime(5), 20));
  CHECK(tail_identity_check(2, 5, Prime(3), 25));
  for (long t = 1; t <= 3; ++t)
    for (unsigned long n = 0; n <= 12; ++n)
      for (unsigned long pv : {2ul, 3ul, 5ul}) REQUIRE(tail_identity_check(t, n, Prime(pv), 20));
}

TEST_CASE("factorial series ODE") {
  auto r = ode_check_F(10);
  CHECK(r.is_zero());
  CHECK(r.truncation().value() >= 9);
  CHECK(ode_check_F(100).is_zero());
  std::map<long, Rational> c;
  for (long n = 0; n < 10; ++n) c[n] = Rational(factorial(n));
  c[5] = 121;
  CHECK_FALSE(ode_residual_F(TruncatedLaurentSeries::truncated(c, 10)).is_zero());
}

TEST_CASE("shifted factorial ODE") {
  for (unsigned nu = 1; nu <= 3; ++nu) CHECK(ode_check_Fnu(nu, 20).is_zero());
  CHECK(f_nu(1) == TruncatedLaurentSeries::monomial(-1, -1));
  CHECK(f_nu(2) == TruncatedLaurentSeries::monomial(-2, -1) + TruncatedLaurentSeries::monomial(-1, -1));
  CHECK_FALSE(ode_residual_Fnu(1, shifted_factorial_series(2, 20)).is_zero());
}

TEST_CASE("Gauss ODE") {
  auto geo = gauss_series(1, 1, 1, 30);
  for (long n = 0; n < 30; ++n) CHECK(geo.coefficient(n) == 1);
  CHECK(gauss_ode_check(1, 1, 1, 30).is_zero());
  CHECK(gauss_ode_check(2, 1, 3, 30).is_zero());
  CHECK(gauss_ode_residual(2, 1, 3, TruncatedLaurentSeries::exact({})).is_zero());
  CHECK_FALSE(gauss_ode_residual(2, 1, 3, gauss_series(2, 1, 4, 30)).is_zero());
}
