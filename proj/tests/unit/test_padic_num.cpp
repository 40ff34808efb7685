#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "padicsum/padic_num.hpp"

using namespace padicsum;

namespace {

Integer pow_int(unsigned long p, unsigned long e) {
  Integer r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= p;
  return r;
}

// Brute-force reconstruction oracle: scan denominators and take the
// symmetric residue as numerator.
std::optional<Rational> brute_reconstruct(const Integer& residue, const Integer& modulus, long A, long B) {
  for (long b = 1; b <= B; ++b) {
    Integer a = residue * b % modulus;
    if (a < 0) a += modulus;
    if (2 * a > modulus) a -= modulus;
    if (abs(a) <= A) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), Integer(b).get_mpz_t());
      if (g == 1) return make_rational(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("embedding") {
  auto a = PadicApprox::from_rational(make_rational(1, 3), Prime(2), 4);
  CHECK(a.valuation() == 0);
  CHECK(a.unit() == 11);
  auto b = PadicApprox::from_rational(8, Prime(2), 3);
  CHECK(b.valuation() == 3);
  CHECK(b.unit() == 1);
  CHECK(PadicApprox::from_rational(0, Prime(5), 10).is_exact_zero());
  CHECK_THROWS(PadicApprox::from_rational(1, Prime(5), 0));
}

TEST_CASE("arithmetic") {
  const Prime p(5);
  CHECK(PadicApprox::from_rational(2, p, 6) * PadicApprox::from_rational(3, p, 6) ==
        PadicApprox::from_rational(6, p, 6));
  auto x = PadicApprox::from_rational(make_rational(7, 10), p, 8);
  auto z = x + (-x);
  CHECK(z.is_zero());
  CHECK(z.absolute_precision() == x.absolute_precision());
  auto c = PadicApprox::from_rational(1, Prime(3), 5) + PadicApprox::from_rational(-1, Prime(3), 5);
  CHECK(c.state() == PadicApprox::State::kApproxZero);
  CHECK(c.absolute_precision() == 5);
  CHECK_THROWS(PadicApprox::from_rational(1, Prime(3), 5) + PadicApprox::from_rational(1, Prime(5), 5));
}

TEST_CASE("digits and rendering") {
  auto m = PadicApprox::from_rational(-1, Prime(5), 4);
  CHECK(m.valuation() == 0);
  CHECK(m.digits() == std::vector<unsigned long>{4, 4, 4, 4});
  CHECK(m.to_string() == "p-adic(p=5, val=0, digits=[4,4,4,4,...], N=4)");
  CHECK(PadicApprox::exact_zero(Prime(5)).digits().empty());
  auto s = PadicApprox::from_rational(75, Prime(5), 3);
  CHECK(s.valuation() == 2);
  CHECK(s.digits() == std::vector<unsigned long>{3, 0, 0});
}

TEST_CASE("ring homomorphism up to tracked precision") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  const std::vector<Prime> primes{Prime(2), Prime(3), Prime(5), Prime(7)};
  const unsigned long N = 20;
  for (int i = 0; i < 1000; ++i) {
    const Prime& p = primes[i % 4];
    Rational a = make_rational(num(rng), den(rng)), b = make_rational(num(rng), den(rng));
    auto A = PadicApprox::from_rational(a, p, N), B = PadicApprox::from_rational(b, p, N);
    auto sum = A + B, prod = A * B;
    if (auto ap = sum.absolute_precision()) REQUIRE(sum.congruent_to(a + b, *ap));
    if (auto ap = prod.absolute_precision()) REQUIRE(prod.congruent_to(a * b, *ap));
    if (a != 0 && b != 0) REQUIRE(prod.precision() == N);
  }
}

TEST_CASE("digits round-trip") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (unsigned long pv : {2ul, 3ul, 5ul, 7ul, 97ul}) {
    const Prime p(pv);
    for (int i = 0; i < 200; ++i) {
      Rational q = make_rational(num(rng), den(rng));
      if (q == 0) continue;
      auto x = PadicApprox::from_rational(q, p, 12);
      Integer unit = 0, place = 1;
      for (unsigned long d : x.digits()) {
        unit += place * d;
        place *= pv;
      }
      REQUIRE(unit == x.unit());
      // unit * p^v == q mod p^(v+N), checked in Q via numerator/denominator.
      Rational back = Rational(unit) * (x.valuation() >= 0 ? Rational(pow_int(pv, x.valuation()))
                                                          : Rational(1, pow_int(pv, -x.valuation())));
      Rational diff = back - q;
      if (diff != 0) REQUIRE(valuation(diff, p) >= x.valuation() + 12);
    }
  }
}

TEST_CASE("rational reconstruction") {
  const auto two_thirds = PadicApprox::from_rational(make_rational(2, 3), Prime(5), 6);
  // 2 * 100 * 100 exceeds 5^6, so uniqueness is not guaranteed and the call is refused.
  CHECK_THROWS_AS(rational_reconstruct(two_thirds, 100, 100), std::invalid_argument);
  CHECK(rational_reconstruct(two_thirds, 100, 78) == make_rational(2, 3));
  CHECK(rational_reconstruct(PadicApprox::from_rational(make_rational(2, 3), Prime(5), 7), 100, 100) ==
        make_rational(2, 3));
  CHECK(rational_reconstruct(PadicApprox::from_rational(1, Prime(7), 6), 10, 10) == Rational(1));
  CHECK(rational_reconstruct(PadicApprox::from_rational(make_rational(1, 5), Prime(5), 10), 10, 10) == std::nullopt);
  CHECK_THROWS_AS(rational_reconstruct(PadicApprox::from_rational(1, Prime(5), 2), 10, 10), std::invalid_argument);
  CHECK(rational_reconstruct(PadicApprox::exact_zero(Prime(5)), 10, 10) == Rational(0));
}

TEST_CASE("reconstruction agrees with a brute-force oracle") {
  std::mt19937_64 rng(9);
  const long A = 60, B = 40;
  for (unsigned long pv : {2ul, 3ul, 5ul, 7ul}) {
    const Prime p(pv);
    unsigned long N = 1;
    while (pow_int(pv, N) <= 2 * A * B) ++N;
    const Integer mod = pow_int(pv, N);
    std::uniform_int_distribution<long> residue(0, mod.get_si() - 1);
    for (int i = 0; i < 300; ++i) {
      Integer r = residue(rng);
      auto x = r == 0 ? PadicApprox::approx_zero(p, static_cast<long>(N))
                      : PadicApprox::from_rational(Rational(r), p, N - vp(r, p));
      if (!x.is_zero() && x.precision() + x.valuation() != N) continue;
      auto got = rational_reconstruct(x, A, B);
      auto want = brute_reconstruct(r, mod, A, B);
      if (want && valuation(*want, p) < 0) want.reset();
      REQUIRE(got == want);
    }
    // Round trip for every admissible input.
    for (long b = 1; b <= B; ++b)
      for (long a = -A; a <= A; a += 7) {
        Rational q = make_rational(a, b);
        if (q.get_den() % pv == 0) continue;
        if (q == 0) continue;
        auto x = PadicApprox::from_rational(q, p, N - valuation(q, p));
        REQUIRE(rational_reconstruct(x, A, B) == q);
      }
  }
}
