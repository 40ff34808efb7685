// Acceptance run: one PASS/FAIL line per criterion, each against its time limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "padicsum/cli.hpp"
#include "padicsum/hyper_series.hpp"
#include "padicsum/rationality.hpp"
#include "padicsum/summation.hpp"
#include "padicsum/telescoping.hpp"

using namespace padicsum;
using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

json cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), "padicsum");
  args.push_back("--json");
  args.push_back("--no-timing");
  std::ostringstream out, err;
  if (cli::run(args, out, err) != 0) throw std::runtime_error("cli failed: " + err.str());
  return json::parse(out.str());
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; out.size() < count; ++n)
    if (is_prime_u64(n)) out.push_back(n);
  return out;
}

Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Outcome table1() {
  const std::vector<long> u{0, 1, -1, -2, 9, -9, -50, 267, -413, -2180, 17731};
  const std::vector<long> v{-1, 1, 1, -5, 5, 21, -105, 141, 777, -5513, 13209};
  auto rows = cli_json({"tables", "uv", "--kmax", "11"})["results"];
  if (rows.size() != 11) return {false, "expected 11 rows"};
  for (std::size_t i = 0; i < 11; ++i)
    if (rows[i]["u"] != u[i] || rows[i]["v"] != v[i]) return {false, "row k=" + std::to_string(i + 1) + " differs"};
  return {true, "11 rows exact"};
}

RationalFunction parse_rf(const std::string& text) {
  // "(num)/den" or "num/den" with polynomials in x; reuse the n-grammar.
  auto slash = text.rfind('/');
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  auto to_n = [](std::string s) {
    for (char& c : s)
      if (c == 'x') c = 'n';
    return s;
  };
  return RationalFunction(cli::parse_polynomial(to_n(num)), cli::parse_polynomial(to_n(den)));
}

Outcome table2() {
  const auto x = RationalFunction::variable();
  const RationalFunction one(1);
  const std::vector<RationalFunction> u{(-one + x) / x, (-one + 3 * x - x * x) / (x * x),
                                        (-one + 6 * x - 7 * x * x + x * x * x) / (x * x * x),
                                        (-one + 10 * x - 25 * x * x + 15 * x * x * x - x * x * x * x) / (x * x * x * x)};
  const std::vector<RationalFunction> v{-one / x, (-one + 2 * x) / (x * x), (-one + 5 * x - 3 * x * x) / (x * x * x),
                                        (-one + 9 * x - 17 * x * x + 4 * x * x * x) / (x * x * x * x)};
  auto rows = cli_json({"tables", "uvx", "--kmax", "4"})["results"];
  if (rows.size() != 4) return {false, "expected 4 rows"};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto gu = parse_rf(rows[i]["u"].get<std::string>()), gv = parse_rf(rows[i]["v"].get<std::string>());
    // Cross-multiplied comparison.
    if (gu.numerator() * u[i].denominator() != u[i].numerator() * gu.denominator() ||
        gv.numerator() * v[i].denominator() != v[i].numerator() * gv.denominator())
      return {false, "row k=" + std::to_string(i + 1) + " differs"};
  }
  return {true, "4 rows equal"};
}

Outcome closed_forms() {
  // The four printed identities, as (u, v, A) with A ascending.
  const std::vector<std::tuple<long, long, std::vector<long>>> printed{
      {0, -1, {1}}, {1, 1, {-1, 1}}, {-1, 1, {-1, -2, 1}}, {-2, -5, {5, 0, -3, 1}}};
  for (unsigned k = 1; k <= 8; ++k) {
    const ClosedForm cf = closed_form(k);
    if (k <= 4) {
      const auto& [pu, pv, pa] = printed[k - 1];
      std::vector<Rational> coeffs(pa.begin(), pa.end());
      if (cf.u != pu || cf.v != pv || cf.A != RationalPolynomial(coeffs))
        return {false, "printed identity k=" + std::to_string(k) + " differs"};
    }
    Integer lhs = 0, f = 1;
    for (unsigned long n = 0; n <= 200; ++n) {
      if (n) f *= n;
      Rational rhs = Rational(cf.v) + Rational(f) * cf.A.evaluate(Rational(static_cast<long>(n)));
      if (Rational(lhs) != rhs) return {false, "k=" + std::to_string(k) + " fails at n=" + std::to_string(n)};
      Integer nk = power(Integer(static_cast<unsigned long>(n)), k);
      lhs += f * (nk + cf.u);
    }
  }
  return {true, "k <= 8, n <= 200"};
}

Outcome recurrence() {
  for (unsigned long n = 0; n <= 100; ++n) {
    const auto rec = partial_sums_recurrence(n, 8);
    for (unsigned k = 0; k <= 8; ++k) {
      Integer direct = 0, f = 1;
      for (unsigned long i = 0; i < n; ++i) {
        if (i) f *= i;
        direct += f * power(Integer(static_cast<unsigned long>(i)), k);
      }
      if (rec[k] != direct) return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k)};
    }
  }
  return {true, "n <= 100, k <= 8"};
}

Outcome sum_minus_one() {
  const HyperSpec spec = HyperSpec::factorial_series(RationalFunction(RationalPolynomial::identity()));
  for (std::uint64_t pv : first_primes(10)) {
    const Prime p(pv);
    auto value = evaluate_padic(spec, Rational(1), p, 50);
    if (!value.congruent_to(Rational(-1), 50)) return {false, "p=" + std::to_string(pv) + " not -1 mod p^50"};
    auto rec = rational_reconstruct(value, 1000000, 1000);
    if (rec != Rational(-1)) return {false, "p=" + std::to_string(pv) + " reconstruction failed"};
  }
  return {true, "first 10 primes"};
}

Outcome telescoping() {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 100; ++i) {
    const TelescopeSpec ts = random_telescope_spec(rng);
    if (!verify_telescope_exact(ts, 30)) return {false, "exact, spec #" + std::to_string(i)};
    const Rational want = -ts.A().evaluate(Rational(0)) / ts.B().evaluate(Rational(0));
    for (std::uint64_t pv : {2, 3, 5, 7}) {
      auto r = verify_telescope_padic_detail(ts, Prime(pv), 40);
      if (!r.matches || r.expected != want || !r.value.congruent_to(want, 40))
        return {false, "p-adic, spec #" + std::to_string(i) + " p=" + std::to_string(pv)};
    }
  }
  return {true, "100 specs"};
}

Outcome zero_sums() {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 20; ++i) {
    const TelescopeSpec ts = random_zero_sum_spec(rng);
    if (ts.A().evaluate(Rational(0)) != 0) return {false, "A(0) != 0"};
    for (std::uint64_t pv : {2, 3, 5, 7}) {
      auto r = verify_telescope_padic_detail(ts, Prime(pv), 40);
      if (!r.value.congruent_to(Rational(0), 40))
        return {false, "spec #" + std::to_string(i) + " p=" + std::to_string(pv)};
    }
  }
  return {true, "20 specs"};
}

Outcome classifier() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> count(0, 3), param(1, 5), deg(0, 3), shift(1, 5);
  std::uniform_int_distribution<long> coeff(-9, 9);
  int inside = 0, outside = 0;
  for (int i = 0; i < 50; ++i) {
    std::vector<long> alphas(count(rng)), betas(count(rng));
    for (auto& a : alphas) a = param(rng);
    for (auto& b : betas) b = param(rng);
    std::vector<Rational> num(deg(rng) + 1);
    for (auto& c : num) c = coeff(rng);
    if (num.back() == 0) num.back() = 1;
    RationalPolynomial den = RationalPolynomial::constant(1);
    for (int d = deg(rng); d > 0; --d) den = den * RationalPolynomial({Rational(shift(rng)), Rational(1)});
    const HyperSpec spec(alphas, betas, RationalFunction(RationalPolynomial(num), den));
    for (std::uint64_t pv : {2, 3, 5}) {
      const Prime p(pv);
      const Rational bound = convergence_exponent(spec, p);
      for (long v = -3; v <= 3; ++v) {
        const Rational x = v >= 0 ? Rational(p.pow(v)) : Rational(1, p.pow(-v));
        const Rational norm = -v;
        if (norm == bound) continue;
        long lo = std::numeric_limits<long>::max(), hi = std::numeric_limits<long>::min();
        for (unsigned long n = 450; n <= 500; ++n)
          if (auto tv = term_valuation(spec, n, x, p)) {
            lo = std::min(lo, *tv);
            hi = std::max(hi, *tv);
          }
        const bool in = region_membership(spec, x, p) == RegionMembership::kInside;
        if (in != (norm < bound)) return {false, "membership disagrees with the exponent"};
        if (in) {
          ++inside;
          if (lo < 10) return {false, "inside but v_p(term) < 10 near n = 500, spec #" + std::to_string(i)};
        } else {
          ++outside;
          if (hi > 0) return {false, "outside but v_p(term) > 0 near n = 500, spec #" + std::to_string(i)};
        }
      }
    }
  }
  return {true, std::to_string(inside) + " inside, " + std::to_string(outside) + " outside"};
}

Outcome prop4() {
  int count = 0;
  for (std::uint64_t q = 2; q <= 97; ++q)
    if (is_prime_u64(q)) {
      if (!prop4_check(q)) return {false, "q=" + std::to_string(q)};
      ++count;
    }
  // Independent cross-check against the table values.
  const auto t = uv_table(98);
  for (std::uint64_t q = 2; q <= 97; ++q)
    if (is_prime_u64(q)) {
      const Integer Q(static_cast<unsigned long>(q));
      if (mod_floor(t.at(q + 1).u, Q) != 1 || mod_floor(t.at(q + 1).v, Q) != 1)
        return {false, "table disagrees at q=" + std::to_string(q)};
    }
  return {true, std::to_string(count) + " primes"};
}

Outcome exclusion() {
  Integer total = 0;
  unsigned long max_witness = 0;
  for (long t = 1; t <= 3; ++t) {
    const GridExclusion g = exclude_grid(t, 1000000, 50, 30);
    if (!g.all_excluded())
      return {false, "t=" + std::to_string(t) + ": " + std::to_string(g.survivors.size()) + " survivors"};
    total += g.candidates;
    for (const auto& [n, c] : g.witness_histogram) max_witness = std::max(max_witness, n);
  }
  return {true, total.get_str() + " candidates, max witness n=" + std::to_string(max_witness)};
}

Outcome theorem2() {
  for (unsigned k = 1; k <= 8; ++k) {
    const Theorem2Result r = theorem2_criterion(k, 100);
    if (!r.integer_coefficients) return {false, "F non-integral at k=" + std::to_string(k)};
    for (long x = 2; x <= 100; ++x)
      if (-1 + Rational(x) * r.F.evaluate(Rational(x)) == 0)
        return {false, "root at k=" + std::to_string(k) + ", x=" + std::to_string(x)};
  }
  return {true, "k <= 8, 2 <= x <= 100"};
}

Outcome odes() {
  // Zero residual, and known through the expected range: a derivative costs
  // one order, the x^(-2 nu) factor costs 2 nu.
  auto residual_ok = [](const TruncatedLaurentSeries& r, long known_below) {
    return r.is_zero() && r.truncation() && *r.truncation() >= known_below;
  };
  if (!residual_ok(ode_check_F(100), 99)) return {false, "factorial series ODE"};
  for (unsigned nu = 1; nu <= 3; ++nu)
    if (!residual_ok(ode_check_Fnu(nu, 50), 50 - 2 * static_cast<long>(nu)))
      return {false, "nu=" + std::to_string(nu)};
  for (auto [a, b, c] : std::vector<std::tuple<long, long, long>>{{1, 1, 1}, {2, 1, 3}, {1, 2, 2}, {3, 2, 1}, {2, 2, 5}})
    if (!residual_ok(gauss_ode_check(a, b, c, 60), 59)) return {false, "Gauss ODE"};
  return {true, "F to 100, F_nu to 50, five Gauss triples to 60"};
}

Outcome multiprime() {
  const std::vector<Prime> primes{Prime(2), Prime(3), Prime(5), Prime(7), Prime(11)};
  for (unsigned k = 0; k <= 11; ++k) {
    const auto r = multi_prime_experiment(k, 1, primes, 40, 1000000, 1000);
    if (k == 1) {
      if (!r.common || *r.common != -1) return {false, "k=1 did not agree on -1"};
    } else if (r.agreement()) {
      return {false, "k=" + std::to_string(k) + " agreed on " + to_string(*r.common)};
    }
  }
  return {true, "k=1 agrees on -1; k in {0,2..11} disagree"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "integer u_k, v_k table", 1, table1},
      {2, "rational-function u_k(x), v_k(x) table", 1, table2},
      {3, "closed-form identities", 10, closed_forms},
      {4, "recurrence equivalence", 10, recurrence},
      {5, "p-adic sum of n! n is -1", 30, sum_minus_one},
      {6, "telescoping specs", 60, telescoping},
      {7, "zero-sum family", 30, zero_sums},
      {8, "convergence classifier", 60, classifier},
      {9, "u, v congruences mod q", 5, prop4},
      {10, "exclusion grid", 120, exclusion},
      {11, "integer-root criterion", 5, theorem2},
      {12, "formal ODE checks", 10, odes},
      {13, "multi-prime disagreement", 60, multiprime},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << "  [" << o.detail
              << (in_time ? "" : "; over time limit") << "]  " << static_cast<long>(secs * 1000) << " ms / "
              << static_cast<long>(c.limit_s) << " s\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
