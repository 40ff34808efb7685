#include "padicsum/rationality.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "padicsum/hyper_series.hpp"
#include "padicsum/summation.hpp"

namespace padicsum {

CandidateRational::CandidateRational(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  if (b_ < 1) throw std::invalid_argument("candidate denominator must be >= 1");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  if (g != 1) throw std::invalid_argument("candidate " + a_.get_str() + "/" + b_.get_str() + " is not reduced");
}

std::string CandidateRational::to_string() const {
  return b_ == 1 ? a_.get_str() : a_.get_str() + "/" + b_.get_str();
}

Integer S_n_t(unsigned long n, const Integer& t) {
  Integer sum = 0, f = 1, power = 1;
  for (unsigned long i = 0; i < n; ++i) {
    if (i > 0) {
      f *= i;
      power *= t;
    }
    sum += f * power;
  }
  return sum;
}

namespace {

Integer modulus_for(unsigned long n, const Integer& t) {
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), t.get_mpz_t(), n);
  return factorial(n) * power;
}

}  // namespace

bool inequality_check(unsigned long n, const Integer& t, const Integer& b) {
  if (n <= 2) throw std::invalid_argument("inequality needs n > 2");
  if (t < 1) throw std::invalid_argument("inequality needs t >= 1");
  if (b < 1) throw std::invalid_argument("inequality needs b >= 1");
  if (!(2 * b < Integer(n) * t)) throw std::invalid_argument("inequality needs 2b < n t");
  const Integer s = S_n_t(n, t);
  const Integer m = modulus_for(n, t);
  return 0 < s && s < m && 0 < b * s && b * s < m;
}

ExclusionReport exclude_candidate(const Integer& t, const CandidateRational& cand, unsigned long n_max) {
  if (t < 1) throw std::invalid_argument("exclusion needs t >= 1");
  const Integer& a = cand.a();
  const Integer& b = cand.b();
  ExclusionReport rep{t, cand, a > 0 ? SignCase::kPositive : a < 0 ? SignCase::kNegative : SignCase::kZero,
                      ExclusionOutcome::kNotExcluded, std::nullopt, std::nullopt, std::nullopt, std::nullopt};

  for (unsigned long n = 3; n <= n_max; ++n) {
    if (mod_floor(a - b * S_n_t(n, t), modulus_for(n, t)) != 0) {
      rep.outcome = ExclusionOutcome::kCongruenceFails;
      rep.witness = n;
      return rep;
    }
  }
  // Congruences held throughout: once 0 < b S_n < n! t^n and |a| < n! t^n the
  // congruence forces a = b S_n (a > 0) or a = b S_n - n! t^n (a < 0), and
  // a = 0 is impossible. Two such n with different forced values exclude a.
  std::optional<unsigned long> first_n;
  std::optional<Integer> first_forced;
  for (unsigned long n = 3; n <= n_max; ++n) {
    if (!(2 * b < Integer(n) * t)) continue;
    const Integer m = modulus_for(n, t);
    if (abs(a) >= m) continue;
    const Integer bs = b * S_n_t(n, t);
    if (a == 0) {
      rep.outcome = ExclusionOutcome::kForcedValuesDiffer;
      rep.witness = n;
      return rep;
    }
    Integer forced = a > 0 ? bs : bs - m;
    if (!first_n) {
      first_n = n;
      first_forced = forced;
    } else if (forced != *first_forced) {
      rep.outcome = ExclusionOutcome::kForcedValuesDiffer;
      rep.witness = first_n;
      rep.second_witness = n;
      rep.forced_first = first_forced;
      rep.forced_second = forced;
      return rep;
    }
  }
  return rep;
}

namespace {

std::vector<long> distinct_prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Number of a in [-a_max, a_max] with gcd(a, b) = 1, by inclusion-exclusion.
Integer coprime_count(long a_max, long b) {
  const auto primes = distinct_prime_factors(b);
  Integer total = 0;
  for (unsigned mask = 0; mask < (1u << primes.size()); ++mask) {
    long d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (1u << i)) {
        d *= primes[i];
        ++bits;
      }
    const Integer multiples = 2 * (a_max / d) + 1;
    total += bits % 2 ? -multiples : multiples;
  }
  return total;
}

}  // namespace

GridExclusion exclude_grid(const Integer& t, long a_max, long b_max, unsigned long n_max) {
  if (t < 1) throw std::invalid_argument("exclusion needs t >= 1");
  if (a_max < 0 || b_max < 1) throw std::invalid_argument("grid bounds must satisfy a_max >= 0, b_max >= 1");
  if (n_max < 3) throw std::invalid_argument("exclusion scans start at n = 3");
  GridExclusion g;
  g.t = t;
  g.a_max = a_max;
  g.b_max = b_max;
  g.n_max = n_max;

  // S_n(t) and n! t^n for every n in the scan, shared across b.
  std::vector<Integer> S(n_max + 1), M(n_max + 1);
  for (unsigned long n = 3; n <= n_max; ++n) {
    S[n] = S_n_t(n, t);
    M[n] = modulus_for(n, t);
  }
  const Integer int64_max(std::to_string(std::numeric_limits<long>::max()));

  for (long b = 1; b <= b_max; ++b) {
    const Integer total = coprime_count(a_max, b);
    g.candidates += total;

    // Residue class alive after n = 3, restricted to reduced candidates.
    std::vector<long> alive;
    {
      const Integer r = mod_floor(Integer(b) * S[3], M[3]);
      const Integer start = -Integer(a_max) + mod_floor(r + a_max, M[3]);
      if (M[3] <= int64_max) {
        const long step = M[3].get_si();
        for (long a = start.get_si(); a <= a_max; a += step)
          if (std::gcd(a, b) == 1) alive.push_back(a);
      } else if (start <= a_max) {
        const long a = start.get_si();
        if (std::gcd(a, b) == 1) alive.push_back(a);
      }
    }
    const Integer dropped3 = total - Integer(static_cast<unsigned long>(alive.size()));
    if (dropped3 != 0) g.witness_histogram[3] += dropped3;

    for (unsigned long n = 4; n <= n_max && !alive.empty(); ++n) {
      const Integer r = mod_floor(Integer(b) * S[n], M[n]);
      std::vector<long> next;
      if (M[n] <= int64_max) {
        const long m = M[n].get_si();
        const long rr = r.get_si();
        for (long a : alive) {
          long res = a % m;
          if (res < 0) res += m;
          if (res == rr) next.push_back(a);
        }
      } else {
        for (long a : alive)
          if (mod_floor(Integer(a), M[n]) == r) next.push_back(a);
      }
      const auto dropped = alive.size() - next.size();
      if (dropped) g.witness_histogram[n] += Integer(static_cast<unsigned long>(dropped));
      alive = std::move(next);
    }
    for (long a : alive) g.survivors.emplace_back(Integer(a), Integer(b));
  }
  return g;
}

UVPair rationality_reduction(unsigned k) {
  const auto table = uv_table(k);
  const auto& e = table.at(k);
  return {e.u, e.v};
}

MultiPrimeResult multi_prime_experiment(unsigned k, const Integer& t, const std::vector<Prime>& primes, long target,
                                        const Integer& num_bound, const Integer& den_bound) {
  if (t < 1) throw std::invalid_argument("multi-prime experiment needs t >= 1");
  MultiPrimeResult res{k, t, target, num_bound, den_bound, {}, std::nullopt};
  const HyperSpec spec = HyperSpec::factorial_series(RationalFunction(RationalPolynomial::monomial(k)));
  bool all_attempted = !primes.empty();
  for (const Prime& p : primes) {
    PadicApprox value = evaluate_padic(spec, Rational(t), p, target);
    PrimeEvaluation ev{p, value, std::nullopt, false};
    auto abs_prec = value.absolute_precision();
    if (!abs_prec || 2 * num_bound * den_bound < p.pow(static_cast<unsigned long>(std::max(0L, *abs_prec)))) {
      ev.reconstruction_attempted = true;
      ev.reconstruction = rational_reconstruct(value, num_bound, den_bound);
    } else {
      all_attempted = false;
    }
    res.per_prime.push_back(std::move(ev));
  }
  if (all_attempted) {
    std::optional<Rational> common = res.per_prime.front().reconstruction;
    for (const auto& ev : res.per_prime)
      if (!ev.reconstruction || !common || *ev.reconstruction != *common) common.reset();
    res.common = common;
  }
  return res;
}

Theorem2Result theorem2_criterion(unsigned k, long x_max) {
  if (k < 1) throw std::invalid_argument("theorem2_criterion needs k >= 1");
  if (x_max < 2) throw std::invalid_argument("theorem2_criterion needs x_max >= 2");
  const SymbolicUV uv = generalized_uv(k);
  Theorem2Result res{k, uv.F, uv.F_is_polynomial && has_integer_coefficients(uv.F), std::nullopt};
  for (long x = 2; x <= x_max; ++x) {
    const Rational xr(x);
    if (-1 + xr * uv.F.evaluate(xr) == 0) {
      res.root = x;
      break;
    }
  }
  return res;
}

}  // namespace padicsum
