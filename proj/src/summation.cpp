#include "padicsum/summation.hpp"

#include <algorithm>

namespace padicsum {

namespace {

RationalPolynomial linear(long c) { return RationalPolynomial{Rational(c), Rational(1)}; }  // n + c

Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rat_pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

}  // namespace

TelescopeSpec::TelescopeSpec(std::vector<long> alphas, std::vector<long> betas, RationalPolynomial A,
                             RationalPolynomial B, Rational t)
    : alphas_(std::move(alphas)), betas_(std::move(betas)), A_(std::move(A)), B_(std::move(B)), t_(std::move(t)) {
  for (long a : alphas_)
    if (a < 1) throw std::invalid_argument("alpha parameters must be positive integers");
  for (long b : betas_)
    if (b < 1) throw std::invalid_argument("beta parameters must be positive integers");
  if (B_.is_zero() || !qcheck_no_nonneg_integer_roots(B_))
    throw std::invalid_argument("B must not vanish at any non-negative integer: " + B_.to_string("n"));
}

Rational TelescopeSpec::expected_sum() const { return -A_.evaluate(Rational(0)) / B_.evaluate(Rational(0)); }

Rational TelescopeSpec::d(unsigned long n) const {
  Rational c = 1;
  for (long a : alphas_) c *= pochhammer(Rational(a), n);
  for (long b : betas_) c /= pochhammer(Rational(b), n);
  c /= Rational(factorial(n));
  const Rational nn(static_cast<long>(n));
  return c * A_.evaluate(nn) / B_.evaluate(nn) * rat_pow(t_, n);
}

RationalFunction build_R(const TelescopeSpec& ts) {
  RationalPolynomial up = RationalPolynomial::constant(ts.t());
  for (long a : ts.alphas()) up *= linear(a);
  up *= ts.A().shift();
  RationalPolynomial down = linear(1) * ts.B().shift();
  for (long b : ts.betas()) down *= linear(b);
  return RationalFunction(up, down) - RationalFunction(ts.A(), ts.B());
}

HyperSpec induced_spec(const TelescopeSpec& ts) { return HyperSpec(ts.alphas(), ts.betas(), build_R(ts)); }

bool verify_telescope_exact(const TelescopeSpec& ts, unsigned long N) {
  const HyperSpec spec = induced_spec(ts);
  Rational lhs = 0;
  for (unsigned long n = 0; n < N; ++n) lhs += term(spec, n, ts.t());
  return lhs == ts.d(N) - ts.d(0);
}

TelescopePadicResult verify_telescope_padic_detail(const TelescopeSpec& ts, const Prime& p, long target) {
  PadicApprox value = evaluate_padic(induced_spec(ts), ts.t(), p, target);
  Rational expected = ts.expected_sum();
  const bool ok = value.congruent_to(expected, target);
  return {std::move(value), std::move(expected), ok};
}

bool verify_telescope_padic(const TelescopeSpec& ts, const Prime& p, long target) {
  return verify_telescope_padic_detail(ts, p, target).matches;
}

TelescopeSpec zero_sum_spec(std::vector<long> alphas, std::vector<long> betas, RationalPolynomial B, Rational t) {
  RationalPolynomial A = RationalPolynomial::identity() * B;
  for (long b : betas) A *= linear(b - 1);
  return TelescopeSpec(std::move(alphas), std::move(betas), std::move(A), std::move(B), std::move(t));
}

RationalPolynomial zero_sum_polynomial(const std::vector<long>& alphas, const std::vector<long>& betas,
                                       const Rational& t) {
  RationalPolynomial up = RationalPolynomial::constant(t);
  for (long a : alphas) up *= linear(a);
  RationalPolynomial down = RationalPolynomial::identity();
  for (long b : betas) down *= linear(b - 1);
  return up - down;
}

namespace {

struct RandomShape {
  std::vector<long> alphas, betas;
  RationalPolynomial B;
  Rational t;
};

RandomShape random_shape(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 3), param(1, 5), coeff(-9, 9), degree(0, 3), shift(1, 5);
  RandomShape s;
  const int r = count(rng), ss = count(rng);
  for (int i = 0; i < r; ++i) s.alphas.push_back(param(rng));
  for (int j = 0; j < ss; ++j) s.betas.push_back(param(rng));
  s.B = RationalPolynomial::constant(1);
  const int bdeg = degree(rng);
  for (int i = 0; i < bdeg; ++i) s.B *= linear(shift(rng));
  int c = 0;
  while (c == 0) c = coeff(rng);
  s.B = s.B.scale(Rational(c));
  // Smallest m with m > -(r - s - 1)/(p - 1) for p in {2, 3, 5, 7}; t = 210^m * c'.
  long m = 0;
  for (long p : {2L, 3L, 5L, 7L}) {
    const long num = -(r - ss - 1);
    // floor(num / (p - 1)) + 1
    long fl = num >= 0 ? num / (p - 1) : -((-num + p - 2) / (p - 1));
    m = std::max(m, fl + 1);
  }
  int tc = 0;
  while (tc == 0) tc = coeff(rng);
  s.t = Rational(int_pow(Integer(210), static_cast<unsigned long>(m)) * tc);
  return s;
}

RationalPolynomial random_polynomial(std::mt19937_64& rng, bool zero_constant) {
  std::uniform_int_distribution<int> coeff(-9, 9), degree(0, 3);
  const int deg = std::max(degree(rng), zero_constant ? 1 : 0);
  std::vector<Rational> c(deg + 1);
  for (int i = 0; i <= deg; ++i) c[i] = coeff(rng);
  while (c[deg] == 0) c[deg] = coeff(rng);
  if (zero_constant) c[0] = 0;
  return RationalPolynomial(std::move(c));
}

}  // namespace

TelescopeSpec random_telescope_spec(std::mt19937_64& rng) {
  RandomShape s = random_shape(rng);
  RationalPolynomial A = random_polynomial(rng, false);
  return TelescopeSpec(std::move(s.alphas), std::move(s.betas), std::move(A), std::move(s.B), std::move(s.t));
}

TelescopeSpec random_zero_sum_spec(std::mt19937_64& rng) {
  RandomShape s = random_shape(rng);
  RationalPolynomial A = random_polynomial(rng, true);
  return TelescopeSpec(std::move(s.alphas), std::move(s.betas), std::move(A), std::move(s.B), std::move(s.t));
}

Integer partial_sum_direct(unsigned long n, unsigned k) {
  Integer sum = 0, f = 1;
  for (unsigned long i = 0; i < n; ++i) {
    if (i > 0) f *= i;
    sum += f * int_pow(Integer(i), k);
  }
  return sum;
}

std::vector<Integer> partial_sums_recurrence(unsigned long n, unsigned kmax) {
  std::vector<Integer> S;
  S.reserve(kmax + 1);
  Integer s0 = 0, f = 1;
  for (unsigned long i = 0; i < n; ++i) {
    if (i > 0) f *= i;
    s0 += f;
  }
  S.push_back(s0);
  const Integer nf = factorial(n);
  for (unsigned k = 0; k < kmax; ++k) {
    Integer next = k == 0 ? Integer(-1) : Integer(0);
    next -= Integer(k) * S[k];
    for (unsigned l = 0; l < k; ++l) next -= binomial(k + 1, l) * S[l];
    next += nf * int_pow(Integer(n), k);
    S.push_back(std::move(next));
  }
  return S;
}

Integer partial_sum_recurrence(unsigned long n, unsigned k) { return partial_sums_recurrence(n, k)[k]; }

UVTable uv_table(unsigned K) {
  if (K < 1) throw std::invalid_argument("uv_table needs K >= 1");
  // Index 0 is a placeholder; the recurrences never read u_0 or v_0 with a
  // nonzero weight.
  std::vector<Integer> u(K + 1, 0), v(K + 1, 0);
  u[1] = 0;
  v[1] = -1;
  for (unsigned k = 1; k < K; ++k) {
    Integer un = -Integer(k) * u[k] + 1;
    Integer vn = -Integer(k) * v[k];
    for (unsigned l = 1; l + 1 <= k; ++l) {
      const Integer c = binomial(k + 1, l);
      un -= c * u[l];
      vn -= c * v[l];
    }
    u[k + 1] = std::move(un);
    v[k + 1] = std::move(vn);
  }
  UVTable table;
  for (unsigned k = 1; k <= K; ++k) table.emplace(k, UVEntry{u[k], v[k]});
  return table;
}

ClosedForm closed_form(unsigned k) {
  if (k < 1) throw std::invalid_argument("closed_form needs k >= 1");
  // S^(j) = c_j + d_j S^(0) + n! Q_j(n); the recurrence is linear in S, so it
  // acts on (c, d, Q) componentwise.
  std::vector<Integer> c{0}, d{1};
  std::vector<RationalPolynomial> Q{RationalPolynomial{}};
  for (unsigned j = 0; j < k; ++j) {
    Integer cn = j == 0 ? Integer(-1) : Integer(0);
    Integer dn = 0;
    RationalPolynomial qn = RationalPolynomial::monomial(j);
    cn -= Integer(j) * c[j];
    dn -= Integer(j) * d[j];
    qn -= Q[j].scale(Rational(static_cast<long>(j)));
    for (unsigned l = 0; l < j; ++l) {
      const Integer bc = binomial(j + 1, l);
      cn -= bc * c[l];
      dn -= bc * d[l];
      qn -= Q[l].scale(Rational(bc));
    }
    c.push_back(std::move(cn));
    d.push_back(std::move(dn));
    Q.push_back(std::move(qn));
  }
  // sum i!(i^k + u) = c_k + (d_k + u) S^(0) + n! Q_k: rational iff u = -d_k.
  return ClosedForm{-d[k], c[k], Q[k]};
}

Integer closed_form_defect(const ClosedForm& cf, unsigned k, unsigned long n) {
  Integer lhs = 0, f = 1;
  for (unsigned long i = 0; i < n; ++i) {
    if (i > 0) f *= i;
    lhs += f * (int_pow(Integer(i), k) + cf.u);
  }
  const Rational rhs = Rational(cf.v) + Rational(factorial(n)) * cf.A.evaluate(Rational(static_cast<long>(n)));
  const Rational diff = Rational(lhs) - rhs;
  if (diff.get_den() != 1) throw std::logic_error("closed form produced a non-integer partial sum");
  return diff.get_num();
}

ConstantTermMismatch::ConstantTermMismatch(const Rational& required, const Rational& given)
    : std::invalid_argument("C_0 = " + to_string(given) + " does not give a rational sum; required C_0 = " +
                            to_string(required)),
      required_(required) {}

GeneralPkSum general_Pk_sum(const std::vector<Rational>& C, unsigned long n) {
  if (C.size() < 2 || C.back() == 0) throw std::invalid_argument("need C_k != 0 with k >= 1");
  const unsigned k = static_cast<unsigned>(C.size() - 1);
  Rational required = 0, V = 0;
  RationalPolynomial B;
  for (unsigned r = 1; r <= k; ++r) {
    if (C[r] == 0) continue;
    const ClosedForm cf = closed_form(r);
    required += C[r] * Rational(cf.u);
    V += C[r] * Rational(cf.v);
    B += cf.A.scale(C[r]);
  }
  if (C[0] != required) throw ConstantTermMismatch(required, C[0]);
  const RationalPolynomial P(C);
  Rational lhs = 0;
  Integer f = 1;
  for (unsigned long i = 0; i < n; ++i) {
    if (i > 0) f *= i;
    lhs += Rational(f) * P.evaluate(Rational(static_cast<long>(i)));
  }
  const bool holds = lhs == V + Rational(factorial(n)) * B.evaluate(Rational(static_cast<long>(n)));
  return {V, B, holds};
}

SymbolicUV generalized_uv(unsigned k) {
  auto sol = solve_telescoping_symbolic(k);
  const RationalFunction x = RationalFunction::variable();
  RationalFunction xk(RationalPolynomial::monomial(k));
  const RationalFunction G = (xk * sol.u + RationalFunction(1)) / x;
  SymbolicUV out{sol.u, sol.v, G.numerator(), G.is_polynomial()};
  return out;
}

bool prop4_check(std::uint64_t q) {
  const Prime prime(q);
  const auto table = uv_table(static_cast<unsigned>(q + 1));
  const Integer qq = prime.as_integer();
  const auto& e = table.at(static_cast<unsigned>(q + 1));
  return mod_floor(e.u, qq) == mod_floor(Integer(1), qq) && mod_floor(e.v, qq) == mod_floor(Integer(1), qq);
}

}  // namespace padicsum
