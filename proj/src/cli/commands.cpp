#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "padicsum/cli.hpp"
#include "padicsum/hyper_series.hpp"
#include "padicsum/rationality.hpp"
#include "padicsum/summation.hpp"

namespace padicsum::cli {

namespace {

using json = nlohmann::ordered_json;

/// Thrown for bad user input that got past CLI11 (malformed rationals,
/// polynomials, region violations); mapped to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json_mode = false;
  bool timing = true;
  bool color = false;
};

std::string paint(const Output& o, bool pass, const std::string& text) {
  if (!o.color) return text;
  return (pass ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

class Report {
 public:
  Report(std::string command, json inputs) : start_(std::chrono::steady_clock::now()) {
    doc_["command"] = std::move(command);
    doc_["inputs"] = std::move(inputs);
    doc_["results"] = json::array();
    doc_["verdict"] = "n/a";
    doc_["elapsed_ms"] = 0;
  }
  void add(json result) { doc_["results"].push_back(std::move(result)); }
  void verdict(const std::string& v) { doc_["verdict"] = v; }
  void emit(const Output& o) {
    if (o.timing)
      doc_["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
                               .count();
    o.out << doc_.dump(2) << "\n";
  }

 private:
  json doc_;
  std::chrono::steady_clock::time_point start_;
};

Prime parse_prime(std::uint64_t p) {
  try {
    return Prime(p);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Rational parse_rational_arg(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

RationalPolynomial parse_polynomial_arg(const std::string& text) {
  try {
    return parse_polynomial(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

// ---------------------------------------------------------------- norm

struct NormArgs {
  std::string q;
  std::uint64_t p = 0;
};

int cmd_norm(const NormArgs& a, const Output& o) {
  const Rational q = parse_rational_arg(a.q);
  const Prime p = parse_prime(a.p);
  const NormExponent norm = padic_norm(q, p);
  const std::string ps = std::to_string(p.value());
  if (o.json_mode) {
    Report r("norm", json{{"q", to_string(q)}, {"p", p.value()}});
    json res{{"q", to_string(q)}, {"p", p.value()}, {"zero", norm.is_zero()}};
    res["exponent"] = norm.is_zero() ? json(nullptr) : json(to_string(norm.exponent()));
    res["norm"] = norm.to_string(p);
    r.add(res);
    r.emit(o);
  } else if (norm.is_zero()) {
    o.out << "|0|_" << ps << " = 0\n";
  } else {
    o.out << "|" << to_string(q) << "|_" << ps << " = " << norm.to_string(p) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string kind;
  std::string alphas, betas;
  std::string P = "1", Q = "1";
  std::string x = "1";
  std::uint64_t p = 0;
  long N = 40;
  std::string num_bound = "1000000", den_bound = "1000";
  std::string spec_file;
};

void load_spec_file(EvalArgs& a) {
  std::ifstream in(a.spec_file);
  if (!in) throw InputError("cannot open spec file: " + a.spec_file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("spec file is not valid JSON: ") + e.what());
  }
  auto list = [](const json& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i].get<long>());
    return s;
  };
  try {
    if (j.contains("kind")) a.kind = j["kind"].get<std::string>();
    if (j.contains("alphas")) a.alphas = list(j["alphas"]);
    if (j.contains("betas")) a.betas = list(j["betas"]);
    if (j.contains("P")) a.P = j["P"].get<std::string>();
    if (j.contains("Q")) a.Q = j["Q"].get<std::string>();
    if (j.contains("x")) a.x = j["x"].is_string() ? j["x"].get<std::string>() : std::to_string(j["x"].get<long>());
    if (j.contains("p")) a.p = j["p"].get<std::uint64_t>();
    if (j.contains("N")) a.N = j["N"].get<long>();
  } catch (const json::exception& e) {
    throw InputError(std::string("spec file has a malformed field: ") + e.what());
  }
}

int cmd_eval(EvalArgs a, const Output& o) {
  if (!a.spec_file.empty()) load_spec_file(a);
  if (a.p == 0) throw InputError("a prime is required (-p)");
  if (a.N < 1) throw InputError("precision -N must be >= 1");
  const Prime p = parse_prime(a.p);
  const Rational x = parse_rational_arg(a.x);
  const RationalPolynomial P = parse_polynomial_arg(a.P);
  const RationalPolynomial Q = parse_polynomial_arg(a.Q);
  if (Q.is_zero()) throw InputError("Q must be nonzero");
  std::vector<long> alphas, betas;
  try {
    if (a.kind == "factorial") {
      alphas = {1, 1};
    } else if (a.kind == "hyper") {
      alphas = parse_int_list(a.alphas);
      betas = parse_int_list(a.betas);
    } else {
      throw InputError("unknown series kind '" + a.kind + "' (expected factorial or hyper)");
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::optional<HyperSpec> spec;
  try {
    spec.emplace(alphas, betas, RationalFunction(P, Q));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  json inputs{{"kind", a.kind},
              {"alphas", alphas},
              {"betas", betas},
              {"P", P.to_string("n")},
              {"Q", Q.to_string("n")},
              {"x", to_string(x)},
              {"p", p.value()},
              {"N", a.N}};
  PadicApprox value = PadicApprox::exact_zero(p);
  unsigned long crossover = 0;
  try {
    value = evaluate_padic(*spec, x, p, a.N);
    if (!spec->R().is_zero() && x != 0) crossover = certified_crossover(*spec, x, p, a.N);
  } catch (const RegionError& e) {
    if (o.json_mode) {
      Report r("eval", inputs);
      r.add(json{{"error", e.what()}, {"region_exponent", to_string(convergence_exponent(*spec, p))}});
      r.verdict("fail");
      r.emit(o);
    }
    throw InputError(e.what());
  }

  const Integer A = parse_rational_arg(a.num_bound).get_num();
  const Integer B = parse_rational_arg(a.den_bound).get_num();
  std::optional<Rational> rec;
  bool attempted = false;
  auto abs_prec = value.absolute_precision();
  if (!abs_prec || (*abs_prec > 0 && 2 * A * B < p.pow(static_cast<unsigned long>(*abs_prec)))) {
    attempted = true;
    rec = rational_reconstruct(value, A, B);
  }

  if (o.json_mode) {
    Report r("eval", inputs);
    json res{{"spec", spec->to_string()},
             {"region_exponent", to_string(convergence_exponent(*spec, p))},
             {"crossover", crossover},
             {"value", padic_to_json(value)}};
    res["reconstruction"] = rec ? json(to_string(*rec)) : json(nullptr);
    res["reconstruction_attempted"] = attempted;
    res["num_bound"] = A.get_str();
    res["den_bound"] = B.get_str();
    r.add(res);
    r.emit(o);
  } else {
    o.out << "series:         " << spec->to_string() << "\n";
    o.out << "x:              " << to_string(x) << "  (|x|_" << p.value() << " = " << padic_norm(x, p).to_string(p)
          << " < " << p.value() << "^" << to_string(convergence_exponent(*spec, p)) << ")\n";
    o.out << "terms summed:   " << crossover << " (certified for " << a.N << " digits)\n";
    o.out << "value:          " << value.to_string() << "\n";
    o.out << "reconstruction: "
          << (rec ? to_string(*rec) : attempted ? "none within bounds" : "skipped (precision too low for bounds)")
          << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- tables

int cmd_tables(const std::string& which, unsigned kmax, const Output& o) {
  if (kmax < 1) throw InputError("--kmax must be >= 1");
  Report r("tables", json{{"which", which}, {"kmax", kmax}});
  if (which == "uv") {
    const UVTable t = uv_table(kmax);
    for (const auto& [k, e] : t) r.add(json{{"k", k}, {"u", integer_to_json(e.u)}, {"v", integer_to_json(e.v)}});
    if (o.json_mode) {
      r.emit(o);
    } else {
      std::vector<std::string> ks, us, vs;
      std::size_t width = 2;
      for (const auto& [k, e] : t) {
        ks.push_back(std::to_string(k));
        us.push_back(e.u.get_str());
        vs.push_back(e.v.get_str());
        width = std::max({width, us.back().size(), vs.back().size(), ks.back().size()});
      }
      auto row = [&](const std::string& head, const std::vector<std::string>& cells) {
        o.out << std::left << std::setw(4) << head;
        for (const auto& c : cells) o.out << " " << std::right << std::setw(static_cast<int>(width)) << c;
        o.out << "\n";
      };
      row("k", ks);
      row("u_k", us);
      row("v_k", vs);
    }
  } else if (which == "uvx") {
    for (unsigned k = 1; k <= kmax; ++k) {
      const SymbolicUV uv = generalized_uv(k);
      r.add(json{{"k", k}, {"u", uv.u.to_string("x")}, {"v", uv.v.to_string("x")}, {"F", uv.F.to_string("x")}});
      if (!o.json_mode)
        o.out << "k=" << k << "  u_k(x) = " << uv.u.to_string("x") << "   v_k(x) = " << uv.v.to_string("x") << "\n";
    }
    if (o.json_mode) r.emit(o);
  } else {
    throw InputError("unknown table '" + which + "' (expected uv or uvx)");
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 42;
  unsigned count = 100;
  unsigned zero_count = 20;
  unsigned qmax = 97;
  long order = 100;
  unsigned kmax = 8;
  unsigned long nmax = 100;
};

struct Check {
  std::string suite;
  std::string name;
  bool pass;
  std::string detail;
};

void suite_telescope(const VerifyArgs& a, std::vector<Check>& checks) {
  std::mt19937_64 rng(a.seed);
  const std::vector<Prime> primes{Prime(2), Prime(3), Prime(5), Prime(7)};
  for (unsigned i = 0; i < a.count; ++i) {
    const TelescopeSpec ts = random_telescope_spec(rng);
    bool ok = verify_telescope_exact(ts, 30);
    std::string detail = ok ? "" : "exact identity failed at N=30";
    for (const Prime& p : primes) {
      if (!ok) break;
      if (!verify_telescope_padic(ts, p, 40)) {
        ok = false;
        detail = "p-adic sum differs from -A(0)/B(0) at p=" + std::to_string(p.value());
      }
    }
    checks.push_back({"telescope", "random spec #" + std::to_string(i), ok,
                      ok ? "sum = " + to_string(ts.expected_sum()) : detail});
  }
  for (unsigned i = 0; i < a.zero_count; ++i) {
    const TelescopeSpec ts = random_zero_sum_spec(rng);
    bool ok = true;
    for (const Prime& p : primes) ok = ok && verify_telescope_padic(ts, p, 40);
    checks.push_back({"telescope", "zero-sum spec #" + std::to_string(i), ok, ok ? "sum = 0" : "nonzero sum"});
  }
}

void suite_recurrence(const VerifyArgs& a, std::vector<Check>& checks) {
  bool ok = true;
  std::string detail;
  for (unsigned long n = 0; n <= a.nmax && ok; ++n) {
    const auto rec = partial_sums_recurrence(n, a.kmax);
    for (unsigned k = 0; k <= a.kmax; ++k)
      if (rec[k] != partial_sum_direct(n, k)) {
        ok = false;
        detail = "mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k);
        break;
      }
  }
  checks.push_back({"recurrence", "S^(k)_n recurrence = direct sum", ok, detail});

  const UVTable table = uv_table(std::max(a.kmax, 11u));
  for (unsigned k = 1; k <= a.kmax; ++k) {
    const ClosedForm cf = closed_form(k);
    bool cf_ok = has_integer_coefficients(cf.A);
    for (unsigned long n = 0; n <= 200 && cf_ok; ++n) cf_ok = closed_form_defect(cf, k, n) == 0;
    const auto sol = solve_telescoping(k, Rational(1));
    const bool consistent = Rational(cf.u) == sol.u && Rational(cf.v) == sol.v && cf.A == sol.A &&
                            table.at(k).u == cf.u && table.at(k).v == cf.v;
    checks.push_back({"recurrence", "closed form k=" + std::to_string(k), cf_ok && consistent,
                      "u=" + cf.u.get_str() + " v=" + cf.v.get_str() + " A=" + cf.A.to_string("n")});
  }
}

void suite_ode(const VerifyArgs& a, std::vector<Check>& checks) {
  const auto rF = ode_check_F(a.order);
  checks.push_back({"ode", "x^2 F'' + (3x-1) F' + F = 0", rF.is_zero() && *rF.truncation() >= a.order - 1,
                    "known through x^" + std::to_string(*rF.truncation() - 1)});
  const long nu_order = std::max(10L, a.order / 2);
  for (unsigned nu = 1; nu <= 3; ++nu) {
    const auto r = ode_check_Fnu(nu, nu_order);
    checks.push_back({"ode", "(D^" + std::to_string(nu) + " - x^-" + std::to_string(2 * nu) + ") F_" +
                                 std::to_string(nu) + " = f_" + std::to_string(nu),
                      r.is_zero(), "known through x^" + std::to_string(*r.truncation() - 1)});
  }
  const long gauss_order = std::max(10L, a.order * 3 / 5);
  for (auto [al, be, ga] : std::vector<std::tuple<long, long, long>>{{1, 1, 1}, {2, 1, 3}, {1, 2, 2}, {3, 2, 1}, {2, 2, 5}}) {
    const auto r = gauss_ode_check(al, be, ga, gauss_order);
    checks.push_back({"ode",
                      "Gauss ODE (" + std::to_string(al) + "," + std::to_string(be) + ";" + std::to_string(ga) + ")",
                      r.is_zero(), "known through x^" + std::to_string(*r.truncation() - 1)});
  }
}

std::vector<std::uint64_t> primes_up_to(unsigned qmax) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= qmax; ++q)
    if (is_prime_u64(q)) out.push_back(q);
  return out;
}

void suite_prop4(const VerifyArgs& a, std::vector<Check>& checks) {
  for (std::uint64_t q : primes_up_to(a.qmax)) {
    const bool ok = prop4_check(q);
    checks.push_back({"prop4", "u_{q+1} = v_{q+1} = 1 mod " + std::to_string(q), ok, ""});
  }
}

int cmd_verify(const VerifyArgs& a, const Output& o) {
  std::vector<Check> checks;
  const std::vector<std::string> all{"telescope", "recurrence", "ode", "prop4"};
  std::vector<std::string> suites;
  if (a.suite == "all")
    suites = all;
  else if (std::find(all.begin(), all.end(), a.suite) != all.end())
    suites = {a.suite};
  else
    throw InputError("unknown suite '" + a.suite + "'");
  for (const auto& s : suites) {
    if (s == "telescope") suite_telescope(a, checks);
    if (s == "recurrence") suite_recurrence(a, checks);
    if (s == "ode") suite_ode(a, checks);
    if (s == "prop4") suite_prop4(a, checks);
  }
  const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  if (o.json_mode) {
    Report r("verify", json{{"suite", a.suite},
                            {"seed", a.seed},
                            {"count", a.count},
                            {"qmax", a.qmax},
                            {"order", a.order},
                            {"kmax", a.kmax},
                            {"nmax", a.nmax}});
    for (const auto& c : checks)
      r.add(json{{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    r.verdict(all_pass ? "pass" : "fail");
    r.emit(o);
  } else {
    for (const auto& c : checks)
      o.out << paint(o, c.pass, c.pass ? "PASS" : "FAIL") << "  [" << c.suite << "] " << c.name
            << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
    o.out << checks.size() << " checks, " << failed << " failed\n";
  }
  return all_pass ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- exclude

struct ExcludeArgs {
  long t = 1;
  long amax = 1000;
  long bmax = 10;
  unsigned long nmax = 30;
};

std::string outcome_name(ExclusionOutcome o) {
  switch (o) {
    case ExclusionOutcome::kCongruenceFails:
      return "congruence";
    case ExclusionOutcome::kForcedValuesDiffer:
      return "forced-values";
    case ExclusionOutcome::kNotExcluded:
      return "not-excluded";
  }
  return "?";
}

std::string sign_case_name(SignCase s) {
  switch (s) {
    case SignCase::kPositive:
      return "i";
    case SignCase::kNegative:
      return "ii";
    case SignCase::kZero:
      return "iii";
  }
  return "?";
}

json exclusion_to_json(const ExclusionReport& rep) {
  json j{{"candidate", rep.candidate.to_string()},
         {"case", sign_case_name(rep.sign_case)},
         {"excluded", rep.excluded()},
         {"outcome", outcome_name(rep.outcome)}};
  j["witness"] = rep.witness ? json(*rep.witness) : json(nullptr);
  if (rep.second_witness) j["second_witness"] = *rep.second_witness;
  if (rep.witness && rep.outcome == ExclusionOutcome::kCongruenceFails) {
    j["b_S_n_mod"] = mod_floor(rep.candidate.b() * S_n_t(*rep.witness, rep.t),
                               factorial(*rep.witness) * [&] {
                                 Integer pw;
                                 mpz_pow_ui(pw.get_mpz_t(), rep.t.get_mpz_t(), *rep.witness);
                                 return pw;
                               }())
                         .get_str();
  }
  return j;
}

int cmd_exclude(const ExcludeArgs& a, const Output& o) {
  if (a.t < 1) throw InputError("-t must be >= 1");
  if (a.amax < 0 || a.bmax < 1) throw InputError("--amax must be >= 0 and --bmax >= 1");
  if (a.nmax < 3) throw InputError("--nmax must be >= 3");
  const GridExclusion g = exclude_grid(Integer(a.t), a.amax, a.bmax, a.nmax);
  Report r("exclude", json{{"t", a.t}, {"amax", a.amax}, {"bmax", a.bmax}, {"nmax", a.nmax}});
  json hist = json::object();
  for (const auto& [n, c] : g.witness_histogram) hist[std::to_string(n)] = integer_to_json(c);
  json summary{{"candidates", integer_to_json(g.candidates)},
               {"excluded", integer_to_json(g.candidates - Integer(static_cast<unsigned long>(g.survivors.size())))},
               {"witness_histogram", hist}};
  json survivors = json::array();
  for (const auto& s : g.survivors) survivors.push_back(s.to_string());
  summary["survivors"] = survivors;
  r.add(summary);

  // Per-candidate reports for small grids.
  std::vector<ExclusionReport> reports;
  if (g.candidates <= 200) {
    for (long b = 1; b <= a.bmax; ++b)
      for (long av = -a.amax; av <= a.amax; ++av) {
        if (std::gcd(av, b) != 1) continue;
        reports.push_back(exclude_candidate(Integer(a.t), CandidateRational(Integer(av), Integer(b)), a.nmax));
        r.add(exclusion_to_json(reports.back()));
      }
  }
  r.verdict(g.all_excluded() ? "pass" : "fail");
  if (o.json_mode) {
    r.emit(o);
  } else {
    o.out << "t = " << a.t << ", |a| <= " << a.amax << ", 1 <= b <= " << a.bmax << ", n <= " << a.nmax << "\n";
    o.out << "candidates: " << g.candidates.get_str() << ", excluded: "
          << Integer(g.candidates - static_cast<unsigned long>(g.survivors.size())).get_str() << "\n";
    o.out << "witness n histogram:";
    for (const auto& [n, c] : g.witness_histogram) o.out << " " << n << ":" << c.get_str();
    o.out << "\n";
    for (const auto& rep : reports)
      o.out << "  " << rep.candidate.to_string() << "  case (" << sign_case_name(rep.sign_case) << ")  "
            << outcome_name(rep.outcome) << (rep.witness ? " at n=" + std::to_string(*rep.witness) : "") << "\n";
    for (const auto& s : g.survivors) o.out << "  NOT excluded: " << s.to_string() << "\n";
    o.out << paint(o, g.all_excluded(), g.all_excluded() ? "all candidates excluded" : "some candidates survive")
          << "\n";
  }
  return g.all_excluded() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- multiprime

struct MultiPrimeArgs {
  unsigned k = 1;
  long t = 1;
  std::string primes = "2,3,5,7,11";
  long N = 40;
  std::string num_bound = "1000000", den_bound = "1000";
};

int cmd_multiprime(const MultiPrimeArgs& a, const Output& o) {
  if (a.t < 1) throw InputError("-t must be >= 1");
  if (a.N < 1) throw InputError("-N must be >= 1");
  std::vector<Prime> primes;
  try {
    for (long q : parse_int_list(a.primes)) {
      if (q < 2) throw InputError("not a prime: " + std::to_string(q));
      primes.push_back(parse_prime(static_cast<std::uint64_t>(q)));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (primes.empty()) throw InputError("at least one prime is required");
  const Integer A = parse_rational_arg(a.num_bound).get_num();
  const Integer B = parse_rational_arg(a.den_bound).get_num();
  if (A < 0 || B < 1) throw InputError("bounds must be positive");
  const MultiPrimeResult res = multi_prime_experiment(a.k, Integer(a.t), primes, a.N, A, B);

  Report r("multiprime", json{{"k", a.k},
                              {"t", a.t},
                              {"primes", parse_int_list(a.primes)},
                              {"N", a.N},
                              {"num_bound", A.get_str()},
                              {"den_bound", B.get_str()}});
  for (const auto& ev : res.per_prime) {
    json j{{"p", ev.p.value()}, {"value", padic_to_json(ev.value)}, {"reconstruction_attempted", ev.reconstruction_attempted}};
    j["reconstruction"] = ev.reconstruction ? json(to_string(*ev.reconstruction)) : json(nullptr);
    r.add(j);
  }
  json summary{{"agreement", res.agreement()}, {"note", "finite-precision evidence, not a proof"}};
  summary["common"] = res.common ? json(to_string(*res.common)) : json(nullptr);
  r.add(summary);
  if (o.json_mode) {
    r.emit(o);
  } else {
    o.out << "sum n! n^" << a.k << " " << a.t << "^n, " << a.N << " p-adic digits, bounds |a| <= " << A.get_str()
          << ", b <= " << B.get_str() << "\n";
    for (const auto& ev : res.per_prime)
      o.out << "  p=" << std::setw(3) << ev.p.value() << "  reconstruction: "
            << (ev.reconstruction ? to_string(*ev.reconstruction)
                                  : ev.reconstruction_attempted ? "none" : "skipped")
            << "\n";
    if (res.common)
      o.out << "agreement: every prime is consistent with " << to_string(*res.common) << "\n";
    else
      o.out << "disagreement: no single bounded rational is consistent with all primes\n";
    o.out << "(finite-precision evidence, not a proof)\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact p-adic evaluation and summation checks for factorial and hypergeometric series", "padicsum"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false, no_timing = false;
  app.add_flag("--json", json_mode, "Emit a JSON report");
  app.add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 (byte-identical output)");

  NormArgs norm_args;
  auto* norm = app.add_subcommand("norm", "p-adic norm of a rational");
  norm->add_option("q", norm_args.q, "Rational a or a/b")->required();
  norm->add_option("-p,--prime", norm_args.p, "Prime")->required();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a series in Q_p");
  eval->add_option("kind", eval_args.kind, "factorial | hyper");
  eval->add_option("-a,--alphas", eval_args.alphas, "Comma-separated alpha parameters");
  eval->add_option("-b,--betas", eval_args.betas, "Comma-separated beta parameters");
  eval->add_option("--R,--P", eval_args.P, "Numerator polynomial in n");
  eval->add_option("--Q", eval_args.Q, "Denominator polynomial in n");
  eval->add_option("-x", eval_args.x, "Argument (rational)");
  eval->add_option("-p,--prime", eval_args.p, "Prime");
  eval->add_option("-N,--precision", eval_args.N, "p-adic digits")->capture_default_str();
  eval->add_option("--num-bound", eval_args.num_bound, "Numerator bound for reconstruction")->capture_default_str();
  eval->add_option("--den-bound", eval_args.den_bound, "Denominator bound for reconstruction")->capture_default_str();
  eval->add_option("--spec-file", eval_args.spec_file, "JSON file with kind, alphas, betas, P, Q, x, p, N");

  std::string table_which;
  unsigned table_kmax = 11;
  auto* tables = app.add_subcommand("tables", "Print the u_k, v_k tables");
  tables->add_option("which", table_which, "uv | uvx")->required();
  tables->add_option("--kmax", table_kmax, "Largest k")->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", verify_args.suite, "telescope | recurrence | ode | prop4 | all")->required();
  verify->add_option("--seed", verify_args.seed, "Random seed")->capture_default_str();
  verify->add_option("--count", verify_args.count, "Random telescoping specs")->capture_default_str();
  verify->add_option("--zero-count", verify_args.zero_count, "Random zero-sum specs")->capture_default_str();
  verify->add_option("--qmax", verify_args.qmax, "Largest prime q for the mod-q check")->capture_default_str();
  verify->add_option("--order", verify_args.order, "Truncation order for ODE checks")->capture_default_str();
  verify->add_option("--kmax", verify_args.kmax, "Largest k for recurrence checks")->capture_default_str();
  verify->add_option("--nmax", verify_args.nmax, "Largest n for recurrence checks")->capture_default_str();

  ExcludeArgs exclude_args;
  auto* exclude = app.add_subcommand("exclude", "Exclude candidate rational sums of sum n! t^n");
  exclude->add_option("-t", exclude_args.t, "Positive integer t")->capture_default_str();
  exclude->add_option("--amax", exclude_args.amax, "Bound on |a|")->capture_default_str();
  exclude->add_option("--bmax", exclude_args.bmax, "Bound on b")->capture_default_str();
  exclude->add_option("--nmax", exclude_args.nmax, "Largest witness n")->capture_default_str();

  MultiPrimeArgs mp_args;
  auto* multiprime = app.add_subcommand("multiprime", "Look for one rational matching sum n! n^k t^n in several Z_p");
  multiprime->add_option("-k", mp_args.k, "Exponent k")->capture_default_str();
  multiprime->add_option("-t", mp_args.t, "Positive integer t")->capture_default_str();
  multiprime->add_option("-p,--primes", mp_args.primes, "Comma-separated primes")->capture_default_str();
  multiprime->add_option("-N,--precision", mp_args.N, "p-adic digits")->capture_default_str();
  multiprime->add_option("--num-bound", mp_args.num_bound, "Numerator bound")->capture_default_str();
  multiprime->add_option("--den-bound", mp_args.den_bound, "Denominator bound")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const char* no_color = std::getenv("NO_COLOR");
  const bool tty = &out == &std::cout && ::isatty(STDOUT_FILENO);
  Output o{out, err, json_mode, !no_timing, tty && !(no_color && *no_color)};

  try {
    if (norm->parsed()) return cmd_norm(norm_args, o);
    if (eval->parsed()) return cmd_eval(eval_args, o);
    if (tables->parsed()) return cmd_tables(table_which, table_kmax, o);
    if (verify->parsed()) return cmd_verify(verify_args, o);
    if (exclude->parsed()) return cmd_exclude(exclude_args, o);
    if (multiprime->parsed()) return cmd_multiprime(mp_args, o);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace padicsum::cli
