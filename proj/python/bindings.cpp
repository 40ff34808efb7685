#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "padicsum/cli.hpp"
#include "padicsum/hyper_series.hpp"
#include "padicsum/rationality.hpp"
#include "padicsum/summation.hpp"

namespace py = pybind11;
using namespace padicsum;

// Integers and rationals cross the boundary as decimal strings; the Python
// wrapper turns them into int and Fraction.

namespace {

py::dict padic_dict(const PadicApprox& x) {
  py::dict d;
  d["p"] = x.prime().value();
  d["zero"] = x.is_exact_zero() ? "exact" : x.is_zero() ? "approximate" : "no";
  d["val"] = x.is_exact_zero() ? 0L : x.valuation();
  d["digits"] = x.is_zero() ? std::vector<unsigned long>{} : x.digits();
  d["precision"] = x.is_zero() ? 0UL : x.precision();
  d["text"] = x.to_string();
  return d;
}

HyperSpec make_spec(const std::vector<long>& alphas, const std::vector<long>& betas, const std::string& P,
                    const std::string& Q) {
  return HyperSpec(alphas, betas, RationalFunction(cli::parse_polynomial(P), cli::parse_polynomial(Q)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact p-adic evaluation of factorial and hypergeometric series";

  py::register_exception<RegionError>(m, "RegionError", PyExc_ValueError);

  m.def("vp", [](const std::string& n, std::uint64_t p) { return vp(Integer(n), Prime(p)); });
  m.def("norm_exponent", [](const std::string& q, std::uint64_t p) -> std::optional<std::string> {
    auto e = padic_norm(parse_rational(q), Prime(p));
    if (e.is_zero()) return std::nullopt;
    return to_string(e.exponent());
  });
  m.def("factorial_val", [](const std::string& m, std::uint64_t p) { return factorial_val(Integer(m), Prime(p)).get_str(); });

  m.def("embed", [](const std::string& q, std::uint64_t p, unsigned long N) {
    return padic_dict(PadicApprox::from_rational(parse_rational(q), Prime(p), N));
  });
  m.def("reconstruct",
        [](const std::string& q, std::uint64_t p, unsigned long N, const std::string& A,
           const std::string& B) -> std::optional<std::string> {
          auto r = rational_reconstruct(PadicApprox::from_rational(parse_rational(q), Prime(p), N), Integer(A), Integer(B));
          if (!r) return std::nullopt;
          return to_string(*r);
        });

  m.def(
      "evaluate",
      [](const std::vector<long>& alphas, const std::vector<long>& betas, const std::string& P, const std::string& Q,
         const std::string& x, std::uint64_t p, long N, const std::string& A, const std::string& B) {
        const HyperSpec spec = make_spec(alphas, betas, P, Q);
        const Prime prime(p);
        PadicApprox value = evaluate_padic(spec, parse_rational(x), prime, N);
        py::dict d = padic_dict(value);
        auto ap = value.absolute_precision();
        std::optional<std::string> rec;
        if (!ap || (*ap > 0 && 2 * Integer(A) * Integer(B) < prime.pow(static_cast<unsigned long>(*ap)))) {
          if (auto r = rational_reconstruct(value, Integer(A), Integer(B))) rec = to_string(*r);
        }
        d["reconstruction"] = rec;
        return d;
      },
      py::arg("alphas"), py::arg("betas"), py::arg("P"), py::arg("Q"), py::arg("x"), py::arg("p"), py::arg("N"),
      py::arg("num_bound"), py::arg("den_bound"));

  m.def("uv_table", [](unsigned K) {
    std::vector<std::tuple<unsigned, std::string, std::string>> rows;
    for (const auto& [k, e] : uv_table(K)) rows.emplace_back(k, e.u.get_str(), e.v.get_str());
    return rows;
  });
  m.def("generalized_uv", [](unsigned k) {
    auto uv = generalized_uv(k);
    return std::make_pair(uv.u.to_string("x"), uv.v.to_string("x"));
  });

  m.def("exclude_grid", [](long t, long amax, long bmax, unsigned long nmax) {
    auto g = exclude_grid(Integer(t), amax, bmax, nmax);
    py::dict d;
    d["candidates"] = g.candidates.get_str();
    std::map<unsigned long, std::string> hist;
    for (const auto& [n, c] : g.witness_histogram) hist[n] = c.get_str();
    d["witness_histogram"] = hist;
    std::vector<std::string> survivors;
    for (const auto& s : g.survivors) survivors.push_back(s.to_string());
    d["survivors"] = survivors;
    return d;
  });

  m.def("multi_prime", [](unsigned k, long t, const std::vector<std::uint64_t>& primes, long N, const std::string& A,
                          const std::string& B) {
    std::vector<Prime> ps(primes.begin(), primes.end());
    auto r = multi_prime_experiment(k, Integer(t), ps, N, Integer(A), Integer(B));
    std::vector<std::optional<std::string>> per;
    for (const auto& ev : r.per_prime) per.push_back(ev.reconstruction ? std::optional(to_string(*ev.reconstruction)) : std::nullopt);
    return std::make_pair(per, r.common ? std::optional(to_string(*r.common)) : std::nullopt);
  });

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "padicsum");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  });
}
