#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "powerindex/divisor.hpp"
#include "powerindex/fixedpoint.hpp"
#include "powerindex/indices.hpp"
#include "powerindex/verify.hpp"

namespace py = pybind11;
using namespace powerindex;

namespace {

Rational to_rational(const py::handle& value) {
  return Rational::parse(py::str(value).cast<std::string>());
}

std::vector<Rational> to_rationals(const py::iterable& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(to_rational(v));
  return out;
}

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.to_string());
}

py::list fractions(std::span<const Rational> values) {
  py::list out;
  for (const auto& v : values) out.append(fraction(v));
  return out;
}

py::int_ to_py_int(const BigInt& v) {
  return py::int_(py::module_::import("builtins").attr("int")(v.get_str()));
}

VotingSystem make_system(const py::iterable& weights, const py::handle& quota,
                         const std::string& mode) {
  return VotingSystem(to_rational(quota), parse_quota_mode(mode), to_rationals(weights));
}

EngineOptions options(std::size_t workers) {
  EngineOptions o;
  o.workers = std::max<std::size_t>(1, workers);
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact weighted-voting power indices";

  static py::exception<Error> base(m, "PowerIndexError", PyExc_ValueError);
  static py::exception<DegenerateSystem> degenerate(m, "DegenerateSystemError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DegenerateSystem& e) {
      py::set_error(degenerate, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def(
      "banzhaf",
      [](const py::iterable& weights, const py::handle& quota, const std::string& mode,
         const std::string& engine, std::size_t workers) {
        return fractions(
            banzhaf(make_system(weights, quota, mode), parse_engine(engine), options(workers)).values);
      },
      py::arg("weights"), py::arg("quota"), py::arg("mode") = "ge", py::arg("engine") = "auto",
      py::arg("workers") = 1);

  m.def(
      "shapley_shubik",
      [](const py::iterable& weights, const py::handle& quota, const std::string& mode,
         const std::string& engine, std::size_t workers) {
        return fractions(shapley_shubik(make_system(weights, quota, mode), parse_engine(engine),
                                        options(workers))
                             .values);
      },
      py::arg("weights"), py::arg("quota"), py::arg("mode") = "ge", py::arg("engine") = "auto",
      py::arg("workers") = 1);

  m.def(
      "count_winning",
      [](const py::iterable& weights, const py::handle& quota, const std::string& mode) {
        return to_py_int(count_winning(make_system(weights, quota, mode)));
      },
      py::arg("weights"), py::arg("quota"), py::arg("mode") = "ge");

  m.def(
      "divisor_system",
      [](std::uint64_t n) {
        const DivisorSystem ds = divisor_system(n);
        py::dict out;
        out["n"] = ds.n;
        out["divisors"] = ds.divisors;
        out["sigma"] = ds.sigma;
        out["k"] = ds.abundance_excess;
        out["quota"] = fraction(ds.system.quota());
        return out;
      },
      py::arg("n"));

  m.def(
      "check_index_disagreement",
      [](std::uint64_t n) {
        const DisagreementReport r = check_index_disagreement(n);
        py::dict out;
        out["n"] = r.n;
        out["k"] = r.k;
        out["banzhaf"] = fractions(r.banzhaf.values);
        out["ss"] = fractions(r.ss.values);
        out["witness_divisors"] = r.witness_divisors;
        out["formula_match"] = r.formula_match();
        return out;
      },
      py::arg("n"));

  m.def(
      "apply_index_map",
      [](const py::iterable& weights, const std::string& kind) {
        return fractions(apply_index_map(to_rationals(weights), parse_index_kind(kind)));
      },
      py::arg("weights"), py::arg("kind") = "ss");

  m.def(
      "iterate",
      [](const py::iterable& weights, const std::string& kind, std::size_t max_iters) {
        const IterationTrace t = iterate(to_rationals(weights), parse_index_kind(kind), max_iters);
        py::list states;
        for (const auto& s : t.states) states.append(fractions(s));
        py::dict outcome;
        outcome["type"] = to_string(t.outcome.type);
        outcome["entry"] = t.outcome.entry;
        outcome["length"] = t.outcome.length;
        py::dict out;
        out["kind"] = std::string(to_string(t.kind));
        out["states"] = states;
        out["outcome"] = outcome;
        return out;
      },
      py::arg("weights"), py::arg("kind") = "ss", py::arg("max_iters") = 100);

  m.def(
      "ab_ss_power_of_A",
      [](std::size_t count, const py::handle& b) { return fraction(ab_ss_power_of_A(count, to_rational(b))); },
      py::arg("m"), py::arg("b"));

  m.def(
      "aab_ss_power_of_A",
      [](std::size_t count, const py::handle& b) { return fraction(aab_ss_power_of_A(count, to_rational(b))); },
      py::arg("m"), py::arg("b"));

  m.def(
      "ab_fixed_solutions",
      [](std::size_t count) {
        py::list out;
        for (const auto& s : ab_fixed_solutions(count)) out.append(fraction(s.b));
        return out;
      },
      py::arg("m"));

  m.def(
      "aab_fixed_solutions",
      [](std::size_t count) {
        py::list out;
        for (const auto& s : aab_fixed_solutions(count)) out.append(fraction(s.b));
        return out;
      },
      py::arg("m"));

  m.def(
      "run_suite",
      [](const std::string& suite, std::uint64_t max_n) {
        VerifyOptions o;
        o.max_n = max_n;
        py::list out;
        for (const auto& r : run_suite(suite, o)) {
          py::dict item;
          item["id"] = r.id;
          item["name"] = r.name;
          item["passed"] = r.passed;
          item["finding"] = r.finding;
          item["details"] = r.details;
          out.append(item);
        }
        return out;
      },
      py::arg("suite"), py::arg("max_n") = 1000);
}
