#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gspin/suite.hpp"

namespace py = pybind11;
using namespace gspin;

namespace {

SuiteConfig make_config(const std::string& group, double win_lo, double win_hi,
                        const std::vector<std::string>& suites, double tol,
                        int samples, std::uint64_t seed, std::int64_t max_cases,
                        bool stable_timing) {
  SuiteConfig cfg;
  cfg.group = GroupSpec::parse(group);
  auto dbl = [](double v) {
    long r = std::lround(v * 2.0);
    if (std::abs(v * 2.0 - static_cast<double>(r)) > 1e-9)
      throw ConfigError("window bounds must be half-integers");
    return static_cast<int>(r);
  };
  cfg.win_lo2 = dbl(win_lo);
  cfg.win_hi2 = dbl(win_hi);
  if (!suites.empty()) cfg.suites = suites;
  cfg.tol = tol;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.max_cases = max_cases;
  cfg.stable_timing = stable_timing;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_gspin, m) {
  m.doc() = "Exact algebraic universe of G-spin models: quantum doubles, "
            "field algebras, crossed products and basic constructions";

  py::register_exception<GroupError>(m, "GroupError");
  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<ExprError>(m, "ExprError");

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_readonly("n", &FiniteGroup::n)
      .def_readonly("names", &FiniteGroup::names)
      .def_readonly("unit", &FiniteGroup::unit)
      .def("mul", &FiniteGroup::mul)
      .def("inverse", &FiniteGroup::inverse)
      .def("order_of", &FiniteGroup::order_of)
      .def("__len__", [](const FiniteGroup& g) { return g.n; })
      .def("__repr__", [](const FiniteGroup& g) {
        return "<FiniteGroup order " + std::to_string(g.n) + ">";
      });

  m.def("build_group",
        [](const std::string& spec) { return build_group(GroupSpec::parse(spec)); },
        py::arg("spec"),
        "Build a finite group from cyclic:N | dihedral:N | symmetric:N | file:PATH");

  m.def("validate_group",
        [](const FiniteGroup& g) {
          std::vector<std::pair<std::string, bool>> out;
          for (const auto& c : validate_group(g).items) out.push_back({c.id, c.pass});
          return out;
        },
        py::arg("group"), "Per-axiom pass/fail report");

  m.def("verify_quantum_double",
        [](const std::string& spec) {
          FiniteGroup g = build_group(GroupSpec::parse(spec));
          SweepOptions opt;
          return verify_hopf_axioms(quantum_double(g), opt).all_pass();
        },
        py::arg("group"), "Exact Hopf *-algebra axiom sweep for D(G)");

  m.def("run_suite",
        [](const std::string& group, double win_lo, double win_hi,
           const std::vector<std::string>& suites, double tol, int samples,
           std::uint64_t seed, std::int64_t max_cases, bool stable_timing) {
          Report r = run_suite(make_config(group, win_lo, win_hi, suites, tol,
                                           samples, seed, max_cases, stable_timing));
          return py::make_tuple(suite_exit_code(r), report_to_json(r));
        },
        py::arg("group") = "cyclic:2", py::arg("win_lo") = 0.5,
        py::arg("win_hi") = 2.0, py::arg("suites") = std::vector<std::string>{"all"},
        py::arg("tol") = 1e-8, py::arg("samples") = 500, py::arg("seed") = 1,
        py::arg("max_cases") = 2'000'000, py::arg("stable_timing") = false,
        "Run verification suites; returns (exit_code, report_json)");

  m.def("eval_expression",
        [](const std::string& expr, const std::string& group, double win_lo,
           double win_hi) {
          SuiteConfig cfg = make_config(group, win_lo, win_hi, {}, 1e-8, 100, 1,
                                        2'000'000, true);
          EvalSession s = EvalSession::make(cfg);
          return s.eval(expr);
        },
        py::arg("expr"), py::arg("group") = "cyclic:2", py::arg("win_lo") = 0.5,
        py::arg("win_hi") = 2.0,
        "Evaluate an element expression (d[g]@x, r[h]@l, U[g]V[h], E(...), star(...))");

  m.def("dump_algebra",
        [](const std::string& which, const std::string& group, double win_lo,
           double win_hi) {
          SuiteConfig cfg = make_config(group, win_lo, win_hi, {}, 1e-8, 100, 1,
                                        2'000'000, true);
          GSpinUniverse u = GSpinUniverse::base(cfg);
          if (which == "field") return algebra_to_json(*u.field);
          if (which == "double") return algebra_to_json(*u.dg->alg);
          if (which == "dualdouble") return algebra_to_json(*u.dual->alg);
          if (which == "crossed") {
            u.need_crossed(cfg);
            return algebra_to_json(*u.fxd);
          }
          throw ConfigError("dump: field | double | dualdouble | crossed");
        },
        py::arg("which"), py::arg("group") = "cyclic:2", py::arg("win_lo") = 0.5,
        py::arg("win_hi") = 2.0, "JSON dump of a constructed algebra");

  m.attr("__version__") = "0.1.0";
}
