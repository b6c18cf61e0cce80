#pragma once

#include "gspin/exprlang.hpp"
#include "gspin/matrixfield.hpp"

namespace gspin {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  GroupSpec group{GroupSpec::Kind::Cyclic, 2};
  int win_lo2 = 1;  // doubled half-integers; default window {1/2,...,2}
  int win_hi2 = 4;
  bool exact_scalars = true;  // identity checks are exact either way
  double tol = 1e-8;          // PSD tolerance
  int samples = 500;
  std::uint64_t seed = 1;
  std::vector<std::string> suites{"all"};
  std::int64_t max_cases = 2'000'000;
  bool stable_timing = false;  // zero elapsed_ms for byte-stable reports

  SweepOptions sweep() const { return {seed, max_cases, samples}; }
};

// Everything derived from (G, window), built once per run and shared.
struct GSpinUniverse {
  FiniteGroup g;
  Window window;
  std::shared_ptr<FieldAlgebra> field;
  std::shared_ptr<HopfAlgebra> dg;    // D(G)
  std::shared_ptr<HopfAlgebra> dual;  // D(G)^ (explicit)
  ModuleAction gamma;
  std::optional<ConditionalExpectation> e;  // F -> A
  std::shared_ptr<CrossedAlgebra> fxd;      // F ⋊ D(G)
  ModuleAction sigma;
  std::optional<ConditionalExpectation> e2;  // F⋊D(G) -> F
  std::shared_ptr<CrossedAlgebra> iter;      // (F⋊D(G)) ⋊ D(G)^
  ModuleAction tau;
  std::optional<ConditionalExpectation> e3;  // iter -> F⋊D(G)
  std::optional<SpanIso> phi;
  std::optional<SpanIso> psi;
  std::shared_ptr<MatrixFieldAlgebra> mfield;

  static GSpinUniverse base(const SuiteConfig& cfg);  // group/window/field/hopf
  void need_expectation();
  void need_crossed(const SuiteConfig& cfg);
  void need_iterated(const SuiteConfig& cfg);
  void need_phi();
  void need_psi();
  void need_matrix_field();
};

// Runs the selected suites in dependency order; check failures become
// rows, configuration problems throw ConfigError.
Report run_suite(const SuiteConfig& cfg);

// Expression-language session bound to a universe.
struct EvalSession {
  GSpinUniverse u;
  ExprContext ctx;

  static EvalSession make(const SuiteConfig& cfg);
  std::string eval(const std::string& src);
};

// Exit codes: 0 all pass, 1 check failure, 2 configuration error.
int suite_exit_code(const Report& r);

}  // namespace gspin
