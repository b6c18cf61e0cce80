// Acceptance suite: every headline statement reproduced as an exact
// identity at desk scale, one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <string>

#include "gspin/suite.hpp"

using namespace gspin;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void result(int criterion, const std::string& what, bool pass, double secs,
            const std::string& detail = "") {
  std::printf("%s criterion %2d: %s (%.2fs)%s\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), secs, detail.empty() ? "" : ("  [" + detail + "]").c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

SuiteConfig config_for(const char* group, std::int64_t max_cases = 8'000'000) {
  SuiteConfig cfg;
  cfg.group = GroupSpec::parse(group);
  cfg.max_cases = max_cases;
  cfg.samples = 500;
  cfg.seed = 1;
  return cfg;
}

GSpinUniverse universe(const char* group, std::int64_t max_cases = 8'000'000) {
  return GSpinUniverse::base(config_for(group, max_cases));
}

bool all_exact(const ValidationReport& r) {
  for (const auto& c : r.items)
    if (c.id.find("[sampled]") != std::string::npos) return false;
  return r.all_pass();
}

// 1. Hopf axioms for D(G) and D(G)^, exact, < 10 s each.
void criterion1() {
  bool ok = true;
  std::string detail;
  double worst = 0;
  for (const char* spec : {"cyclic:2", "cyclic:3", "cyclic:4", "symmetric:3"}) {
    Timer t;
    FiniteGroup g = build_group(GroupSpec::parse(spec));
    SweepOptions opt;
    opt.max_cases = 8'000'000;
    ValidationReport a = verify_hopf_axioms(quantum_double(g), opt);
    ValidationReport b = verify_hopf_axioms(dual_double_explicit(g), opt);
    double secs = t.seconds();
    worst = std::max(worst, secs);
    if (!all_exact(a) || !all_exact(b)) {
      ok = false;
      detail = std::string(spec) + ": " + a.first_failure() + b.first_failure();
    }
    if (secs >= 10.0) {
      ok = false;
      detail = std::string(spec) + " exceeded 10s";
    }
  }
  result(1, "Hopf *-algebra axioms for D(G) and its dual (Z2,Z3,Z4,S3)", ok, worst,
         detail);
}

// 2. Lemma 2.1: γ module-algebra laws.
void criterion2() {
  Timer t;
  bool ok = true;
  std::string detail;
  for (const char* spec : {"cyclic:2", "cyclic:3"}) {
    GSpinUniverse u = universe(spec);
    SweepOptions opt;
    opt.max_cases = 8'000'000;  // full grid
    ValidationReport rep = verify_module_algebra(u.gamma, opt);
    if (!all_exact(rep)) {
      ok = false;
      detail = std::string(spec) + ": " + rep.first_failure();
    }
  }
  {
    GSpinUniverse u = universe("symmetric:3");
    SweepOptions opt;
    opt.max_cases = 1000;  // force sampling
    opt.samples = 500;
    ValidationReport rep = verify_module_algebra(u.gamma, opt);
    if (!rep.all_pass()) {
      ok = false;
      detail = "symmetric:3 sampled: " + rep.first_failure();
    }
  }
  result(2, "Lemma 2.1: gamma module-algebra laws (Z2,Z3 full; S3 >=500 samples)",
         ok, t.seconds(), detail);
}

// 3. Prop 2.1: conditional expectation battery for E.
void criterion3() {
  Timer t;
  bool ok = true;
  std::string detail;
  for (const char* spec : {"cyclic:2", "cyclic:3"}) {
    GSpinUniverse u = universe(spec);
    u.need_expectation();
    SweepOptions opt;
    opt.max_cases = 8'000'000;
    opt.samples = 100;
    ValidationReport rep = verify_conditional_expectation(
        *u.e, canonical_trace(*u.field), opt, 1e-8, u.field->radicand());
    bool bimod_exact = false;
    for (const auto& c : rep.items)
      if (c.id.find("expectation-bimodular[exact]") == 0 && c.pass) bimod_exact = true;
    if (!rep.all_pass() || !bimod_exact) {
      ok = false;
      detail = std::string(spec) + ": " + rep.first_failure();
    }
  }
  result(3, "Prop 2.1: E unital, bimodular, idempotent, faithful, positive (Z2,Z3)",
         ok, t.seconds(), detail);
}

// 4. Lemma 2.2: operator identities and the commutant biconditional.
void criterion4() {
  Timer t;
  bool ok = true;
  std::string detail;
  for (const char* spec : {"cyclic:2", "cyclic:3"}) {
    GSpinUniverse u = universe(spec);
    u.need_expectation();
    const FieldAlgebra& F = *u.field;
    ExpectationSetup setup = ExpectationSetup::from(*u.e);
    SweepOptions opt;
    opt.max_cases = 8'000'000;
    JonesProjectionResult jp = jones_projection(setup, opt);
    if (!all_exact(jp.checks)) {
      ok = false;
      detail = std::string(spec) + ": " + jp.checks.first_failure();
    }
    for (Index m = 0; m < F.dim() && ok; ++m) {
      SparseMat lt = lambda_matrix(F, m);
      SparseMat lhs = jp.e.compose(lt.compose(jp.e));
      SparseMat rhs =
          lambda_matrix(F, u.e->apply(Element::basis(&F, m))).compose(jp.e);
      if (!(lhs == rhs)) {
        ok = false;
        detail = std::string(spec) + ": e λ(T) e mismatch at " + F.label_name(m);
      }
    }
    Index want = static_cast<Index>(u.g.n) * u.g.n;
    if (static_cast<Index>(u.e->range_basis.size()) != want) {
      ok = false;
      detail = std::string(spec) + ": dim A != |G|^2";
    }
  }
  result(4, "Lemma 2.2: e λ(T) e = λ(E(T)) e and commutant = A, dim A = |G|^2",
         ok, t.seconds(), detail);
}

// 5. Lemmas 3.1 and 3.2 for Z2, Z3 and S3 (S3 exhaustive over monomials).
void criterion5() {
  Timer t;
  bool ok = true;
  std::string detail;
  for (const char* spec : {"cyclic:2", "cyclic:3", "symmetric:3"}) {
    SuiteConfig cfg = config_for(spec);
    GSpinUniverse u = GSpinUniverse::base(cfg);
    u.need_crossed(cfg);
    SweepOptions opt;
    opt.max_cases = 8'000'000;  // covers all 1296 monomials for S3
    ValidationReport rep = verify_jones_element(*u.fxd, *u.e, opt);
    if (!all_exact(rep)) {
      ok = false;
      detail = std::string(spec) + ": " + rep.first_failure();
    }
  }
  result(5, "Lemmas 3.1/3.2: jones element identities (Z2,Z3,S3 exhaustive)", ok,
         t.seconds(), detail);
}

// 6. Theorem 3.1: Φ is an exact *-isomorphism; |G|^6 dimensions.
void criterion6() {
  bool ok = true;
  std::string detail;
  double z3_time = 0;
  double total = 0;
  for (const char* spec : {"cyclic:2", "cyclic:3"}) {
    Timer t;
    SuiteConfig cfg = config_for(spec);
    GSpinUniverse u = GSpinUniverse::base(cfg);
    u.need_crossed(cfg);
    u.need_phi();
    Index want = 1;
    for (int k = 0; k < 6; ++k) want *= u.g.n;
    SpanIsoOptions iopt;
    iopt.sweep.max_cases = 8'000'000;
    ValidationReport rep = verify_span_iso(*u.phi, iopt);
    bool rank_ok = false;
    for (const auto& c : rep.items)
      if (c.id == "iso-bijective-rank" && c.pass) rank_ok = true;
    if (!rep.all_pass() || !rank_ok || u.fxd->dim() != want) {
      ok = false;
      detail = std::string(spec) + ": " + rep.first_failure();
    }
    double secs = t.seconds();
    total += secs;
    if (std::string(spec) == "cyclic:3") z3_time = secs;
  }
  {
    Timer t;
    SuiteConfig cfg = config_for("symmetric:3");
    GSpinUniverse u = GSpinUniverse::base(cfg);
    u.need_crossed(cfg);
    ValidationReport rep = verify_phi_sampled(u.fxd, *u.e, 500, 1);
    if (!rep.all_pass()) {
      ok = false;
      detail = "symmetric:3 sampled: " + rep.first_failure();
    }
    total += t.seconds();
  }
  if (z3_time >= 60.0) {
    ok = false;
    detail = "Z3 battery exceeded 60s";
  }
  result(6, "Thm 3.1: Phi exact *-isomorphism, dim |G|^6 (Z2,Z3; S3 sampled)", ok,
         total, detail + (detail.empty() ? "Z3 " + std::to_string(z3_time) + "s" : ""));
}

// 7. Thm 4.1 / Def 4.1: quasi-basis and index.
void criterion7() {
  Timer t;
  bool ok = true;
  std::string detail;
  for (const char* spec : {"cyclic:2", "cyclic:3"}) {
    SuiteConfig cfg = config_for(spec);
    GSpinUniverse u = GSpinUniverse::base(cfg);
    u.need_crossed(cfg);
    u.need_phi();
    SweepOptions opt;
    opt.max_cases = 8'000'000;
    DualExpectationResult de = dual_expectation(*u.phi, opt);
    QuasiBasis qb = standard_quasi_basis(*u.phi, *u.field, u.window.sites2[1]);
    ValidationReport rep = quasi_basis_check(*u.fxd, de.on_crossed.map, qb, opt);
    Element idx = quasi_index(qb);
    Element want = Element::unit(u.fxd.get()) * Scalar(u.g.n * u.g.n);
    CheckResult central = check_index_central(*u.fxd, idx, opt);
    if (!all_exact(rep) || !(idx == want) || !central.pass ||
        qb.pairs.size() != static_cast<size_t>(u.g.n) * u.g.n) {
      ok = false;
      detail = std::string(spec) + ": " + rep.first_failure();
    }
  }
  result(7, "Thm 4.1/Def 4.1: quasi-basis reproduction, Index = |G|^2 (Z2,Z3)", ok,
         t.seconds(), detail);
}

// 8. Prop 4.1 / Remark 4.2: E2 battery and E2 = Phi ∘ E~ ∘ Phi^{-1}.
void criterion8() {
  Timer t;
  bool ok = true;
  std::string detail;
  for (const char* spec : {"cyclic:2", "cyclic:3"}) {
    SuiteConfig cfg = config_for(spec);
    GSpinUniverse u = GSpinUniverse::base(cfg);
    u.need_crossed(cfg);
    u.need_phi();
    SweepOptions opt;
    opt.max_cases = std::string(spec) == "cyclic:2" ? 8'000'000 : 2'000'000;
    opt.samples = std::string(spec) == "cyclic:2" ? 100 : 40;
    ValidationReport rep = verify_conditional_expectation(
        *u.e2, algebra_state(*u.fxd), opt, 1e-8, u.field->radicand());
    if (!rep.all_pass()) {
      ok = false;
      detail = std::string(spec) + ": " + rep.first_failure();
    }
    if (!check_e2_formula(*u.fxd, *u.e2).pass) {
      ok = false;
      detail = std::string(spec) + ": e2 formula";
    }
    DualExpectationResult de = dual_expectation(*u.phi, opt);
    CheckResult match = check_dual_matches_e2(de, *u.e2);
    if (!de.checks.all_pass() || !match.pass) {
      ok = false;
      detail = std::string(spec) + ": " + match.witness;
    }
  }
  result(8, "Prop 4.1/Remark 4.2: E2 battery; E2 matches the dual expectation",
         ok, t.seconds(), detail);
}

// 9. Prop 5.1 and the σ fixed points.
void criterion9() {
  Timer t;
  bool ok = true;
  std::string detail;
  for (const char* spec : {"cyclic:2", "cyclic:3"}) {
    SuiteConfig cfg = config_for(spec);
    GSpinUniverse u = GSpinUniverse::base(cfg);
    u.need_crossed(cfg);
    SweepOptions opt;
    opt.max_cases = 8'000'000;
    ValidationReport rep = verify_module_algebra(u.sigma, opt);
    if (!all_exact(rep)) {
      ok = false;
      detail = std::string(spec) + ": " + rep.first_failure();
    }
    std::vector<SparseVec> inv = invariant_subalgebra(u.sigma);
    std::vector<SparseVec> embedded;
    for (Index i = 0; i < u.field->dim(); ++i)
      embedded.push_back(u.fxd->embed_carrier(Element::basis(u.field.get(), i)).coeffs());
    Index want = 1;
    for (int k = 0; k < 4; ++k) want *= u.g.n;
    if (static_cast<Index>(inv.size()) != want ||
        !spans_equal(inv, embedded, u.fxd->dim())) {
      ok = false;
      detail = std::string(spec) + ": sigma invariants";
    }
  }
  result(9, "Prop 5.1: sigma laws exact; fixed points = F ⊗ 1 of dim |G|^4 (Z2,Z3)",
         ok, t.seconds(), detail);
}

// 10. Theorem 5.1: Ψ exact *-isomorphism at |G|^8 (Z2).
void criterion10() {
  Timer t;
  bool ok = true;
  std::string detail;
  SuiteConfig cfg = config_for("cyclic:2");
  GSpinUniverse u = GSpinUniverse::base(cfg);
  u.need_iterated(cfg);
  u.need_psi();
  SpanIsoOptions iopt;
  iopt.sweep.max_cases = 8'000'000;
  ValidationReport rep = verify_span_iso(*u.psi, iopt);
  bool rank_ok = false;
  for (const auto& c : rep.items)
    if (c.id == "iso-bijective-rank" && c.pass) rank_ok = true;
  if (!rep.all_pass() || !rank_ok || u.iter->dim() != 256) {
    ok = false;
    detail = rep.first_failure();
  }
  result(10, "Thm 5.1: Psi exact *-isomorphism, dim 256 = |G|^8 (Z2)", ok,
         t.seconds(), detail);
}

// 11. Takai level: dimensions and trivial centers.
void criterion11() {
  Timer t;
  bool ok = true;
  std::string detail;
  for (const char* spec : {"cyclic:2", "cyclic:3"}) {
    SuiteConfig cfg = config_for(spec);
    GSpinUniverse u = GSpinUniverse::base(cfg);
    u.need_iterated(cfg);
    u.need_matrix_field();
    TakaiReport tk = takai_dimension_check(*u.iter, *u.mfield);
    Index want = u.field->dim();
    for (int k = 0; k < 4; ++k) want *= u.g.n;
    if (!tk.pass() || tk.iterated_dim != want) {
      ok = false;
      detail = std::string(spec) + ": takai check failed";
    }
  }
  result(11, "Takai level: dim agreement with M_{|G|^2}(F), trivial centers (Z2,Z3)",
         ok, t.seconds(), detail);
}

// 12. Remark 5.2 relations and τ fixed points.
void criterion12() {
  Timer t;
  bool ok = true;
  std::string detail;
  SuiteConfig cfg = config_for("cyclic:2");
  GSpinUniverse u = GSpinUniverse::base(cfg);
  u.need_iterated(cfg);
  u.need_matrix_field();
  SweepOptions opt;
  opt.max_cases = 8'000'000;
  ValidationReport rep = od_relations_check(*u.mfield, opt);
  if (!all_exact(rep)) {
    ok = false;
    detail = rep.first_failure();
  }
  std::vector<SparseVec> inv = invariant_subalgebra(u.tau);
  std::vector<SparseVec> embedded;
  for (Index i = 0; i < u.fxd->dim(); ++i)
    embedded.push_back(u.iter->embed_carrier(Element::basis(u.fxd.get(), i)).coeffs());
  if (!spans_equal(inv, embedded, u.iter->dim())) {
    ok = false;
    detail = "tau invariants differ from (F ⋊ D(G)) ⊗ 1";
  }
  result(12, "Remark 5.2: order/disorder relations (Z2 full); tau fixed points",
         ok, t.seconds(), detail);
}

// 13. Tooling: parser round trip, deterministic reports, full Z2 run < 2 min.
void criterion13() {
  Timer t;
  bool ok = true;
  std::string detail;
  {
    SuiteConfig cfg = config_for("cyclic:3", 2'000'000);
    EvalSession session = EvalSession::make(cfg);
    std::mt19937_64 rng(99);
    for (int k = 0; k < 1000 && ok; ++k) {
      ExprAst ast = random_expression(session.ctx, rng, 3);
      std::string p1 = print_expression(*ast);
      std::string p2 = print_expression(*parse_expression(p1, session.ctx));
      std::string p3 = print_expression(*parse_expression(p2, session.ctx));
      if (p2 != p3) {
        ok = false;
        detail = "round trip not a fixed point: " + p1;
      }
    }
  }
  double full_run = 0;
  {
    SuiteConfig cfg = config_for("cyclic:2", 2'000'000);
    cfg.stable_timing = true;
    cfg.suites = {"all"};
    Timer tf;
    Report a = run_suite(cfg);
    full_run = tf.seconds();
    Report b = run_suite(cfg);
    if (!a.all_pass() || suite_exit_code(a) != 0) {
      ok = false;
      detail = "full Z2 run failed";
    }
    if (report_to_json(a) != report_to_json(b)) {
      ok = false;
      detail = "reports not deterministic";
    }
    if (full_run >= 120.0) {
      ok = false;
      detail = "full Z2 run exceeded 2 minutes";
    }
  }
  result(13, "Tooling: parser round trip, deterministic reports, Z2 all-suite run",
         ok, t.seconds(), detail + (detail.empty() ?
             "Z2 full run " + std::to_string(full_run) + "s" : ""));
}

}  // namespace

int main() {
  std::printf("acceptance suite: exact verification at desk scale\n");
  Timer total;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13();
  std::printf("%s (%d failing) in %.1fs\n",
              failures == 0 ? "ALL ACCEPTANCE CRITERIA PASSED" : "ACCEPTANCE FAILURES",
              failures, total.seconds());
  return failures == 0 ? 0 : 1;
}
