#include "gspin/suite.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace gspin {

namespace {

constexpr const char* kVersion = "0.1.0";

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

GSpinUniverse GSpinUniverse::base(const SuiteConfig& cfg) {
  GSpinUniverse u;
  u.g = build_group(cfg.group);
  u.window = Window::range2(cfg.win_lo2, cfg.win_hi2);
  u.field = field_algebra(u.g, u.window);
  u.dg = std::make_shared<HopfAlgebra>(quantum_double(u.g));
  u.dual = std::make_shared<HopfAlgebra>(dual_double_explicit(u.g));
  u.gamma = gamma_action(u.dg, u.field);
  return u;
}

void GSpinUniverse::need_expectation() {
  if (!e) e = expectation_E(gamma);
}

void GSpinUniverse::need_crossed(const SuiteConfig& cfg) {
  if (fxd) return;
  need_expectation();
  fxd = crossed_product(field, dg, gamma, cfg.sweep(), /*verify_action=*/false);
  sigma = dual_action_sigma(fxd, dual);
  e2 = expectation_E2(sigma);
}

void GSpinUniverse::need_iterated(const SuiteConfig& cfg) {
  if (iter) return;
  need_crossed(cfg);
  iter = iterated_crossed(fxd, dual, sigma, cfg.sweep());
  tau = tau_action(iter, dg);
  e3 = integral_expectation_record(tau);
}

void GSpinUniverse::need_phi() {
  if (!phi) phi = build_phi_iso(fxd, *e);
}

void GSpinUniverse::need_psi() {
  if (!psi) psi = build_psi_iso(iter, *e2);
}

void GSpinUniverse::need_matrix_field() {
  if (!mfield) mfield = matrix_field_algebra(field);
}

namespace {

class Runner {
 public:
  Runner(const SuiteConfig& cfg) : cfg_(cfg) {}

  void row(const std::string& id, const std::string& ref, const std::string& mode,
           bool pass, const std::string& witness) {
    CheckRow r;
    r.id = id;
    r.paper_ref = ref;
    r.mode = mode;
    r.status = pass ? "pass" : "fail";
    r.witness = witness;
    r.elapsed_ms = cfg_.stable_timing ? 0 : now_ms() - mark_;
    mark_ = now_ms();
    rep_.checks.push_back(std::move(r));
  }

  void skipped(const std::string& id, const std::string& ref, const std::string& why) {
    CheckRow r;
    r.id = id;
    r.paper_ref = ref;
    r.mode = "exact";
    r.status = "skipped";
    r.witness = why;
    r.elapsed_ms = 0;
    mark_ = now_ms();
    rep_.checks.push_back(std::move(r));
  }

  void merge_report(const std::string& prefix, const std::string& ref,
                    const ValidationReport& v) {
    for (const auto& c : v.items) {
      std::string mode = "exact";
      std::string cid = c.id;
      auto lb = cid.find("[sampled]");
      if (lb != std::string::npos) {
        mode = "sampled";
        cid = cid.substr(0, lb);
      } else if ((lb = cid.find("[exact]")) != std::string::npos) {
        cid = cid.substr(0, lb);
      }
      row(prefix + "." + cid, ref, mode, c.pass, c.witness);
    }
  }

  void mark() { mark_ = now_ms(); }
  Report take() { return std::move(rep_); }

 private:
  const SuiteConfig& cfg_;
  Report rep_;
  std::int64_t mark_ = now_ms();
};

void run_group_suite(Runner& r, GSpinUniverse& u) {
  ValidationReport v = validate_group(u.g);
  r.merge_report("group", "finite group axioms", v);
}

void run_hopf_suite(Runner& r, GSpinUniverse& u, const SuiteConfig& cfg) {
  SweepOptions opt = cfg.sweep();
  r.merge_report("hopf.double", "Def 2.1; structure maps of D(G)",
                 verify_hopf_axioms(*u.dg, opt));
  r.row("hopf.double_integral", "integral element of D(G)", "exact",
        verify_integral(*u.dg, *u.dg->integral), "");
  r.merge_report("hopf.dual", "dual Hopf structure of D(G)^",
                 verify_hopf_axioms(*u.dual, opt));
  // The defining relation of the dual integral reads its eps as the dual
  // counit; verified as such here.
  r.row("hopf.dual_integral", "integral element E2 of D(G)^ (dual counit)", "exact",
        verify_integral(*u.dual, *u.dual->integral), "");
  {
    auto [transposed, pairing] = dual_hopf(*u.dg);
    r.merge_report("hopf.dual_vs_transpose",
                   "dual via transposed structure maps matches the explicit dual",
                   hopf_structs_equal(transposed, *u.dual));
    Pairing canonical;
    canonical.left = u.dual.get();
    canonical.right = u.dg.get();
    canonical.value = [](Index i, Index j) {
      return i == j ? Scalar::one() : Scalar::zero();
    };
    r.merge_report("hopf.pairing", "duality pairing <(y,dx),(g,h)> = [y=g][x=h]",
                   verify_pairing(*u.dual, *u.dg, canonical));
  }
}

void need_rows_wv(Runner& r, GSpinUniverse& u, const SweepOptions& opt);

void run_field_suite(Runner& r, GSpinUniverse& u, const SuiteConfig& cfg) {
  SweepOptions opt = cfg.sweep();
  const FieldAlgebra& F = *u.field;
  const FiniteGroup& g = u.g;
  int n = g.n;
  r.merge_report("field", "Def 2.2 exchange relations", verify_algebra_axioms(F, opt));
  {
    Index want = 1;
    for (int k = 0; k < F.window().count(); ++k) want *= n;
    r.row("field.dimension", "dim F = |G|^{sites}", "exact", F.dim() == want,
          F.dim() == want ? "" : std::to_string(F.dim()));
  }
  if (F.window().count() % 2 == 0 && F.dim() <= 4096) {
    std::vector<SparseVec> c = center_basis(F);
    r.row("field.center_trivial", "finite windows carry full matrix algebras", "exact",
          c.size() == 1, c.size() == 1 ? "" : "center dim " + std::to_string(c.size()));
  } else if (F.window().count() % 2 != 0) {
    std::vector<SparseVec> c = center_basis(F);
    r.row("field.center_dim", "odd windows are non-simple", "exact", c.size() >= 1,
          "center dim " + std::to_string(c.size()));
  }
  // Displayed product/star normal forms on the 4-site shape.
  if (F.window().is_basic_shape()) {
    Sweep sw(opt, {n, n, n, n, n, n, n, n});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      int g1 = static_cast<int>(t[0]), g2 = static_cast<int>(t[1]);
      int h1 = static_cast<int>(t[2]), h2 = static_cast<int>(t[3]);
      int s1 = static_cast<int>(t[4]), s2 = static_cast<int>(t[5]);
      int t1 = static_cast<int>(t[6]), t2 = static_cast<int>(t[7]);
      std::vector<int> a{h1, g1, h2, g2}, b{t1, s1, t2, s2};
      SparseVec prod = F.mul(F.encode(a), F.encode(b));
      SparseVec want;
      if (g1 == g.mul(h1, s1) && g2 == g.mul(h1, g.mul(h2, s2))) {
        std::vector<int> res{g.mul(h1, t1), g1,
                             g.mul(g.inv[t1], g.mul(h2, g.mul(t1, t2))), g2};
        want = SparseVec::unit_vec(F.encode(res));
      }
      return prod == want;
    });
    r.row(std::string("field.product_formula"), "normal form of a δδρρ product",
          sw.mode(), !bad, bad ? "tuple found" : "");
    Sweep sw2(opt, {n, n, n, n});
    auto bad2 = sw2.run([&](const std::vector<Index>& t) {
      int g1 = static_cast<int>(t[0]), g2 = static_cast<int>(t[1]);
      int h1 = static_cast<int>(t[2]), h2 = static_cast<int>(t[3]);
      std::vector<int> a{h1, g1, h2, g2};
      auto [k, c] = F.star(F.encode(a));
      std::vector<int> want{g.inv[h1], g.mul(g.inv[h1], g1),
                            g.conjugate(h1, g.inv[h2]),
                            g.mul(g.inv[h2], g.mul(g.inv[h1], g2))};
      return k == F.encode(want) && c == Scalar::one();
    });
    r.row("field.star_formula", "star of a δδρρ monomial", sw2.mode(), !bad2,
          bad2 ? "tuple found" : "");
  }
  // Canonical trace: unital, tracial, faithful.
  {
    std::vector<Scalar> phi = canonical_trace(F);
    bool unital = F.state_of(F.unit()) == Scalar::one();
    Sweep sw(opt, {F.dim(), F.dim()});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      Scalar ab = F.state_of(F.mul(t[0], t[1]));
      Scalar ba = F.state_of(F.mul(t[1], t[0]));
      return ab == ba;
    });
    GnsData gns = gns_representation(F, phi, cfg.tol, /*with_rep=*/false);
    r.row(std::string("field.trace[") + sw.mode() + "]", "canonical trace state",
          "exact", unital && !bad && gns.faithful,
          !unital ? "not unital" : (bad ? "not tracial" : (!gns.faithful ? "gram degenerate" : "")));
  }
  // Lemma 2.1 module-algebra laws for γ.
  r.merge_report("field.gamma", "Lemma 2.1", verify_module_algebra(u.gamma, opt));
  // Factorization-order independence of the γ evaluation.
  {
    Sweep sw(opt, {static_cast<Index>(n) * n, F.dim()});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      Element canon = gamma_apply_to_word(*u.dg, F, t[0], F.word_of(t[1]));
      Element alt = gamma_apply_to_word(*u.dg, F, t[0], F.word_of_rho_first(t[1]));
      Element table(&F, u.gamma.act(t[0], t[1]));
      return canon == alt && canon == table;
    });
    r.row(std::string("field.gamma_factorization"), "action is factorization-independent",
          sw.mode(), !bad, bad ? "tuple found" : "");
  }
  if (F.window().is_basic_shape()) {
    // w/v observables: γ-invariant, independent, spanning the invariants.
    need_rows_wv(r, u, opt);
  } else {
    r.skipped("field.wv_span", "Lemma 2.2 proof", "needs the 4-site basic window");
  }
}

void run_expectation_suite(Runner& r, GSpinUniverse& u, const SuiteConfig& cfg) {
  SweepOptions opt = cfg.sweep();
  u.need_expectation();
  const FieldAlgebra& F = *u.field;
  CheckResult formula = check_expectation_formula(F, *u.e);
  r.row("expectation.formula", "closed form of E on monomials", "exact",
        formula.pass, formula.witness);
  r.merge_report("expectation", "Prop 2.1",
                 verify_conditional_expectation(*u.e, canonical_trace(F), opt, cfg.tol,
                                                F.radicand()));
  {
    std::vector<SparseVec> inv = invariant_subalgebra(u.gamma);
    bool eq = spans_equal(inv, u.e->range_basis, F.dim());
    r.row("expectation.range_is_invariants", "A = E(F) fixed-point identity", "exact",
          eq, "");
    if (F.window().is_basic_shape()) {
      Index want = static_cast<Index>(u.g.n) * u.g.n;
      r.row("expectation.invariants_dim", "dim A = |G|^2 on the 4-site window",
            "exact", static_cast<Index>(inv.size()) == want,
            "dim " + std::to_string(inv.size()));
    }
  }
}

void need_rows_wv(Runner& r, GSpinUniverse& u, const SweepOptions& opt) {
  const FieldAlgebra& F = *u.field;
  int n = u.g.n;
  u.need_expectation();
  std::vector<SparseVec> wv;
  bool invariant_ok = true;
  std::string wit;
  for (int y = 0; y < n && invariant_ok; ++y)
    for (int x = 0; x < n; ++x) {
      Element t = wv_observable(F, y, x);
      wv.push_back(t.coeffs());
      Element et = u.e->apply(t);
      if (!(et == t)) {
        invariant_ok = false;
        wit = "w_" + u.g.names[y] + " v_" + u.g.names[x];
        break;
      }
    }
  bool span_ok = false;
  if (invariant_ok) {
    SparseMat m;
    m.rows = static_cast<Index>(wv.size());
    m.cols = F.dim();
    m.row = wv;
    span_ok = exact_rank(m) == static_cast<Index>(n) * n &&
              spans_equal(wv, u.e->range_basis, F.dim());
  }
  r.row("field.wv_span", "w/v observables span the invariants", "exact",
        invariant_ok && span_ok, wit);
}

void run_crossed_suite(Runner& r, GSpinUniverse& u, const SuiteConfig& cfg) {
  SweepOptions opt = cfg.sweep();
  u.need_crossed(cfg);
  const CrossedAlgebra& X = *u.fxd;
  const FieldAlgebra& F = *u.field;
  const FiniteGroup& g = u.g;
  int n = g.n;
  {
    Index want = F.dim() * n * n;
    r.row("crossed.dimension", "dim(F ⋊ D(G)) = dim F · |G|^2", "exact",
          X.dim() == want, "");
  }
  r.merge_report("crossed", "crossed-product *-algebra structure",
                 verify_crossed_invariants(X, opt));
  if (F.window().is_basic_shape()) {
    // Displayed star formula for basis elements T ⋊ (g,h).
    Sweep sw(opt, {F.dim(), static_cast<Index>(n) * n});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      std::vector<int> m = F.decode(t[0]);
      int g1 = m[1], g2 = m[3], h1 = m[0], h2 = m[2];
      int gg = static_cast<int>(t[1] / n), hh = static_cast<int>(t[1] % n);
      auto [k, c] = X.star(X.lab(t[0], t[1]));
      std::vector<int> wm(4);
      wm[0] = g.conjugate(g.inv[hh], g.inv[h1]);  // h^-1 h1^-1 h
      wm[1] = g.mul(g.inv[hh], g.mul(g.inv[h1], g1));
      // h^-1 h1 h2^-1 h1^-1 h
      wm[2] = g.mul(g.inv[hh],
                    g.mul(h1, g.mul(g.inv[h2], g.mul(g.inv[h1], hh))));
      wm[3] = g.mul(g.inv[hh], g.mul(g.inv[h2], g.mul(g.inv[h1], g2)));
      int wg = g.mul(g.inv[hh], g.mul(h1, g.mul(h2, g.mul(gg, hh))));
      int wh = g.inv[hh];
      return k == X.lab(F.encode(wm), static_cast<Index>(wg) * n + wh) &&
             c == Scalar::one();
    });
    r.row("crossed.star_formula", "displayed star of T ⋊ (g,h)", sw.mode(), !bad,
          bad ? "tuple found" : "");
  }
  r.merge_report("crossed", "Lemmas 3.1 and 3.2",
                 verify_jones_element(X, *u.e, opt));
  r.merge_report("crossed.sigma", "Prop 5.1 (σ module-algebra laws)",
                 verify_module_algebra(u.sigma, opt));
  {
    CheckResult c = check_e2_formula(X, *u.e2);
    r.row("crossed.e2_formula", "E2(F ⊗ (g,h)) = (1/|G|)[h=u] F ⊗ I", "exact",
          c.pass, c.witness);
  }
  r.merge_report("crossed.e2", "Prop 4.1",
                 verify_conditional_expectation(*u.e2, algebra_state(X), opt, cfg.tol,
                                                F.radicand()));
  {
    // σ-invariants = F ⊗ 1 with dimension dim F.
    std::vector<SparseVec> inv = invariant_subalgebra(u.sigma);
    std::vector<SparseVec> embedded;
    for (Index i = 0; i < F.dim(); ++i)
      embedded.push_back(X.embed_carrier(Element::basis(&F, i)).coeffs());
    bool ok = spans_equal(inv, embedded, X.dim()) &&
              static_cast<Index>(inv.size()) == F.dim();
    r.row("crossed.sigma_invariants", "(F⋊D(G))^{D(G)^} = F ⊗ 1", "exact", ok,
          ok ? "" : "dim " + std::to_string(inv.size()));
  }
}

void run_basic_suite(Runner& r, GSpinUniverse& u, const SuiteConfig& cfg) {
  SweepOptions opt = cfg.sweep();
  u.need_crossed(cfg);
  u.need_phi();
  const FieldAlgebra& F = *u.field;
  ExpectationSetup setup = ExpectationSetup::from(*u.e);
  JonesProjectionResult jp = jones_projection(setup, opt);
  r.merge_report("basic", "Lemma 2.2", jp.checks);
  {
    Index want = 1;
    for (int k = 0; k < 6; ++k) want *= u.g.n;
    r.row("basic.span_dimension", "dim <F, e_A> = |G|^6", "exact",
          static_cast<Index>(u.phi->w.size()) == want &&
              u.fxd->dim() == want,
          "");
  }
  SpanIsoOptions iopt;
  iopt.sweep = opt;
  iopt.full_rank_check = true;
  r.merge_report("basic.phi", "Thm 3.1", verify_span_iso(*u.phi, iopt));
}

void run_quasi_suite(Runner& r, GSpinUniverse& u, const SuiteConfig& cfg) {
  SweepOptions opt = cfg.sweep();
  u.need_crossed(cfg);
  u.need_phi();
  const FieldAlgebra& F = *u.field;
  DualExpectationResult de = dual_expectation(*u.phi, opt);
  int k2 = F.window().sites2[1];  // least integer site of the basic shape
  QuasiBasis qb = standard_quasi_basis(*u.phi, F, k2);
  r.row("quasi.pair_count", "|G|^2 pairs (u_{x,y}, u_{x,y}*)", "exact",
        qb.pairs.size() == static_cast<size_t>(u.g.n) * u.g.n, "");
  r.merge_report("quasi", "Thm 4.1 / Def 4.1",
                 quasi_basis_check(*u.fxd, de.on_crossed.map, qb, opt));
  Element idx = quasi_index(qb);
  Element want = Element::unit(u.fxd.get()) * Scalar(u.g.n * u.g.n);
  r.row("quasi.index_value", "Index Ẽ = |G|^2 · 1", "exact", idx == want,
        idx == want ? "" : "index differs");
  CheckResult central = check_index_central(*u.fxd, idx, opt);
  r.row("quasi.index_central", "Def 4.1: the index is central",
        central.id.find("sampled") != std::string::npos ? "sampled" : "exact",
        central.pass, central.witness);
}

void run_dual_suite(Runner& r, GSpinUniverse& u, const SuiteConfig& cfg) {
  SweepOptions opt = cfg.sweep();
  u.need_crossed(cfg);
  u.need_phi();
  DualExpectationResult de = dual_expectation(*u.phi, opt);
  r.merge_report("dual", "Thm 4.1 (dual conditional expectation)", de.checks);
  r.merge_report("dual", "Thm 4.1 battery",
                 verify_conditional_expectation(de.on_crossed, algebra_state(*u.fxd),
                                                opt, cfg.tol, u.field->radicand()));
  CheckResult c = check_dual_matches_e2(de, *u.e2);
  r.row("dual.matches_e2", "Remark 4.2", "exact", c.pass, c.witness);
}

void run_iterated_suite(Runner& r, GSpinUniverse& u, const SuiteConfig& cfg) {
  SweepOptions opt = cfg.sweep();
  u.need_iterated(cfg);
  const CrossedAlgebra& Y = *u.iter;
  {
    Index want = u.field->dim();
    for (int k = 0; k < 4; ++k) want *= u.g.n;
    r.row("iterated.dimension", "dim = dim F · |G|^4", "exact", Y.dim() == want, "");
  }
  r.merge_report("iterated.tau", "τ module-algebra laws",
                 verify_module_algebra(u.tau, opt));
  {
    std::vector<SparseVec> inv = invariant_subalgebra(u.tau);
    std::vector<SparseVec> embedded;
    for (Index i = 0; i < u.fxd->dim(); ++i)
      embedded.push_back(Y.embed_carrier(Element::basis(u.fxd.get(), i)).coeffs());
    bool ok = spans_equal(inv, embedded, Y.dim());
    r.row("iterated.tau_invariants", "fixed points = (F ⋊ D(G)) ⊗ 1", "exact", ok,
          ok ? "" : "dim " + std::to_string(inv.size()));
  }
  {
    bool idem = u.e3->map.compose(u.e3->map) == u.e3->map;
    r.row("iterated.e3_idempotent", "τ-integral expectation is idempotent", "exact",
          idem, "");
  }
  u.need_psi();
  SpanIsoOptions iopt;
  iopt.sweep = opt;
  iopt.full_rank_check = Y.dim() <= 10000;
  r.merge_report("iterated.psi", "Thm 5.1", verify_span_iso(*u.psi, iopt));
}

void run_matrixfield_suite(Runner& r, GSpinUniverse& u, const SuiteConfig& cfg) {
  SweepOptions opt = cfg.sweep();
  u.need_iterated(cfg);
  u.need_matrix_field();
  r.merge_report("matrixfield", "Remark 5.2 order/disorder relations",
                 od_relations_check(*u.mfield, opt));
  TakaiReport tk = takai_dimension_check(*u.iter, *u.mfield);
  if (!tk.applicable) {
    r.skipped("matrixfield.takai", "Takai-level comparison", tk.notice);
  } else {
    r.row("matrixfield.takai_dims",
          "dim(F⋊D(G)⋊D(G)^) = dim(M_{|G|^2}(F))", "exact", tk.dims_match,
          std::to_string(tk.iterated_dim) + " vs " + std::to_string(tk.matrix_field_dim));
    r.row("matrixfield.takai_centers", "both sides are simple", "exact",
          tk.iterated_center_trivial && tk.matrix_field_center_trivial, "");
  }
}

void run_tower_suite(Runner& r, GSpinUniverse& u, const SuiteConfig& cfg) {
  SweepOptions opt = cfg.sweep();
  u.need_iterated(cfg);
  u.need_psi();
  SpanIsoOptions iopt;
  iopt.sweep = opt;
  iopt.full_rank_check = u.iter->dim() <= 10000;
  ValidationReport psi_checks = verify_span_iso(*u.psi, iopt);
  TowerInput in;
  in.f = u.field.get();
  in.e = &*u.e;
  in.fxd = u.fxd.get();
  in.e2 = &*u.e2;
  in.iter = u.iter.get();
  in.e3 = &*u.e3;
  in.psi_checks = &psi_checks;
  std::vector<TowerLevel> tw = tower(in, 4);
  long g2 = static_cast<long>(u.g.n) * u.g.n;
  bool growth = true;
  for (size_t k = 1; k < tw.size(); ++k)
    if (tw[k].dim != tw[k - 1].dim * g2) growth = false;
  std::string desc;
  for (const auto& lv : tw)
    desc += "L" + std::to_string(lv.level) + ":" + std::to_string(lv.dim) + " ";
  r.row("tower.growth", "Remark 5.3: dimensions grow by |G|^2 per level", "exact",
        growth, desc);
  r.row("tower.level2_iso", "level 2 is the basic construction of level 1", "exact",
        psi_checks.all_pass(), psi_checks.first_failure());
}

}  // namespace

Report run_suite(const SuiteConfig& cfg) {
  static const std::vector<std::string> known{
      "hopf", "field", "expectation", "crossed", "basic",
      "quasi", "dual", "iterated", "matrixfield", "tower"};
  std::set<std::string> want;
  for (const auto& s : cfg.suites) {
    if (s == "all") {
      want.insert(known.begin(), known.end());
    } else if (std::find(known.begin(), known.end(), s) != known.end()) {
      want.insert(s);
    } else {
      throw ConfigError("unknown suite: " + s);
    }
  }
  if (cfg.win_lo2 > cfg.win_hi2) throw ConfigError("window is empty");
  if (cfg.tol <= 0) throw ConfigError("tol must be positive");
  Window w = Window::range2(cfg.win_lo2, cfg.win_hi2);
  // Suites that hinge on the Λ_{1/2,2}-shaped local structure.
  for (const char* s : {"basic", "quasi", "dual", "iterated", "matrixfield", "tower"})
    if (want.count(s) && !w.is_basic_shape())
      throw ConfigError(std::string(s) +
                        " suite needs the 4-site window shape {k+1/2,...,k+2}");
  if (want.count("quasi")) {
    // k and k+1/2 in window: guaranteed by the shape check above.
  }

  GSpinUniverse u = GSpinUniverse::base(cfg);
  Runner r(cfg);
  run_group_suite(r, u);
  if (want.count("hopf")) run_hopf_suite(r, u, cfg);
  if (want.count("field")) run_field_suite(r, u, cfg);
  if (want.count("expectation")) run_expectation_suite(r, u, cfg);
  if (want.count("crossed")) run_crossed_suite(r, u, cfg);
  if (want.count("basic")) run_basic_suite(r, u, cfg);
  if (want.count("quasi")) run_quasi_suite(r, u, cfg);
  if (want.count("dual")) run_dual_suite(r, u, cfg);
  if (want.count("iterated")) run_iterated_suite(r, u, cfg);
  if (want.count("matrixfield")) run_matrixfield_suite(r, u, cfg);
  if (want.count("tower")) run_tower_suite(r, u, cfg);

  Report rep = r.take();
  rep.meta.group = cfg.group.describe();
  rep.meta.window = w.describe();
  rep.meta.seed = cfg.seed;
  rep.meta.scalar_mode = cfg.exact_scalars ? "exact" : "float";
  rep.meta.tol = cfg.tol;
  rep.meta.version = kVersion;
  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckRow& a, const CheckRow& b) { return a.id < b.id; });
  return rep;
}

EvalSession EvalSession::make(const SuiteConfig& cfg) {
  EvalSession s{GSpinUniverse::base(cfg), {}};
  s.u.need_expectation();
  s.ctx.group = &s.u.g;
  s.ctx.field = s.u.field.get();
  s.ctx.double_alg = s.u.dg->alg.get();
  s.ctx.expectation = &*s.u.e;
  return s;
}

std::string EvalSession::eval(const std::string& src) {
  ExprAst ast = parse_expression(src, ctx);
  ExprValue v = eval_expression(*ast, ctx);
  return value_to_string(v, ctx);
}

int suite_exit_code(const Report& r) { return r.all_pass() ? 0 : 1; }

}  // namespace gspin
