#include <doctest.h>

#include "gspin/basic.hpp"
#include "gspin/field.hpp"

using namespace gspin;

namespace {

struct Fixture {
  FiniteGroup g;
  std::shared_ptr<HopfAlgebra> dg;
  std::shared_ptr<FieldAlgebra> f;
  ModuleAction gamma;

  explicit Fixture(const char* spec, int lo2 = 1, int hi2 = 4)
      : g(build_group(GroupSpec::parse(spec))),
        dg(std::make_shared<HopfAlgebra>(quantum_double(g))),
        f(field_algebra(g, Window::range2(lo2, hi2))),
        gamma(gamma_action(dg, f)) {}
};

}  // namespace

TEST_CASE("window basics") {
  Window w = Window::range2(1, 4);
  CHECK(w.describe() == "{1/2,1,3/2,2}");
  CHECK(w.is_basic_shape());
  CHECK(w.int_site_count() == 2);
  CHECK(!Window::range2(1, 3).is_basic_shape());
  CHECK(!Window::range2(2, 5).is_basic_shape());
  CHECK_THROWS_AS(Window::range2(3, 1), FieldError);
}

TEST_CASE("dimension and unit") {
  Fixture fx("cyclic:2");
  CHECK(fx.f->dim() == 16);
  CHECK(fx.f->unit().size() == 4);  // Σ over δ assignments, ρ = u
  Fixture fz3("cyclic:3");
  CHECK(fz3.f->dim() == 81);
}

TEST_CASE("defining relations via generators") {
  Fixture fx("cyclic:2");
  const FieldAlgebra& F = *fx.f;
  Element I = Element::unit(&F);
  // Σ_g δ_g(x) = I = ρ_u(l)
  CHECK(F.delta_gen(0, 2) + F.delta_gen(1, 2) == I);
  CHECK(F.rho_gen(0, 1) == I);
  // idempotents and group law
  CHECK(F.delta_gen(1, 2) * F.delta_gen(1, 2) == F.delta_gen(1, 2));
  CHECK((F.delta_gen(0, 2) * F.delta_gen(1, 2)).is_zero());
  CHECK(F.rho_gen(1, 1) * F.rho_gen(1, 1) == I);
  // exchange: ρ_h(l) δ_g(x) = δ_{hg}(x) ρ_h(l) for l < x
  CHECK(F.rho_gen(1, 1) * F.delta_gen(0, 2) == F.delta_gen(1, 2) * F.rho_gen(1, 1));
  // and commutation for l > x
  CHECK(F.rho_gen(1, 3) * F.delta_gen(0, 2) == F.delta_gen(0, 2) * F.rho_gen(1, 3));
  // δ_a(1) ρ_a(1/2) δ_a(1) = 0: the ρ pushes through to δ_u(1)
  Element z = F.delta_gen(1, 2) * F.rho_gen(1, 1) * F.delta_gen(1, 2);
  CHECK(z.is_zero());
}

TEST_CASE("algebra axioms for field algebras") {
  SweepOptions opt;
  CHECK(verify_algebra_axioms(*Fixture("cyclic:2").f, opt).all_pass());
  CHECK(verify_algebra_axioms(*Fixture("cyclic:3", 1, 2).f, opt).all_pass());
  // honest nonabelian window
  CHECK(verify_algebra_axioms(*Fixture("symmetric:3", 1, 2).f, opt).all_pass());
}

TEST_CASE("displayed product and star formulas on the 4-site window") {
  // δδρρ normal forms from the product of two basis monomials.
  for (const char* spec : {"cyclic:2", "symmetric:3"}) {
    Fixture fx(spec);
    const FiniteGroup& g = fx.g;
    const FieldAlgebra& F = *fx.f;
    std::mt19937_64 rng(17);
    int cases = g.n == 2 ? -1 : 4000;  // exhaustive for Z2
    auto one_case = [&](int g1, int g2, int h1, int h2, int s1, int s2, int t1,
                        int t2) {
      std::vector<int> a{h1, g1, h2, g2}, b{t1, s1, t2, s2};
      SparseVec prod = F.mul(F.encode(a), F.encode(b));
      SparseVec want;
      if (g1 == g.mul(h1, s1) && g2 == g.mul(h1, g.mul(h2, s2))) {
        std::vector<int> res{g.mul(h1, t1), g1,
                             g.mul(g.inv[t1], g.mul(h2, g.mul(t1, t2))), g2};
        want = SparseVec::unit_vec(F.encode(res));
      }
      CHECK(prod == want);
    };
    if (cases < 0) {
      for (int g1 = 0; g1 < 2; ++g1)
        for (int g2 = 0; g2 < 2; ++g2)
          for (int h1 = 0; h1 < 2; ++h1)
            for (int h2 = 0; h2 < 2; ++h2)
              for (int s1 = 0; s1 < 2; ++s1)
                for (int s2 = 0; s2 < 2; ++s2)
                  for (int t1 = 0; t1 < 2; ++t1)
                    for (int t2 = 0; t2 < 2; ++t2)
                      one_case(g1, g2, h1, h2, s1, s2, t1, t2);
    } else {
      for (int k = 0; k < cases; ++k)
        one_case(rng() % g.n, rng() % g.n, rng() % g.n, rng() % g.n, rng() % g.n,
                 rng() % g.n, rng() % g.n, rng() % g.n);
    }
    // star: (δ_{g1}δ_{g2}ρ_{h1}ρ_{h2})* =
    //        δ_{h1^-1 g1} δ_{h2^-1 h1^-1 g2} ρ_{h1^-1} ρ_{h1 h2^-1 h1^-1}
    for (int g1 = 0; g1 < g.n; ++g1)
      for (int g2 = 0; g2 < g.n; ++g2)
        for (int h1 = 0; h1 < g.n; ++h1)
          for (int h2 = 0; h2 < g.n; ++h2) {
            std::vector<int> a{h1, g1, h2, g2};
            auto [k, c] = F.star(F.encode(a));
            std::vector<int> want{g.inv[h1], g.mul(g.inv[h1], g1),
                                  g.conjugate(h1, g.inv[h2]),
                                  g.mul(g.inv[h2], g.mul(g.inv[h1], g2))};
            CHECK(k == F.encode(want));
            CHECK(c == Scalar::one());
          }
  }
}

TEST_CASE("gamma action closed form and laws") {
  Fixture fx("cyclic:3");
  const FiniteGroup& g = fx.g;
  const FieldAlgebra& F = *fx.f;
  // (f,h) δ_{s1}δ_{s2}ρ_{t1}ρ_{t2} = [h^-1 f h = t1 t2] twisted monomial
  for (int ff = 0; ff < 3; ++ff)
    for (int hh = 0; hh < 3; ++hh)
      for (Index m = 0; m < F.dim(); ++m) {
        std::vector<int> a = F.decode(m);
        SparseVec got = fx.gamma.act(static_cast<Index>(ff) * 3 + hh, m);
        int t1t2 = g.mul(a[0], a[2]);
        if (g.conjugate(g.inv[hh], ff) == t1t2) {
          std::vector<int> tw{g.conjugate(hh, a[0]), g.mul(hh, a[1]),
                              g.conjugate(hh, a[2]), g.mul(hh, a[3])};
          CHECK(got == SparseVec::unit_vec(F.encode(tw)));
        } else {
          CHECK(got.empty());
        }
      }
  // the unit of D(G) acts as the identity
  for (Index m = 0; m < F.dim(); ++m) {
    Element x = Element::basis(&F, m);
    CHECK(fx.gamma.apply(fx.dg->alg->unit(), x) == x);
  }
  SweepOptions opt;
  CHECK(verify_module_algebra(fx.gamma, opt).all_pass());
  // Lemma 2.1 on the window {1/2, 1} as well
  Fixture half("cyclic:3", 1, 2);
  CHECK(verify_module_algebra(half.gamma, opt).all_pass());
}

TEST_CASE("gamma is independent of the factorization order") {
  Fixture fx("cyclic:2");
  const FieldAlgebra& F = *fx.f;
  for (Index a = 0; a < fx.dg->dim(); ++a)
    for (Index m = 0; m < F.dim(); ++m) {
      // the ρ-first word multiplies out to the same monomial
      auto renorm = F.normalize_word(F.word_of_rho_first(m));
      REQUIRE(renorm.has_value());
      CHECK(*renorm == m);
      Element canon = gamma_apply_to_word(*fx.dg, F, a, F.word_of(m));
      Element alt = gamma_apply_to_word(*fx.dg, F, a, F.word_of_rho_first(m));
      Element table(&F, fx.gamma.act(a, m));
      CHECK(canon == alt);
      CHECK(canon == table);
    }
}

TEST_CASE("module law checks need the antipode") {
  // On a single-ρ window the γ star law a(T*) = (S(a*)(T))* fails if S is
  // dropped, and a deliberately broken action is flagged.
  Fixture fx("cyclic:3", 1, 1);
  const FiniteGroup& g = fx.g;
  const FieldAlgebra& F = *fx.f;
  bool sless_fails = false;
  for (Index a = 0; a < fx.dg->dim() && !sless_fails; ++a)
    for (Index m = 0; m < F.dim(); ++m) {
      auto [ms, mc] = F.star(m);
      SparseVec lhs = fx.gamma.act(a, ms);
      lhs.scale(mc);
      auto [as, ac] = fx.dg->alg->star(a);
      SparseVec rhs_in = fx.gamma.act(as, m);  // S dropped
      rhs_in.scale(ac);
      Element rhs = Element(&F, rhs_in).star();
      if (!(Element(&F, lhs) == rhs)) {
        sless_fails = true;
        break;
      }
    }
  CHECK(sless_fails);
  // broken action: left translation instead of conjugation on ρ labels
  ModuleAction broken = fx.gamma;
  const FieldAlgebra* fp = fx.f.get();
  FiniteGroup gg = g;
  broken.act = [fp, gg](Index hlabel, Index alabel) -> SparseVec {
    int glab = static_cast<int>(hlabel) / gg.n;
    int hlab = static_cast<int>(hlabel) % gg.n;
    std::vector<int> a = fp->decode(alabel);
    if (gg.conjugate(hlab, a[0]) != glab) return {};
    a[0] = gg.mul(hlab, a[0]);  // should be h a h^-1
    return SparseVec::unit_vec(fp->encode(a));
  };
  SweepOptions opt;
  CHECK(!verify_module_algebra(broken, opt).all_pass());
}

TEST_CASE("expectation E") {
  Fixture fx("cyclic:2");
  const FieldAlgebra& F = *fx.f;
  ConditionalExpectation e = expectation_E(fx.gamma);
  CHECK(check_expectation_formula(F, e).pass);
  // E(I) = I
  CHECK(e.apply(Element::unit(&F)) == Element::unit(&F));
  // E(δ_u(1)δ_u(2)ρ_u(1/2)ρ_u(3/2)) = (1/2)(δuδu + δaδa) ρuρu
  Element m = F.monomial({0, 0, 0, 0});
  Element want = (F.monomial({0, 0, 0, 0}) + F.monomial({0, 1, 0, 1})) *
                 Scalar(frac(1, 2));
  CHECK(e.apply(m) == want);
  SweepOptions opt;
  CHECK(verify_conditional_expectation(e, canonical_trace(F), opt, 1e-8,
                                       F.radicand())
            .all_pass());
  // range = invariants, and E∘E = E
  CHECK(spans_equal(e.range_basis, invariant_subalgebra(fx.gamma), F.dim()));
  CHECK(e.map.compose(e.map) == e.map);
}

TEST_CASE("wv observables span the invariants") {
  for (const char* spec : {"cyclic:2", "cyclic:3"}) {
    Fixture fx(spec);
    const FiniteGroup& g = fx.g;
    const FieldAlgebra& F = *fx.f;
    ConditionalExpectation e = expectation_E(fx.gamma);
    // w_u v_u = Σ_s δ_s(1) δ_s(2) ρ_u ρ_u
    Element wuvu = wv_observable(F, g.unit, g.unit);
    Element expect = Element::zero(&F);
    for (int s = 0; s < g.n; ++s)
      expect = expect + F.monomial({g.unit, s, g.unit, s});
    CHECK(wuvu == expect);
    std::vector<SparseVec> wv;
    for (int y = 0; y < g.n; ++y)
      for (int x = 0; x < g.n; ++x) {
        Element t = wv_observable(F, y, x);
        CHECK(e.apply(t) == t);  // lies in the observable algebra
        wv.push_back(t.coeffs());
      }
    SparseMat m;
    m.rows = static_cast<Index>(wv.size());
    m.cols = F.dim();
    m.row = wv;
    CHECK(exact_rank(m) == static_cast<Index>(g.n) * g.n);
    CHECK(spans_equal(wv, e.range_basis, F.dim()));
    // E of a monomial lands on a single scaled w v pair:
    // E(δ_{g1}δ_{g2}ρ_{h1}ρ_{h2}) = (1/|G|) [h1h2=u] w_{g1^-1 g2} v_{g1^-1 h1^-1 g1}
    for (Index mm = 0; mm < F.dim(); ++mm) {
      std::vector<int> a = F.decode(mm);
      Element lhs = e.apply(Element::basis(&F, mm));
      Element rhs = Element::zero(&F);
      if (g.mul(a[0], a[2]) == g.unit) {
        int y = g.mul(g.inv[a[1]], a[3]);
        int x = g.mul(g.inv[a[1]], g.mul(g.inv[a[0]], a[1]));
        rhs = wv_observable(F, y, x) * Scalar(frac(1, g.n));
      }
      CHECK(lhs == rhs);
    }
  }
  CHECK_THROWS_AS(wv_observable(*Fixture("cyclic:2", 1, 2).f, 0, 0), FieldError);
}

TEST_CASE("canonical trace") {
  Fixture fx("cyclic:2");
  const FieldAlgebra& F = *fx.f;
  CHECK(F.state_of(F.unit()) == Scalar::one());
  CHECK(F.state_of(F.delta_gen(1, 2).coeffs()) == Scalar(frac(1, 2)));
  // traciality on all pairs
  for (Index i = 0; i < F.dim(); ++i)
    for (Index j = 0; j < F.dim(); ++j)
      CHECK(F.state_of(F.mul(i, j)) == F.state_of(F.mul(j, i)));
  // faithful with diagonal gram (throws on off-diagonal or degenerate entries)
  std::vector<Scalar> diag = exact_gram_diagonal(F, /*check_offdiag=*/true);
  for (const Scalar& d : diag) CHECK(!d.is_zero());
  GnsData gns = gns_representation(F, canonical_trace(F), 1e-8, /*with_rep=*/false);
  CHECK(gns.faithful);
}

TEST_CASE("center of the 4-site field algebra is trivial") {
  Fixture fx("cyclic:2");
  CHECK(center_basis(*fx.f).size() == 1);
  // odd window: strictly larger center
  Fixture odd("cyclic:2", 1, 3);
  CHECK(center_basis(*odd.f).size() > 1);
}
