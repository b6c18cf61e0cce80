#include "gspin/basic.hpp"

namespace gspin {

SparseMat lambda_matrix(const BasisAlgebra& b, Index label) {
  SparseMat m = SparseMat::zero(b.dim(), b.dim());
  for (Index j = 0; j < b.dim(); ++j) m.row[j] = b.mul(label, j);
  return m;
}

SparseMat lambda_matrix(const BasisAlgebra& b, const Element& x) {
  SparseMat m = SparseMat::zero(b.dim(), b.dim());
  for (Index j = 0; j < b.dim(); ++j)
    m.row[j] = (x * Element::basis(&b, j)).coeffs();
  return m;
}

std::vector<Scalar> exact_gram_diagonal(const BasisAlgebra& b, bool check_offdiag) {
  std::vector<Scalar> diag(b.dim());
  for (Index i = 0; i < b.dim(); ++i) {
    auto [is, ic] = b.star(i);
    if (check_offdiag) {
      for (Index j = 0; j < b.dim(); ++j) {
        Scalar v = ic * b.state_of(b.mul(is, j));
        if (i == j)
          diag[i] = v;
        else if (!v.is_zero())
          throw BasicError("state gram is not diagonal");
      }
    } else {
      diag[i] = ic * b.state_of(b.mul(is, i));
    }
    if (diag[i].is_zero()) throw BasicError("state gram is degenerate");
  }
  return diag;
}

SparseMat op_adjoint(const BasisAlgebra& b, const std::vector<Scalar>& gram_diag,
                     const SparseMat& m) {
  // <A e_j, e_i> = conj(A[i][j]) g_i ... adjoint entries
  // A†[i][j] = (g_j / g_i) conj(A[j][i]); rows are images.
  SparseMat out = SparseMat::zero(m.rows, m.cols);
  for (Index j = 0; j < m.rows; ++j)
    for (const auto& [i, c] : m.row[j]) {
      Scalar v = (gram_diag[i] * gram_diag[j].inv()) * c.conj();
      out.row[i].add_term(j, v);
    }
  return out;
}

JonesProjectionResult jones_projection(const ExpectationSetup& setup,
                                       const SweepOptions& opt) {
  JonesProjectionResult res;
  res.e = setup.map;
  const BasisAlgebra& B = *setup.domain;
  Index n = B.dim();
  res.checks.add("jones-idempotent", res.e.compose(res.e) == res.e, "");
  // Adjointability for the A-valued inner product <x,y> = Γ(x*y):
  // Γ((Γx)* y) = Γ(x* Γ(y)).
  {
    Sweep sw(opt, {n, n});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      Element x = Element::basis(&B, t[0]);
      Element y = Element::basis(&B, t[1]);
      Element ex(&B, res.e.row[t[0]]);
      Element ey(&B, res.e.row[t[1]]);
      Element lhs(&B, res.e.apply((ex.star() * y).coeffs()));
      Element rhs(&B, res.e.apply((x.star() * ey).coeffs()));
      return lhs == rhs;
    });
    res.checks.add(std::string("jones-adjointable[") + sw.mode() + "]", !bad,
                   bad ? "(" + B.label_name((*bad)[0]) + "," + B.label_name((*bad)[1]) + ")"
                       : "");
  }
  // Lemma 2.2(2): {T : e λ(T) = λ(T) e} equals span(A) exactly.
  {
    SparseMat sys;
    sys.cols = n;
    std::vector<std::vector<SparseVec::Term>> eq(n * n);
    for (Index i = 0; i < n; ++i) {
      SparseMat li = lambda_matrix(B, i);
      SparseMat diff = res.e.compose(li);
      SparseMat other = li.compose(res.e);
      for (Index j = 0; j < n; ++j) {
        SparseVec d = diff.row[j] - other.row[j];
        for (const auto& [k, c] : d) eq[j * n + k].push_back({i, c});
      }
    }
    for (auto& row : eq)
      if (!row.empty()) sys.row.push_back(SparseVec::collect(std::move(row)));
    sys.rows = static_cast<Index>(sys.row.size());
    std::vector<SparseVec> commutant = kernel_basis(sys);
    bool ok = spans_equal(commutant, setup.subalg, n);
    res.checks.add("jones-commutant-is-subalgebra", ok,
                   ok ? ""
                      : "commutant dim " + std::to_string(commutant.size()) +
                            " vs subalgebra dim " + std::to_string(setup.subalg.size()));
  }
  return res;
}

std::vector<SparseVec> operator_span_closure(const BasisAlgebra& b,
                                             const SparseMat& e) {
  Index n = b.dim();
  Echelon ech(n * n);
  std::vector<SparseMat> pool;
  std::vector<SparseMat> lam;
  lam.reserve(n);
  for (Index i = 0; i < n; ++i) lam.push_back(lambda_matrix(b, i));
  auto push = [&](const SparseMat& m) {
    if (ech.insert(flatten_map(m))) pool.push_back(m);
  };
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) push(lam[x].compose(e.compose(lam[y])));
  // Saturate products until no rank growth; only pairs touching the
  // newest generation need revisiting.
  size_t frontier = 0;
  while (frontier < pool.size()) {
    size_t upper = pool.size();
    for (size_t i = 0; i < upper; ++i)
      for (size_t j = frontier; j < upper; ++j) {
        push(pool[i].compose(pool[j]));
        push(pool[j].compose(pool[i]));
      }
    frontier = upper;
  }
  return ech.rows();
}

SparseMat SpanIso::sandwich_op(Index left, Index right) const {
  const BasisAlgebra& B = *domain;
  SparseMat out = SparseMat::zero(B.dim(), B.dim());
  Scalar scale(gsize);
  for (Index j = 0; j < B.dim(); ++j) {
    SparseVec v = B.mul(right, j);
    if (v.empty()) continue;
    v = e.apply(v);
    if (v.empty()) continue;
    SparseVec img;
    for (const auto& [k, c] : v) img.axpy(c, B.mul(left, k));
    img.scale(scale);
    out.row[j] = std::move(img);
  }
  return out;
}

Element SpanIso::forward_image(Index left, Index right) const {
  Element el = target->embed_carrier(Element::basis(domain, left));
  Element er = target->embed_carrier(Element::basis(domain, right));
  Element je = jones_element(*target);
  return el * je * er * Scalar(gsize);
}

namespace {

// Positions of the four sites of a basic-shape window.
struct BasicShape {
  int half1, int1, half2, int2;  // positions 0..3
};

BasicShape basic_shape_positions(const Window& w) {
  if (!w.is_basic_shape())
    throw BasicError("wrong-window: need the 4-site basic window shape");
  return {0, 1, 2, 3};
}

}  // namespace

std::pair<Index, Index> phi_sandwich(const CrossedAlgebra& fx, Index target) {
  const auto* f = dynamic_cast<const FieldAlgebra*>(&fx.carrier());
  if (f == nullptr) throw BasicError("phi needs a field-algebra carrier");
  if (fx.hopf().kind != HopfAlgebra::Kind::Double)
    throw BasicError("phi needs a crossed product over D(G)");
  BasicShape pos = basic_shape_positions(f->window());
  const FiniteGroup& g = f->group();
  int n = g.n;
  auto [mlab, dlab] = fx.unlab(target);
  std::vector<int> m = f->decode(mlab);
  int g1 = m[pos.int1], g2 = m[pos.int2];
  int h1 = m[pos.half1], h2 = m[pos.half2];
  int gg = static_cast<int>(dlab / n), hh = static_cast<int>(dlab % n);
  // left  = δ_{g1}(1) δ_{g2}(2) ρ_{h1}(1/2) ρ_{h2 g}(3/2)
  std::vector<int> left(4);
  left[pos.int1] = g1;
  left[pos.int2] = g2;
  left[pos.half1] = h1;
  left[pos.half2] = g.mul(h2, gg);
  // right = δ_{h^-1 h1^-1 g1}(1) δ_{h^-1 g^-1 h2^-1 h1^-1 g2}(2)
  //         ρ_u(1/2) ρ_{h^-1 g^-1 h}(3/2)
  std::vector<int> right(4);
  right[pos.int1] = g.mul(g.inv[hh], g.mul(g.inv[h1], g1));
  right[pos.int2] = g.mul(
      g.inv[hh], g.mul(g.inv[gg], g.mul(g.inv[h2], g.mul(g.inv[h1], g2))));
  right[pos.half1] = g.unit;
  right[pos.half2] = g.conjugate(g.inv[hh], g.inv[gg]);
  return {f->encode(left), f->encode(right)};
}

SpanIso build_phi_iso(const std::shared_ptr<const CrossedAlgebra>& fx,
                      const ConditionalExpectation& e_map) {
  const auto* f = dynamic_cast<const FieldAlgebra*>(&fx->carrier());
  if (f == nullptr) throw BasicError("phi needs a field-algebra carrier");
  SpanIso iso;
  iso.target = fx.get();
  iso.domain = f;
  iso.e = e_map.map;
  iso.gsize = f->group().n;
  iso.sandwich.resize(fx->dim());
  iso.w.resize(fx->dim());
  for (Index L = 0; L < fx->dim(); ++L) {
    iso.sandwich[L] = phi_sandwich(*fx, L);
    iso.w[L] = iso.sandwich_op(iso.sandwich[L].first, iso.sandwich[L].second);
  }
  return iso;
}

ValidationReport verify_phi_sampled(const std::shared_ptr<const CrossedAlgebra>& fx,
                                    const ConditionalExpectation& e_map, int samples,
                                    std::uint64_t seed) {
  ValidationReport rep;
  const auto* f = dynamic_cast<const FieldAlgebra*>(&fx->carrier());
  if (f == nullptr) throw BasicError("phi needs a field-algebra carrier");
  SpanIso iso;
  iso.target = fx.get();
  iso.domain = f;
  iso.e = e_map.map;
  iso.gsize = f->group().n;
  Index d = fx->dim();
  std::mt19937_64 rng(seed);
  auto w_of = [&](Index L) {
    auto [l, r] = phi_sandwich(*fx, L);
    return iso.sandwich_op(l, r);
  };
  std::vector<Scalar> gram = exact_gram_diagonal(*f, /*check_offdiag=*/false);
  bool pre_ok = true, mul_ok = true, star_ok = true;
  std::string wit_pre, wit_mul, wit_star;
  for (int s = 0; s < samples; ++s) {
    Index i = static_cast<Index>(rng() % static_cast<std::uint64_t>(d));
    Index j = static_cast<Index>(rng() % static_cast<std::uint64_t>(d));
    if (pre_ok) {
      auto [l, r] = phi_sandwich(*fx, i);
      if (!(iso.forward_image(l, r) == Element::basis(fx.get(), i))) {
        pre_ok = false;
        wit_pre = fx->label_name(i);
      }
    }
    if (mul_ok) {
      SparseMat p = w_of(i).compose(w_of(j));
      SparseVec prod = fx->mul(i, j);
      SparseMat acc = SparseMat::zero(f->dim(), f->dim());
      for (const auto& [k, c] : prod) {
        SparseMat wk = w_of(k);
        for (Index col = 0; col < f->dim(); ++col) acc.row[col].axpy(c, wk.row[col]);
      }
      if (!(p == acc)) {
        mul_ok = false;
        wit_mul = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
    if (star_ok) {
      SparseMat adj = op_adjoint(*f, gram, w_of(i));
      auto [k, c] = fx->star(i);
      SparseMat want = w_of(k);
      for (auto& row : want.row) row.scale(c);
      if (!(adj == want)) {
        star_ok = false;
        wit_star = fx->label_name(i);
      }
    }
  }
  rep.add("iso-preimage-formula[sampled]", pre_ok, wit_pre);
  rep.add("iso-multiplicative[sampled]", mul_ok, wit_mul);
  rep.add("iso-star[sampled]", star_ok, wit_star);
  return rep;
}

SpanIso build_psi_iso(const std::shared_ptr<const CrossedAlgebra>& iter,
                      const ConditionalExpectation& e2_map) {
  const auto* fx = dynamic_cast<const CrossedAlgebra*>(&iter->carrier());
  if (fx == nullptr || iter->hopf().kind != HopfAlgebra::Kind::DualDouble)
    throw BasicError("psi needs the iterated crossed product");
  const auto* f = dynamic_cast<const FieldAlgebra*>(&fx->carrier());
  if (f == nullptr) throw BasicError("psi needs a field-algebra base");
  BasicShape pos = basic_shape_positions(f->window());
  const FiniteGroup& g = f->group();
  int n = g.n;
  SpanIso iso;
  iso.target = iter.get();
  iso.domain = fx;
  iso.e = e2_map.map;
  iso.gsize = n;
  iso.sandwich.resize(iter->dim());
  iso.w.resize(iter->dim());
  for (Index L = 0; L < iter->dim(); ++L) {
    auto [clab, dl] = iter->unlab(L);
    auto [mlab, dglab] = fx->unlab(clab);
    std::vector<int> m0 = f->decode(mlab);
    int g0 = static_cast<int>(dglab / n), h0 = static_cast<int>(dglab % n);
    int y0 = static_cast<int>(dl / n), x0 = static_cast<int>(dl % n);
    // X = m0 ⊗ (g0, h0 x0); Y = m_Y ⊗ (q^-1 g0 q y, x0^-1) with
    // q = h0 x0, y = x0^-1 y0 x0 and m_Y carrying trivial ρ slots.
    int q = g.mul(h0, x0);
    int y = g.conjugate(g.inv[x0], y0);
    int rho1 = m0[pos.half1];
    int rho12 = g.mul(m0[pos.half1], m0[pos.half2]);
    std::vector<int> my(4);
    my[pos.half1] = g.unit;
    my[pos.half2] = g.unit;
    my[pos.int1] = g.mul(g.inv[q], g.mul(g.inv[rho1], m0[pos.int1]));
    my[pos.int2] = g.mul(g.inv[q], g.mul(g.inv[rho12], m0[pos.int2]));
    int gy = g.mul(g.conjugate(g.inv[q], g0), y);
    Index left = fx->lab(mlab, static_cast<Index>(g0) * n + q);
    Index right = fx->lab(f->encode(my), static_cast<Index>(gy) * n + g.inv[x0]);
    iso.sandwich[L] = {left, right};
    iso.w[L] = iso.sandwich_op(left, right);
  }
  return iso;
}

ValidationReport verify_span_iso(const SpanIso& iso, const SpanIsoOptions& opt) {
  ValidationReport rep;
  const CrossedAlgebra& X = *iso.target;
  const BasisAlgebra& B = *iso.domain;
  Index d = X.dim();
  // Preimage formula: Φ(W_L) = basis L, computed on the crossed side.
  {
    bool ok = true;
    std::string wit;
    for (Index L = 0; L < d && ok; ++L) {
      Element img = iso.forward_image(iso.sandwich[L].first, iso.sandwich[L].second);
      if (!(img == Element::basis(&X, L))) {
        ok = false;
        wit = X.label_name(L);
      }
    }
    rep.add("iso-preimage-formula", ok, wit);
  }
  // Jones element is the image of e: Φ(e) = 1 ⊗ h_int, i.e. pulling the
  // jones element back along the sandwiches reproduces the matrix e.
  {
    Element je = jones_element(X);
    SparseMat acc = SparseMat::zero(B.dim(), B.dim());
    for (const auto& [L, c] : je.coeffs())
      for (Index j = 0; j < B.dim(); ++j) acc.row[j].axpy(c, iso.w[L].row[j]);
    bool ok = acc == iso.e;
    rep.add("iso-jones-image", ok, ok ? "" : "Φ^{-1}(1⊗h_int) != e");
  }
  // Unitality: the pullback of 1⊗1 is the identity operator.
  {
    SparseMat acc = SparseMat::zero(B.dim(), B.dim());
    for (const auto& [L, c] : X.unit())
      for (Index j = 0; j < B.dim(); ++j) acc.row[j].axpy(c, iso.w[L].row[j]);
    bool ok = acc == SparseMat::identity(B.dim());
    rep.add("iso-unital", ok, ok ? "" : "Φ^{-1}(1) != id");
  }
  // Exact rank: the pullback family is a basis, so Φ is bijective.
  if (opt.full_rank_check) {
    Echelon ech(B.dim() * B.dim());
    bool grew = true;
    for (Index L = 0; L < d && grew; ++L) grew = ech.insert(flatten_map(iso.w[L]));
    bool ok = grew && ech.rank() == d;
    rep.add("iso-bijective-rank", ok,
            ok ? "" : "pullback rank " + std::to_string(ech.rank()) + " < " +
                          std::to_string(d));
  }
  // Multiplicativity: W_i ∘ W_j matches the pullback of Φ(W_i)Φ(W_j).
  {
    Sweep sw(opt.sweep, {d, d});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      SparseMat p = iso.w[t[0]].compose(iso.w[t[1]]);
      SparseVec prod = X.mul(t[0], t[1]);
      if (prod.empty()) {
        for (const auto& r : p.row)
          if (!r.empty()) return false;
        return true;
      }
      if (prod.size() == 1) {
        const auto& [k, c] = prod.terms()[0];
        const SparseMat& wk = iso.w[k];
        for (Index j = 0; j < B.dim(); ++j) {
          SparseVec want = wk.row[j];
          want.scale(c);
          if (!(p.row[j] == want)) return false;
        }
        return true;
      }
      SparseMat acc = SparseMat::zero(B.dim(), B.dim());
      for (const auto& [k, c] : prod)
        for (Index j = 0; j < B.dim(); ++j) acc.row[j].axpy(c, iso.w[k].row[j]);
      return p == acc;
    });
    rep.add(std::string("iso-multiplicative[") + sw.mode() + "]", !bad,
            bad ? "(" + X.label_name((*bad)[0]) + ") · (" + X.label_name((*bad)[1]) + ")"
                : "");
  }
  // Star preservation: W_L† = s · W_K when (basis L)* = s · basis K.
  {
    std::vector<Scalar> gram = exact_gram_diagonal(B, B.dim() <= 1024);
    bool ok = true;
    std::string wit;
    for (Index L = 0; L < d && ok; ++L) {
      SparseMat adj = op_adjoint(B, gram, iso.w[L]);
      auto [K, s] = X.star(L);
      SparseMat want = iso.w[K];
      for (auto& r : want.row) r.scale(s);
      if (!(adj == want)) {
        ok = false;
        wit = X.label_name(L);
      }
    }
    rep.add("iso-star", ok, wit);
    // The trace-GNS adjoint agrees with the module-valued adjoint:
    // Γ((W x)* y) = Γ(x* (W† y)) on seeded samples.
    std::mt19937_64 rng(opt.sweep.seed);
    bool adj_ok = true;
    std::string adj_wit;
    for (int s2 = 0; s2 < opt.adjoint_samples && adj_ok; ++s2) {
      Index L = static_cast<Index>(rng() % static_cast<std::uint64_t>(d));
      Index xi = static_cast<Index>(rng() % static_cast<std::uint64_t>(B.dim()));
      Index yi = static_cast<Index>(rng() % static_cast<std::uint64_t>(B.dim()));
      SparseMat adj = op_adjoint(B, gram, iso.w[L]);
      Element wx(&B, iso.w[L].row[xi]);
      Element y = Element::basis(&B, yi);
      Element x = Element::basis(&B, xi);
      Element wy(&B, adj.row[yi]);
      SparseVec lhs = iso.e.apply((wx.star() * y).coeffs());
      SparseVec rhs = iso.e.apply((x.star() * wy).coeffs());
      if (!(lhs == rhs)) {
        adj_ok = false;
        adj_wit = "sample " + std::to_string(s2);
      }
    }
    rep.add("iso-adjoint-consistency[sampled]", adj_ok, adj_wit);
  }
  return rep;
}

DualExpectationResult dual_expectation(const SpanIso& iso, const SweepOptions& opt) {
  DualExpectationResult res;
  const CrossedAlgebra& X = *iso.target;
  const BasisAlgebra& B = *iso.domain;
  Index d = X.dim();
  Rational inv_g2 = frac(1, iso.gsize);
  inv_g2 /= iso.gsize;
  res.values.reserve(d);
  SparseMat on_crossed = SparseMat::zero(d, d);
  for (Index L = 0; L < d; ++L) {
    // Ẽ(W_L) = |G| · (1/|G|²) left·right = (1/|G|) left·right.
    Element lr = Element::basis(&B, iso.sandwich[L].first) *
                 Element::basis(&B, iso.sandwich[L].second);
    Element v = lr * Scalar(frac(1, iso.gsize));
    res.values.push_back(v);
    on_crossed.row[L] = X.embed_carrier(v).coeffs();
  }
  res.on_crossed.domain = &X;
  res.on_crossed.map = std::move(on_crossed);
  for (Index a = 0; a < B.dim(); ++a)
    res.on_crossed.range_basis.push_back(
        X.embed_carrier(Element::basis(&B, a)).coeffs());
  // Well-definedness: every sandwich λ(x) e λ(y) decomposes consistently.
  {
    Sweep sw(opt, {B.dim(), B.dim()});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      Element z = X.embed_carrier(Element::basis(&B, t[0])) * jones_element(X) *
                  X.embed_carrier(Element::basis(&B, t[1]));
      // Operator side: |G| λ(x) e λ(y) must equal |G| Σ c_L W_L.
      SparseMat v = iso.sandwich_op(t[0], t[1]);
      SparseMat acc = SparseMat::zero(B.dim(), B.dim());
      for (const auto& [L, c] : z.coeffs())
        for (Index j = 0; j < B.dim(); ++j)
          acc.row[j].axpy(c * Scalar(iso.gsize), iso.w[L].row[j]);
      if (!(v == acc)) return false;
      // Value side: (1/|G|²) x y = Σ c_L Ẽ(W_L).
      Element want = Element::basis(&B, t[0]) * Element::basis(&B, t[1]) *
                     Scalar(inv_g2);
      Element got = Element::zero(&B);
      for (const auto& [L, c] : z.coeffs()) got = got + res.values[L] * c;
      return want == got;
    });
    res.checks.add(std::string("dual-well-defined[") + sw.mode() + "]", !bad,
                   bad ? "(" + B.label_name((*bad)[0]) + "," + B.label_name((*bad)[1]) + ")"
                       : "");
  }
  return res;
}

CheckResult check_dual_matches_e2(const DualExpectationResult& de,
                                  const ConditionalExpectation& e2) {
  if (de.on_crossed.domain != e2.domain)
    return {"dual-matches-e2", false, "domain mismatch"};
  for (Index L = 0; L < e2.domain->dim(); ++L)
    if (!(de.on_crossed.map.row[L] == e2.map.row[L]))
      return {"dual-matches-e2", false, e2.domain->label_name(L)};
  return {"dual-matches-e2", true, ""};
}

ValidationReport quasi_basis_check(const BasisAlgebra& b, const SparseMat& gamma,
                                   const QuasiBasis& qb, const SweepOptions& opt) {
  ValidationReport rep;
  Index n = b.dim();
  Sweep sw(opt, {n});
  auto bad_left = sw.run([&](const std::vector<Index>& t) {
    Element x = Element::basis(&b, t[0]);
    Element acc = Element::zero(&b);
    for (const auto& [u, v] : qb.pairs) {
      Element inner(&b, gamma.apply((v * x).coeffs()));
      acc = acc + u * inner;
    }
    return acc == x;
  });
  rep.add(std::string("quasi-basis-left[") + sw.mode() + "]", !bad_left,
          bad_left ? b.label_name((*bad_left)[0]) : "");
  auto bad_right = sw.run([&](const std::vector<Index>& t) {
    Element x = Element::basis(&b, t[0]);
    Element acc = Element::zero(&b);
    for (const auto& [u, v] : qb.pairs) {
      Element inner(&b, gamma.apply((x * u).coeffs()));
      acc = acc + inner * v;
    }
    return acc == x;
  });
  rep.add(std::string("quasi-basis-right[") + sw.mode() + "]", !bad_right,
          bad_right ? b.label_name((*bad_right)[0]) : "");
  return rep;
}

Element quasi_index(const QuasiBasis& qb) {
  if (qb.pairs.empty()) throw BasicError("empty quasi-basis");
  Element acc = Element::zero(qb.pairs[0].first.parent());
  for (const auto& [u, v] : qb.pairs) acc = acc + u * v;
  return acc;
}

CheckResult check_index_central(const BasisAlgebra& b, const Element& index,
                                const SweepOptions& opt) {
  Sweep sw(opt, {b.dim()});
  auto bad = sw.run([&](const std::vector<Index>& t) {
    Element x = Element::basis(&b, t[0]);
    return index * x == x * index;
  });
  return {std::string("index-central[") + sw.mode() + "]", !bad,
          bad ? b.label_name((*bad)[0]) : ""};
}

QuasiBasis standard_quasi_basis(const SpanIso& phi, const FieldAlgebra& f, int k2) {
  if (k2 % 2 != 0 || !f.window().contains2(k2) || !f.window().contains2(k2 + 1))
    throw BasicError("bad-site: quasi-basis needs sites k and k+1/2 in the window");
  const CrossedAlgebra& X = *phi.target;
  const FiniteGroup& g = f.group();
  Element je = jones_element(X);
  Scalar g32 = Scalar(g.n) * Scalar::sqrt_of(g.n);  // |G|^{3/2}
  QuasiBasis qb;
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) {
      Element m = f.delta_gen(x, k2) * f.rho_gen(y, k2 + 1);
      Element u = X.embed_carrier(m) * je * g32;
      qb.pairs.push_back({u, u.star()});
    }
  return qb;
}

}  // namespace gspin
