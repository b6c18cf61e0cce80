#include "gspin/hopf.hpp"

namespace gspin {

SparseVec HopfAlgebra::delta(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [i, c] : x) out.axpy(c, coproduct[i]);
  return out;
}

Scalar HopfAlgebra::eps(const SparseVec& x) const {
  Scalar s;
  for (const auto& [i, c] : x) s += c * counit[i];
  return s;
}

SparseVec HopfAlgebra::antipode_of(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [i, c] : x) out.axpy(c, antipode[i]);
  return out;
}

SparseVec HopfAlgebra::tensor_mul(const SparseVec& u, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [p, cp] : u) {
    auto [l1, r1] = unpack(p);
    for (const auto& [q, cq] : v) {
      auto [l2, r2] = unpack(q);
      Scalar c = cp * cq;
      SparseVec left = alg->mul(l1, l2);
      if (left.empty()) continue;
      SparseVec right = alg->mul(r1, r2);
      if (right.empty()) continue;
      for (const auto& [a, ca] : left)
        for (const auto& [b, cb] : right) out.add_term(pack(a, b), c * ca * cb);
    }
  }
  return out;
}

SparseVec HopfAlgebra::tensor_star(const SparseVec& u) const {
  SparseVec out;
  for (const auto& [p, c] : u) {
    auto [l, r] = unpack(p);
    auto [ls, lc] = alg->star(l);
    auto [rs, rc] = alg->star(r);
    out.add_term(pack(ls, rs), c.conj() * lc * rc);
  }
  return out;
}

SparseVec HopfAlgebra::tensor_unit() const {
  SparseVec u = alg->unit();
  SparseVec out;
  for (const auto& [i, ci] : u)
    for (const auto& [j, cj] : u) out.add_term(pack(i, j), ci * cj);
  return out;
}

std::string HopfAlgebra::pair_name(Index i) const {
  if (group) {
    int n = group->n;
    Index a = i / n, b = i % n;
    if (kind == Kind::DualDouble)
      return "(" + group->names[a] + ",\xCE\xB4" + group->names[b] + ")";
    return "(" + group->names[a] + "," + group->names[b] + ")";
  }
  return alg->label_name(i);
}

namespace {

std::shared_ptr<TableAlgebra> double_algebra(const FiniteGroup& g) {
  int n = g.n;
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < n; ++h)
      labels.push_back("U[" + g.names[a] + "]V[" + g.names[h] + "]");
  auto alg = std::make_shared<TableAlgebra>("D(" + std::to_string(n) + ")",
                                            std::move(labels));
  auto lab = [n](int a, int h) { return static_cast<Index>(a * n + h); };
  // (g1,h1)(g2,h2) = [g1 h1 = h1 g2] (g1, h1 h2)
  for (int g1 = 0; g1 < n; ++g1)
    for (int h1 = 0; h1 < n; ++h1)
      for (int g2 = 0; g2 < n; ++g2)
        for (int h2 = 0; h2 < n; ++h2)
          if (g.mul(g1, h1) == g.mul(h1, g2))
            alg->set_product(lab(g1, h1), lab(g2, h2),
                             SparseVec::unit_vec(lab(g1, g.mul(h1, h2))));
  SparseVec unit;
  for (int a = 0; a < n; ++a) unit.add_term(lab(a, g.unit), Scalar::one());
  alg->set_unit(std::move(unit));
  // (g,h)* = (h^-1 g h, h^-1)
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < n; ++h)
      alg->set_star(lab(a, h), lab(g.conjugate(g.inv[h], a), g.inv[h]), Scalar::one());
  // Haar-type trace, faithful on D(G).
  std::vector<Scalar> phi(static_cast<size_t>(n) * n, Scalar::zero());
  for (int a = 0; a < n; ++a) phi[lab(a, g.unit)] = Scalar(frac(1, n));
  alg->set_state(std::move(phi));
  return alg;
}

}  // namespace

HopfAlgebra quantum_double(const FiniteGroup& g) {
  ValidationReport v = validate_group(g);
  if (!v.all_pass()) throw HopfError("invalid-group: " + v.first_failure());
  int n = g.n;
  HopfAlgebra h;
  h.alg = double_algebra(g);
  h.kind = HopfAlgebra::Kind::Double;
  h.group = g;
  auto lab = [n](int a, int b) { return static_cast<Index>(a * n + b); };
  Index d = h.dim();
  h.coproduct.resize(d);
  h.counit.resize(d);
  h.antipode.resize(d);
  for (int a = 0; a < n; ++a)
    for (int hh = 0; hh < n; ++hh) {
      Index i = lab(a, hh);
      // Δ(g,h) = Σ_t (t,h) ⊗ (t^-1 g, h)
      std::vector<SparseVec::Term> terms;
      for (int t = 0; t < n; ++t)
        terms.push_back({h.pack(lab(t, hh), lab(g.mul(g.inv[t], a), hh)), Scalar::one()});
      h.coproduct[i] = SparseVec::collect(std::move(terms));
      h.counit[i] = a == g.unit ? Scalar::one() : Scalar::zero();
      // S(g,h) = (h^-1 g^-1 h, h^-1)
      h.antipode[i] = SparseVec::unit_vec(
          lab(g.conjugate(g.inv[hh], g.inv[a]), g.inv[hh]));
    }
  SparseVec integral;
  for (int t = 0; t < n; ++t)
    integral.add_term(lab(g.unit, t), Scalar(frac(1, n)));
  h.integral = std::move(integral);
  return h;
}

HopfAlgebra dual_double_explicit(const FiniteGroup& g) {
  ValidationReport v = validate_group(g);
  if (!v.all_pass()) throw HopfError("invalid-group: " + v.first_failure());
  int n = g.n;
  std::vector<std::string> labels;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      labels.push_back("(" + g.names[y] + ",\xCE\xB4" + g.names[x] + ")");
  auto alg = std::make_shared<TableAlgebra>("D(" + std::to_string(n) + ")^",
                                            std::move(labels));
  auto lab = [n](int y, int x) { return static_cast<Index>(y * n + x); };
  // (y,δx)(w,δz) = [x=z] (yw, δx)
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      for (int w = 0; w < n; ++w)
        alg->set_product(lab(y, x), lab(w, x), SparseVec::unit_vec(lab(g.mul(y, w), x)));
  SparseVec unit;
  for (int x = 0; x < n; ++x) unit.add_term(lab(g.unit, x), Scalar::one());
  alg->set_unit(std::move(unit));
  // (y,δx)* = (y^-1, δx)
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) alg->set_star(lab(y, x), lab(g.inv[y], x), Scalar::one());
  std::vector<Scalar> phi(static_cast<size_t>(n) * n, Scalar::zero());
  for (int x = 0; x < n; ++x) phi[lab(g.unit, x)] = Scalar(frac(1, n));
  alg->set_state(std::move(phi));

  HopfAlgebra h;
  h.alg = std::move(alg);
  h.kind = HopfAlgebra::Kind::DualDouble;
  h.group = g;
  Index d = h.dim();
  h.coproduct.resize(d);
  h.counit.resize(d);
  h.antipode.resize(d);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      Index i = lab(y, x);
      // Δ~(y,δx) = Σ_t (y, δ_{t^-1}) ⊗ (t y t^-1, δ_{t x})
      std::vector<SparseVec::Term> terms;
      for (int t = 0; t < n; ++t)
        terms.push_back({h.pack(lab(y, g.inv[t]), lab(g.conjugate(t, y), g.mul(t, x))),
                         Scalar::one()});
      h.coproduct[i] = SparseVec::collect(std::move(terms));
      h.counit[i] = x == g.unit ? Scalar::one() : Scalar::zero();
      // S~(y,δx) = (x^-1 y^-1 x, δ_{x^-1})
      h.antipode[i] = SparseVec::unit_vec(
          lab(g.conjugate(g.inv[x], g.inv[y]), g.inv[x]));
    }
  SparseVec integral;
  for (int y = 0; y < n; ++y)
    integral.add_term(lab(y, g.unit), Scalar(frac(1, n)));
  h.integral = std::move(integral);
  return h;
}

std::pair<HopfAlgebra, Pairing> dual_hopf(const HopfAlgebra& h) {
  Index n = h.dim();
  const BasisAlgebra& A = *h.alg;
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back(A.label_name(i) + "^");
  auto dual = std::make_shared<TableAlgebra>(A.name() + "^", std::move(labels));
  // Multiplication transposes the coproduct:
  // phi_i phi_j = Σ_k  Δ(x_k)[(i,j)] phi_k.
  std::vector<std::vector<SparseVec::Term>> prods(n * n);
  for (Index k = 0; k < n; ++k)
    for (const auto& [p, c] : h.coproduct[k]) prods[p].push_back({k, c});
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      auto& raw = prods[h.pack(i, j)];
      if (!raw.empty()) dual->set_product(i, j, SparseVec::collect(std::move(raw)));
    }
  // Unit of the dual is the counit functional.
  SparseVec unit;
  for (Index i = 0; i < n; ++i) unit.add_term(i, h.counit[i]);
  dual->set_unit(std::move(unit));
  // <phi*, x> = conj(<phi, S(x)*>)  =>  phi_i* = Σ_j conj(S(x_j)*[i]) phi_j.
  {
    std::vector<std::vector<std::pair<Index, Scalar>>> star_terms(n);
    for (Index j = 0; j < n; ++j) {
      // S(x_j)* as a vector.
      SparseVec sj;
      for (const auto& [k, c] : h.antipode[j]) {
        auto [ks, kc] = A.star(k);
        sj.add_term(ks, c.conj() * kc);
      }
      for (const auto& [i, c] : sj) star_terms[i].push_back({j, c.conj()});
    }
    for (Index i = 0; i < n; ++i) {
      if (star_terms[i].size() != 1)
        throw HopfError("dual star is not a scaled label permutation");
      dual->set_star(i, star_terms[i][0].first, star_terms[i][0].second);
    }
  }

  HopfAlgebra out;
  out.alg = std::move(dual);
  out.kind = HopfAlgebra::Kind::Generic;
  out.coproduct.resize(n);
  out.counit.resize(n);
  out.antipode.resize(n);
  // Coproduct transposes multiplication: Δ~(phi_k)[(i,j)] = (x_i x_j)[k].
  {
    std::vector<std::vector<SparseVec::Term>> cop(n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (const auto& [k, c] : A.mul(i, j)) cop[k].push_back({out.pack(i, j), c});
    for (Index k = 0; k < n; ++k) out.coproduct[k] = SparseVec::collect(std::move(cop[k]));
  }
  // Counit evaluates against the unit of A.
  {
    SparseVec u = A.unit();
    for (Index i = 0; i < n; ++i) out.counit[i] = u.at(i);
  }
  // Antipode transposes S.
  {
    std::vector<std::vector<SparseVec::Term>> st(n);
    for (Index j = 0; j < n; ++j)
      for (const auto& [i, c] : h.antipode[j]) st[i].push_back({j, c});
    for (Index i = 0; i < n; ++i) out.antipode[i] = SparseVec::collect(std::move(st[i]));
  }
  // Integral of the dual when present in the catalogue sense: for D(G)
  // duals the caller compares against dual_double_explicit instead.
  Pairing p;
  p.left = nullptr;
  p.right = nullptr;
  p.value = [](Index i, Index j) {
    return i == j ? Scalar::one() : Scalar::zero();
  };
  return {std::move(out), std::move(p)};
}

ValidationReport verify_hopf_axioms(const HopfAlgebra& h, const SweepOptions& opt) {
  ValidationReport rep = verify_algebra_axioms(*h.alg, opt);
  Index n = h.dim();
  const BasisAlgebra& A = *h.alg;
  // Coassociativity over packed triples l*n^2 + m*n + r.
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < n && ok; ++i) {
      std::vector<SparseVec::Term> lhs, rhs;
      for (const auto& [p, c] : h.coproduct[i]) {
        auto [l, r] = h.unpack(p);
        for (const auto& [q, cq] : h.coproduct[l]) {
          auto [a, b] = h.unpack(q);
          lhs.push_back({(a * n + b) * n + r, c * cq});
        }
        for (const auto& [q, cq] : h.coproduct[r]) {
          auto [b, cc] = h.unpack(q);
          rhs.push_back({(l * n + b) * n + cc, c * cq});
        }
      }
      if (!(SparseVec::collect(std::move(lhs)) == SparseVec::collect(std::move(rhs)))) {
        ok = false;
        wit = A.label_name(i);
      }
    }
    rep.add("coassociativity", ok, wit);
  }
  // Counit laws (ε⊗id)Δ = id = (id⊗ε)Δ.
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < n && ok; ++i) {
      SparseVec left, right;
      for (const auto& [p, c] : h.coproduct[i]) {
        auto [l, r] = h.unpack(p);
        left.add_term(r, c * h.counit[l]);
        right.add_term(l, c * h.counit[r]);
      }
      SparseVec self = SparseVec::unit_vec(i);
      if (!(left == self && right == self)) {
        ok = false;
        wit = A.label_name(i);
      }
    }
    rep.add("counit-laws", ok, wit);
  }
  // Antipode convolution laws m(S⊗id)Δ = ιε = m(id⊗S)Δ.
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < n && ok; ++i) {
      SparseVec left, right;
      for (const auto& [p, c] : h.coproduct[i]) {
        auto [l, r] = h.unpack(p);
        for (const auto& [sl, sc] : h.antipode[l])
          for (const auto& [k, kc] : A.mul(sl, r)) left.add_term(k, c * sc * kc);
        for (const auto& [sr, sc] : h.antipode[r])
          for (const auto& [k, kc] : A.mul(l, sr)) right.add_term(k, c * sc * kc);
      }
      SparseVec target = A.unit();
      target.scale(h.counit[i]);
      if (!(left == target && right == target)) {
        ok = false;
        wit = A.label_name(i);
      }
    }
    rep.add("antipode-convolution", ok, wit);
  }
  // Δ is a *-algebra homomorphism.
  {
    Sweep sw(opt, {n, n});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      SparseVec prod;
      for (const auto& [k, c] : A.mul(t[0], t[1])) prod.axpy(c, h.coproduct[k]);
      SparseVec rhs = h.tensor_mul(h.coproduct[t[0]], h.coproduct[t[1]]);
      return prod == rhs;
    });
    rep.add(std::string("coproduct-multiplicative[") + sw.mode() + "]", !bad,
            bad ? "(" + A.label_name((*bad)[0]) + "," + A.label_name((*bad)[1]) + ")" : "");
  }
  {
    bool ok = h.delta(A.unit()) == h.tensor_unit();
    rep.add("coproduct-unital", ok, ok ? "" : "Δ(1) != 1⊗1");
  }
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < n && ok; ++i) {
      auto [is, ic] = A.star(i);
      SparseVec lhs = h.coproduct[is];
      lhs.scale(ic);
      if (!(lhs == h.tensor_star(h.coproduct[i]))) {
        ok = false;
        wit = A.label_name(i);
      }
    }
    rep.add("coproduct-star", ok, wit);
  }
  // ε is a *-homomorphism.
  {
    Sweep sw(opt, {n, n});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      Scalar lhs = h.eps(A.mul(t[0], t[1]));
      return lhs == h.counit[t[0]] * h.counit[t[1]];
    });
    rep.add(std::string("counit-multiplicative[") + sw.mode() + "]", !bad,
            bad ? "(" + A.label_name((*bad)[0]) + "," + A.label_name((*bad)[1]) + ")" : "");
    bool unital = h.eps(A.unit()) == Scalar::one();
    rep.add("counit-unital", unital, unital ? "" : "ε(1) != 1");
    bool star_ok = true;
    std::string wit;
    for (Index i = 0; i < n && star_ok; ++i) {
      auto [is, ic] = A.star(i);
      if (!(ic * h.counit[is] == h.counit[i].conj())) {
        star_ok = false;
        wit = A.label_name(i);
      }
    }
    rep.add("counit-star", star_ok, wit);
  }
  // Star–antipode compatibility S(S(x*)*) = x.
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < n && ok; ++i) {
      auto [is, ic] = A.star(i);
      SparseVec inner = h.antipode[is];
      inner.scale(ic);
      SparseVec inner_star;
      for (const auto& [k, c] : inner) {
        auto [ks, kc] = A.star(k);
        inner_star.add_term(ks, c.conj() * kc);
      }
      SparseVec res = h.antipode_of(inner_star);
      if (!(res == SparseVec::unit_vec(i))) {
        ok = false;
        wit = A.label_name(i);
      }
    }
    rep.add("star-antipode", ok, wit);
  }
  return rep;
}

bool verify_integral(const HopfAlgebra& h, const SparseVec& x) {
  const BasisAlgebra& A = *h.alg;
  Element xe(&A, x);
  if (!(h.eps(x) == Scalar::one())) return false;
  for (Index i = 0; i < h.dim(); ++i) {
    Element a = Element::basis(&A, i);
    Element want = xe * h.counit[i];
    if (!(a * xe == want && xe * a == want)) return false;
  }
  return true;
}

ValidationReport verify_pairing(const HopfAlgebra& dual, const HopfAlgebra& orig,
                                const Pairing& p) {
  ValidationReport rep;
  Index n = orig.dim();
  Index m = dual.dim();
  auto val = p.value;
  // Nondegeneracy: the pairing matrix has full rank.
  {
    SparseMat mat = SparseMat::zero(m, n);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < n; ++j) mat.row[i].add_term(j, val(i, j));
    bool ok = m == n && exact_rank(mat) == n;
    rep.add("pairing-nondegenerate", ok, ok ? "" : "pairing matrix is singular");
  }
  // <phi psi, x> = <phi ⊗ psi, Δ(x)>.
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < m && ok; ++i)
      for (Index j = 0; j < m && ok; ++j)
        for (Index x = 0; x < n; ++x) {
          Scalar lhs;
          for (const auto& [k, c] : dual.alg->mul(i, j)) lhs += c * val(k, x);
          Scalar rhs;
          for (const auto& [pk, c] : orig.coproduct[x]) {
            auto [l, r] = orig.unpack(pk);
            rhs += c * val(i, l) * val(j, r);
          }
          if (!(lhs == rhs)) {
            ok = false;
            wit = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                  std::to_string(x) + ")";
            break;
          }
        }
    rep.add("pairing-mul-vs-coproduct", ok, wit);
  }
  // <Δ~(phi), x⊗y> = <phi, xy>.
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < m && ok; ++i)
      for (Index x = 0; x < n && ok; ++x)
        for (Index y = 0; y < n; ++y) {
          Scalar lhs;
          for (const auto& [pk, c] : dual.coproduct[i]) {
            auto [l, r] = dual.unpack(pk);
            lhs += c * val(l, x) * val(r, y);
          }
          Scalar rhs;
          for (const auto& [k, c] : orig.alg->mul(x, y)) rhs += c * val(i, k);
          if (!(lhs == rhs)) {
            ok = false;
            wit = "(" + std::to_string(i) + "," + std::to_string(x) + "," +
                  std::to_string(y) + ")";
            break;
          }
        }
    rep.add("pairing-coproduct-vs-mul", ok, wit);
  }
  // Counits and units.
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < m && ok; ++i) {
      Scalar lhs = dual.counit[i];
      Scalar rhs;
      for (const auto& [k, c] : orig.alg->unit()) rhs += c * val(i, k);
      if (!(lhs == rhs)) {
        ok = false;
        wit = "counit at " + std::to_string(i);
      }
    }
    for (Index x = 0; x < n && ok; ++x) {
      Scalar lhs;
      for (const auto& [i, c] : dual.alg->unit()) lhs += c * val(i, x);
      if (!(lhs == orig.counit[x])) {
        ok = false;
        wit = "unit at " + std::to_string(x);
      }
    }
    rep.add("pairing-units", ok, wit);
  }
  // <S~(phi), x> = <phi, S(x)>.
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < m && ok; ++i)
      for (Index x = 0; x < n; ++x) {
        Scalar lhs;
        for (const auto& [k, c] : dual.antipode[i]) lhs += c * val(k, x);
        Scalar rhs;
        for (const auto& [k, c] : orig.antipode[x]) rhs += c * val(i, k);
        if (!(lhs == rhs)) {
          ok = false;
          wit = "(" + std::to_string(i) + "," + std::to_string(x) + ")";
          break;
        }
      }
    rep.add("pairing-antipode", ok, wit);
  }
  // <phi*, x> = conj(<phi, S(x)*>).
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < m && ok; ++i)
      for (Index x = 0; x < n; ++x) {
        auto [is, ic] = dual.alg->star(i);
        Scalar lhs = ic * val(is, x);
        Scalar rhs;
        for (const auto& [k, c] : orig.antipode[x]) {
          auto [ks, kc] = orig.alg->star(k);
          rhs += (c.conj() * kc) * val(i, ks);
        }
        if (!(lhs == rhs.conj())) {
          ok = false;
          wit = "(" + std::to_string(i) + "," + std::to_string(x) + ")";
          break;
        }
      }
    rep.add("pairing-star", ok, wit);
  }
  return rep;
}

ValidationReport hopf_structs_equal(const HopfAlgebra& a, const HopfAlgebra& b) {
  ValidationReport rep;
  bool dims = a.dim() == b.dim();
  rep.add("same-dimension", dims,
          dims ? "" : std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  if (!dims) return rep;
  Index n = a.dim();
  bool mul_ok = true, cop_ok = true, cu_ok = true, s_ok = true, star_ok = true,
       unit_ok = a.alg->unit() == b.alg->unit();
  std::string mw, cw, uw, sw2, stw;
  for (Index i = 0; i < n; ++i) {
    if (cop_ok && !(a.coproduct[i] == b.coproduct[i])) {
      cop_ok = false;
      cw = a.alg->label_name(i);
    }
    if (cu_ok && !(a.counit[i] == b.counit[i])) {
      cu_ok = false;
      uw = a.alg->label_name(i);
    }
    if (s_ok && !(a.antipode[i] == b.antipode[i])) {
      s_ok = false;
      sw2 = a.alg->label_name(i);
    }
    if (star_ok) {
      auto [ka, ca] = a.alg->star(i);
      auto [kb, cb] = b.alg->star(i);
      if (ka != kb || !(ca == cb)) {
        star_ok = false;
        stw = a.alg->label_name(i);
      }
    }
    for (Index j = 0; mul_ok && j < n; ++j)
      if (!(a.alg->mul(i, j) == b.alg->mul(i, j))) {
        mul_ok = false;
        mw = "(" + a.alg->label_name(i) + "," + a.alg->label_name(j) + ")";
      }
  }
  rep.add("same-multiplication", mul_ok, mw);
  rep.add("same-unit", unit_ok, unit_ok ? "" : "units differ");
  rep.add("same-coproduct", cop_ok, cw);
  rep.add("same-counit", cu_ok, uw);
  rep.add("same-antipode", s_ok, sw2);
  rep.add("same-star", star_ok, stw);
  return rep;
}

Element ModuleAction::apply(const SparseVec& hvec, const Element& x) const {
  SparseVec out;
  for (const auto& [h, ch] : hvec)
    for (const auto& [a, ca] : x.coeffs()) {
      Scalar c = ch * ca;
      if (!c.is_zero()) out.axpy(c, act(h, a));
    }
  return Element(carrier, std::move(out));
}

ValidationReport verify_module_algebra(const ModuleAction& m, const SweepOptions& opt) {
  ValidationReport rep;
  const HopfAlgebra& H = *m.hopf;
  const BasisAlgebra& A = *m.carrier;
  Index hn = H.dim();
  Index an = A.dim();
  // (ab)(T) = a(b(T))
  {
    Sweep sw(opt, {hn, hn, an});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      SparseVec ab = H.alg->mul(t[0], t[1]);
      Element lhs = m.apply(ab, Element::basis(&A, t[2]));
      Element rhs = m.apply(SparseVec::unit_vec(t[0]),
                            Element(&A, m.act(t[1], t[2])));
      return lhs == rhs;
    });
    rep.add(std::string("action-composition[") + sw.mode() + "]", !bad,
            bad ? "(" + H.alg->label_name((*bad)[0]) + "," + H.alg->label_name((*bad)[1]) +
                      "," + A.label_name((*bad)[2]) + ")"
                : "");
  }
  // a(T1 T2) = Σ a1(T1) a2(T2)
  {
    Sweep sw(opt, {hn, an, an});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      Element lhs = m.apply(SparseVec::unit_vec(t[0]),
                            Element(&A, A.mul(t[1], t[2])));
      Element rhs = Element::zero(&A);
      for (const auto& [p, c] : H.coproduct[t[0]]) {
        auto [l, r] = H.unpack(p);
        Element piece = Element(&A, m.act(l, t[1])) * Element(&A, m.act(r, t[2]));
        rhs = rhs + piece * c;
      }
      return lhs == rhs;
    });
    rep.add(std::string("action-product-law[") + sw.mode() + "]", !bad,
            bad ? "(" + H.alg->label_name((*bad)[0]) + "," + A.label_name((*bad)[1]) + "," +
                      A.label_name((*bad)[2]) + ")"
                : "");
  }
  // a(T*) = (S(a*)(T))*
  {
    Sweep sw(opt, {hn, an});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      auto [ts, tc] = A.star(t[1]);
      SparseVec lv = m.act(t[0], ts);
      lv.scale(tc);
      Element lhs(&A, std::move(lv));
      auto [as, ac] = H.alg->star(t[0]);
      SparseVec sa = H.antipode[as];
      sa.scale(ac);
      Element rhs = m.apply(sa, Element::basis(&A, t[1])).star();
      return lhs == rhs;
    });
    rep.add(std::string("action-star-law[") + sw.mode() + "]", !bad,
            bad ? "(" + H.alg->label_name((*bad)[0]) + "," + A.label_name((*bad)[1]) + ")"
                : "");
  }
  // Unit laws: h(1) = ε(h) 1 and 1_H acting as the identity.
  {
    bool ok = true;
    std::string wit;
    Element one = Element::unit(&A);
    for (Index i = 0; i < hn && ok; ++i) {
      if (!(m.apply(SparseVec::unit_vec(i), one) == one * H.counit[i])) {
        ok = false;
        wit = "h(1) fails at " + H.alg->label_name(i);
      }
    }
    SparseVec hu = H.alg->unit();
    for (Index j = 0; j < an && ok; ++j) {
      Element x = Element::basis(&A, j);
      if (!(m.apply(hu, x) == x)) {
        ok = false;
        wit = "1_H(T) fails at " + A.label_name(j);
      }
    }
    rep.add("action-unit-laws", ok, wit);
  }
  return rep;
}

std::vector<SparseVec> invariant_subalgebra(const ModuleAction& m) {
  const HopfAlgebra& H = *m.hopf;
  const BasisAlgebra& A = *m.carrier;
  Index an = A.dim();
  SparseMat sys;
  sys.cols = an;
  for (Index h = 0; h < H.dim(); ++h) {
    // Rows of act(h,·) - ε(h)·id, stacked by output coordinate.
    std::vector<std::vector<SparseVec::Term>> eq(an);
    for (Index j = 0; j < an; ++j) {
      SparseVec v = m.act(h, j);
      v.add_term(j, -H.counit[h]);
      for (const auto& [k, c] : v) eq[k].push_back({j, c});
    }
    for (auto& row : eq)
      if (!row.empty()) sys.row.push_back(SparseVec::collect(std::move(row)));
  }
  sys.rows = static_cast<Index>(sys.row.size());
  auto basis = kernel_basis(sys);
  // The invariants form a unital *-subalgebra; confirm closure exactly.
  Echelon ech(an);
  for (const auto& v : basis) ech.insert(v);
  for (size_t i = 0; i < basis.size(); ++i) {
    Element xi(&A, basis[i]);
    if (!ech.contains(xi.star().coeffs()))
      throw HopfError("invariant subalgebra not star-closed");
    for (size_t j = 0; j < basis.size(); ++j) {
      Element p = xi * Element(&A, basis[j]);
      if (!ech.contains(p.coeffs()))
        throw HopfError("invariant subalgebra not product-closed");
    }
  }
  return basis;
}

SparseMat integral_expectation(const ModuleAction& m) {
  if (!m.hopf->integral) throw HopfError("no-integral");
  const SparseVec& h = *m.hopf->integral;
  Index an = m.carrier->dim();
  SparseMat out = SparseMat::zero(an, an);
  for (Index j = 0; j < an; ++j) {
    SparseVec img;
    for (const auto& [i, c] : h) img.axpy(c, m.act(i, j));
    out.row[j] = std::move(img);
  }
  return out;
}

ConditionalExpectation integral_expectation_record(const ModuleAction& m) {
  ConditionalExpectation e;
  e.domain = m.carrier;
  e.map = integral_expectation(m);
  e.range_basis = invariant_subalgebra(m);
  // Idempotence and range = invariants are hard guarantees here.
  if (!(e.map.compose(e.map) == e.map))
    throw HopfError("integral expectation is not idempotent");
  std::vector<SparseVec> image;
  for (const auto& r : e.map.row) image.push_back(r);
  if (!spans_equal(image, e.range_basis, m.carrier->dim()))
    throw HopfError("integral expectation range differs from invariants");
  return e;
}

ValidationReport verify_conditional_expectation(const ConditionalExpectation& e,
                                                const std::vector<Scalar>& phi,
                                                const SweepOptions& opt, double tol,
                                                long radicand) {
  ValidationReport rep;
  const BasisAlgebra& B = *e.domain;
  Index n = B.dim();
  // Unital.
  {
    bool ok = e.map.apply(B.unit()) == B.unit();
    rep.add("expectation-unital", ok, ok ? "" : "E(I) != I");
  }
  // Idempotent.
  {
    bool ok = e.map.compose(e.map) == e.map;
    rep.add("expectation-idempotent", ok, ok ? "" : "E∘E != E");
  }
  // Range equals the recorded basis.
  {
    std::vector<SparseVec> image(e.map.row.begin(), e.map.row.end());
    bool ok = spans_equal(image, e.range_basis, n);
    rep.add("expectation-range", ok, ok ? "" : "image span differs from range basis");
  }
  // Bimodularity over (range, domain, range).
  {
    Index rn = static_cast<Index>(e.range_basis.size());
    Sweep sw(opt, {rn, n, rn});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      Element a(&B, e.range_basis[t[0]]);
      Element x = Element::basis(&B, t[1]);
      Element b(&B, e.range_basis[t[2]]);
      Element lhs = e.apply(a * x * b);
      Element rhs = a * e.apply(x) * b;
      return lhs == rhs;
    });
    rep.add(std::string("expectation-bimodular[") + sw.mode() + "]", !bad,
            bad ? "range indices (" + std::to_string((*bad)[0]) + "," +
                      B.label_name((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")"
                : "");
  }
  // Positivity: E(y*y) PSD on seeded samples.
  {
    std::mt19937_64 rng(opt.seed);
    bool ok = true;
    std::string wit;
    int count = std::max(opt.samples, 100);
    for (int s = 0; s < count && ok; ++s) {
      Element y = random_element(B, rng, 3, radicand);
      Element x = e.apply(y.star() * y);
      if (!(x == x.star())) {
        ok = false;
        wit = "E(y*y) not self-adjoint at sample " + std::to_string(s);
        break;
      }
      if (!is_positive(B, x, phi, tol)) {
        ok = false;
        wit = "E(y*y) not PSD at sample " + std::to_string(s);
      }
    }
    rep.add("expectation-positive[sampled]", ok, wit);
  }
  // Faithfulness: x ↦ (E(b_k* x))_k injective, exact early-exit rank.
  {
    Echelon ech(n);
    for (Index k = 0; k < n && ech.rank() < n; ++k) {
      auto [ks, kc] = B.star(k);
      // Rows of x ↦ E(b_k* x) stacked by output coordinate.
      std::vector<std::vector<SparseVec::Term>> eq(n);
      for (Index j = 0; j < n; ++j) {
        SparseVec prod = B.mul(ks, j);
        prod.scale(kc);
        SparseVec img = e.map.apply(prod);
        for (const auto& [c_idx, c] : img) eq[c_idx].push_back({j, c});
      }
      for (auto& row : eq) {
        if (row.empty()) continue;
        ech.insert(SparseVec::collect(std::move(row)));
        if (ech.rank() >= n) break;
      }
    }
    bool ok = ech.rank() == n;
    rep.add("expectation-faithful", ok,
            ok ? "" : "exact Gram rank " + std::to_string(ech.rank()) + " < " +
                          std::to_string(n));
  }
  return rep;
}

}  // namespace gspin
