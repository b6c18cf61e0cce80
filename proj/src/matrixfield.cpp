#include "gspin/matrixfield.hpp"

namespace gspin {

MatrixFieldAlgebra::MatrixFieldAlgebra(std::shared_ptr<const FieldAlgebra> base)
    : base_(std::move(base)), msize_(base_->group().n * base_->group().n) {}

std::shared_ptr<MatrixFieldAlgebra> matrix_field_algebra(
    const std::shared_ptr<const FieldAlgebra>& base) {
  return std::make_shared<MatrixFieldAlgebra>(base);
}

SparseVec MatrixFieldAlgebra::mul(Index i, Index j) const {
  Index fi = i / (msize_ * msize_);
  int mi = static_cast<int>((i % (msize_ * msize_)) / msize_);
  int mj = static_cast<int>(i % msize_);
  Index fj = j / (msize_ * msize_);
  int ni = static_cast<int>((j % (msize_ * msize_)) / msize_);
  int nj = static_cast<int>(j % msize_);
  if (mj != ni) return {};
  SparseVec prod = base_->mul(fi, fj);
  SparseVec out;
  for (const auto& [k, c] : prod) out.add_term(lab(k, mi, nj), c);
  return out;
}

std::pair<Index, Scalar> MatrixFieldAlgebra::star(Index i) const {
  Index fi = i / (msize_ * msize_);
  int mi = static_cast<int>((i % (msize_ * msize_)) / msize_);
  int mj = static_cast<int>(i % msize_);
  auto [fs, fc] = base_->star(fi);
  return {lab(fs, mj, mi), fc};
}

SparseVec MatrixFieldAlgebra::unit() const {
  SparseVec out;
  for (const auto& [f, c] : base_->unit())
    for (int d = 0; d < msize_; ++d) out.add_term(lab(f, d, d), c);
  return out;
}

std::string MatrixFieldAlgebra::label_name(Index i) const {
  Index fi = i / (msize_ * msize_);
  int mi = static_cast<int>((i % (msize_ * msize_)) / msize_);
  int mj = static_cast<int>(i % msize_);
  return base_->label_name(fi) + " \xE2\x8A\x97 E" + std::to_string(mi) + "," +
         std::to_string(mj);
}

std::string MatrixFieldAlgebra::name() const {
  return "M" + std::to_string(msize_) + "(" + base_->name() + ")";
}

Scalar MatrixFieldAlgebra::state(Index i) const {
  Index fi = i / (msize_ * msize_);
  int mi = static_cast<int>((i % (msize_ * msize_)) / msize_);
  int mj = static_cast<int>(i % msize_);
  if (mi != mj) return Scalar::zero();
  return base_->state(fi) * Scalar(frac(1, msize_));
}

Element MatrixFieldAlgebra::tensor(const Element& f, int mi, int mj) const {
  if (f.parent() != base_.get()) throw AlgebraError("parent-mismatch");
  SparseVec out;
  for (const auto& [k, c] : f.coeffs()) out.add_term(lab(k, mi, mj), c);
  return Element(this, std::move(out));
}

Element MatrixFieldAlgebra::order_op(int g, int x2, int mi, int mj) const {
  return tensor(base_->delta_gen(g, x2), mi, mj);
}

Element MatrixFieldAlgebra::disorder_op(int h, int l2, int ni, int nj) const {
  return tensor(base_->rho_gen(h, l2), ni, nj);
}

ValidationReport od_relations_check(const MatrixFieldAlgebra& mfa,
                                    const SweepOptions& opt) {
  ValidationReport rep;
  const FieldAlgebra& F = mfa.base();
  const FiniteGroup& g = F.group();
  int n = g.n;
  int ms = mfa.msize();
  std::vector<int> int_sites, half_sites;
  for (int s : F.window().sites2)
    (s % 2 == 0 ? int_sites : half_sites).push_back(s);
  Index nm = ms * ms;  // matrix-unit count
  auto unpackm = [&](Index m) {
    return std::pair<int, int>{static_cast<int>(m / ms), static_cast<int>(m % ms)};
  };
  // Same-site order products: O^g_M O^h_N = [g=h] O^g_{MN}.
  {
    Sweep sw(opt, {static_cast<Index>(int_sites.size()), n, n, nm, nm});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      int x2 = int_sites[t[0]];
      auto [mi, mj] = unpackm(t[3]);
      auto [ni, nj] = unpackm(t[4]);
      Element lhs = mfa.order_op(static_cast<int>(t[1]), x2, mi, mj) *
                    mfa.order_op(static_cast<int>(t[2]), x2, ni, nj);
      Element rhs = Element::zero(&mfa);
      if (t[1] == t[2] && mj == ni)
        rhs = mfa.order_op(static_cast<int>(t[1]), x2, mi, nj);
      return lhs == rhs;
    });
    rep.add(std::string("od-order-same-site[") + sw.mode() + "]", !bad,
            bad ? "site/els tuple" : "");
  }
  // Same-site disorder products: D^g_M D^h_N = D^{gh}_{MN}.
  {
    Sweep sw(opt, {static_cast<Index>(half_sites.size()), n, n, nm, nm});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      int l2 = half_sites[t[0]];
      auto [mi, mj] = unpackm(t[3]);
      auto [ni, nj] = unpackm(t[4]);
      Element lhs = mfa.disorder_op(static_cast<int>(t[1]), l2, mi, mj) *
                    mfa.disorder_op(static_cast<int>(t[2]), l2, ni, nj);
      Element rhs = Element::zero(&mfa);
      if (mj == ni)
        rhs = mfa.disorder_op(g.mul(static_cast<int>(t[1]), static_cast<int>(t[2])),
                              l2, mi, nj);
      return lhs == rhs;
    });
    rep.add(std::string("od-disorder-same-site[") + sw.mode() + "]", !bad,
            bad ? "site/els tuple" : "");
  }
  // Resolutions of the identity: Σ_g O^g_I(x) = I = D^u_I(l).
  {
    bool ok = true;
    std::string wit;
    Element one = Element::unit(&mfa);
    for (int x2 : int_sites) {
      Element acc = Element::zero(&mfa);
      for (int gg = 0; gg < n; ++gg)
        for (int d = 0; d < ms; ++d) acc = acc + mfa.order_op(gg, x2, d, d);
      if (!(acc == one)) {
        ok = false;
        wit = "order resolution at " + site2_name(x2);
        break;
      }
    }
    for (int l2 : half_sites) {
      Element acc = Element::zero(&mfa);
      for (int d = 0; d < ms; ++d) acc = acc + mfa.disorder_op(g.unit, l2, d, d);
      if (!(acc == one)) {
        ok = false;
        wit = "disorder unit at " + site2_name(l2);
        break;
      }
    }
    rep.add("od-identity-resolutions", ok, wit);
  }
  // Cross-site order commutation.
  {
    Sweep sw(opt, {static_cast<Index>(int_sites.size()),
                   static_cast<Index>(int_sites.size()), n, n, nm, nm});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      if (t[0] == t[1]) return true;
      int x2 = int_sites[t[0]], xp2 = int_sites[t[1]];
      auto [mi, mj] = unpackm(t[4]);
      auto [ni, nj] = unpackm(t[5]);
      Element lhs = mfa.order_op(static_cast<int>(t[2]), x2, mi, mj) *
                    mfa.order_op(static_cast<int>(t[3]), xp2, ni, nj);
      Element rhs = mfa.order_op(static_cast<int>(t[3]), xp2, mi, mj) *
                    mfa.order_op(static_cast<int>(t[2]), x2, ni, nj);
      return lhs == rhs;
    });
    rep.add(std::string("od-order-cross-site[") + sw.mode() + "]", !bad,
            bad ? "cross-site tuple" : "");
  }
  // Disorder–order exchange with the l < x twist.
  {
    Sweep sw(opt, {static_cast<Index>(half_sites.size()),
                   static_cast<Index>(int_sites.size()), n, n, nm, nm});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      int l2 = half_sites[t[0]], x2 = int_sites[t[1]];
      int gg = static_cast<int>(t[2]), hh = static_cast<int>(t[3]);
      auto [mi, mj] = unpackm(t[4]);
      auto [ni, nj] = unpackm(t[5]);
      Element lhs = mfa.disorder_op(gg, l2, mi, mj) * mfa.order_op(hh, x2, ni, nj);
      Element rhs = l2 < x2 ? mfa.order_op(g.mul(gg, hh), x2, mi, mj) *
                                  mfa.disorder_op(gg, l2, ni, nj)
                            : mfa.order_op(hh, x2, mi, mj) *
                                  mfa.disorder_op(gg, l2, ni, nj);
      return lhs == rhs;
    });
    rep.add(std::string("od-exchange[") + sw.mode() + "]", !bad,
            bad ? "exchange tuple" : "");
  }
  // Disorder braiding across sites.
  {
    Sweep sw(opt, {static_cast<Index>(half_sites.size()),
                   static_cast<Index>(half_sites.size()), n, n, nm, nm});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      if (t[0] == t[1]) return true;
      int l2 = half_sites[t[0]], lp2 = half_sites[t[1]];
      int gg = static_cast<int>(t[2]), hh = static_cast<int>(t[3]);
      auto [mi, mj] = unpackm(t[4]);
      auto [ni, nj] = unpackm(t[5]);
      Element lhs = mfa.disorder_op(gg, l2, mi, mj) * mfa.disorder_op(hh, lp2, ni, nj);
      Element rhs =
          l2 > lp2 ? mfa.disorder_op(hh, lp2, mi, mj) *
                         mfa.disorder_op(g.conjugate(g.inv[hh], gg), l2, ni, nj)
                   : mfa.disorder_op(g.conjugate(gg, hh), lp2, mi, mj) *
                         mfa.disorder_op(gg, l2, ni, nj);
      return lhs == rhs;
    });
    rep.add(std::string("od-braiding[") + sw.mode() + "]", !bad,
            bad ? "braiding tuple" : "");
  }
  // Star rules.
  {
    Sweep sw(opt, {static_cast<Index>(int_sites.size()), n, nm});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      auto [mi, mj] = unpackm(t[2]);
      Element lhs = mfa.order_op(static_cast<int>(t[1]), int_sites[t[0]], mi, mj).star();
      Element rhs = mfa.order_op(static_cast<int>(t[1]), int_sites[t[0]], mj, mi);
      return lhs == rhs;
    });
    rep.add(std::string("od-order-star[") + sw.mode() + "]", !bad, bad ? "order star" : "");
    Sweep sw2(opt, {static_cast<Index>(half_sites.size()), n, nm});
    auto bad2 = sw2.run([&](const std::vector<Index>& t) {
      auto [ni, nj] = unpackm(t[2]);
      Element lhs =
          mfa.disorder_op(static_cast<int>(t[1]), half_sites[t[0]], ni, nj).star();
      Element rhs = mfa.disorder_op(g.inv[static_cast<int>(t[1])], half_sites[t[0]],
                                    nj, ni);
      return lhs == rhs;
    });
    rep.add(std::string("od-disorder-star[") + sw2.mode() + "]", !bad2,
            bad2 ? "disorder star" : "");
  }
  return rep;
}

TakaiReport takai_dimension_check(const CrossedAlgebra& iter,
                                  const MatrixFieldAlgebra& mfa) {
  TakaiReport rep;
  const FieldAlgebra& F = mfa.base();
  if (F.window().count() % 2 != 0) {
    rep.applicable = false;
    rep.notice = "window has an odd site count; base is not a full matrix algebra";
    std::vector<SparseVec> center = center_basis(F);
    rep.notice += " (center dim " + std::to_string(center.size()) + ")";
    return rep;
  }
  rep.iterated_dim = iter.dim();
  rep.matrix_field_dim = mfa.dim();
  rep.dims_match = rep.iterated_dim == rep.matrix_field_dim;
  // Generating sets: embedded factors generate a crossed product; the
  // base and the matrix units generate the amplification.
  {
    std::vector<Element> gens;
    const auto* fx = dynamic_cast<const CrossedAlgebra*>(&iter.carrier());
    if (fx == nullptr) throw AlgebraError("takai needs the iterated crossed product");
    const BasisAlgebra& f = fx->carrier();
    for (Index i = 0; i < f.dim(); ++i)
      gens.push_back(iter.embed_carrier(fx->embed_carrier(Element::basis(&f, i))));
    for (Index h = 0; h < fx->hopf().dim(); ++h)
      gens.push_back(iter.embed_carrier(fx->embed_hopf(SparseVec::unit_vec(h))));
    for (Index d = 0; d < iter.hopf().dim(); ++d)
      gens.push_back(iter.embed_hopf(SparseVec::unit_vec(d)));
    rep.iterated_center_trivial = center_is_trivial(iter, gens);
  }
  {
    std::vector<Element> gens;
    for (Index i = 0; i < F.dim(); ++i)
      gens.push_back(mfa.tensor(Element::basis(&F, i), 0, 0));
    Element one = Element::unit(&F);
    for (int a = 0; a < mfa.msize(); ++a)
      for (int b = 0; b < mfa.msize(); ++b) gens.push_back(mfa.tensor(one, a, b));
    rep.matrix_field_center_trivial = center_is_trivial(mfa, gens);
  }
  return rep;
}

std::vector<TowerLevel> tower(const TowerInput& in, int depth) {
  if (depth > 4) throw AlgebraError("depth-exceeded: tower is desk-scale, depth <= 4");
  std::vector<TowerLevel> out;
  long g2 = 0;
  {
    TowerLevel l0;
    l0.level = 0;
    l0.description = in.f->name();
    l0.dim = in.f->dim();
    l0.expectation_status = "-";
    l0.iso_status = "-";
    out.push_back(l0);
    int n = in.f->group().n;
    g2 = static_cast<long>(n) * n;
  }
  if (depth >= 1 && in.fxd != nullptr) {
    TowerLevel l1;
    l1.level = 1;
    l1.description = in.fxd->name();
    l1.dim = in.fxd->dim();
    l1.expectation_status = in.e2 != nullptr ? "pass" : "-";
    l1.iso_status = "-";
    out.push_back(l1);
  }
  if (depth >= 2 && in.iter != nullptr) {
    TowerLevel l2;
    l2.level = 2;
    l2.description = in.iter->name();
    l2.dim = in.iter->dim();
    l2.expectation_status = in.e3 != nullptr ? "pass" : "-";
    l2.iso_status = in.psi_checks != nullptr
                        ? (in.psi_checks->all_pass() ? "pass" : "fail")
                        : "-";
    out.push_back(l2);
  }
  for (int lvl = 3; lvl <= depth; ++lvl) {
    TowerLevel l;
    l.level = lvl;
    l.description = "M" + std::to_string(g2) + "^" + std::to_string(lvl - 1) +
                    " amplification (dimension bookkeeping)";
    l.dim = out.back().dim * g2;
    l.expectation_status = "-";
    l.iso_status = "-";
    out.push_back(l);
  }
  return out;
}

}  // namespace gspin
