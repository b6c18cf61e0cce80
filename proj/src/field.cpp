#include "gspin/field.hpp"

#include <algorithm>

namespace gspin {

Window Window::range2(int lo2, int hi2) {
  if (lo2 > hi2) throw FieldError("invalid-window: empty range");
  Window w;
  for (int s = lo2; s <= hi2; ++s) w.sites2.push_back(s);
  return w;
}

Window Window::of(std::vector<int> sites2) {
  std::sort(sites2.begin(), sites2.end());
  sites2.erase(std::unique(sites2.begin(), sites2.end()), sites2.end());
  if (sites2.empty()) throw FieldError("invalid-window: no sites");
  Window w;
  w.sites2 = std::move(sites2);
  return w;
}

bool Window::contains2(int s2) const {
  return std::binary_search(sites2.begin(), sites2.end(), s2);
}

int Window::int_site_count() const {
  int c = 0;
  for (int s : sites2)
    if (s % 2 == 0) ++c;
  return c;
}

int Window::half_site_count() const { return count() - int_site_count(); }

bool Window::is_basic_shape() const {
  if (sites2.size() != 4) return false;
  int a = sites2[0];
  if (a % 2 == 0) return false;  // must start on a half site
  return sites2[1] == a + 1 && sites2[2] == a + 2 && sites2[3] == a + 3;
}

std::string site2_name(int s2) {
  if (s2 % 2 == 0) return std::to_string(s2 / 2);
  return std::to_string(s2) + "/2";
}

std::string Window::describe() const {
  std::string out = "{";
  for (size_t i = 0; i < sites2.size(); ++i) {
    if (i) out += ",";
    out += site2_name(sites2[i]);
  }
  return out + "}";
}

FieldAlgebra::FieldAlgebra(FiniteGroup g, Window w)
    : group_(std::move(g)), window_(std::move(w)) {
  if (window_.empty()) throw FieldError("invalid-window: no sites");
  radicand_ = split_square(group_.n).second;
  dim_ = 1;
  radix_.resize(window_.count());
  for (int k = 0; k < window_.count(); ++k) {
    radix_[k] = dim_;
    dim_ *= group_.n;
  }
  if (dim_ <= 1024) mul_cache_.resize(static_cast<size_t>(dim_) * dim_);
}

std::shared_ptr<FieldAlgebra> field_algebra(const FiniteGroup& g, const Window& w) {
  return std::make_shared<FieldAlgebra>(g, w);
}

Index FieldAlgebra::encode(const std::vector<int>& assign) const {
  if (static_cast<int>(assign.size()) != window_.count())
    throw FieldError("assignment length mismatch");
  Index label = 0;
  for (size_t k = 0; k < assign.size(); ++k) label += radix_[k] * assign[k];
  return label;
}

std::vector<int> FieldAlgebra::decode(Index label) const {
  std::vector<int> assign(window_.count());
  for (int k = 0; k < window_.count(); ++k) {
    assign[k] = static_cast<int>(label % group_.n);
    label /= group_.n;
  }
  return assign;
}

int FieldAlgebra::site_pos(int s2) const {
  auto it = std::lower_bound(window_.sites2.begin(), window_.sites2.end(), s2);
  if (it == window_.sites2.end() || *it != s2) return -1;
  return static_cast<int>(it - window_.sites2.begin());
}

std::vector<GenLetter> FieldAlgebra::word_of(Index label) const {
  std::vector<int> a = decode(label);
  std::vector<GenLetter> word;
  for (int k = 0; k < window_.count(); ++k)
    if (window_.sites2[k] % 2 == 0) word.push_back({window_.sites2[k], a[k]});
  for (int k = 0; k < window_.count(); ++k)
    if (window_.sites2[k] % 2 != 0) word.push_back({window_.sites2[k], a[k]});
  return word;
}

std::vector<GenLetter> FieldAlgebra::word_of_rho_first(Index label) const {
  // m = D·R = R·D' with each δ_g(x) replaced by δ_{P(x)^{-1} g}(x), where
  // P(x) multiplies the ρ entries at sites below x in ascending order.
  std::vector<int> a = decode(label);
  std::vector<GenLetter> word;
  for (int k = 0; k < window_.count(); ++k)
    if (window_.sites2[k] % 2 != 0) word.push_back({window_.sites2[k], a[k]});
  for (int k = 0; k < window_.count(); ++k) {
    if (window_.sites2[k] % 2 != 0) continue;
    int p = group_.unit;
    for (int j = 0; j < window_.count(); ++j)
      if (window_.sites2[j] % 2 != 0 && window_.sites2[j] < window_.sites2[k])
        p = group_.mul(p, a[j]);
    word.push_back({window_.sites2[k], group_.mul(group_.inv[p], a[k])});
  }
  return word;
}

std::optional<Index> FieldAlgebra::normalize_word(std::vector<GenLetter> word) const {
  // Phase A: peel δ letters into a per-site map, twisting them through the
  // pending ρ block (ρ_h(l) δ_g(x) = δ_{hg}(x) ρ_h(l) for l < x).
  std::vector<int> delta_out(window_.count(), -1);
  std::vector<GenLetter> rho;
  for (const auto& letter : word) {
    if (letter.site2 % 2 == 0) {
      int g = letter.g;
      int acc = group_.unit;
      for (const auto& r : rho)
        if (r.site2 < letter.site2) acc = group_.mul(acc, r.g);
      g = group_.mul(acc, g);
      int pos = site_pos(letter.site2);
      if (pos < 0) throw FieldError("site outside window");
      if (delta_out[pos] == -1) {
        delta_out[pos] = g;
      } else if (delta_out[pos] != g) {
        return std::nullopt;  // δ_{g1}(x) δ_{g2}(x) = [g1=g2] δ_{g1}(x)
      }
    } else {
      rho.push_back(letter);
    }
  }
  // Phase B: sort the ρ block by site with the braiding relation; merge
  // same-site neighbors by the group law.
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (size_t k = 0; k + 1 < rho.size(); ++k) {
      if (rho[k].site2 == rho[k + 1].site2) {
        rho[k].g = group_.mul(rho[k].g, rho[k + 1].g);
        rho.erase(rho.begin() + static_cast<long>(k) + 1);
        dirty = true;
        break;
      }
      if (rho[k].site2 > rho[k + 1].site2) {
        // ρ_{h1}(l) ρ_{h2}(l') = ρ_{h2}(l') ρ_{h2^{-1} h1 h2}(l) for l > l'
        GenLetter h1 = rho[k], h2 = rho[k + 1];
        rho[k] = h2;
        rho[k + 1] = {h1.site2, group_.conjugate(group_.inv[h2.g], h1.g)};
        dirty = true;
        break;
      }
    }
  }
  // Phase C: assemble the total assignment.
  std::vector<int> assign(window_.count(), -1);
  for (int k = 0; k < window_.count(); ++k)
    if (window_.sites2[k] % 2 == 0) {
      if (delta_out[k] == -1) throw FieldError("word does not cover all integer sites");
      assign[k] = delta_out[k];
    }
  for (int k = 0; k < window_.count(); ++k)
    if (window_.sites2[k] % 2 != 0) assign[k] = group_.unit;
  for (const auto& r : rho) {
    int pos = site_pos(r.site2);
    if (pos < 0) throw FieldError("site outside window");
    assign[pos] = group_.mul(assign[pos], r.g);
  }
  return encode(assign);
}

SparseVec FieldAlgebra::mul_uncached(Index i, Index j) const {
  std::vector<GenLetter> word = word_of(i);
  std::vector<GenLetter> right = word_of(j);
  word.insert(word.end(), right.begin(), right.end());
  auto res = normalize_word(std::move(word));
  if (!res) return {};
  return SparseVec::unit_vec(*res);
}

SparseVec FieldAlgebra::mul(Index i, Index j) const {
  if (!mul_cache_.empty()) {
    auto& slot = mul_cache_[static_cast<size_t>(i) * dim_ + j];
    if (!slot) slot = mul_uncached(i, j);
    return *slot;
  }
  return mul_uncached(i, j);
}

std::pair<Index, Scalar> FieldAlgebra::star(Index i) const {
  // (w1 w2 ... wk)* = wk* ... w1*, with δ* = δ and ρ_h* = ρ_{h^{-1}}.
  std::vector<GenLetter> word = word_of(i);
  std::reverse(word.begin(), word.end());
  for (auto& letter : word)
    if (letter.site2 % 2 != 0) letter.g = group_.inv[letter.g];
  auto res = normalize_word(std::move(word));
  if (!res) throw FieldError("star of a basis monomial vanished");
  return {*res, Scalar::one()};
}

SparseVec FieldAlgebra::unit() const {
  // I = Π_x (Σ_g δ_g(x)) with all ρ slots at u.
  SparseVec out;
  std::vector<int> assign(window_.count(), group_.unit);
  std::vector<int> int_pos;
  for (int k = 0; k < window_.count(); ++k)
    if (window_.sites2[k] % 2 == 0) int_pos.push_back(k);
  Index combos = 1;
  for (size_t t = 0; t < int_pos.size(); ++t) combos *= group_.n;
  for (Index c = 0; c < combos; ++c) {
    Index v = c;
    for (int pos : int_pos) {
      assign[pos] = static_cast<int>(v % group_.n);
      v /= group_.n;
    }
    out.add_term(encode(assign), Scalar::one());
  }
  return out;
}

std::string FieldAlgebra::label_name(Index i) const {
  std::vector<int> a = decode(i);
  std::string out;
  for (int k = 0; k < window_.count(); ++k)
    if (window_.sites2[k] % 2 == 0) {
      if (!out.empty()) out += "*";
      out += "d[" + group_.names[a[k]] + "]@" + site2_name(window_.sites2[k]);
    }
  for (int k = 0; k < window_.count(); ++k)
    if (window_.sites2[k] % 2 != 0) {
      if (!out.empty()) out += "*";
      out += "r[" + group_.names[a[k]] + "]@" + site2_name(window_.sites2[k]);
    }
  return out;
}

std::string FieldAlgebra::name() const {
  return "F" + window_.describe() + " over |G|=" + std::to_string(group_.n);
}

Scalar FieldAlgebra::state(Index i) const {
  std::vector<int> a = decode(i);
  for (int k = 0; k < window_.count(); ++k)
    if (window_.sites2[k] % 2 != 0 && a[k] != group_.unit) return Scalar::zero();
  Rational r(1);
  for (int k = 0; k < window_.int_site_count(); ++k) r /= group_.n;
  return Scalar(r);
}

Element FieldAlgebra::delta_gen(int g, int x2) const {
  int pos = site_pos(x2);
  if (pos < 0 || x2 % 2 != 0) throw FieldError("invalid-window: no integer site " + site2_name(x2));
  SparseVec out;
  for (const auto& [i, c] : unit()) {
    std::vector<int> a = decode(i);
    if (a[pos] == g) out.add_term(i, c);
  }
  return Element(this, std::move(out));
}

Element FieldAlgebra::rho_gen(int h, int l2) const {
  int pos = site_pos(l2);
  if (pos < 0 || l2 % 2 == 0) throw FieldError("invalid-window: no half site " + site2_name(l2));
  SparseVec out;
  for (const auto& [i, c] : unit()) {
    std::vector<int> a = decode(i);
    a[pos] = h;
    out.add_term(encode(a), c);
  }
  return Element(this, std::move(out));
}

int FieldAlgebra::holonomy(Index label) const {
  std::vector<int> a = decode(label);
  int h = group_.unit;
  for (int k = 0; k < window_.count(); ++k)
    if (window_.sites2[k] % 2 != 0) h = group_.mul(h, a[k]);
  return h;
}

Index FieldAlgebra::twist(Index label, int h) const {
  std::vector<int> a = decode(label);
  for (int k = 0; k < window_.count(); ++k) {
    if (window_.sites2[k] % 2 == 0)
      a[k] = group_.mul(h, a[k]);
    else
      a[k] = group_.conjugate(h, a[k]);
  }
  return encode(a);
}

ModuleAction gamma_action(const std::shared_ptr<const HopfAlgebra>& dg,
                          const std::shared_ptr<const FieldAlgebra>& f) {
  if (dg->kind != HopfAlgebra::Kind::Double)
    throw FieldError("gamma needs the quantum double");
  if (dg->group->n != f->group().n)
    throw FieldError("group order mismatch between D(G) and F");
  ModuleAction m;
  m.hopf = dg.get();
  m.carrier = f.get();
  const FiniteGroup g = *dg->group;
  const FieldAlgebra* fp = f.get();
  int n = g.n;
  m.act = [fp, g, n](Index hlabel, Index alabel) -> SparseVec {
    int gg = static_cast<int>(hlabel / n);
    int hh = static_cast<int>(hlabel % n);
    int hol = fp->holonomy(alabel);
    if (g.conjugate(hh, hol) != gg) return {};
    return SparseVec::unit_vec(fp->twist(alabel, hh));
  };
  return m;
}

Element gamma_apply_to_word(const HopfAlgebra& dg, const FieldAlgebra& f,
                            Index dg_label, const std::vector<GenLetter>& word) {
  const FiniteGroup& g = *dg.group;
  int n = g.n;
  int gg = static_cast<int>(dg_label / n);
  int hh = static_cast<int>(dg_label % n);
  // Each letter forces its coproduct component: (u,h) on δ letters and
  // (h t h^{-1}, h) on ρ_t letters; the component product must equal g.
  int acc = g.unit;
  std::vector<GenLetter> images;
  images.reserve(word.size());
  for (const auto& letter : word) {
    if (letter.site2 % 2 == 0) {
      images.push_back({letter.site2, g.mul(hh, letter.g)});
    } else {
      int conj = g.conjugate(hh, letter.g);
      acc = g.mul(acc, conj);
      images.push_back({letter.site2, conj});
    }
  }
  if (acc != gg) return Element::zero(&f);
  auto res = f.normalize_word(std::move(images));
  if (!res) return Element::zero(&f);
  return Element::basis(&f, *res);
}

ConditionalExpectation expectation_E(const ModuleAction& gamma) {
  return integral_expectation_record(gamma);
}

CheckResult check_expectation_formula(const FieldAlgebra& f,
                                      const ConditionalExpectation& e) {
  const FiniteGroup& g = f.group();
  for (Index m = 0; m < f.dim(); ++m) {
    SparseVec want;
    if (f.holonomy(m) == g.unit) {
      for (int t = 0; t < g.n; ++t)
        want.add_term(f.twist(m, t), Scalar(frac(1, g.n)));
    }
    if (!(e.map.row[m] == want))
      return {"expectation-formula", false, f.label_name(m)};
  }
  return {"expectation-formula", true, ""};
}

Element wv_observable(const FieldAlgebra& f, int y, int x) {
  const Window& w = f.window();
  if (!w.is_basic_shape())
    throw FieldError("wrong-window: w/v generators need the 4-site basic shape");
  const FiniteGroup& g = f.group();
  SparseVec out;
  std::vector<int> assign(4);
  for (int s = 0; s < g.n; ++s) {
    // sites ascending: (half, int, half, int)
    assign[0] = g.conjugate(s, g.inv[x]);   // ρ_{s x^{-1} s^{-1}} at k+1/2
    assign[1] = s;                          // δ_s at k+1
    assign[2] = g.conjugate(s, x);          // ρ_{s x s^{-1}} at k+3/2
    assign[3] = g.mul(s, y);                // δ_{s y} at k+2
    out.add_term(f.encode(assign), Scalar::one());
  }
  return Element(&f, std::move(out));
}

std::vector<Scalar> canonical_trace(const FieldAlgebra& f) {
  std::vector<Scalar> phi;
  phi.reserve(f.dim());
  for (Index i = 0; i < f.dim(); ++i) phi.push_back(f.state(i));
  return phi;
}

}  // namespace gspin
