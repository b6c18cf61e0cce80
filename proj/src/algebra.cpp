#include "gspin/algebra.hpp"

#include <nlohmann/json.hpp>

namespace gspin {

using nlohmann::json;

Scalar BasisAlgebra::state_of(const SparseVec& v) const {
  Scalar s;
  for (const auto& [i, c] : v) s += c * state(i);
  return s;
}

void Element::check_parent(const Element& o) const {
  if (parent_ != o.parent_) throw AlgebraError("parent-mismatch");
}

Element Element::operator+(const Element& o) const {
  check_parent(o);
  return Element(parent_, coeffs_ + o.coeffs_);
}

Element Element::operator-(const Element& o) const {
  check_parent(o);
  return Element(parent_, coeffs_ - o.coeffs_);
}

Element Element::operator*(const Element& o) const {
  check_parent(o);
  SparseVec out;
  for (const auto& [i, ci] : coeffs_)
    for (const auto& [j, cj] : o.coeffs_) {
      Scalar c = ci * cj;
      if (c.is_zero()) continue;
      out.axpy(c, parent_->mul(i, j));
    }
  return Element(parent_, std::move(out));
}

Element Element::operator*(const Scalar& c) const {
  SparseVec out = coeffs_;
  out.scale(c);
  return Element(parent_, std::move(out));
}

bool Element::operator==(const Element& o) const {
  return parent_ == o.parent_ && coeffs_ == o.coeffs_;
}

Element Element::star() const {
  SparseVec out;
  for (const auto& [i, c] : coeffs_) {
    auto [k, s] = parent_->star(i);
    out.add_term(k, c.conj() * s);
  }
  return Element(parent_, std::move(out));
}

std::string Element::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    if (!first) out += " + ";
    first = false;
    std::string cs = c.to_string();
    if (cs == "1") {
      out += parent_->label_name(i);
    } else {
      out += "(" + cs + ")" + parent_->label_name(i);
    }
  }
  return out;
}

TableAlgebra::TableAlgebra(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
  mul_.resize(labels_.size() * labels_.size());
  star_.resize(labels_.size());
  for (size_t i = 0; i < labels_.size(); ++i)
    star_[i] = {static_cast<Index>(i), Scalar::one()};
}

SparseVec TableAlgebra::mul(Index i, Index j) const { return mul_[i * dim() + j]; }

std::pair<Index, Scalar> TableAlgebra::star(Index i) const { return star_[i]; }

Scalar TableAlgebra::state(Index i) const {
  if (!state_) throw AlgebraError("algebra carries no state");
  return (*state_)[i];
}

void TableAlgebra::set_product(Index i, Index j, SparseVec v) {
  mul_[i * dim() + j] = std::move(v);
}

void TableAlgebra::set_star(Index i, Index target, Scalar coeff) {
  star_[i] = {target, std::move(coeff)};
}

TableAlgebra TableAlgebra::matrix_units(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      labels.push_back("E" + std::to_string(i) + std::to_string(j));
  TableAlgebra a("M" + std::to_string(n), std::move(labels));
  auto id = [n](int i, int j) { return static_cast<Index>(i * n + j); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k) a.set_product(id(i, j), id(k, l), SparseVec::unit_vec(id(i, l)));
  SparseVec u;
  for (int i = 0; i < n; ++i) u.add_term(id(i, i), Scalar::one());
  a.set_unit(std::move(u));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.set_star(id(i, j), id(j, i), Scalar::one());
  // Normalized trace keeps the canonical state faithful.
  std::vector<Scalar> phi(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      phi[id(i, j)] = i == j ? Scalar(frac(1, n)) : Scalar::zero();
  a.set_state(std::move(phi));
  return a;
}

TableAlgebra TableAlgebra::functions_on_group(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i));
  TableAlgebra a("C(G)", std::move(labels));
  for (int i = 0; i < n; ++i) a.set_product(i, i, SparseVec::unit_vec(i));
  SparseVec u;
  for (int i = 0; i < n; ++i) u.add_term(i, Scalar::one());
  a.set_unit(std::move(u));
  std::vector<Scalar> phi(n, Scalar(frac(1, n)));
  a.set_state(std::move(phi));
  return a;
}

TableAlgebra tabulate(const BasisAlgebra& a) {
  std::vector<std::string> labels;
  for (Index i = 0; i < a.dim(); ++i) labels.push_back(a.label_name(i));
  TableAlgebra t(a.name(), std::move(labels));
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      SparseVec v = a.mul(i, j);
      if (!v.empty()) t.set_product(i, j, std::move(v));
    }
  for (Index i = 0; i < a.dim(); ++i) {
    auto [k, s] = a.star(i);
    t.set_star(i, k, s);
  }
  t.set_unit(a.unit());
  if (a.has_state()) {
    std::vector<Scalar> phi;
    for (Index i = 0; i < a.dim(); ++i) phi.push_back(a.state(i));
    t.set_state(std::move(phi));
  }
  return t;
}

std::string algebra_to_json(const BasisAlgebra& a) {
  json j;
  j["name"] = a.name();
  j["labels"] = json::array();
  for (Index i = 0; i < a.dim(); ++i) j["labels"].push_back(a.label_name(i));
  json mul = json::array();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j2 = 0; j2 < a.dim(); ++j2)
      for (const auto& [k, c] : a.mul(i, j2))
        mul.push_back(json::array({i, j2, k, c.to_string()}));
  j["mul"] = std::move(mul);
  json star = json::array();
  for (Index i = 0; i < a.dim(); ++i) {
    auto [k, s] = a.star(i);
    star.push_back(json::array({i, k, s.to_string()}));
  }
  j["star"] = std::move(star);
  json unit = json::array();
  for (const auto& [k, c] : a.unit()) unit.push_back(json::array({k, c.to_string()}));
  j["unit"] = std::move(unit);
  if (a.has_state()) {
    json st = json::array();
    for (Index i = 0; i < a.dim(); ++i) st.push_back(a.state(i).to_string());
    j["state"] = std::move(st);
  }
  return j.dump(2);
}

TableAlgebra algebra_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  TableAlgebra a(j.value("name", "algebra"), std::move(labels));
  std::vector<SparseVec> prods(a.dim() * a.dim());
  for (const auto& row : j.at("mul"))
    prods[row[0].get<Index>() * a.dim() + row[1].get<Index>()].add_term(
        row[2].get<Index>(), Scalar::from_string(row[3].get<std::string>()));
  for (Index i = 0; i < a.dim(); ++i)
    for (Index k = 0; k < a.dim(); ++k)
      if (!prods[i * a.dim() + k].empty())
        a.set_product(i, k, std::move(prods[i * a.dim() + k]));
  for (const auto& row : j.at("star"))
    a.set_star(row[0].get<Index>(), row[1].get<Index>(),
               Scalar::from_string(row[2].get<std::string>()));
  SparseVec u;
  for (const auto& t : j.at("unit"))
    u.add_term(t[0].get<Index>(), Scalar::from_string(t[1].get<std::string>()));
  a.set_unit(std::move(u));
  if (j.contains("state")) {
    std::vector<Scalar> phi;
    for (const auto& s : j.at("state")) phi.push_back(Scalar::from_string(s.get<std::string>()));
    a.set_state(std::move(phi));
  }
  return a;
}

ValidationReport verify_algebra_axioms(const BasisAlgebra& a, const SweepOptions& opt) {
  ValidationReport rep;
  Index n = a.dim();
  auto el = [&](Index i) { return Element::basis(&a, i); };
  // Associativity.
  {
    Sweep sw(opt, {n, n, n});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      Element x = el(t[0]), y = el(t[1]), z = el(t[2]);
      return ((x * y) * z) == (x * (y * z));
    });
    rep.add(std::string("associativity[") + sw.mode() + "]", !bad,
            bad ? "(" + a.label_name((*bad)[0]) + "," + a.label_name((*bad)[1]) + "," +
                      a.label_name((*bad)[2]) + ")"
                : "");
  }
  // Unit.
  {
    Element one = Element::unit(&a);
    std::string wit;
    bool ok = true;
    for (Index i = 0; i < n; ++i) {
      Element x = el(i);
      if (!(one * x == x && x * one == x)) {
        ok = false;
        wit = a.label_name(i);
        break;
      }
    }
    rep.add("unit", ok, wit);
  }
  // Star: involutive and anti-multiplicative.
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < n && ok; ++i) {
      Element x = el(i);
      if (!(x.star().star() == x)) {
        ok = false;
        wit = "(" + a.label_name(i) + ")** != itself";
      }
    }
    rep.add("star-involution", ok, wit);
  }
  {
    Sweep sw(opt, {n, n});
    auto bad = sw.run([&](const std::vector<Index>& t) {
      Element x = el(t[0]), y = el(t[1]);
      return (x * y).star() == y.star() * x.star();
    });
    rep.add(std::string("star-antimultiplicative[") + sw.mode() + "]", !bad,
            bad ? "(" + a.label_name((*bad)[0]) + "," + a.label_name((*bad)[1]) + ")" : "");
  }
  return rep;
}

std::vector<SparseVec> span_closure(const BasisAlgebra& a,
                                    const std::vector<Element>& gens) {
  if (gens.empty()) throw AlgebraError("span_closure needs a nonempty generator set");
  Echelon ech(a.dim());
  std::vector<Element> pool;
  auto push = [&](const Element& x) {
    if (ech.insert(x.coeffs())) pool.push_back(x);
  };
  push(Element::unit(&a));
  for (const auto& g : gens) {
    push(g);
    push(g.star());
  }
  size_t frontier = 0;
  while (frontier < pool.size()) {
    size_t upper = pool.size();
    // Products of everything so far against the new generation.
    for (size_t i = 0; i < upper; ++i)
      for (size_t j = frontier; j < upper; ++j) {
        push(pool[i] * pool[j]);
        if (j > i) push(pool[j] * pool[i]);
        push((pool[i] * pool[j]).star());
      }
    frontier = upper;
  }
  return ech.rows();
}

std::vector<SparseVec> center_basis(const BasisAlgebra& a) {
  std::vector<Element> gens;
  for (Index i = 0; i < a.dim(); ++i) gens.push_back(Element::basis(&a, i));
  return centralizer_basis(a, gens);
}

namespace {

// Rows of the commutant system for one generator g: coordinates of
// e_i*g - g*e_i feed equation rows keyed by output coordinate.
void commutator_rows(const BasisAlgebra& a, const Element& g,
                     const std::function<void(SparseVec&&)>& sink) {
  std::vector<std::vector<SparseVec::Term>> eq(a.dim());
  Element gx = g;
  for (Index i = 0; i < a.dim(); ++i) {
    Element d = Element::basis(&a, i) * gx - gx * Element::basis(&a, i);
    for (const auto& [k, c] : d.coeffs()) eq[k].push_back({i, c});
  }
  for (auto& row : eq)
    if (!row.empty()) sink(SparseVec::collect(std::move(row)));
}

}  // namespace

std::vector<SparseVec> centralizer_basis(const BasisAlgebra& a,
                                         const std::vector<Element>& gens) {
  SparseMat sys;
  sys.cols = a.dim();
  for (const auto& g : gens)
    commutator_rows(a, g, [&](SparseVec&& r) { sys.row.push_back(std::move(r)); });
  sys.rows = static_cast<Index>(sys.row.size());
  return kernel_basis(sys);
}

bool center_is_trivial(const BasisAlgebra& a, const std::vector<Element>& gens) {
  // The unit is always central, so the kernel has dimension >= 1; showing
  // rank >= dim-1 pins it to exactly 1.
  Echelon ech(a.dim());
  Index target = a.dim() - 1;
  for (const auto& g : gens) {
    bool done = false;
    commutator_rows(a, g, [&](SparseVec&& r) {
      if (!done) {
        ech.insert(r);
        if (ech.rank() >= target) done = true;
      }
    });
    if (done) return true;
  }
  return ech.rank() >= target;
}

GnsData gns_representation(const BasisAlgebra& a, const std::vector<Scalar>& phi,
                           double tol, bool with_rep) {
  Index n = a.dim();
  if (static_cast<Index>(phi.size()) != n) throw AlgebraError("state has wrong length");
  auto phi_of = [&](const SparseVec& v) {
    Scalar s;
    for (const auto& [i, c] : v) s += c * phi[i];
    return s;
  };
  if (!(phi_of(a.unit()) == Scalar::one())) throw AlgebraError("not-a-state: phi(unit) != 1");
  GnsData out;
  out.gram.assign(n, std::vector<std::complex<double>>(n));
  for (Index i = 0; i < n; ++i) {
    auto [is, ic] = a.star(i);
    for (Index j = 0; j < n; ++j) {
      Scalar v = ic * phi_of(a.mul(is, j));
      out.gram[i][j] = v.to_complex();
    }
  }
  // Basis-sampled positivity of phi: diagonal of the gram.
  for (Index i = 0; i < n; ++i) {
    auto d = out.gram[i][i];
    if (std::abs(d.imag()) > tol || d.real() < -tol)
      throw AlgebraError("not-a-state: phi(x*x) negative on basis");
  }
  if (with_rep) {
    out.rep.resize(n);
    for (Index k = 0; k < n; ++k) {
      out.rep[k].assign(n, std::vector<std::complex<double>>(n));
      for (Index j = 0; j < n; ++j)
        for (const auto& [i, c] : a.mul(k, j)) out.rep[k][i][j] = c.to_complex();
    }
  }
  out.faithful = numeric_rank(out.gram, tol) == n;
  return out;
}

bool is_positive(const BasisAlgebra& a, const Element& x,
                 const std::vector<Scalar>& phi, double tol) {
  if (!(x.star() == x)) throw AlgebraError("not-selfadjoint");
  Index n = a.dim();
  auto phi_of = [&](const SparseVec& v) {
    Scalar s;
    for (const auto& [i, c] : v) s += c * phi[i];
    return s;
  };
  CMatrix form(n, std::vector<std::complex<double>>(n));
  for (Index j = 0; j < n; ++j) {
    Element xj = x * Element::basis(&a, j);
    for (Index i = 0; i < n; ++i) {
      auto [is, ic] = a.star(i);
      Scalar v;
      for (const auto& [k, c] : xj.coeffs()) v += c * phi_of(a.mul(is, k));
      form[i][j] = (ic * v).to_complex();
    }
  }
  return psd_check(form, tol);
}

Element AlgebraMorphism::apply(const Element& x) const {
  Element out = Element::zero(target);
  for (const auto& [i, c] : x.coeffs()) out = out + image[i] * c;
  return out;
}

CheckResult AlgebraMorphism::check_unital() const {
  Element lhs = apply(Element::unit(source));
  bool ok = lhs == Element::unit(target);
  return {"morphism-unital", ok, ok ? "" : "image of unit differs"};
}

CheckResult AlgebraMorphism::check_multiplicative(const SweepOptions& opt) const {
  Sweep sw(opt, {source->dim(), source->dim()});
  auto bad = sw.run([&](const std::vector<Index>& t) {
    Element lhs = apply(Element(source, source->mul(t[0], t[1])));
    Element rhs = image[t[0]] * image[t[1]];
    return lhs == rhs;
  });
  return {std::string("morphism-multiplicative[") + sw.mode() + "]", !bad,
          bad ? "(" + source->label_name((*bad)[0]) + "," + source->label_name((*bad)[1]) + ")"
              : ""};
}

CheckResult AlgebraMorphism::check_star_preserving() const {
  for (Index i = 0; i < source->dim(); ++i) {
    auto [k, s] = source->star(i);
    Element lhs = image[k] * s;
    Element rhs = image[i].star();
    if (!(lhs == rhs))
      return {"morphism-star", false, source->label_name(i)};
  }
  return {"morphism-star", true, ""};
}

CheckResult AlgebraMorphism::check_bijective() const {
  if (source->dim() != target->dim())
    return {"morphism-bijective", false, "dimension mismatch"};
  SparseMat m;
  m.rows = source->dim();
  m.cols = target->dim();
  for (const auto& e : image) m.row.push_back(e.coeffs());
  bool ok = exact_rank(m) == source->dim();
  return {"morphism-bijective", ok, ok ? "" : "images are linearly dependent"};
}

Element random_element(const BasisAlgebra& a, std::mt19937_64& rng, int terms,
                       long radicand) {
  SparseVec v;
  for (int t = 0; t < terms; ++t) {
    Index i = static_cast<Index>(rng() % static_cast<std::uint64_t>(a.dim()));
    long num = static_cast<long>(rng() % 7) - 3;
    long den = 1 + static_cast<long>(rng() % 3);
    long numi = static_cast<long>(rng() % 5) - 2;
    Scalar c(frac(num, den));
    c += Scalar::i() * Scalar(frac(numi, den));
    if (radicand > 1 && rng() % 2 == 0)
      c += Scalar::sqrt_of(radicand) * Scalar(Rational(static_cast<long>(rng() % 3) - 1));
    v.add_term(i, c);
  }
  return Element(&a, std::move(v));
}

}  // namespace gspin
