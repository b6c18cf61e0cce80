#pragma once

#include <memory>

#include "gspin/hopf.hpp"

namespace gspin {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite set of lattice sites in (1/2)Z, stored as doubled integers:
// even = integer site x, odd = half-integer site l.
struct Window {
  std::vector<int> sites2;  // sorted, unique

  // All half-integer multiples in [lo2/2, hi2/2].
  static Window range2(int lo2, int hi2);
  static Window of(std::vector<int> sites2);

  int count() const { return static_cast<int>(sites2.size()); }
  bool empty() const { return sites2.empty(); }
  bool contains2(int s2) const;
  int int_site_count() const;
  int half_site_count() const;
  // True for the Λ_{k+1/2, k+2} shape: four consecutive sites
  // (half, int, half, int).
  bool is_basic_shape() const;
  std::string describe() const;  // e.g. "{1/2,1,3/2,2}"
};

std::string site2_name(int s2);  // "1", "1/2", "3/2", ...

// Generator letter of the field algebra: a δ at an even site or a ρ at an
// odd site, with a group element attached.
struct GenLetter {
  int site2;
  int g;
};

// Local field algebra F(Λ): basis monomials are total assignments of one
// group element per window site (δ value at integer sites, ρ value at
// half-integer sites; ρ_u encodes an absent disorder factor).  Label =
// mixed-radix encoding over sites in ascending order.  Products and stars
// come from the defining exchange relations via word normalization.
class FieldAlgebra final : public BasisAlgebra {
 public:
  FieldAlgebra(FiniteGroup g, Window w);

  const FiniteGroup& group() const { return group_; }
  const Window& window() const { return window_; }
  long radicand() const { return radicand_; }  // squarefree part of |G|

  Index dim() const override { return dim_; }
  SparseVec mul(Index i, Index j) const override;
  std::pair<Index, Scalar> star(Index i) const override;
  SparseVec unit() const override;
  std::string label_name(Index i) const override;
  std::string name() const override;
  bool has_state() const override { return true; }
  // Canonical trace: |G|^{-#integer sites} on all-ρ_u monomials, else 0.
  Scalar state(Index i) const override;

  Index encode(const std::vector<int>& assign) const;
  std::vector<int> decode(Index label) const;
  int site_pos(int s2) const;  // position of a site in the window, -1 if absent

  // Generators as elements (sums over unspecified δ slots).
  Element delta_gen(int g, int x2) const;
  Element rho_gen(int h, int l2) const;
  Element monomial(const std::vector<int>& assign) const {
    return Element::basis(this, encode(assign));
  }

  // Ordered product of the ρ entries, ascending by site.
  int holonomy(Index label) const;
  // δ_s -> δ_{h s}, ρ_t -> ρ_{h t h^{-1}} sitewise.
  Index twist(Index label, int h) const;

  // Canonical generator word of a basis monomial: δ letters ascending,
  // then ρ letters ascending.
  std::vector<GenLetter> word_of(Index label) const;
  // Alternate factorization with the ρ block first (same element).
  std::vector<GenLetter> word_of_rho_first(Index label) const;
  // Word normalization under the defining relations; nullopt when a
  // same-site δ mismatch kills the product.
  std::optional<Index> normalize_word(std::vector<GenLetter> word) const;

 private:
  SparseVec mul_uncached(Index i, Index j) const;

  FiniteGroup group_;
  Window window_;
  long radicand_;
  Index dim_;
  std::vector<Index> radix_;  // stride per site position
  // Lazy product table; populated on demand for desk-scale dimensions.
  mutable std::vector<std::optional<SparseVec>> mul_cache_;
};

std::shared_ptr<FieldAlgebra> field_algebra(const FiniteGroup& g, const Window& w);

// Action γ of D(G) on F(w):
//   (g,h)·m = [g = h·hol(m)·h^{-1}] twist_h(m).
ModuleAction gamma_action(const std::shared_ptr<const HopfAlgebra>& dg,
                          const std::shared_ptr<const FieldAlgebra>& f);

// γ applied through an explicit generator word via the iterated coproduct;
// used to confirm factorization-order independence.
Element gamma_apply_to_word(const HopfAlgebra& dg, const FieldAlgebra& f,
                            Index dg_label, const std::vector<GenLetter>& word);

// E = integral expectation of γ, with its closed form on monomials:
//   E(m) = (1/|G|) [hol(m) = u] Σ_f twist_f(m).
ConditionalExpectation expectation_E(const ModuleAction& gamma);
// Closed-form check on every monomial.
CheckResult check_expectation_formula(const FieldAlgebra& f,
                                      const ConditionalExpectation& e);

// w_y(3/2) v_x(1) = Σ_s δ_s(1) δ_{sy}(2) ρ_{s x^{-1} s^{-1}}(1/2) ρ_{s x s^{-1}}(3/2)
// on the basic 4-site window shape.
Element wv_observable(const FieldAlgebra& f, int y, int x);

// Values of the canonical trace on basis labels.
std::vector<Scalar> canonical_trace(const FieldAlgebra& f);

}  // namespace gspin
