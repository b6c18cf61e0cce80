#pragma once

#include "gspin/field.hpp"

namespace gspin {

struct CrossedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Crossed product A ⋊ H for a verified module action, on labels
// (a-label, h-label) packed as a*dim(H) + h:
//   (T ⊗ a)(F ⊗ b) = Σ_(a) T·a₍₁₎(F) ⊗ a₍₂₎ b
//   (T ⊗ a)*        = (1 ⊗ a*)(T* ⊗ 1).
class CrossedAlgebra final : public BasisAlgebra {
 public:
  CrossedAlgebra(std::shared_ptr<const BasisAlgebra> carrier,
                 std::shared_ptr<const HopfAlgebra> hopf, ModuleAction action);

  const BasisAlgebra& carrier() const { return *carrier_; }
  const HopfAlgebra& hopf() const { return *hopf_; }
  const ModuleAction& action() const { return action_; }
  std::shared_ptr<const BasisAlgebra> carrier_ptr() const { return carrier_; }
  std::shared_ptr<const HopfAlgebra> hopf_ptr() const { return hopf_; }

  Index lab(Index a, Index h) const { return a * hdim_ + h; }
  std::pair<Index, Index> unlab(Index i) const { return {i / hdim_, i % hdim_}; }

  Index dim() const override { return carrier_->dim() * hdim_; }
  SparseVec mul(Index i, Index j) const override;
  std::pair<Index, Scalar> star(Index i) const override;
  SparseVec unit() const override;
  std::string label_name(Index i) const override;
  std::string name() const override;
  bool has_state() const override;
  // Product state: carrier state times the Haar-type weight on H.
  Scalar state(Index i) const override;

  Element embed_carrier(const Element& t) const;  // T ↦ T ⊗ 1_H
  Element embed_hopf(const SparseVec& x) const;   // x ↦ 1_A ⊗ x

 private:
  SparseVec mul_uncached(Index i, Index j) const;

  std::shared_ptr<const BasisAlgebra> carrier_;
  std::shared_ptr<const HopfAlgebra> hopf_;
  ModuleAction action_;
  Index hdim_;
  mutable std::vector<std::optional<std::pair<Index, Scalar>>> star_cache_;
  mutable std::vector<std::optional<SparseVec>> mul_cache_;
};

std::shared_ptr<CrossedAlgebra> crossed_product(
    std::shared_ptr<const BasisAlgebra> carrier,
    std::shared_ptr<const HopfAlgebra> hopf, ModuleAction action,
    const SweepOptions& opt, bool verify_action = true);

// Construction invariants: the crossed product formulas and the embedding
// T ↦ T⊗1 being an injective unital *-homomorphism.
ValidationReport verify_crossed_invariants(const CrossedAlgebra& x,
                                           const SweepOptions& opt);

// e = 1_A ⊗ h_int.
Element jones_element(const CrossedAlgebra& x);

// Lemma-style identities: e = e² = e* and e (T⊗1) e = (E(T)⊗1) e.
ValidationReport verify_jones_element(const CrossedAlgebra& x,
                                      const ConditionalExpectation& e_map,
                                      const SweepOptions& opt);

// σ((y,δ_x) × (F ⊗ (g,h))) = [x = h] F ⊗ (g y^{-1}, h).
ModuleAction dual_action_sigma(const std::shared_ptr<const CrossedAlgebra>& x,
                               const std::shared_ptr<const HopfAlgebra>& dual);

// E₂ = integral expectation of σ, with the closed form
// E₂(F ⊗ (g,h)) = (1/|G|) [h = u] (F ⊗ I).
ConditionalExpectation expectation_E2(const ModuleAction& sigma);
CheckResult check_e2_formula(const CrossedAlgebra& x, const ConditionalExpectation& e2);

// (F ⋊ D(G)) ⋊ D(G)^ via σ.
std::shared_ptr<CrossedAlgebra> iterated_crossed(
    const std::shared_ptr<const CrossedAlgebra>& x,
    const std::shared_ptr<const HopfAlgebra>& dual, const ModuleAction& sigma,
    const SweepOptions& opt);

// τ((g,h) × (F̃ ⊗ (y,δ_x))) = [h^{-1} g h = x^{-1} y x] F̃ ⊗ (y, δ_{x h^{-1}}).
ModuleAction tau_action(const std::shared_ptr<const CrossedAlgebra>& iter,
                        const std::shared_ptr<const HopfAlgebra>& dg);

// State on any algebra: reuse the carrier-style state when present.
std::vector<Scalar> algebra_state(const BasisAlgebra& a);

}  // namespace gspin
