#pragma once

#include "gspin/crossed.hpp"

namespace gspin {

struct BasicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Left multiplication λ(x) as an operator on B (rows-as-images).
SparseMat lambda_matrix(const BasisAlgebra& b, Index label);
SparseMat lambda_matrix(const BasisAlgebra& b, const Element& x);

// Exact Gram of the algebra state, required diagonal here; the i-th entry
// is phi(b_i* b_i).
std::vector<Scalar> exact_gram_diagonal(const BasisAlgebra& b, bool check_offdiag);

// Adjoint of an operator on B with respect to <x,y> = phi(x*y).
SparseMat op_adjoint(const BasisAlgebra& b, const std::vector<Scalar>& gram_diag,
                     const SparseMat& m);

struct ExpectationSetup {
  const BasisAlgebra* domain = nullptr;
  std::vector<SparseVec> subalg;  // A-basis
  SparseMat map;                  // Γ, rows-as-images

  static ExpectationSetup from(const ConditionalExpectation& e) {
    return {e.domain, e.range_basis, e.map};
  }
};

struct JonesProjectionResult {
  SparseMat e;  // Γ in B's basis
  ValidationReport checks;
};

// e = e², A-valued adjointability, and the Lemma 2.2(2) biconditional
// {T : e λ(T) = λ(T) e} = span(A).
JonesProjectionResult jones_projection(const ExpectationSetup& setup,
                                       const SweepOptions& opt);

// Literal span closure of {λ(x) e λ(y) : x, y basis} in operator space;
// feasible for small B only.
std::vector<SparseVec> operator_span_closure(const BasisAlgebra& b,
                                             const SparseMat& e);

// Basic construction presented on pullback sandwiches: per target label L
// of the crossed product, W_L = |G|·λ(left_L) ∘ e ∘ λ(right_L) with
// Φ(W_L) = basis L.  Covers both Φ (field level) and Ψ (one level up).
struct SpanIso {
  const CrossedAlgebra* target = nullptr;
  const BasisAlgebra* domain = nullptr;  // operators act on this algebra
  SparseMat e;
  long gsize = 0;
  std::vector<std::pair<Index, Index>> sandwich;  // per target label
  std::vector<SparseMat> w;                       // pullback operators

  SparseMat sandwich_op(Index left, Index right) const;  // |G|·λ(l)∘e∘λ(r)
  Element forward_image(Index left, Index right) const;  // |G|·(l⊗1)e'(r⊗1)
};

// The Thm 3.1 preimage sandwich of one crossed basis label.
std::pair<Index, Index> phi_sandwich(const CrossedAlgebra& fx, Index target);

// Thm 3.1 data: target = F ⋊ D(G) over the 4-site basic window shape.
SpanIso build_phi_iso(const std::shared_ptr<const CrossedAlgebra>& fx,
                      const ConditionalExpectation& e_map);

// Sampled variant for larger groups: pullback operators are built on
// demand for the sampled identities only.
ValidationReport verify_phi_sampled(const std::shared_ptr<const CrossedAlgebra>& fx,
                                    const ConditionalExpectation& e_map, int samples,
                                    std::uint64_t seed);

// Thm 5.1 data: target = (F ⋊ D(G)) ⋊ D(G)^.
SpanIso build_psi_iso(const std::shared_ptr<const CrossedAlgebra>& iter,
                      const ConditionalExpectation& e2_map);

struct SpanIsoOptions {
  SweepOptions sweep;
  bool full_rank_check = true;    // exact rank of the pullback family
  int adjoint_samples = 200;      // GNS-vs-module adjoint consistency
};

// Preimage formula, exact rank/bijectivity, multiplicativity, star
// preservation, unitality; plus e ↦ jones element.
ValidationReport verify_span_iso(const SpanIso& iso, const SpanIsoOptions& opt);

// Dual conditional expectation Ẽ(T e F) = (1/|G|²) T F carried on the
// pullback basis, transported to crossed coordinates.
struct DualExpectationResult {
  std::vector<Element> values;  // Ẽ(W_L) in the domain algebra
  ConditionalExpectation on_crossed;
  ValidationReport checks;  // well-definedness of the linear extension
};

DualExpectationResult dual_expectation(const SpanIso& iso, const SweepOptions& opt);

// Checks E₂ = Φ ∘ Ẽ ∘ Φ^{-1} on every crossed basis label.
CheckResult check_dual_matches_e2(const DualExpectationResult& de,
                                  const ConditionalExpectation& e2);

// Quasi-basis machinery (generic over an algebra with an expectation map).
struct QuasiBasis {
  std::vector<std::pair<Element, Element>> pairs;
};

ValidationReport quasi_basis_check(const BasisAlgebra& b, const SparseMat& gamma,
                                   const QuasiBasis& qb, const SweepOptions& opt);
Element quasi_index(const QuasiBasis& qb);
CheckResult check_index_central(const BasisAlgebra& b, const Element& index,
                                const SweepOptions& opt);

// u_{x,y} = |G|^{3/2} δ_x(k) ρ_y(k+1/2) e, pairs (u, u*), in crossed
// coordinates of the Φ target.  k2 = doubled site of k.
QuasiBasis standard_quasi_basis(const SpanIso& phi, const FieldAlgebra& f, int k2);

}  // namespace gspin
