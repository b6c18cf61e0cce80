#pragma once

#include "gspin/basic.hpp"

namespace gspin {

// M_{|G|²}(F): field monomials tensored with matrix units, label =
// field-label * |G|⁴ + (i * |G|² + j).
class MatrixFieldAlgebra final : public BasisAlgebra {
 public:
  MatrixFieldAlgebra(std::shared_ptr<const FieldAlgebra> base);

  const FieldAlgebra& base() const { return *base_; }
  int msize() const { return msize_; }  // |G|²

  Index lab(Index f, int mi, int mj) const {
    return f * msize_ * msize_ + mi * msize_ + mj;
  }

  Index dim() const override { return base_->dim() * msize_ * msize_; }
  SparseVec mul(Index i, Index j) const override;
  std::pair<Index, Scalar> star(Index i) const override;
  SparseVec unit() const override;
  std::string label_name(Index i) const override;
  std::string name() const override;
  bool has_state() const override { return true; }
  Scalar state(Index i) const override;

  // O^g_M(x) = δ_g(x) ⊗ E_{mi,mj};  D^h_N(l) = ρ_h(l) ⊗ E_{ni,nj}.
  Element order_op(int g, int x2, int mi, int mj) const;
  Element disorder_op(int h, int l2, int ni, int nj) const;
  Element tensor(const Element& f, int mi, int mj) const;

 private:
  std::shared_ptr<const FieldAlgebra> base_;
  int msize_;
};

std::shared_ptr<MatrixFieldAlgebra> matrix_field_algebra(
    const std::shared_ptr<const FieldAlgebra>& base);

// The displayed order/disorder relations, swept over sites, group
// elements and matrix units.
ValidationReport od_relations_check(const MatrixFieldAlgebra& mfa,
                                    const SweepOptions& opt);

struct TakaiReport {
  bool applicable = true;   // even window (simple base) required
  std::string notice;
  Index iterated_dim = 0;
  Index matrix_field_dim = 0;
  bool dims_match = false;
  bool iterated_center_trivial = false;
  bool matrix_field_center_trivial = false;
  bool pass() const {
    return applicable && dims_match && iterated_center_trivial &&
           matrix_field_center_trivial;
  }
};

// dim(F ⋊ D(G) ⋊ D(G)^) = dim(M_{|G|²}(F)) and both centers are trivial,
// so both are the same full matrix algebra.
TakaiReport takai_dimension_check(const CrossedAlgebra& iter,
                                  const MatrixFieldAlgebra& mfa);

struct TowerLevel {
  int level = 0;
  std::string description;
  Index dim = 0;
  std::string expectation_status;  // "pass"/"fail"/"-"
  std::string iso_status;          // psi status at level 2, "-" elsewhere
};

struct TowerInput {
  const FieldAlgebra* f = nullptr;
  const ConditionalExpectation* e = nullptr;    // level 0 -> A
  const CrossedAlgebra* fxd = nullptr;          // level 1
  const ConditionalExpectation* e2 = nullptr;   // level 1 -> level 0
  const CrossedAlgebra* iter = nullptr;         // level 2
  const ConditionalExpectation* e3 = nullptr;   // level 2 -> level 1 (tau integral)
  const ValidationReport* psi_checks = nullptr; // Thm 5.1 battery
};

// Levels 0..depth of the inclusion tower; levels 3+ carry dimension
// bookkeeping only.
std::vector<TowerLevel> tower(const TowerInput& in, int depth);

}  // namespace gspin
