#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gspin/numeric.hpp"
#include "gspin/report.hpp"
#include "gspin/scalar.hpp"
#include "gspin/sparse.hpp"
#include "gspin/sweep.hpp"

namespace gspin {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-dimensional associative *-algebra presented by a labeled basis
// with sparse structure constants.  Products of basis labels are computed
// on demand; concrete algebras either store tables or derive them from
// rewrite rules.  The star of a basis label is a scaled label (that holds
// for every algebra in scope here).
class BasisAlgebra {
 public:
  virtual ~BasisAlgebra() = default;

  virtual Index dim() const = 0;
  virtual SparseVec mul(Index i, Index j) const = 0;
  virtual std::pair<Index, Scalar> star(Index i) const = 0;
  virtual SparseVec unit() const = 0;
  virtual std::string label_name(Index i) const { return "b" + std::to_string(i); }
  virtual std::string name() const { return "algebra"; }

  // Distinguished linear functional, when the algebra carries one.
  virtual bool has_state() const { return false; }
  virtual Scalar state(Index) const { throw AlgebraError("algebra carries no state"); }

  Scalar state_of(const SparseVec& v) const;
};

class Element {
 public:
  Element() : parent_(nullptr) {}
  Element(const BasisAlgebra* parent, SparseVec coeffs)
      : parent_(parent), coeffs_(std::move(coeffs)) {}
  static Element basis(const BasisAlgebra* parent, Index i) {
    return Element(parent, SparseVec::unit_vec(i));
  }
  static Element unit(const BasisAlgebra* parent) {
    return Element(parent, parent->unit());
  }
  static Element zero(const BasisAlgebra* parent) { return Element(parent, {}); }

  const BasisAlgebra* parent() const { return parent_; }
  const SparseVec& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator*(const Scalar& c) const;
  Element operator-() const { return *this * Scalar(-1); }
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  Element star() const;
  std::string to_string() const;

 private:
  void check_parent(const Element& o) const;
  const BasisAlgebra* parent_;
  SparseVec coeffs_;
};

inline Element operator*(const Scalar& c, const Element& x) { return x * c; }

// Explicitly tabulated algebra; also the JSON dump/load carrier.
class TableAlgebra : public BasisAlgebra {
 public:
  TableAlgebra(std::string name, std::vector<std::string> labels);

  Index dim() const override { return static_cast<Index>(labels_.size()); }
  SparseVec mul(Index i, Index j) const override;
  std::pair<Index, Scalar> star(Index i) const override;
  SparseVec unit() const override { return unit_; }
  std::string label_name(Index i) const override { return labels_[i]; }
  std::string name() const override { return name_; }
  bool has_state() const override { return state_.has_value(); }
  Scalar state(Index i) const override;

  void set_product(Index i, Index j, SparseVec v);
  void set_star(Index i, Index target, Scalar coeff);
  void set_unit(SparseVec u) { unit_ = std::move(u); }
  void set_state(std::vector<Scalar> phi) { state_ = std::move(phi); }

  // Full n x n matrix algebra on matrix units E_ij, label = i*n + j.
  static TableAlgebra matrix_units(int n);
  // Functions on G with pointwise product (the commutative C(G)).
  static TableAlgebra functions_on_group(int n);

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> mul_;  // key i*dim+j; empty = zero product
  std::vector<std::pair<Index, Scalar>> star_;
  SparseVec unit_;
  std::optional<std::vector<Scalar>> state_;
};

// Materializes any algebra's tables (small algebras only).
TableAlgebra tabulate(const BasisAlgebra& a);

// JSON dump: labels, nonzero structure constants (i, j, k, scalar-string),
// star table, unit vector.  Byte-exact round trip with sorted keys.
std::string algebra_to_json(const BasisAlgebra& a);
TableAlgebra algebra_from_json(const std::string& text);

// Associativity, unit, star axioms with first counterexamples.
ValidationReport verify_algebra_axioms(const BasisAlgebra& a, const SweepOptions& opt);

// Echelonized basis of the smallest unital *-subalgebra containing gens.
std::vector<SparseVec> span_closure(const BasisAlgebra& a,
                                    const std::vector<Element>& gens);

// Exact basis of the center {x : xb = bx for all basis b}.
std::vector<SparseVec> center_basis(const BasisAlgebra& a);
// Centralizer of a generating set; equals the center when gens generate.
std::vector<SparseVec> centralizer_basis(const BasisAlgebra& a,
                                         const std::vector<Element>& gens);
// Early-exit witness that the centralizer of gens is one-dimensional.
bool center_is_trivial(const BasisAlgebra& a, const std::vector<Element>& gens);

struct GnsData {
  CMatrix gram;                // gram[i][j] = phi(b_i* b_j)
  std::vector<CMatrix> rep;    // left multiplication per label, float
  bool faithful = false;
};

// phi given by its values on basis labels; must be a state
// (phi(unit) = 1, sampled positivity), else throws "not-a-state".
GnsData gns_representation(const BasisAlgebra& a, const std::vector<Scalar>& phi,
                           double tol, bool with_rep = true);

// GNS positivity oracle: x must be exactly self-adjoint.
bool is_positive(const BasisAlgebra& a, const Element& x,
                 const std::vector<Scalar>& phi, double tol);

struct AlgebraMorphism {
  const BasisAlgebra* source = nullptr;
  const BasisAlgebra* target = nullptr;
  std::vector<Element> image;  // per source label

  Element apply(const Element& x) const;
  CheckResult check_unital() const;
  CheckResult check_multiplicative(const SweepOptions& opt) const;
  CheckResult check_star_preserving() const;
  CheckResult check_bijective() const;  // exact rank both ways
};

// Deterministic pseudo-random elements for sampled identities.
Element random_element(const BasisAlgebra& a, std::mt19937_64& rng, int terms,
                       long radicand = 1);

}  // namespace gspin
