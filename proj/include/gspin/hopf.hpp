#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "gspin/algebra.hpp"
#include "gspin/group.hpp"

namespace gspin {

struct HopfError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coproduct/antipode terms live over packed pair indices l*dim + r.
class HopfAlgebra {
 public:
  enum class Kind { Generic, Double, DualDouble };

  std::shared_ptr<const BasisAlgebra> alg;
  std::vector<SparseVec> coproduct;  // per label, over packed (l, r)
  std::vector<Scalar> counit;
  std::vector<SparseVec> antipode;  // per label
  std::optional<SparseVec> integral;
  Kind kind = Kind::Generic;
  std::optional<FiniteGroup> group;  // set for Double / DualDouble

  Index dim() const { return alg->dim(); }
  Index pack(Index l, Index r) const { return l * dim() + r; }
  std::pair<Index, Index> unpack(Index p) const { return {p / dim(), p % dim()}; }

  SparseVec delta(const SparseVec& x) const;    // element coproduct
  Scalar eps(const SparseVec& x) const;
  SparseVec antipode_of(const SparseVec& x) const;

  // Tensor-square arithmetic over packed indices.
  SparseVec tensor_mul(const SparseVec& u, const SparseVec& v) const;
  SparseVec tensor_star(const SparseVec& u) const;
  SparseVec tensor_unit() const;

  // Display form "(g,h)" / "(y,δx)" for report rows.
  std::string pair_name(Index i) const;
};

// Drinfeld double D(G) on the basis (g,h) = U_g V_h, label g*|G| + h.
HopfAlgebra quantum_double(const FiniteGroup& g);

// Dual of D(G) on the basis (y, δ_x), label y*|G| + x.
HopfAlgebra dual_double_explicit(const FiniteGroup& g);

struct Pairing {
  const HopfAlgebra* left = nullptr;   // dual side
  const HopfAlgebra* right = nullptr;  // original side
  // values[i][j] = <phi_i, x_j>; the canonical dual-basis pairing is the
  // identity matrix under matching label packings.
  std::function<Scalar(Index, Index)> value;
};

// Dual via transposed structure maps, with the canonical pairing.
std::pair<HopfAlgebra, Pairing> dual_hopf(const HopfAlgebra& h);

// Coalgebra, antipode and compatibility axioms with first counterexamples.
ValidationReport verify_hopf_axioms(const HopfAlgebra& h, const SweepOptions& opt);

// x is a normalized integral: a·x = x·a = eps(a)·x for all basis a and
// eps(x) = 1.  eps is always the counit of h itself (for a dual Hopf
// algebra that is the dual counit).
bool verify_integral(const HopfAlgebra& h, const SparseVec& x);

// The six duality identities for an explicit pairing, swept exactly.
ValidationReport verify_pairing(const HopfAlgebra& dual, const HopfAlgebra& orig,
                                const Pairing& p);

// Two Hopf algebras with identically packed labels have equal structure maps.
ValidationReport hopf_structs_equal(const HopfAlgebra& a, const HopfAlgebra& b);

struct ModuleAction {
  const HopfAlgebra* hopf = nullptr;
  const BasisAlgebra* carrier = nullptr;
  std::function<SparseVec(Index, Index)> act;  // (hopf label, carrier label)

  Element apply_basis(Index h, Index a) const {
    return Element(carrier, act(h, a));
  }
  Element apply(const SparseVec& hvec, const Element& x) const;
};

// The three module-algebra laws plus the unit laws.
ValidationReport verify_module_algebra(const ModuleAction& m, const SweepOptions& opt);

// Exact basis of {x : a(x) = eps(a) x for all a}, closed under product
// and star (checked).
std::vector<SparseVec> invariant_subalgebra(const ModuleAction& m);

// x -> integral(x) as a matrix over the carrier basis.
SparseMat integral_expectation(const ModuleAction& m);

struct ConditionalExpectation {
  const BasisAlgebra* domain = nullptr;
  SparseMat map;  // rows-as-images
  std::vector<SparseVec> range_basis;

  Element apply(const Element& x) const {
    return Element(domain, map.apply(x.coeffs()));
  }
};

ConditionalExpectation integral_expectation_record(const ModuleAction& m);

// Unitality, idempotence, range, bimodularity, faithfulness (exact) and
// positivity (GNS oracle on seeded samples at tol).
ValidationReport verify_conditional_expectation(const ConditionalExpectation& e,
                                                const std::vector<Scalar>& phi,
                                                const SweepOptions& opt, double tol,
                                                long radicand = 1);

}  // namespace gspin
