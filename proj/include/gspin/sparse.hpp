#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gspin/scalar.hpp"

namespace gspin {

using Index = std::int64_t;

struct LinalgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sorted sparse vector over an arbitrary index range; no stored zeros.
class SparseVec {
 public:
  using Term = std::pair<Index, Scalar>;

  SparseVec() = default;
  static SparseVec unit_vec(Index i, Scalar c = Scalar::one());

  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Scalar at(Index i) const;
  // First (index, coeff) in index order; vector must be nonempty.
  const Term& leading() const { return terms_.front(); }

  void add_term(Index i, const Scalar& c);  // accumulate one coefficient
  void scale(const Scalar& c);
  void axpy(const Scalar& c, const SparseVec& v);  // this += c*v
  SparseVec operator+(const SparseVec& o) const;
  SparseVec operator-(const SparseVec& o) const;
  bool operator==(const SparseVec& o) const { return terms_ == o.terms_; }
  SparseVec conj() const;

  // Builds from unordered (index, coeff) pairs, merging duplicates.
  static SparseVec collect(std::vector<Term> raw);

 private:
  std::vector<Term> terms_;
};

// Rows-as-vectors container.  Used both as a plain stack of vectors
// (rank / span computations) and as a linear map via rows-as-images:
// row j = image of basis vector j.
struct SparseMat {
  Index rows = 0;
  Index cols = 0;
  std::vector<SparseVec> row;

  static SparseMat zero(Index r, Index c);
  static SparseMat identity(Index n);

  const SparseVec& image(Index j) const { return row[j]; }
  SparseVec apply(const SparseVec& v) const;  // sum_j v_j * row[j]
  SparseMat compose(const SparseMat& inner) const;  // this ∘ inner
  bool operator==(const SparseMat& o) const;
};

// Reduced row echelon basis with incremental insertion.
class Echelon {
 public:
  explicit Echelon(Index cols) : cols_(cols) {}

  Index rank() const { return static_cast<Index>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  Index cols() const { return cols_; }

  // Reduces v against the current basis; returns the residual.
  SparseVec reduce(const SparseVec& v) const;
  // Reduce and record the coefficients over the *inserted* rows.
  // coeffs[k] multiplies the k-th inserted vector.
  SparseVec reduce_tracked(const SparseVec& v, SparseVec* coeffs) const;
  // Inserts v if independent; returns true when rank grew.
  bool insert(const SparseVec& v);
  // Membership: reduce(v) empty.
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // Coefficients of v over the inserted vectors, if v lies in the span.
  std::optional<SparseVec> solve(const SparseVec& v) const;

 private:
  Index cols_;
  std::vector<SparseVec> rows_;       // RREF, leading coeff 1
  std::vector<Index> pivot_;          // pivot column per row
  std::vector<SparseVec> trans_;      // row r = sum_k trans_[r][k] * inserted_k
  std::unordered_map<Index, size_t> pivot_to_row_;
};

Index exact_rank(const SparseMat& m);
// Stops as soon as `target` independent rows are seen; returns min(rank, target).
Index rank_at_least(const SparseMat& m, Index target);

// Solves M x = rhs with M in the usual orientation (row i = equation i,
// columns = unknowns).  Any one solution, or nullopt when inconsistent.
std::optional<SparseVec> solve_linear(const SparseMat& m, const SparseVec& rhs);

// Nullspace basis of M x = 0 (rows = equations, cols = unknowns).
std::vector<SparseVec> kernel_basis(const SparseMat& m);

// Echelonized basis of the row span.
std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vecs, Index cols);

// Two spans over the same index range are equal.
bool spans_equal(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b,
                 Index cols);

// Flatten a rows-as-images map into a single vector over (in, out) pairs.
SparseVec flatten_map(const SparseMat& m);

}  // namespace gspin
