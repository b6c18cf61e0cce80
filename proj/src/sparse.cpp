#include "gspin/sparse.hpp"

#include <algorithm>

namespace gspin {

SparseVec SparseVec::unit_vec(Index i, Scalar c) {
  SparseVec v;
  if (!c.is_zero()) v.terms_.push_back({i, std::move(c)});
  return v;
}

Scalar SparseVec::at(Index i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, Index k) { return t.first < k; });
  if (it != terms_.end() && it->first == i) return it->second;
  return Scalar::zero();
}

void SparseVec::add_term(Index i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, Index k) { return t.first < k; });
  if (it != terms_.end() && it->first == i) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {i, c});
  }
}

void SparseVec::scale(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.second *= c;
}

void SparseVec::axpy(const Scalar& c, const SparseVec& v) {
  if (c.is_zero() || v.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + v.terms_.size());
  auto a = terms_.begin();
  auto b = v.terms_.begin();
  while (a != terms_.end() || b != v.terms_.end()) {
    if (b == v.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      Scalar s = c * b->second;
      if (!s.is_zero()) out.push_back({b->first, std::move(s)});
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) out.push_back({a->first, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
  SparseVec r(*this);
  r.axpy(Scalar::one(), o);
  return r;
}

SparseVec SparseVec::operator-(const SparseVec& o) const {
  SparseVec r(*this);
  r.axpy(Scalar(-1), o);
  return r;
}

SparseVec SparseVec::conj() const {
  SparseVec r(*this);
  for (auto& t : r.terms_) t.second = t.second.conj();
  return r;
}

SparseVec SparseVec::collect(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  SparseVec v;
  for (auto& t : raw) {
    if (!v.terms_.empty() && v.terms_.back().first == t.first) {
      v.terms_.back().second += t.second;
      if (v.terms_.back().second.is_zero()) v.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

SparseMat SparseMat::zero(Index r, Index c) {
  SparseMat m;
  m.rows = r;
  m.cols = c;
  m.row.resize(r);
  return m;
}

SparseMat SparseMat::identity(Index n) {
  SparseMat m = zero(n, n);
  for (Index i = 0; i < n; ++i) m.row[i] = SparseVec::unit_vec(i);
  return m;
}

SparseVec SparseMat::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, c] : v) out.axpy(c, row[j]);
  return out;
}

SparseMat SparseMat::compose(const SparseMat& inner) const {
  SparseMat out = zero(inner.rows, cols);
  for (Index j = 0; j < inner.rows; ++j) out.row[j] = apply(inner.row[j]);
  return out;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows == o.rows && cols == o.cols && row == o.row;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  return reduce_tracked(v, nullptr);
}

SparseVec Echelon::reduce_tracked(const SparseVec& v, SparseVec* coeffs) const {
  SparseVec cur = v;
  if (coeffs) *coeffs = SparseVec();
  // RREF rows vanish at every pivot but their own, so subtracting one row
  // never creates a new pivot hit: a single sweep catches them all.
  std::vector<std::pair<size_t, Scalar>> hits;
  for (const auto& [idx, c] : cur.terms()) {
    auto it = pivot_to_row_.find(idx);
    if (it != pivot_to_row_.end()) hits.push_back({it->second, c});
  }
  for (const auto& [r, c] : hits) {
    cur.axpy(-c, rows_[r]);
    if (coeffs) coeffs->axpy(c, trans_[r]);
  }
  return cur;
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec coeffs;
  SparseVec res = reduce_tracked(v, &coeffs);
  if (res.empty()) return false;
  Index pivot = res.leading().first;
  Scalar inv = res.leading().second.inv();
  res.scale(inv);
  // res = inv*(v - coeffs·inserted), tracked over the inserted vectors.
  Index new_id = static_cast<Index>(rows_.size());
  SparseVec tr = SparseVec::unit_vec(new_id, inv);
  tr.axpy(-inv, coeffs);
  // Clear this pivot from existing rows to keep RREF.
  for (size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = rows_[r].at(pivot);
    if (!c.is_zero()) {
      rows_[r].axpy(-c, res);
      trans_[r].axpy(-c, tr);
    }
  }
  pivot_to_row_[pivot] = rows_.size();
  rows_.push_back(std::move(res));
  pivot_.push_back(pivot);
  trans_.push_back(std::move(tr));
  return true;
}

std::optional<SparseVec> Echelon::solve(const SparseVec& v) const {
  SparseVec coeffs;
  SparseVec res = reduce_tracked(v, &coeffs);
  if (!res.empty()) return std::nullopt;
  return coeffs;
}

Index exact_rank(const SparseMat& m) {
  Echelon e(m.cols);
  for (const auto& r : m.row) e.insert(r);
  return e.rank();
}

Index rank_at_least(const SparseMat& m, Index target) {
  Echelon e(m.cols);
  for (const auto& r : m.row) {
    e.insert(r);
    if (e.rank() >= target) return e.rank();
  }
  return e.rank();
}

std::optional<SparseVec> solve_linear(const SparseMat& m, const SparseVec& rhs) {
  if (!rhs.empty() && rhs.terms().back().first >= m.rows)
    throw LinalgError("dimension-mismatch: rhs longer than row count");
  // Augmented transpose: unknowns x with sum_j x_j * col_j = rhs.
  // Work over columns: build vectors c_j over equation index i.
  std::vector<SparseVec> cols(m.cols);
  for (Index i = 0; i < m.rows; ++i)
    for (const auto& [j, c] : m.row[i]) {
      if (j >= m.cols) throw LinalgError("dimension-mismatch: entry out of range");
      cols[j].add_term(i, c);
    }
  Echelon e(m.rows);
  std::vector<Index> inserted;  // which column each inserted vector came from
  for (Index j = 0; j < m.cols; ++j)
    if (e.insert(cols[j])) inserted.push_back(j);
  auto sol = e.solve(rhs);
  if (!sol) return std::nullopt;
  SparseVec x;
  for (const auto& [k, c] : *sol) x.add_term(inserted[k], c);
  return x;
}

std::vector<SparseVec> kernel_basis(const SparseMat& m) {
  // RREF over the equations, then free-variable back substitution.
  Echelon e(m.cols);
  for (const auto& r : m.row) e.insert(r);
  std::vector<bool> is_pivot(m.cols, false);
  std::unordered_map<Index, const SparseVec*> row_of_pivot;
  for (const auto& r : e.rows()) {
    is_pivot[r.leading().first] = true;
    row_of_pivot[r.leading().first] = &r;
  }
  std::vector<SparseVec> out;
  for (Index j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    SparseVec v = SparseVec::unit_vec(j);
    for (const auto& r : e.rows()) {
      Scalar c = r.at(j);
      if (!c.is_zero()) v.add_term(r.leading().first, -c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<SparseVec> span_basis(const std::vector<SparseVec>& vecs, Index cols) {
  Echelon e(cols);
  for (const auto& v : vecs) e.insert(v);
  return e.rows();
}

bool spans_equal(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b,
                 Index cols) {
  Echelon ea(cols);
  for (const auto& v : a) ea.insert(v);
  Echelon eb(cols);
  for (const auto& v : b) eb.insert(v);
  if (ea.rank() != eb.rank()) return false;
  for (const auto& v : a)
    if (!eb.contains(v)) return false;
  for (const auto& v : b)
    if (!ea.contains(v)) return false;
  return true;
}

SparseVec flatten_map(const SparseMat& m) {
  std::vector<SparseVec::Term> raw;
  for (Index j = 0; j < m.rows; ++j)
    for (const auto& [i, c] : m.row[j]) raw.push_back({j * m.cols + i, c});
  return SparseVec::collect(std::move(raw));
}

}  // namespace gspin
