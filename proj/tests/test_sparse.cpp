#include <doctest.h>

#include <random>

#include "gspin/numeric.hpp"
#include "gspin/sparse.hpp"

using namespace gspin;

namespace {

Scalar rand_scalar(std::mt19937_64& rng, long rad) {
  Scalar s(frac(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
  s += Scalar::i() * Scalar(frac(static_cast<long>(rng() % 5) - 2, 1));
  if (rng() % 2 == 0)
    s += Scalar::sqrt_of(rad) * Scalar(frac(static_cast<long>(rng() % 3) - 1, 1));
  return s;
}

}  // namespace

TEST_CASE("sparse vectors never store zeros") {
  SparseVec v;
  v.add_term(3, Scalar::one());
  v.add_term(3, Scalar(-1));
  CHECK(v.empty());
  v.add_term(1, Scalar(2));
  v.add_term(5, Scalar(7));
  v.axpy(Scalar(-1), v);
  CHECK(v.empty());
}

TEST_CASE("identity matrix has full rank") {
  CHECK(exact_rank(SparseMat::identity(4)) == 4);
}

TEST_CASE("rank-one 2x2 with radical entries") {
  // [[1, sqrt(d)], [sqrt(d), d]] has rank 1: the second row is sqrt(d) times
  // the first.
  for (long d : {2L, 3L, 5L}) {
    SparseMat m = SparseMat::zero(2, 2);
    m.row[0].add_term(0, Scalar::one());
    m.row[0].add_term(1, Scalar::sqrt_of(d));
    m.row[1].add_term(0, Scalar::sqrt_of(d));
    m.row[1].add_term(1, Scalar(d));
    CHECK(exact_rank(m) == 1);
  }
}

TEST_CASE("exact rank agrees with float SVD rank on random matrices") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 5; ++trial) {
    SparseMat m = SparseMat::zero(20, 20);
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j)
        if (rng() % 3 != 0) m.row[i].add_term(j, rand_scalar(rng, 2));
    // plant a dependent row to keep the comparison interesting
    m.row[19] = m.row[0];
    m.row[19].axpy(Scalar(2), m.row[1]);
    CMatrix fm(20, std::vector<std::complex<double>>(20));
    for (int i = 0; i < 20; ++i)
      for (const auto& [j, c] : m.row[i]) fm[i][j] = c.to_complex();
    CHECK(exact_rank(m) == numeric_rank(fm, 1e-8));
  }
}

TEST_CASE("rank is transpose invariant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    SparseMat m = SparseMat::zero(8, 11);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 11; ++j)
        if (rng() % 4 == 0) m.row[i].add_term(j, rand_scalar(rng, 3));
    SparseMat t = SparseMat::zero(11, 8);
    for (int i = 0; i < 8; ++i)
      for (const auto& [j, c] : m.row[i]) t.row[j].add_term(i, c);
    CHECK(exact_rank(m) == exact_rank(t));
  }
}

TEST_CASE("solve_linear finds solutions and flags inconsistency") {
  // [[1,2],[2,4]] x = (1,2) has a solution; rhs (1,3) does not.
  SparseMat m = SparseMat::zero(2, 2);
  m.row[0].add_term(0, Scalar::one());
  m.row[0].add_term(1, Scalar(2));
  m.row[1].add_term(0, Scalar(2));
  m.row[1].add_term(1, Scalar(4));
  SparseVec rhs;
  rhs.add_term(0, Scalar::one());
  rhs.add_term(1, Scalar(2));
  auto sol = solve_linear(m, rhs);
  REQUIRE(sol.has_value());
  // verify M x = rhs
  SparseVec check;
  for (Index i = 0; i < 2; ++i) {
    Scalar acc;
    for (const auto& [j, c] : m.row[i]) acc += c * sol->at(j);
    check.add_term(i, acc);
  }
  CHECK(check == rhs);
  SparseVec bad;
  bad.add_term(0, Scalar::one());
  bad.add_term(1, Scalar(3));
  CHECK(!solve_linear(m, bad).has_value());
}

TEST_CASE("kernel basis spans the nullspace") {
  std::mt19937_64 rng(9);
  SparseMat m = SparseMat::zero(6, 10);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 10; ++j)
      if (rng() % 3 == 0) m.row[i].add_term(j, rand_scalar(rng, 2));
  auto kb = kernel_basis(m);
  CHECK(static_cast<Index>(kb.size()) == 10 - exact_rank(m));
  for (const auto& v : kb) {
    for (Index i = 0; i < m.rows; ++i) {
      Scalar acc;
      for (const auto& [j, c] : m.row[i]) acc += c * v.at(j);
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("echelon solve recovers exact coefficients") {
  std::mt19937_64 rng(13);
  Echelon ech(12);
  std::vector<SparseVec> inserted;
  for (int k = 0; k < 6; ++k) {
    SparseVec v;
    for (int j = 0; j < 12; ++j)
      if (rng() % 2 == 0) v.add_term(j, rand_scalar(rng, 2));
    if (ech.insert(v)) inserted.push_back(v);
  }
  SparseVec combo;
  std::vector<Scalar> coeffs;
  for (size_t k = 0; k < inserted.size(); ++k) {
    Scalar c = rand_scalar(rng, 2);
    coeffs.push_back(c);
    combo.axpy(c, inserted[k]);
  }
  auto sol = ech.solve(combo);
  REQUIRE(sol.has_value());
  for (size_t k = 0; k < inserted.size(); ++k)
    CHECK(sol->at(static_cast<Index>(k)) == coeffs[k]);
}

TEST_CASE("psd_check oracles") {
  CMatrix id(3, std::vector<std::complex<double>>(3));
  for (int i = 0; i < 3; ++i) id[i][i] = 1.0;
  CHECK(psd_check(id, 1e-8));
  CMatrix indef = id;
  indef[1][1] = -1.0;
  CHECK(!psd_check(indef, 1e-8));
  CMatrix nonherm = id;
  nonherm[0][1] = 1.0;
  CHECK_THROWS_AS(psd_check(nonherm, 1e-8), NumericError);
  // Gram matrices M*M are PSD by construction.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 6;
    CMatrix m(n, std::vector<std::complex<double>>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[i][j] = {static_cast<double>(rng() % 9) - 4.0,
                   static_cast<double>(rng() % 9) - 4.0};
    CMatrix gram(n, std::vector<std::complex<double>>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::complex<double> acc = 0;
        for (int k = 0; k < n; ++k) acc += std::conj(m[k][i]) * m[k][j];
        gram[i][j] = acc;
      }
    CHECK(psd_check(gram, 1e-8));
  }
}
