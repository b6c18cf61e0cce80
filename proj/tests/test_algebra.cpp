#include <doctest.h>

#include <random>

#include "gspin/algebra.hpp"

using namespace gspin;

TEST_CASE("matrix-unit algebra passes the axiom sweep") {
  TableAlgebra m2 = TableAlgebra::matrix_units(2);
  SweepOptions opt;
  CHECK(verify_algebra_axioms(m2, opt).all_pass());
  // unit acts as identity, star is involutive
  Element e01 = Element::basis(&m2, 1);
  CHECK(Element::unit(&m2) * e01 == e01);
  CHECK(e01.star().star() == e01);
}

TEST_CASE("element arithmetic rejects parent mixing") {
  TableAlgebra a = TableAlgebra::matrix_units(2);
  TableAlgebra b = TableAlgebra::matrix_units(2);
  Element x = Element::basis(&a, 0);
  Element y = Element::basis(&b, 0);
  CHECK_THROWS_AS(x * y, AlgebraError);
  CHECK_THROWS_AS(x + y, AlgebraError);
}

TEST_CASE("broken structure constants produce a counterexample") {
  TableAlgebra m2 = TableAlgebra::matrix_units(2);
  // flip a sign: E01 * E10 = -E00
  m2.set_product(1, 2, SparseVec::unit_vec(0, Scalar(-1)));
  SweepOptions opt;
  ValidationReport rep = verify_algebra_axioms(m2, opt);
  CHECK(!rep.all_pass());
  bool assoc = false;
  for (const auto& c : rep.items)
    if (c.id.find("associativity") == 0 && !c.pass) assoc = true;
  CHECK(assoc);
}

TEST_CASE("span closure") {
  TableAlgebra m2 = TableAlgebra::matrix_units(2);
  SUBCASE("of the unit is the unit line") {
    auto basis = span_closure(m2, {Element::unit(&m2)});
    CHECK(basis.size() == 1);
  }
  SUBCASE("of all labels is everything") {
    std::vector<Element> gens;
    for (Index i = 0; i < m2.dim(); ++i) gens.push_back(Element::basis(&m2, i));
    CHECK(span_closure(m2, gens).size() == 4);
  }
  SUBCASE("of one off-diagonal matrix unit is the full algebra") {
    auto basis = span_closure(m2, {Element::basis(&m2, 1)});
    CHECK(basis.size() == 4);
  }
  SUBCASE("is idempotent") {
    auto basis = span_closure(m2, {Element::basis(&m2, 1)});
    std::vector<Element> again;
    for (const auto& v : basis) again.push_back(Element(&m2, v));
    auto twice = span_closure(m2, again);
    CHECK(spans_equal(basis, twice, m2.dim()));
  }
  SUBCASE("empty generator set is an error") {
    CHECK_THROWS_AS(span_closure(m2, {}), AlgebraError);
  }
}

TEST_CASE("centers") {
  TableAlgebra m2 = TableAlgebra::matrix_units(2);
  CHECK(center_basis(m2).size() == 1);
  TableAlgebra cg = TableAlgebra::functions_on_group(5);
  CHECK(center_basis(cg).size() == 5);
  // centralizer of a generating set equals the center
  std::vector<Element> gens{Element::basis(&m2, 1), Element::basis(&m2, 2)};
  CHECK(centralizer_basis(m2, gens).size() == 1);
  CHECK(center_is_trivial(m2, gens));
}

TEST_CASE("gns representation of C(G) with the uniform state") {
  TableAlgebra cg = TableAlgebra::functions_on_group(4);
  std::vector<Scalar> phi(4, Scalar(frac(1, 4)));
  GnsData gns = gns_representation(cg, phi, 1e-8);
  CHECK(gns.faithful);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::complex<double> want = i == j ? 0.25 : 0.0;
      CHECK(std::abs(gns.gram[i][j] - want) < 1e-12);
    }
  // rep is multiplicative and star-compatible within float tolerance
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Element x = random_element(cg, rng, 2);
    Element y = random_element(cg, rng, 2);
    Element xy = x * y;
    // compose float matrices
    auto matmul = [&](const CMatrix& a, const CMatrix& b) {
      int n = static_cast<int>(a.size());
      CMatrix out(n, std::vector<std::complex<double>>(n));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
      return out;
    };
    auto rep_of = [&](const Element& e) {
      int n = static_cast<int>(cg.dim());
      CMatrix out(n, std::vector<std::complex<double>>(n));
      for (const auto& [k, c] : e.coeffs())
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            out[i][j] += c.to_complex() * gns.rep[k][i][j];
      return out;
    };
    CMatrix lhs = rep_of(xy);
    CMatrix rhs = matmul(rep_of(x), rep_of(y));
    for (size_t i = 0; i < lhs.size(); ++i)
      for (size_t j = 0; j < lhs.size(); ++j)
        CHECK(std::abs(lhs[i][j] - rhs[i][j]) < 1e-9);
  }
}

TEST_CASE("non-states are rejected") {
  TableAlgebra cg = TableAlgebra::functions_on_group(3);
  std::vector<Scalar> bad(3, Scalar::one());  // phi(unit) = 3
  CHECK_THROWS_AS(gns_representation(cg, bad, 1e-8), AlgebraError);
}

TEST_CASE("positivity oracle") {
  TableAlgebra m2 = TableAlgebra::matrix_units(2);
  std::vector<Scalar> phi;
  for (Index i = 0; i < 4; ++i) phi.push_back(m2.state(i));
  CHECK(is_positive(m2, Element::unit(&m2), phi, 1e-8));
  std::mt19937_64 rng(23);
  for (int k = 0; k < 50; ++k) {
    Element y = random_element(m2, rng, 3, 2);
    CHECK(is_positive(m2, y.star() * y, phi, 1e-8));
  }
  // diag(1, -1) is self-adjoint but not positive
  Element d = Element::basis(&m2, 0) - Element::basis(&m2, 3);
  CHECK(!is_positive(m2, d, phi, 1e-8));
  // non-self-adjoint input is an error
  Element e01 = Element::basis(&m2, 1);
  CHECK_THROWS_AS(is_positive(m2, e01, phi, 1e-8), AlgebraError);
}

TEST_CASE("JSON dump round trip is byte-exact") {
  TableAlgebra m2 = TableAlgebra::matrix_units(2);
  std::string dump = algebra_to_json(m2);
  TableAlgebra back = algebra_from_json(dump);
  CHECK(algebra_to_json(back) == dump);
  // and semantically identical
  for (Index i = 0; i < m2.dim(); ++i)
    for (Index j = 0; j < m2.dim(); ++j) CHECK(m2.mul(i, j) == back.mul(i, j));
}

TEST_CASE("morphism verification catches a broken map") {
  TableAlgebra m2 = TableAlgebra::matrix_units(2);
  AlgebraMorphism id;
  id.source = &m2;
  id.target = &m2;
  for (Index i = 0; i < m2.dim(); ++i) id.image.push_back(Element::basis(&m2, i));
  SweepOptions opt;
  CHECK(id.check_unital().pass);
  CHECK(id.check_multiplicative(opt).pass);
  CHECK(id.check_star_preserving().pass);
  CHECK(id.check_bijective().pass);
  AlgebraMorphism broken = id;
  broken.image[1] = Element::basis(&m2, 2);  // E01 -> E10: not multiplicative
  CHECK(!broken.check_multiplicative(opt).pass);
  AlgebraMorphism collapse = id;
  collapse.image[1] = Element::basis(&m2, 2);
  collapse.image[2] = Element::basis(&m2, 2);
  CHECK(!collapse.check_bijective().pass);
}
