// invariants tests: CE differential with a Leibniz-rule oracle, Betti
// numbers, Casimir counts including the symbolic order-6 minors, the
// decomposable d-exact 2-form counts, and fingerprint assembly.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilclass/algebras.hpp"
#include "nilclass/invariants.hpp"
#include "nilclass/notation.hpp"

using namespace nilclass;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

LieAlgebra catalog_instance(const AlgebraSpec& spec) {
  std::map<std::string, Scalar> params;
  for (const auto& p : spec.param_names) params[p] = Scalar(1);
  return real_algebra(spec.name, params);
}

}  // namespace

TEST_CASE("ce_differential: examples and the Leibniz rule") {
  LieAlgebra abelian(5);
  ExtForm w(5, 2);
  w.add_term({1, 3}, Scalar(2));
  CHECK(ce_differential(abelian, w).is_zero());

  LieAlgebra n5 = real_algebra("n5");
  ExtForm e8 = ExtForm::generator(8, 8);
  ExtForm de8 = ce_differential(n5, e8);
  ExtForm want(8, 2);
  want.add_term({1, 6}, Scalar(1));
  want.add_term({2, 7}, Scalar(1));
  want.add_term({3, 5}, Scalar(1));
  CHECK(de8 == want);

  // d(e1 ^ e8) = de1 ^ e8 - e1 ^ de8 = -e1 ^ (e27 + e35)
  ExtForm e18 = wedge(ExtForm::generator(8, 1), e8);
  ExtForm got = ce_differential(n5, e18);
  ExtForm oracle(8, 3);
  oracle.add_term({1, 2, 7}, Scalar(-1));
  oracle.add_term({1, 3, 5}, Scalar(-1));
  CHECK(got == oracle);

  // Leibniz rule on random forms over a catalog algebra
  std::mt19937_64 rng(17);
  Differential d = ce_differential_of(n5);
  for (int rep = 0; rep < 20; ++rep) {
    ExtForm a(8, 1 + static_cast<int>(rng() % 2));
    ExtForm b(8, 1 + static_cast<int>(rng() % 2));
    for (auto& t : basis_tuples(8, a.degree()))
      if (rng() % 3 == 0) a.add_term(t, Scalar(static_cast<int>(rng() % 5) - 2));
    for (auto& t : basis_tuples(8, b.degree()))
      if (rng() % 3 == 0) b.add_term(t, Scalar(static_cast<int>(rng() % 5) - 2));
    ExtForm lhs = d.apply(wedge(a, b));
    ExtForm rhs = wedge(d.apply(a), b) +
                  (a.degree() % 2 == 0 ? wedge(a, d.apply(b)) : -wedge(a, d.apply(b)));
    CHECK(lhs == rhs);
  }

  // d of a top-degree form is the zero form
  ExtForm top(8, 8);
  top.add_term({1, 2, 3, 4, 5, 6, 7, 8}, Scalar(1));
  CHECK(ce_differential(n5, top).is_zero());
}

TEST_CASE("betti: abelian binomials, catalog values") {
  LieAlgebra abelian(6);
  for (int k = 0; k <= 6; ++k) CHECK(betti(abelian, k) == binom(6, k));

  CHECK(betti(real_algebra("m2", {{"g", Scalar(1)}}), 2) == 5);
  CHECK(betti(real_algebra("m3", {{"al", Scalar(0)}, {"be", Scalar(0)}}), 2) == 4);
  CHECK(betti(real_algebra("m1", {{"g", Scalar(0)}}), 2) == 6);
  CHECK(betti(real_algebra("m2", {{"g", Scalar(0)}}), 2) == 6);
}

TEST_CASE("betti: duality, Euler characteristic, b1 = dim g - dim [g,g]") {
  for (const auto& spec : algebra_catalog()) {
    LieAlgebra g = catalog_instance(spec);
    std::vector<int> b = betti_all(g);
    CHECK(b[0] == 1);
    int chi = 0;
    for (int k = 0; k <= 8; ++k) {
      chi += (k % 2 == 0 ? 1 : -1) * b[static_cast<size_t>(k)];
      CHECK(b[static_cast<size_t>(k)] == b[static_cast<size_t>(8 - k)]);
    }
    CHECK(chi == 0);
    CHECK(b[1] == 8 - g.derived_subalgebra().dim());
  }
}

TEST_CASE("casimir counts") {
  CHECK(casimir_count(real_algebra("n1", {{"g", Scalar(0)}})) == 4);
  CHECK(casimir_count(real_algebra("n1", {{"g", Scalar(1)}})) == 2);
  CHECK(casimir_count(LieAlgebra(8)) == 8);
  CHECK(casimir_count(real_algebra("m2", {{"g", Scalar(0)}})) == 4);
  CHECK(casimir_count(real_algebra("m2", {{"g", Scalar(1)}})) == 4);

  // the coadjoint matrix is antisymmetric, so n_I has the parity of dim g
  for (const auto& spec : algebra_catalog()) {
    LieAlgebra g = catalog_instance(spec);
    Matrix c = coadjoint_matrix(g);
    Matrix ct = c.transpose();
    for (int r = 0; r < 8; ++r)
      for (int col = 0; col < 8; ++col) CHECK(c(r, col) == -ct(r, col));
    CHECK((8 - casimir_count(g)) % 2 == 0);
  }
}

TEST_CASE("generic rank of the n1 coadjoint matrix") {
  // the 8x8 coadjoint matrix has generic rank 6 for gamma = 1, 4 for 0
  CHECK(rank_generic(coadjoint_matrix(real_algebra("n1", {{"g", Scalar(1)}}))) == 6);
  CHECK(rank_generic(coadjoint_matrix(real_algebra("n1", {{"g", Scalar(0)}}))) == 4);
}

TEST_CASE("order-6 minors of the n1 coadjoint matrix") {
  LieAlgebra n1 = real_algebra("n1");  // gamma symbolic
  Matrix c = coadjoint_matrix(n1);

  // orders 8 and 7 vanish identically
  for (const Scalar& m : order_minors(c, 8)) CHECK(m.is_zero());
  for (const Scalar& m : order_minors(c, 7)) CHECK(m.is_zero());

  std::vector<Scalar> sixth = order_minors(c, 6);
  std::map<std::string, GaussRational> gamma0{{"g", GaussRational(Rational(0))}};
  std::vector<Poly> displayed;
  {
    Poly g = Poly::variable("g"), x6 = Poly::variable("x6"), x7 = Poly::variable("x7"),
         x8 = Poly::variable("x8");
    Poly g2 = g * g, x84 = x8 * x8 * x8 * x8;
    displayed = {g2 * x7 * x7 * x84, g2 * x6 * x7 * x84, g2 * x7 * x84 * x8,
                 g2 * x6 * x6 * x84, g2 * x6 * x84 * x8, g2 * x84 * x8 * x8};
  }
  std::vector<bool> found(displayed.size(), false);
  for (const Scalar& m : sixth) {
    if (m.is_zero()) continue;
    // every nonzero minor vanishes at gamma = 0
    CHECK(m.substitute(gamma0).is_zero());
    Poly p = m.to_poly();
    bool matched = false;
    for (size_t k = 0; k < displayed.size(); ++k)
      if (p == displayed[k] || p == -displayed[k]) {
        found[k] = true;
        matched = true;
      }
    CHECK(matched);
  }
  for (size_t k = 0; k < displayed.size(); ++k) CHECK(found[k]);
}

TEST_CASE("decomposable d-exact 2-forms") {
  CHECK(decomposable_exact_2forms(real_algebra("m1", {{"g", Scalar(0)}})) == 4);
  CHECK(decomposable_exact_2forms(real_algebra("m1", {{"g", Scalar(1)}})) == 3);
  CHECK(decomposable_exact_2forms(LieAlgebra(8)) == 0);
  CHECK(decomposable_exact_2forms(parse_real_algebra("(0,0,12)")) == 1);

  CHECK(decomposable_span_dimension(real_algebra("m1", {{"g", Scalar(0)}})) == 4);
  CHECK(decomposable_span_dimension(real_algebra("m1", {{"g", Scalar(1)}})) == 3);
  CHECK(decomposable_span_dimension(LieAlgebra(8)) == 0);
}

TEST_CASE("fingerprint assembly") {
  Fingerprint n2_0 = fingerprint(real_algebra("n2", {{"al", Scalar(0)}}));
  CHECK(n2_0.ascending_type == std::vector<int>{1, 3, 6, 8});
  CHECK(n2_0.descending_type == std::vector<int>{4, 3, 1, 0});
  CHECK(n2_0.casimir == 4);

  Fingerprint n3_1 = fingerprint(real_algebra("n3", {{"g", Scalar(1)}}));
  CHECK(n3_1.descending_type == std::vector<int>{4, 2, 1, 0});
  CHECK(n3_1.casimir == 4);

  Fingerprint m1 = fingerprint(real_algebra("m1", {{"g", Scalar(1)}}));
  CHECK(m1.ascending_type == std::vector<int>{1, 3, 5, 8});
  CHECK(m1.b2 == 6);
  CHECK(m1.casimir == 2);

  CHECK(fingerprint(real_algebra("m1", {{"g", Scalar(0)}})) ==
        fingerprint(real_algebra("m1", {{"g", Scalar(0)}})));
}
