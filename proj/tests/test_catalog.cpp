// catalog tests: family generators with constraint handling, the real
// algebra list with parameter domains, the appendix dictionaries, the
// certificate library with its corruption harness, and deterministic
// table reports.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilclass/algebras.hpp"
#include "nilclass/appendix.hpp"
#include "nilclass/certificates.hpp"
#include "nilclass/invariants.hpp"
#include "nilclass/notation.hpp"
#include "nilclass/tables.hpp"

using namespace nilclass;

TEST_CASE("real_algebra: displays and domains") {
  CHECK(notation_of(real_algebra("g5")).print() == "(0^4, 2*12, 14-23, 13+24, 16+27+35)");
  CHECK(notation_of(real_algebra("m4", {{"g", Scalar(1)}})).print() ==
        "(0^2, 12, 13, 23, 14+25, 15+24, 16+25+27)");
  CHECK(real_algebra("n1", {{"g", Scalar(1)}}) == real_algebra("g1", {{"g", Scalar(1)}}));
  CHECK(real_algebra("m2", {{"g", Scalar(0)}}) == real_algebra("g10", {{"g", Scalar(0)}}));

  CHECK_THROWS_AS((void)real_algebra("g4", {{"h", Scalar(-1)}, {"t", Scalar(0)}}), InvalidParams);
  CHECK_THROWS_AS((void)real_algebra("g4", {{"h", Scalar(0)}, {"t", Scalar(1)}}), InvalidParams);
  CHECK_THROWS_AS((void)real_algebra("g1", {{"g", Scalar(2)}}), InvalidParams);
  CHECK_THROWS_AS((void)real_algebra("g11", {{"al", Scalar(2)}, {"be", Scalar(0)}}),
                  InvalidParams);
  CHECK_THROWS_AS((void)real_algebra("g11", {{"al", Scalar(-1)}, {"be", Scalar(1)}}),
                  InvalidParams);
  CHECK_THROWS_AS((void)real_algebra("nope"), InvalidParams);
  // symbolic parameters skip the numeric domain check
  CHECK(real_algebra("g4", {{"h", Scalar::var("h")}, {"t", Scalar(0)}}).dim() == 8);
}

TEST_CASE("every catalog instance is a nilpotent Lie algebra of step 3..5") {
  for (const auto& spec : algebra_catalog()) {
    std::map<std::string, Scalar> params;
    for (const auto& p : spec.param_names) params[p] = Scalar(1);
    LieAlgebra g = real_algebra(spec.name, params);
    CHECK(g.jacobi_check().pass);
    SeriesResult asc = g.ascending_series();
    CHECK(asc.nilpotent);
    CHECK(asc.type() == spec.ascending_type);
  }
}

TEST_CASE("appendix dictionary: examples") {
  // (1,1,0,2delta) lands on g5 with w2 = -(delta/2)(e3 - 2 i e5)
  AppendixResult g5row = appendix_map_I(FamilyIParams{1, 1, 1, Scalar(0), Scalar(2)});
  CHECK(g5row.target.algebra == "g5");
  CHECK(g5row.map.alpha(1, 2) == Scalar(Rational(-1, 2)));
  CHECK(g5row.map.beta(1, 4) == Scalar(1));

  AppendixResult g12row = appendix_map_II(FamilyIIParams{1, 0, 1, Scalar(1), Scalar(0)});
  CHECK(g12row.target.algebra == "g12");
  CHECK(g12row.target.params.at("g").is_zero());

  AppendixResult g8row = appendix_map_I(FamilyIParams{0, 1, 1, Scalar(0), Scalar(1)});
  CHECK(g8row.target.algebra == "g8");

  AppendixResult g4row = appendix_map_I(FamilyIParams{1, 0, 1, Scalar(1), Scalar(3)});
  CHECK(g4row.target.algebra == "g4");
  CHECK(g4row.target.params.at("h") == Scalar(Rational(1, 3)));
  CHECK(g4row.target.params.at("t") == Scalar(3));

  CHECK_THROWS_AS((void)appendix_map_I(FamilyIParams{0, 0, 1, Scalar(2), Scalar(7)}),
                  InvalidParams);
}

TEST_CASE("appendix dictionary rows reproduce their targets exactly") {
  Manifest m = Manifest::builtin();
  for (const char* id : {"A", "B"}) {
    TableReport rep = reproduce_table(id, m);
    for (const auto& row : rep.rows) {
      INFO(row.label);
      CHECK(row.pass);
    }
  }
}

TEST_CASE("constructive realification with a symbolic parameter") {
  // the g2 row's covectors are constant, so construction works with b
  // symbolic and lands on g2 with al = -4 delta b
  Scalar b = Scalar::var("b");
  FamilyIParams p{0, 1, 1, Scalar(1), b};
  AppendixResult row = appendix_map_I(p);
  Realified real = realify(family_I(p), row.map);
  CHECK(real.algebra == real_algebra("g2", {{"al", Scalar(-4) * b}}));
}

TEST_CASE("radical-valued rows reject parameters outside the tower") {
  // (*) at a = 1/2 needs sqrt(15)/2, which is not in Q(sqrt2, sqrt3)
  FamilyIParams p{1, 1, 1, Scalar(Rational(1, 2)), Scalar(0)};
  CHECK_THROWS_WITH_AS((void)appendix_map_I(p),
                       doctest::Contains("does not lie in Q(sqrt(2),sqrt(3))"), Error);
}

TEST_CASE("realified dictionary targets carry SnN structures with equal fingerprints") {
  // cross-module consistency on a radical-valued row: case (***) at
  // (1,0,1,3), fingerprint of the realification equals the catalog target
  FamilyIParams p{1, 0, 1, Scalar(1), Scalar(3)};
  AppendixResult row = appendix_map_I(p);
  ComplexStructEqs eqs = family_I(p);
  Realified real = realify(eqs, row.map);
  LieAlgebra target = real_algebra(row.target.algebra, row.target.params);
  CHECK(fingerprint(real.algebra) == fingerprint(target));
  CHECK(nijenhuis_vanishes(real.algebra, real.j));
  CHECK(classify_j_type(real.algebra, real.j) == JType::StronglyNonNilpotent);
}

TEST_CASE("certificate library verifies; corrupted mutants fail") {
  const auto& lib = certificate_library();
  CHECK(lib.size() >= 25);
  for (const auto& cert : lib) {
    INFO(cert.name);
    CertReport rep = verify_certificate(cert);
    CHECK(rep.pass);
  }
  for (const auto& bad : corrupted_certificates()) {
    INFO(bad.name);
    CertReport rep = verify_certificate(bad);
    CHECK(!rep.pass);
    CHECK(!rep.residuals.empty());
  }
}

TEST_CASE("certificate-linked algebras share fingerprints") {
  for (const auto& cert : certificate_library()) {
    if (cert.kind != Certificate::Kind::RealIso) continue;
    if (!cert.source_algebra.all_entries_in_field()) continue;  // symbolic pairs
    CHECK(fingerprint(cert.source_algebra) == fingerprint(cert.target_algebra));
  }
}

TEST_CASE("singular certificates are rejected") {
  Certificate cert;
  cert.kind = Certificate::Kind::RealIso;
  cert.source_algebra = real_algebra("n5");
  cert.target_algebra = real_algebra("n5");
  cert.lambda = Matrix(8, 8);
  CHECK_THROWS_AS((void)verify_certificate(cert), SingularChange);
}

TEST_CASE("table reports are deterministic") {
  Manifest m = Manifest::builtin();
  for (const char* id : {"T4", "T9"}) {
    TableReport a = reproduce_table(id, m, 42);
    TableReport b = reproduce_table(id, m, 42);
    CHECK(a.to_json().dump() == b.to_json().dump());
  }
  TableReport t3 = reproduce_table("T3", m);
  CHECK(t3.rows.size() == 10);
  CHECK(t3.pass);
  CHECK_THROWS_AS((void)reproduce_table("T6", m), InvalidParams);
}

TEST_CASE("table row counts match the recorded layout") {
  Manifest m = Manifest::builtin();
  CHECK(reproduce_table("T1", m).rows.size() == 9);
  CHECK(reproduce_table("T2", m).rows.size() == 4);
  CHECK(reproduce_table("T8", m).rows.size() == 7);
  CHECK(reproduce_table("T9", m).rows.size() == 4);
  TableReport t5 = reproduce_table("T5", m);
  CHECK(t5.rows.size() == 25);
  CHECK(t5.pass);
}

TEST_CASE("family generators attach predictions") {
  FamilyIParams p1{0, 0, 1, Scalar(1), Scalar(0)};
  CHECK(predicted_ascending_type_I(p1) == std::vector<int>{1, 3, 8});
  CHECK(table1_row(p1) == "(1,3,8)");
  // non-canonical parameters still give valid equations, just no table row
  FamilyIParams p2{0, 0, 1, Scalar(2), Scalar(7)};
  CHECK(family_I(p2).validate());
  CHECK(!table1_row(p2).has_value());
  CHECK(predicted_ascending_type_I(p2) == std::vector<int>{1, 3, 8});
}
