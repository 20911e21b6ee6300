#include "nilclass/certificates.hpp"

#include "nilclass/algebras.hpp"
#include "nilclass/appendix.hpp"
#include "nilclass/errors.hpp"
#include "nilclass/families.hpp"
#include "nilclass/jacobi_conditions.hpp"
#include "nilclass/notation.hpp"

namespace nilclass {

namespace {

// d_target(F e'^i) - F(d_source e'^i) over the real exterior algebras.
std::vector<CertResidual> residuals_real(const LieAlgebra& source, const LieAlgebra& target,
                                         const Matrix& lambda) {
  int n = source.dim();
  if (target.dim() != n || lambda.rows() != n || lambda.cols() != n)
    throw Error("certificate: dimension mismatch");
  Differential dt = ce_differential_of(target);

  // images F(e'^i) as 1-forms in the target basis
  std::vector<ExtForm> image(static_cast<size_t>(n), ExtForm(n, 1));
  for (int i = 1; i <= n; ++i) {
    ExtForm f(n, 1);
    for (int j = 1; j <= n; ++j) f.add_term({j}, lambda(i - 1, j - 1));
    image[static_cast<size_t>(i - 1)] = f;
  }

  std::vector<CertResidual> out;
  for (int i = 1; i <= n; ++i) {
    ExtForm lhs(n, 2);
    for (int j = 1; j <= n; ++j) {
      const Scalar& c = lambda(i - 1, j - 1);
      if (!c.is_zero()) lhs = lhs + dt.d_gen[static_cast<size_t>(j - 1)].scaled(c);
    }
    ExtForm rhs(n, 2);
    for (const auto& [key, c] : source.constants())
      if (key[2] == i)
        rhs = rhs + wedge(image[static_cast<size_t>(key[0] - 1)],
                          image[static_cast<size_t>(key[1] - 1)]).scaled(c);
    ExtForm diff = lhs - rhs;
    for (const auto& [t, c] : diff.terms())
      out.push_back({i, "e" + std::to_string(t[0]) + "^e" + std::to_string(t[1]), c});
  }
  return out;
}

// Complexified analogue in the (1,0)-bases.
std::vector<CertResidual> residuals_complex(const ComplexStructEqs& source,
                                            const ComplexStructEqs& target,
                                            const Matrix& lambda) {
  int n = source.n();
  if (target.n() != n || lambda.rows() != n || lambda.cols() != n)
    throw Error("certificate: dimension mismatch");
  Differential dt = target.differential();

  std::vector<ExtForm> image(static_cast<size_t>(2 * n), ExtForm(2 * n, 1));
  for (int i = 1; i <= n; ++i) {
    ExtForm f(2 * n, 1);
    for (int j = 1; j <= n; ++j) f.add_term({j}, lambda(i - 1, j - 1));
    image[static_cast<size_t>(i - 1)] = f;
    image[static_cast<size_t>(n + i - 1)] = conj_form(f, n);
  }

  std::vector<CertResidual> out;
  for (int i = 1; i <= n; ++i) {
    ExtForm lhs(2 * n, 2);
    for (int j = 1; j <= n; ++j) {
      const Scalar& c = lambda(i - 1, j - 1);
      if (!c.is_zero()) lhs = lhs + dt.d_gen[static_cast<size_t>(j - 1)].scaled(c);
    }
    ExtForm rhs(2 * n, 2);
    for (const auto& [t, c] : source.d(i).terms())
      rhs = rhs + wedge(image[static_cast<size_t>(t[0] - 1)],
                        image[static_cast<size_t>(t[1] - 1)]).scaled(c);
    ExtForm diff = lhs - rhs;
    auto gen_name = [n](int idx) {
      return idx <= n ? "w" + std::to_string(idx) : "w~" + std::to_string(idx - n);
    };
    for (const auto& [t, c] : diff.terms())
      out.push_back({i, gen_name(t[0]) + "^" + gen_name(t[1]), c});
  }
  return out;
}

void require_invertible(const Matrix& lambda) {
  bool symbolic = lambda.has_symbolic_entries();
  int rank = symbolic ? rank_generic(lambda) : rank_over_field(lambda);
  if (rank < lambda.rows()) throw SingularChange("certificate matrix is singular");
}

}  // namespace

CertReport verify_certificate(const Certificate& cert) {
  CertReport rep;
  switch (cert.kind) {
    case Certificate::Kind::RealIso:
      require_invertible(cert.lambda);
      rep.residuals = residuals_real(cert.source_algebra, cert.target_algebra, cert.lambda);
      break;
    case Certificate::Kind::ComplexEquivalence:
      require_invertible(cert.lambda);
      rep.residuals = residuals_complex(cert.source_eqs, cert.target_eqs, cert.lambda);
      break;
    case Certificate::Kind::Realification: {
      std::vector<RealifyResidual> rs =
          realify_verify(cert.source_eqs, cert.map, cert.target_algebra);
      for (const auto& r : rs) rep.residuals.push_back({r.k, r.slot, r.value});
      break;
    }
  }
  rep.pass = rep.residuals.empty();
  return rep;
}

namespace {

Scalar S(int n) { return Scalar(n); }
Scalar SQ(long num, long den = 1) { return Scalar(Rational(num, den)); }
Scalar I() { return Scalar::i(); }

Matrix diag(std::vector<Scalar> entries) {
  int n = static_cast<int>(entries.size());
  Matrix m(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = entries[static_cast<size_t>(k)];
  return m;
}

Certificate real_iso(const std::string& name, LieAlgebra source, LieAlgebra target,
                     Matrix lambda) {
  Certificate c;
  c.name = name;
  c.kind = Certificate::Kind::RealIso;
  c.source_algebra = std::move(source);
  c.target_algebra = std::move(target);
  c.lambda = std::move(lambda);
  return c;
}

Certificate complex_equiv(const std::string& name, ComplexStructEqs source,
                          ComplexStructEqs target, Matrix lambda) {
  Certificate c;
  c.name = name;
  c.kind = Certificate::Kind::ComplexEquivalence;
  c.source_eqs = std::move(source);
  c.target_eqs = std::move(target);
  c.lambda = std::move(lambda);
  return c;
}

Certificate realification(const std::string& name, ComplexStructEqs eqs, RealificationMap map,
                          LieAlgebra target) {
  Certificate c;
  c.name = name;
  c.kind = Certificate::Kind::Realification;
  c.source_eqs = std::move(eqs);
  c.map = std::move(map);
  c.target_algebra = std::move(target);
  return c;
}

// The n3-family equations with arbitrary parameter binding; valid outside
// the catalog's {0,1} domain, as the intermediate reductions require.
LieAlgebra n3_aux(const Scalar& gamma) {
  return parse_real_algebra("(0^4, 12, 13+g*15+25, 15+24+g*25, 16+27)", {{"g", gamma}});
}

// Auxiliary equations behind the n4 family, parameters (rho, theta).
LieAlgebra n4_aux(const Scalar& rho, const Scalar& theta) {
  return parse_real_algebra("(0^4, 2*12, 13+14+t*15-r*23+25, r*13+15-23+24+t*25, 16+27+r*35)",
                            {{"r", rho}, {"t", theta}});
}

// Generic-equation instance with the named coefficients, rest zero.
ComplexStructEqs instance(const std::map<std::string, Scalar>& values) {
  std::map<std::string, GaussRational> asg;
  const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H", "K", "L", "M", "N", "P"};
  for (const char* n : names) {
    auto it = values.find(n);
    GaussRational v = it == values.end() ? GaussRational() : it->second.to_gauss();
    asg[n] = v;
    asg[std::string(n) + "~"] = v.conj();
  }
  for (const char* n : {"s", "t"}) {
    auto it = values.find(n);
    asg[n] = it == values.end() ? GaussRational() : it->second.to_gauss();
  }
  return generic_equations().substituted(asg);
}

std::vector<Certificate> build_library() {
  std::vector<Certificate> lib;
  Scalar g = Scalar::var("g");
  Scalar h = Scalar::var("h");

  // --- Reduction basis changes on the generic equations ---------------

  {  // t-removal: tau^2 = E w2 - B w3 on a t != 0 instance
    ComplexStructEqs fix = instance({{"A", I()},
                                     {"B", I()},
                                     {"E", S(1)},
                                     {"F", S(1)},
                                     {"M", S(1)},
                                     {"N", I()},
                                     {"P", S(-1)},
                                     {"s", S(1)},
                                     {"t", S(1)}});
    Matrix lambda = Matrix::identity(4);
    lambda(1, 1) = S(1);
    lambda(1, 2) = -I();
    lib.push_back(complex_equiv("reduction: remove t (tau2 = E w2 - B w3)",
                                change_basis(fix, lambda), fix, lambda));
  }
  {  // P-removal: tau^1 = N w1 + P w2, tau^2 = w1 on a P != 0 instance
    ComplexStructEqs fix = instance({{"E", I()},
                                     {"G", S(1)},
                                     {"H", I()},
                                     {"K", S(1)},
                                     {"L", I()},
                                     {"N", S(1)},
                                     {"P", S(1)},
                                     {"s", S(1)}});
    Matrix lambda = Matrix::identity(4);
    lambda(0, 0) = S(1);
    lambda(0, 1) = S(1);
    lambda(1, 0) = S(1);
    lambda(1, 1) = S(0);
    lib.push_back(complex_equiv("reduction: remove P and K (tau1 = N w1 + P w2)",
                                change_basis(fix, lambda), fix, lambda));
  }
  {  // Family I preliminary reduction: clear C, F, M
    ComplexStructEqs fix = instance({{"A", S(1)},
                                     {"C", S(1)},
                                     {"D", S(1) - I()},
                                     {"E", I()},
                                     {"F", S(1)},
                                     {"G", S(1)},
                                     {"L", S(1) + I()},
                                     {"M", S(1)},
                                     {"N", S(1)},
                                     {"s", S(1)}});
    Matrix lambda = Matrix::identity(4);
    lambda(2, 1) = S(1);          // tau3 = w3 + (~M/~N) w2
    lambda(3, 0) = S(2) * I();    // tau4 = w4 - (C/E) w2 + ((M~A+N~F)/(N~E)) w1
    lambda(3, 1) = I();
    lib.push_back(complex_equiv("family I reduction: clear C, F, M",
                                change_basis(fix, lambda), fix, lambda));
  }
  {  // Family I scaling normalization tau^k = lambda_k w^k
    ComplexStructEqs fix(4);
    // dw2 = A w11~, dw3 = D w12~ + G w21~ - E (w14 - w14~),
    // dw4 = L w11~ + i s w22~ + N w13~ - ~N w31~
    fix.add_11(2, 1, 1, S(1));                       // A = 1
    fix.add_11(3, 1, 2, -I());                       // D = -i
    fix.add_11(3, 2, 1, S(2));                       // G = 2
    fix.add_20(3, 1, 4, -I());                       // E = i
    fix.add_11(3, 1, 4, I());
    fix.add_11(4, 1, 1, S(2) + I());                 // L
    fix.add_11(4, 2, 2, I());                        // s = 1
    fix.add_11(4, 1, 3, S(1));                       // N = 1
    fix.add_11(4, 3, 1, S(-1));
    Matrix lambda = diag({S(1), S(1), S(-1), I()});
    lib.push_back(complex_equiv("family I normalization: scale to eps/delta form",
                                change_basis(fix, lambda), fix, lambda));
  }
  {  // Family I normalization of L and the phase of G
    ComplexStructEqs fix(4);
    // shape of the reduced family I equations with G = -3, L = 4 + 2i,
    // eps = 1, delta = 1, b = 2
    fix.add_11(2, 1, 1, S(1));
    fix.add_20(3, 1, 4, S(1));
    fix.add_11(3, 1, 4, S(1));
    fix.add_11(3, 1, 2, I() * S(2));   // i delta eps b
    fix.add_11(3, 2, 1, S(-3));        // G
    fix.add_11(4, 1, 1, S(4) + S(2) * I());  // L
    fix.add_11(4, 2, 2, S(2));         // b
    fix.add_11(4, 1, 3, I());
    fix.add_11(4, 3, 1, -I());
    Matrix lambda(4, 4);
    lambda(0, 0) = -I();
    lambda(1, 1) = S(1);
    lambda(2, 0) = S(1);                  // 2 lambda with lambda = 1/2
    lambda(2, 2) = -I() * SQ(1, 2);
    lambda(3, 3) = SQ(1, 2);
    lib.push_back(complex_equiv("family I normalization: L to i nu, G to a >= 0",
                                change_basis(fix, lambda), fix, lambda));
  }

  // --- Equivalence actions on the family parameters -------------------

  {  // Family I diagonal action, rational point
    ComplexStructEqs target = family_I_raw(0, 0, 1, S(2), S(3));
    // theta = 0, l22 = 3/2, l = 2: a' = 2*2/(3/2) = 8/3, b' = 3*2/(9/4) = 8/3
    ComplexStructEqs source = family_I_raw(0, 0, 1, SQ(8, 3), SQ(8, 3));
    Matrix lambda = diag({S(1), SQ(3, 2), S(2), S(2)});
    lib.push_back(complex_equiv("family I equivalence: (a,b)=(2,3) -> (8/3,8/3)",
                                source, target, lambda));
  }
  {  // Family I diagonal action at a quadratic point: b = 2 -> 1
    Scalar r2(*QuadExt::sqrt_in_tower(Rational(2)));
    ComplexStructEqs target = family_I_raw(0, 1, 1, S(0), S(2));
    ComplexStructEqs source = family_I_raw(0, 1, 1, S(0), S(1));
    Matrix lambda = diag({S(1), r2, S(1), S(1)});
    lib.push_back(complex_equiv("family I equivalence over Q(sqrt2): b = 2 -> 1",
                                source, target, lambda));
  }
  {  // Family II normalization (0,1,0,32,4) -> (0,1,0,1,0); kappa = 2
    ComplexStructEqs target = family_II_raw(0, 1, 0, S(32), S(4));
    ComplexStructEqs source = family_II_raw(0, 1, 0, S(1), S(0));
    Matrix lambda(4, 4);
    lambda(0, 0) = S(2);
    lambda(1, 0) = -I();
    lambda(1, 1) = SQ(1, 2);
    lambda(2, 0) = I() * SQ(1, 4);
    lambda(2, 1) = SQ(1, 4);
    lambda(2, 2) = SQ(1, 8);
    lambda(3, 3) = SQ(1, 4);
    lib.push_back(complex_equiv("family II normalization: (0,1,0,32,4) -> (0,1,0,1,0)",
                                source, target, lambda));
  }
  {  // Family II normalization (1,0,0,3,5) -> (1,0,0,1,5); lambda = 1/3
    ComplexStructEqs target = family_II_raw(1, 0, 0, S(3), S(5));
    ComplexStructEqs source = family_II_raw(1, 0, 0, S(1), S(5));
    Matrix lambda(4, 4);
    lambda(0, 0) = S(1);
    lambda(1, 0) = S(1);       // free real lambda^2_1
    lambda(1, 1) = SQ(1, 3);
    lambda(2, 0) = S(-2);      // free real lambda^3_1
    lambda(2, 2) = SQ(1, 3);
    lambda(3, 3) = SQ(1, 3);
    lib.push_back(complex_equiv("family II normalization: (1,0,0,3,5) -> (1,0,0,1,5)",
                                source, target, lambda));
  }
  {  // Family II invariance for (eps,mu,nu) = (1,1,0)
    ComplexStructEqs eqs = family_II_raw(1, 1, 0, S(2), S(-1));
    Matrix lambda(4, 4);
    lambda(0, 0) = S(1);
    lambda(1, 0) = S(3);                  // real lambda^2_1
    lambda(1, 1) = S(1);
    lambda(2, 0) = I() * SQ(9, 2);        // Im lambda^3_1 = mu |l21|^2 / 2
    lambda(2, 1) = S(3) * I();            // lambda^3_2 = i mu l l21
    lambda(2, 2) = S(1);
    lambda(3, 3) = S(1);
    lib.push_back(complex_equiv("family II invariance: (1,1,0,2,-1) fixed", eqs, eqs, lambda));
  }

  // --- Real isomorphisms from the classification proofs ---------------

  lib.push_back(real_iso("n3^g = n3^{-g} (symbolic)", n3_aux(-g), n3_aux(g),
                         diag({S(1), S(-1), S(1), S(1), S(-1), S(1), S(-1), S(1)})));

  {  // n3^g = n3^0 for g in (0,1), at g = 3/5 over Q(sqrt 3)
    Scalar s3(*QuadExt::sqrt_in_tower(Rational(3)));
    Scalar gamma = SQ(3, 5);
    Scalar w = SQ(4, 5);                       // sqrt(1 - g^2)
    Scalar w32 = SQ(64, 125);                  // (1-g^2)^{3/2}
    Scalar w52 = SQ(1024, 3125);               // (1-g^2)^{5/2}
    Scalar u = S(2) - s3;                      // 2 - sqrt 3
    Scalar u2 = S(7) - S(4) * s3;              // (2 - sqrt 3)^2 = 7 - 4 sqrt 3
    Matrix v(8, 8);
    Scalar c1 = w / (S(2) * s3);
    v(0, 0) = c1 * (S(1) - w);
    v(0, 1) = c1 * gamma;
    Scalar c2 = -(u * w) / (S(2) * s3);
    v(1, 0) = c2 * (S(1) + w);
    v(1, 1) = c2 * gamma;
    Scalar c3 = -(u2 * w) / S(12);
    v(2, 2) = c3 * gamma * gamma;
    v(2, 3) = c3 * (S(2) - gamma * gamma + S(2) * w);
    Scalar c4 = -w / S(12);
    v(3, 2) = c4 * gamma * gamma;
    v(3, 3) = c4 * (S(2) - gamma * gamma - S(2) * w);
    Scalar c5 = -(gamma * u * w) / S(12);
    v(4, 2) = c5 * gamma;
    v(4, 3) = c5 * gamma;
    v(4, 4) = c5 * (-(S(2) * (S(1) - gamma * gamma)));
    Scalar c6 = gamma * w32 * u2 / (S(12) * s3);
    v(5, 5) = c6 * gamma;
    v(5, 6) = c6 * (-(S(1) + w));
    Scalar c7 = gamma * w32 * u / (S(12) * s3);
    v(6, 5) = c7 * gamma;
    v(6, 6) = c7 * (-(S(1) - w));
    v(7, 7) = -(gamma * gamma * w52 * u2) / S(36);
    lib.push_back(real_iso("n3^{3/5} = n3^0 over Q(sqrt3)",
                           real_algebra("n3", {{"g", S(0)}}), n3_aux(gamma), v));
  }

  {  // n3^g = n2^0 for g > 1, at g = 5/4 over Q(sqrt 6)
    Scalar s6(*QuadExt::sqrt_in_tower(Rational(6)));
    Scalar gamma = SQ(5, 4);
    Scalar q = SQ(9, 16);        // g^2 - 1
    Scalar sq = SQ(3, 4);        // sqrt(g^2-1)
    Scalar q32 = SQ(27, 64);     // (g^2-1)^{3/2}
    Scalar q52 = SQ(243, 1024);  // (g^2-1)^{5/2}
    Matrix v(8, 8);
    Scalar c1 = s6 * sq;  // sqrt(6(g^2-1)) = sqrt6 sqrt(g^2-1)
    v(0, 0) = c1;
    v(0, 1) = c1 * gamma;
    v(1, 0) = -(s6 * q);
    Scalar c3 = S(-3) * sq;
    v(2, 2) = c3 * gamma * gamma;
    v(2, 3) = -c3 * (gamma * gamma - S(2));
    v(3, 3) = S(6) * q;
    Scalar c5 = S(3) * gamma * sq;
    v(4, 2) = c5 * gamma;
    v(4, 3) = c5 * gamma;
    v(4, 4) = c5 * S(2) * q;
    v(5, 6) = S(6) * s6 * gamma * q * q;
    Scalar c7 = S(-6) * s6 * gamma * q32;
    v(6, 5) = c7 * gamma;
    v(6, 6) = -c7;
    v(7, 7) = S(36) * gamma * gamma * q52;
    lib.push_back(real_iso("n3^{5/4} = n2^0 over Q(sqrt6)",
                           real_algebra("n2", {{"al", S(0)}}), n3_aux(gamma), v));
  }

  {  // n4^{h,0} = n4^{-h,0} (symbolic)
    LieAlgebra target = real_algebra("n4", {{"t", S(0)}});  // h symbolic
    LieAlgebra source = parse_real_algebra(
        "(0^4, 12, 15+(h+1)*24, (h-1)*14-23+(t-1)*25, 16+27+34-2*45)",
        {{"h", -h}, {"t", S(0)}});
    Matrix v(8, 8);
    v(0, 1) = S(1);   // v1 = e2
    v(1, 0) = S(1);   // v2 = e1
    v(2, 2) = S(1);   // v3 = e3
    v(3, 3) = S(-1);  // v4 = -e4
    v(4, 2) = S(-1);  // v5 = -e3 - e5
    v(4, 4) = S(-1);
    v(5, 6) = S(1);   // v6 = e7
    v(6, 5) = S(1);   // v7 = e6
    v(7, 7) = S(1);   // v8 = e8
    lib.push_back(real_iso("n4^{h,0} = n4^{-h,0} (symbolic)", source, target, v));
  }

  {  // the auxiliary n4 equations: (rho,theta) = (-rho,-theta) via sign flips
    Scalar r = Scalar::var("r"), t = Scalar::var("t");
    lib.push_back(real_iso("n4 auxiliary equations: (rho,theta) = (-rho,-theta)",
                           n4_aux(-r, -t), n4_aux(r, t),
                           diag({S(1), S(-1), S(1), S(1), S(-1), S(1), S(-1), S(1)})));
  }

  lib.push_back(real_iso("identity on n5", real_algebra("n5"), real_algebra("n5"),
                         Matrix::identity(8)));

  // --- Complex-to-real bases (appendix dictionary rows) ---------------

  auto add_row_I = [&lib](const char* name, FamilyIParams p) {
    AppendixResult row = appendix_map_I(p);
    lib.push_back(realification(name, family_I(p), row.map,
                                real_algebra(row.target.algebra, row.target.params)));
  };
  auto add_row_II = [&lib](const char* name, FamilyIIParams p) {
    AppendixResult row = appendix_map_II(p);
    lib.push_back(realification(name, family_II(p), row.map,
                                real_algebra(row.target.algebra, row.target.params)));
  };
  add_row_I("real basis: (0,0,1,1) -> g1^1", {0, 0, 1, S(1), S(1)});
  add_row_I("real basis: (0,1,1,b) -> g2 (symbolic b)", {0, 1, 1, S(1), Scalar::var("b")});
  add_row_I("real basis (*): (1,1,1,0) -> g2^0 over Q(sqrt3)", {1, 1, 1, S(1), S(0)});
  add_row_I("real basis (**): (1,1,5/2,0) -> g3^0 over Q(sqrt2,sqrt3)",
            {1, 1, 1, SQ(5, 2), S(0)});
  add_row_I("real basis (***): (1,0,1,3) -> g4^{1/3,3}", {1, 0, 1, S(1), S(3)});
  add_row_I("real basis: (1,1,a,2delta) -> g4^{a/2,0} (symbolic a)",
            {1, 1, 1, Scalar::var("a"), S(2)});
  add_row_I("real basis: (1,1,0,2delta) -> g5", {1, 1, 1, S(0), S(2)});
  add_row_I("real basis: (1,1,0,3) -> g6", {1, 1, 1, S(0), S(3)});
  add_row_I("real basis: (0,0,0,1) -> g7", {0, 0, 1, S(0), S(1)});
  add_row_I("real basis: (0,1,0,-1) -> g8", {0, 1, -1, S(0), S(-1)});
  add_row_II("real basis: (0,1,0,1,0) -> g9^1", {0, 1, 0, S(1), S(0)});
  add_row_II("real basis: (1,0,0,1,2) -> g10^1 over Q(sqrt3)", {1, 0, 0, S(1), S(2)});
  add_row_II("real basis: (1,1,0,1,1) -> g11 over Q(sqrt3)", {1, 1, 0, S(1), S(1)});
  add_row_II("real basis: (1,0,1,1,0) -> g12^0", {1, 0, 1, S(1), S(0)});

  return lib;
}

}  // namespace

const std::vector<Certificate>& certificate_library() {
  static const std::vector<Certificate> lib = build_library();
  return lib;
}

std::vector<Certificate> corrupted_certificates() {
  std::vector<Certificate> out;
  for (const Certificate& cert : certificate_library()) {
    Certificate bad = cert;
    bad.name = "corrupted: " + cert.name;
    if (cert.kind == Certificate::Kind::Realification) {
      // flip the sign of the last nonzero covector coefficient
      for (int r = bad.map.n - 1; r >= 0; --r) {
        for (int c = 2 * bad.map.n - 1; c >= 0; --c) {
          if (!bad.map.alpha(r, c).is_zero()) {
            bad.map.alpha(r, c) = -bad.map.alpha(r, c);
            out.push_back(bad);
            goto next;
          }
          if (!bad.map.beta(r, c).is_zero()) {
            bad.map.beta(r, c) = -bad.map.beta(r, c);
            out.push_back(bad);
            goto next;
          }
        }
      }
    } else {
      for (int r = bad.lambda.rows() - 1; r >= 0; --r)
        for (int c = bad.lambda.cols() - 1; c >= 0; --c)
          if (!bad.lambda(r, c).is_zero()) {
            bad.lambda(r, c) = -bad.lambda(r, c);
            out.push_back(bad);
            goto next;
          }
    }
  next:;
  }
  return out;
}

}  // namespace nilclass
