#include "nilclass/appendix.hpp"

#include "nilclass/errors.hpp"

namespace nilclass {

namespace {

Scalar sqrt_scalar(const Scalar& r) {
  if (!r.is_rational()) throw Error("appendix: radicand is not rational at these parameters");
  auto root = QuadExt::sqrt_in_tower(r.rational());
  if (!root)
    throw Error("appendix: sqrt(" + r.to_string() + ") does not lie in Q(sqrt(2),sqrt(3))");
  return Scalar(*root);
}

struct MapBuilder {
  RealificationMap m;
  explicit MapBuilder(int n) {
    m.n = n;
    m.alpha = Matrix(n, 2 * n);
    m.beta = Matrix(n, 2 * n);
  }
  // w^k += (re + i im) e^idx
  void add(int k, int idx, const Scalar& re, const Scalar& im) {
    m.alpha(k - 1, idx - 1) = m.alpha(k - 1, idx - 1) + re;
    m.beta(k - 1, idx - 1) = m.beta(k - 1, idx - 1) + im;
  }
  void re(int k, int idx, const Scalar& v) { add(k, idx, v, Scalar(0)); }
  void im(int k, int idx, const Scalar& v) { add(k, idx, Scalar(0), v); }
};

bool is_num(const Scalar& s) { return s.kind() != RingKind::Poly; }

int sign_of(const Scalar& s) { return s.sign(); }

// ---- Family I rows ---------------------------------------------------

// (1,3,8) and (1,5,8): w1 = d e1 - i e2, w2 = -e3 + d i e4,
// w3 = d e6 - i e7, w4 = 1/2 e5 + 2 d i e8.
RealificationMap map_A_138(int delta) {
  MapBuilder b(4);
  Scalar d(delta);
  b.add(1, 1, d, Scalar(0));
  b.add(1, 2, Scalar(0), Scalar(-1));
  b.add(2, 3, Scalar(-1), Scalar(0));
  b.add(2, 4, Scalar(0), d);
  b.add(3, 6, d, Scalar(0));
  b.add(3, 7, Scalar(0), Scalar(-1));
  b.add(4, 5, Scalar(Rational(1, 2)), Scalar(0));
  b.add(4, 8, Scalar(0), Scalar(2) * d);
  return b.m;
}

// (0,1,1,b): w1 = d e1 - i e2, w2 = 4(d e3 - i e4), w3 = -4(e6 - d i e7),
// w4 = -2(d e5 + 4 i e8).
RealificationMap map_A_g2(int delta) {
  MapBuilder b(4);
  Scalar d(delta);
  b.add(1, 1, d, Scalar(0));
  b.add(1, 2, Scalar(0), Scalar(-1));
  b.add(2, 3, Scalar(4) * d, Scalar(0));
  b.add(2, 4, Scalar(0), Scalar(-4));
  b.add(3, 6, Scalar(-4), Scalar(0));
  b.add(3, 7, Scalar(0), Scalar(4) * d);
  b.add(4, 5, Scalar(-2) * d, Scalar(0));
  b.add(4, 8, Scalar(0), Scalar(-8));
  return b.m;
}

// (*) case (1,1,a,0), 0 < a < 2; radicals sqrt(3) and sqrt(4-a^2).
RealificationMap map_A_star(const Scalar& a, int delta) {
  Scalar d(delta);
  Scalar s3 = sqrt_scalar(Scalar(3));
  Scalar q = Scalar(4) - a * a;          // 4 - a^2 > 0
  Scalar sq = sqrt_scalar(q);            // sqrt(4-a^2)
  Scalar a2 = a * a, a3 = a2 * a, a4 = a3 * a, a6 = a4 * a2, a8 = a6 * a2;
  MapBuilder b(4);
  // w1
  Scalar c1 = d * a2 / (Scalar(2) * s3 * q);
  b.re(1, 2, -c1);
  Scalar c2 = d * a2 / (Scalar(4) * s3 * q);
  b.im(1, 1, c2 * sq);
  b.im(1, 2, c2 * a);
  // w2
  Scalar c3 = a3 / (Scalar(24) * q);
  b.re(2, 3, c3 * sq);
  b.re(2, 4, c3 * a);
  Scalar c4 = -(a3 / (Scalar(12) * q * sq));  // (4-a^2)^{3/2} = q sqrt(q)
  b.im(2, 3, c4 * a);
  b.im(2, 4, -c4 * sq);
  b.im(2, 5, c4 * a);
  // w3
  Scalar c5 = d * a6 / (Scalar(48) * s3 * q * q);
  b.re(3, 6, c5 * a);
  b.re(3, 7, -c5 * sq);
  Scalar c6 = d * a6 / (Scalar(24) * s3 * q * q);
  b.im(3, 6, c6);
  // w4
  Scalar c7 = a4 / (Scalar(48) * q * sq);
  b.re(4, 3, c7 * a2);
  b.re(4, 4, -c7 * a * sq);
  b.re(4, 5, c7 * Scalar(4));
  Scalar c8 = d * a8 / (Scalar(144) * q * q * sq);  // (4-a^2)^{5/2} = q^2 sqrt(q)
  b.im(4, 8, c8);
  return b.m;
}

// (1,1,2,0): w1 = d/sqrt2 (e1 + i e2), w2 = -1/2 (e3 - e4) - i e5,
// w3 = sqrt2 d (e6 + i e7), w4 = 1/2 (e3 + e4) + e5 + 2 d i e8.
RealificationMap map_A_g3_1(int delta) {
  Scalar d(delta);
  Scalar s2 = sqrt_scalar(Scalar(2));
  Scalar inv_s2 = Scalar(1) / s2;
  MapBuilder b(4);
  b.add(1, 1, d * inv_s2, Scalar(0));
  b.add(1, 2, Scalar(0), d * inv_s2);
  b.re(2, 3, Scalar(Rational(-1, 2)));
  b.re(2, 4, Scalar(Rational(1, 2)));
  b.im(2, 5, Scalar(-1));
  b.add(3, 6, s2 * d, Scalar(0));
  b.add(3, 7, Scalar(0), s2 * d);
  b.re(4, 3, Scalar(Rational(1, 2)));
  b.re(4, 4, Scalar(Rational(1, 2)));
  b.re(4, 5, Scalar(1));
  b.im(4, 8, Scalar(2) * d);
  return b.m;
}

// (**) case (1,1,a,0), a > 2; radicals sqrt(3/2) and sqrt(a^2-4), plus the
// unit 2 - sqrt(3).
RealificationMap map_A_dstar(const Scalar& a, int delta) {
  Scalar d(delta);
  Scalar s32 = sqrt_scalar(Scalar(Rational(3, 2)));
  Scalar s3 = sqrt_scalar(Scalar(3));
  Scalar u = Scalar(2) - s3;  // 2 - sqrt(3)
  Scalar q = a * a - Scalar(4);
  Scalar t = sqrt_scalar(q);  // sqrt(a^2-4)
  Scalar ap = a + t, am = a - t;
  Scalar a2 = a * a, a3 = a2 * a, a5 = a3 * a2, a6 = a3 * a3, a8 = a6 * a2;
  MapBuilder b(4);
  // w1
  Scalar c1 = -(d * a2 / q) * s32;
  b.re(1, 1, c1);
  b.re(1, 2, c1 / u);
  Scalar c2 = (d * a2 / (Scalar(2) * q)) * s32;
  b.im(1, 1, c2 * ap);
  b.im(1, 2, c2 * am / u);
  // w2
  Scalar c3 = -(Scalar(3) * a3) / (Scalar(4) * q);
  b.re(2, 3, c3 * am / (u * u));
  b.re(2, 4, -c3 * ap);
  Scalar c4 = (Scalar(3) * a3) / (Scalar(2) * q * t);
  b.im(2, 3, c4 * am / (u * u));
  b.im(2, 4, c4 * ap);
  b.im(2, 5, -c4 * Scalar(2) * a / u);
  // w3
  Scalar c5 = -(d * a6 / (q * q * u)) * s32 * Scalar(Rational(3, 2));  // (3/2)^{3/2}
  b.re(3, 6, c5 * am / u);
  b.re(3, 7, -c5 * ap);
  Scalar c6 = -(Scalar(3) * d * a6 / (u * q * q)) * s32;
  b.im(3, 6, c6 / u);
  b.im(3, 7, -c6);
  // w4
  Scalar c7 = -(Scalar(3) * a5) / (Scalar(8) * q * t);
  b.re(4, 3, c7 * am / (u * u));
  b.re(4, 4, c7 * ap);
  b.re(4, 5, -c7 * Scalar(8) / (a * u));
  Scalar c8 = -(Scalar(9) * d * a8) / (u * u * q * q * t);
  b.im(4, 8, c8);
  return b.m;
}

// (1,0,1,0): w1 = 1/sqrt2 (d e1 - i e2), w2 = -1/2 (e3 - e4) + i d e5,
// w3 = 1/sqrt2 (d e6 - i e7), w4 = 1/4 (e3 + e4) + i d e8.
RealificationMap map_A_g3_0(int delta) {
  Scalar d(delta);
  Scalar inv_s2 = Scalar(1) / sqrt_scalar(Scalar(2));
  MapBuilder b(4);
  b.add(1, 1, d * inv_s2, Scalar(0));
  b.add(1, 2, Scalar(0), -inv_s2);
  b.re(2, 3, Scalar(Rational(-1, 2)));
  b.re(2, 4, Scalar(Rational(1, 2)));
  b.im(2, 5, d);
  b.add(3, 6, d * inv_s2, Scalar(0));
  b.add(3, 7, Scalar(0), -inv_s2);
  b.re(4, 3, Scalar(Rational(1, 4)));
  b.re(4, 4, Scalar(Rational(1, 4)));
  b.im(4, 8, d);
  return b.m;
}

// (***) cases (1,0,1,b) b>0 and (1,1,a,b) a>0, b != 0, 2 delta;
// radical sqrt(a/(a+s(b-2 nu delta))), s = sign(b-2 nu delta).
RealificationMap map_A_tstar(const Scalar& a, const Scalar& b, int nu, int delta) {
  Scalar d(delta);
  Scalar diff = b - Scalar(2 * nu * delta);
  int s_int = sign_of(diff);
  Scalar s(s_int);
  Scalar r = sqrt_scalar(a / (a + s * diff));
  MapBuilder bb(4);
  // w1
  bb.re(1, 1, -(d / Scalar(2)) * r);
  bb.re(1, 2, d / Scalar(2));
  bb.im(1, 1, (s / Scalar(2)) * r);
  bb.im(1, 2, s / Scalar(2));
  // w2
  bb.re(2, 4, s * a / b);
  bb.im(2, 3, d * s * r / Scalar(2));
  bb.im(2, 5, d * s * r);
  // w3
  bb.re(3, 6, -(a * d / Scalar(2)));
  bb.re(3, 7, (a * d / Scalar(2)) * r);
  bb.im(3, 6, s * a / Scalar(2));
  bb.im(3, 7, (s * a / Scalar(2)) * r);
  // w4
  bb.re(4, 3, -r * (a + s * b) / Scalar(4));
  bb.re(4, 5, -r * d * Scalar(nu) * s);
  bb.im(4, 8, d * a * r);
  return bb.m;
}

// (1,1,a,2 delta), a > 0: w1 = -1/2 (e1 - e2 - i (e1+e2)),
// w2 = a/2 e4 + i (e3/2 + e5), w3 = -a/2 (e6 - e7 - i (e6+e7)),
// w4 = -((a+2)/4 e3 + e5) + i delta a e8.
RealificationMap map_A_g4_a2(const Scalar& a, int delta) {
  Scalar d(delta);
  MapBuilder b(4);
  Scalar half(Rational(1, 2));
  b.re(1, 1, -half);
  b.re(1, 2, half);
  b.im(1, 1, half);
  b.im(1, 2, half);
  b.re(2, 4, a * half);
  b.im(2, 3, half);
  b.im(2, 5, Scalar(1));
  b.re(3, 6, -(a * half));
  b.re(3, 7, a * half);
  b.im(3, 6, a * half);
  b.im(3, 7, a * half);
  b.re(4, 3, -(a + Scalar(2)) / Scalar(4));
  b.re(4, 5, Scalar(-1));
  b.im(4, 8, d * a);
  return b.m;
}

// (1,4,8) (1,1,0,2 delta): w1 = d e1 - i e2, w2 = -d/2 (e3 - 2 i e5),
// w3 = d e6 - i e7, w4 = 2 d (d/4 e4 - 1/2 e5 + i e8).
RealificationMap map_A_g5(int delta) {
  Scalar d(delta);
  MapBuilder b(4);
  b.add(1, 1, d, Scalar(0));
  b.add(1, 2, Scalar(0), Scalar(-1));
  b.re(2, 3, -d / Scalar(2));
  b.im(2, 5, d);
  b.add(3, 6, d, Scalar(0));
  b.add(3, 7, Scalar(0), Scalar(-1));
  b.re(4, 4, Scalar(Rational(1, 2)));  // 2d * d/4
  b.re(4, 5, -d);
  b.im(4, 8, Scalar(2) * d);
  return b.m;
}

// (1,4,6,8): w1 = d e1 - i e2, w2 = (2 d nu / b - 1) e3 + i d e5,
// w3 = (b - 2 d nu)(d e6 - i e7),
// w4 = (b/2 - d nu) e4 - d nu e5 + 2 d (b - 2 d nu) i e8.
RealificationMap map_A_g6(const Scalar& b, int nu, int delta) {
  Scalar d(delta);
  Scalar nn(nu);
  Scalar factor = b - Scalar(2) * d * nn;
  MapBuilder m(4);
  m.add(1, 1, d, Scalar(0));
  m.add(1, 2, Scalar(0), Scalar(-1));
  m.re(2, 3, Scalar(2) * d * nn / b - Scalar(1));
  m.im(2, 5, d);
  m.re(3, 6, factor * d);
  m.im(3, 7, -factor);
  m.re(4, 4, b / Scalar(2) - d * nn);
  m.re(4, 5, -(d * nn));
  m.im(4, 8, Scalar(2) * d * factor);
  return m.m;
}

// (1,5,6,8) (0,1,0,b), b = +-1: w1 = d e1 - i e2, w2 = -(b e3 + 4 i e4),
// w3 = -4 (e6 - i d e7), w4 = -2 (d e5 + 4 i e8).
RealificationMap map_A_g8(const Scalar& b, int delta) {
  Scalar d(delta);
  MapBuilder m(4);
  m.add(1, 1, d, Scalar(0));
  m.add(1, 2, Scalar(0), Scalar(-1));
  m.re(2, 3, -b);
  m.im(2, 4, Scalar(-4));
  m.re(3, 6, Scalar(-4));
  m.im(3, 7, Scalar(4) * d);
  m.re(4, 5, Scalar(-2) * d);
  m.im(4, 8, Scalar(-8));
  return m.m;
}

// ---- Family II rows --------------------------------------------------

// (0,1,0,a,0): w1 = -1/8 (e1 + i e2), w2 = 1/16 (e4 + i e5),
// w3 = -1/32 (e6 + i e7), w4 = -1/128 (32 e3 - i e8).
RealificationMap map_B_g9() {
  MapBuilder b(4);
  Scalar c1(Rational(-1, 8)), c2(Rational(1, 16)), c3(Rational(-1, 32));
  b.add(1, 1, c1, Scalar(0));
  b.add(1, 2, Scalar(0), c1);
  b.add(2, 4, c2, Scalar(0));
  b.add(2, 5, Scalar(0), c2);
  b.add(3, 6, c3, Scalar(0));
  b.add(3, 7, Scalar(0), c3);
  b.re(4, 3, Scalar(Rational(-1, 4)));       // -32/128
  b.im(4, 8, Scalar(Rational(1, 128)));
  return b.m;
}

// (1,0,nu,a,b): the eta-map; eta = 1 for b = 0 and -sqrt(3)/(4b) otherwise.
//   w1 = 1/(2 eta) (-e1/sqrt3 + i e2)
//   w2 = 1/(2 eta^3) (e4/3 - i (e5/sqrt3 - 2 a eta^2 e2))
//   w3 = 1/(12 eta^4) (-sqrt3 e6 + i e7)
//   w4 = 1/(6 eta^5) (-sqrt3 eta^3 e3 + i (e8/2 - b eta/sqrt3 e6))
RealificationMap map_B_eta(const Scalar& a, const Scalar& b) {
  Scalar s3 = sqrt_scalar(Scalar(3));
  Scalar eta = b.is_zero() ? Scalar(1) : -s3 / (Scalar(4) * b);
  Scalar e2 = eta * eta, e3 = e2 * eta, e4 = e3 * eta, e5 = e4 * eta;
  MapBuilder m(4);
  Scalar c1 = Scalar(1) / (Scalar(2) * eta);
  m.re(1, 1, -c1 / s3);
  m.im(1, 2, c1);
  Scalar c2 = Scalar(1) / (Scalar(2) * e3);
  m.re(2, 4, c2 / Scalar(3));
  m.im(2, 5, -c2 / s3);
  m.im(2, 2, c2 * Scalar(2) * a * e2);
  Scalar c3 = Scalar(1) / (Scalar(12) * e4);
  m.re(3, 6, -c3 * s3);
  m.im(3, 7, c3);
  Scalar c4 = Scalar(1) / (Scalar(6) * e5);
  m.re(4, 3, -c4 * s3 * e3);
  m.im(4, 8, c4 / Scalar(2));
  m.im(4, 6, -c4 * b * eta / s3);
  return m.m;
}

// (1,1,0,0,0): w1 = 1/2 (-e1 + i sqrt3 e2), w2 = sqrt3/4 (e4 - i sqrt3 e5),
// w3 = 3/8 (-sqrt3 e6 + i e7), w4 = sqrt3/4 (-e3 + 3i/2 e8).
RealificationMap map_B_g11_00() {
  Scalar s3 = sqrt_scalar(Scalar(3));
  MapBuilder m(4);
  m.re(1, 1, Scalar(Rational(-1, 2)));
  m.im(1, 2, s3 / Scalar(2));
  m.re(2, 4, s3 / Scalar(4));
  m.im(2, 5, -(s3 * s3) / Scalar(4));
  m.re(3, 6, Scalar(Rational(-3, 8)) * s3);
  m.im(3, 7, Scalar(Rational(3, 8)));
  m.re(4, 3, -s3 / Scalar(4));
  m.im(4, 8, s3 * Scalar(3) / Scalar(8));
  return m.m;
}

// (1,1,0,a,0), a != 0: w1 = 2a/sqrt3 (-e1 + i sqrt3 e2),
// w2 = 4a^2/sqrt3 (e4 - i sqrt3 e5), w3 = 8a^3/sqrt3 (-sqrt3 e6 + i e7),
// w4 = a (-e3 + 32 i a^3/sqrt3 e8).
RealificationMap map_B_g11_10(const Scalar& a) {
  Scalar s3 = sqrt_scalar(Scalar(3));
  Scalar a2 = a * a, a3 = a2 * a;
  MapBuilder m(4);
  Scalar c1 = Scalar(2) * a / s3;
  m.re(1, 1, -c1);
  m.im(1, 2, c1 * s3);
  Scalar c2 = Scalar(4) * a2 / s3;
  m.re(2, 4, c2);
  m.im(2, 5, -c2 * s3);
  Scalar c3 = Scalar(8) * a3 / s3;
  m.re(3, 6, -c3 * s3);
  m.im(3, 7, c3);
  m.re(4, 3, -a);
  m.im(4, 8, a * Scalar(32) * a3 / s3);
  return m.m;
}

// (1,1,0,a,b), b != 0: with s_a = sign(a) (s_0 := 1), s_b = sign(b):
// w1 = -b/3 (e1 - i s_a s_b sqrt3 e2), w2 = b^2/(3 sqrt3)(s_a s_b e4 - i sqrt3 e5),
// w3 = -b^3/9 (sqrt3 s_a s_b e6 - i e7),
// w4 = -(b s_a s_b)/(2 sqrt3) (e3 + 4 i b^3/9 (e6 - e8)).
RealificationMap map_B_g11_ab(const Scalar& a, const Scalar& b) {
  Scalar s3 = sqrt_scalar(Scalar(3));
  int sa = a.is_zero() ? 1 : sign_of(a);
  int sb = sign_of(b);
  Scalar ss(sa * sb);
  Scalar b2 = b * b, b3 = b2 * b;
  MapBuilder m(4);
  Scalar c1 = -b / Scalar(3);
  m.re(1, 1, c1);
  m.im(1, 2, -c1 * ss * s3);
  Scalar c2 = b2 / (Scalar(3) * s3);
  m.re(2, 4, c2 * ss);
  m.im(2, 5, -c2 * s3);
  Scalar c3 = -b3 / Scalar(9);
  m.re(3, 6, c3 * s3 * ss);
  m.im(3, 7, -c3);
  Scalar c4 = -(b * ss) / (Scalar(2) * s3);
  m.re(4, 3, c4);
  m.im(4, 6, c4 * Scalar(4) * b3 / Scalar(9));
  m.im(4, 8, -c4 * Scalar(4) * b3 / Scalar(9));
  return m.m;
}

Scalar abs_scalar(const Scalar& s) { return sign_of(s) < 0 ? -s : s; }

}  // namespace

namespace {

// Built through a function call so a throwing map builder cannot leak
// partially constructed aggregate members (GCC bug 66139).
AppendixResult make_result(std::string row, RealificationMap map, AppendixTarget target) {
  AppendixResult res;
  res.row = std::move(row);
  res.map = std::move(map);
  res.target = std::move(target);
  return res;
}

}  // namespace

AppendixResult appendix_map_I(const FamilyIParams& p) {
  p.check();
  const Scalar &a = p.a, &b = p.b;
  int delta = p.delta, eps = p.eps, nu = p.nu;
  bool a_num = is_num(a), b_num = is_num(b);

  if (eps == 0 && nu == 0 && a_num && a == Scalar(1) && b_num &&
      (b.is_zero() || b == Scalar(1))) {
    return make_result("A:(1,3,8) (0,0,1,b)", map_A_138(delta), {"g1", {{"g", b}}});
  }
  if (eps == 0 && nu == 1 && a_num && a == Scalar(1)) {
    return make_result("A:(1,3,6,8) (0,1,1,b)", map_A_g2(delta), {"g2", {{"al", Scalar(-4 * delta) * b}}});
  }
  if (eps == 1 && nu == 1 && a_num && b_num && !a.is_zero() && b.is_zero()) {
    if (a == Scalar(2))
      return make_result("A:(1,3,6,8) (1,1,2,0)", map_A_g3_1(delta), {"g3", {{"g", Scalar(1)}}});
    if ((Scalar(2) - a).sign() > 0)
      return make_result("A:(1,3,6,8) (1,1,a,0) 0<a<2 (*)", map_A_star(a, delta),
              {"g2", {{"al", Scalar(0)}}});
    return make_result("A:(1,3,6,8) (1,1,a,0) a>2 (**)", map_A_dstar(a, delta), {"g3", {{"g", Scalar(0)}}});
  }
  if (eps == 1 && nu == 0 && a_num && a == Scalar(1) && b_num && b.is_zero()) {
    return make_result("A:(1,3,6,8) (1,0,1,0)", map_A_g3_0(delta), {"g3", {{"g", Scalar(0)}}});
  }
  if (eps == 1 && nu == 0 && a_num && a == Scalar(1) && b_num && b.sign() > 0) {
    Scalar s(sign_of(b));
    return make_result("A:(1,3,6,8) (1,0,1,b) b>0 (***)", map_A_tstar(a, b, 0, delta),
            {"g4", {{"h", a * s / b}, {"t", abs_scalar(b) / a}}});
  }
  if (eps == 1 && nu == 1 && a_num && b_num && a.sign() > 0 && !b.is_zero()) {
    if (b == Scalar(2 * delta))
      return make_result("A:(1,3,6,8) (1,1,a,2delta)", map_A_g4_a2(a, delta),
              {"g4", {{"h", a / Scalar(2)}, {"t", Scalar(0)}}});
    Scalar diff = b - Scalar(2 * delta);
    Scalar s(sign_of(diff));
    return make_result("A:(1,3,6,8) (1,1,a,b) (***)", map_A_tstar(a, b, 1, delta),
            {"g4", {{"h", a * s / b}, {"t", abs_scalar(diff) / a}}});
  }
  if (eps == 1 && nu == 1 && a_num && a.is_zero() && b_num && b == Scalar(2 * delta)) {
    return make_result("A:(1,4,8) (1,1,0,2delta)", map_A_g5(delta), {"g5", {}});
  }
  if (eps == 1 && a_num && a.is_zero() && b_num &&
      ((nu == 0 && b == Scalar(1)) || (nu == 1 && !b.is_zero() && b != Scalar(2 * delta)))) {
    return make_result("A:(1,4,6,8)", map_A_g6(b, nu, delta), {"g6", {}});
  }
  if (eps == 0 && nu == 0 && a_num && a.is_zero() && b_num && b == Scalar(1)) {
    return make_result("A:(1,5,8) (0,0,0,1)", map_A_138(delta), {"g7", {}});
  }
  if (eps == 0 && nu == 1 && a_num && a.is_zero() && b_num &&
      (b == Scalar(1) || b == Scalar(-1))) {
    return make_result("A:(1,5,6,8) (0,1,0,b)", map_A_g8(b, delta), {"g8", {}});
  }
  // Symbolic a on the row whose map entries are polynomial in a:
  if (eps == 1 && nu == 1 && !a_num && b_num && b == Scalar(2 * delta)) {
    return make_result("A:(1,3,6,8) (1,1,a,2delta)", map_A_g4_a2(a, delta),
            {"g4", {{"h", a * Scalar(Rational(1, 2))}, {"t", Scalar(0)}}});
  }
  throw InvalidParams("no Family I dictionary row for (" + std::to_string(eps) + "," +
                      std::to_string(nu) + "," + a.to_string() + "," + b.to_string() +
                      "), delta=" + std::to_string(delta));
}

AppendixResult appendix_map_II(const FamilyIIParams& p) {
  p.check();
  const Scalar &a = p.a, &b = p.b;
  int eps = p.eps, mu = p.mu, nu = p.nu;
  bool a_num = is_num(a), b_num = is_num(b);

  if (eps == 0 && mu == 1 && nu == 0 && b_num && b.is_zero() &&
      (!a_num || a.is_zero() || a == Scalar(1))) {
    return make_result("B:(1,3,5,8) (0,1,0,a,0)", map_B_g9(), {"g9", {{"g", a}}});
  }
  if (eps == 1 && mu == 0 && a_num && b_num && (a.is_zero() || a == Scalar(1))) {
    std::string target = nu == 0 ? "g10" : "g12";
    Scalar g = b.is_zero() ? Scalar(0) : Scalar(1);
    std::string row = nu == 0 ? "B:(1,3,5,8) (1,0,0,a,b)" : "B:(1,3,5,6,8) (1,0,1,a,b)";
    return make_result(row, map_B_eta(a, b), {target, {{"g", g}}});
  }
  if (eps == 1 && mu == 0 && nu == 1 && a_num && b_num) {
    // the eta-map covers all real a for the 5-step row
    Scalar g = b.is_zero() ? Scalar(0) : Scalar(1);
    return make_result("B:(1,3,5,6,8) (1,0,1,a,b)", map_B_eta(a, b), {"g12", {{"g", g}}});
  }
  if (eps == 1 && mu == 1 && nu == 0 && a_num && b_num) {
    if (a.is_zero() && b.is_zero())
      return make_result("B:(1,3,5,8) (1,1,0,0,0)", map_B_g11_00(),
              {"g11", {{"al", Scalar(0)}, {"be", Scalar(0)}}});
    if (b.is_zero())
      return make_result("B:(1,3,5,8) (1,1,0,a,0)", map_B_g11_10(a),
              {"g11", {{"al", Scalar(1)}, {"be", Scalar(0)}}});
    Scalar s3 = Scalar(*QuadExt::sqrt_in_tower(Rational(3)));
    Scalar alpha = Scalar(2) * s3 * abs_scalar(a) / abs_scalar(b);
    return make_result("B:(1,3,5,8) (1,1,0,a,b)", map_B_g11_ab(a, b),
            {"g11", {{"al", alpha}, {"be", Scalar(1)}}});
  }
  throw InvalidParams("no Family II dictionary row for (" + std::to_string(eps) + "," +
                      std::to_string(mu) + "," + std::to_string(nu) + "," + a.to_string() + "," +
                      b.to_string() + ")");
}

}  // namespace nilclass
