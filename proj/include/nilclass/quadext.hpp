// The biquadratic extension Q(sqrt(p), sqrt(q)): values
//   x0 + x1*sqrt(p) + x2*sqrt(q) + x3*sqrt(p*q)
// with rational coordinates. p, q are positive non-square rationals with
// p/q non-square, so {1, sqrt(p), sqrt(q), sqrt(pq)} is a basis and the
// extension is a degree-4 field. Inversion goes through the Galois
// conjugates: x * s_p(x) * s_q(x) * s_pq(x) is rational.
//
// All radicals appearing in the catalog's appendix rows and certificates
// lie in Q(sqrt(2), sqrt(3)) at the sampled parameter points, so that tower
// is the default; other towers are supported but two values can only be
// combined when their towers agree.
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "nilclass/complexn.hpp"
#include "nilclass/errors.hpp"
#include "nilclass/rational.hpp"

namespace nilclass {

class QuadExt {
 public:
  QuadExt() : p_(2), q_(3) {}
  // Embedding of Q into the default tower.
  QuadExt(Rational r) : p_(2), q_(3) { c_[0] = std::move(r); }  // NOLINT
  QuadExt(Rational p, Rational q, std::array<Rational, 4> coords)
      : p_(std::move(p)), q_(std::move(q)), c_(std::move(coords)) {
    check_tower(p_, q_);
  }

  static QuadExt from_rational(const Rational& r, const Rational& p = Rational(2),
                               const Rational& q = Rational(3)) {
    return QuadExt(p, q, {r, Rational(0), Rational(0), Rational(0)});
  }

  // sqrt(r) inside the tower, if r is a rational square times 1, p, q or pq.
  static std::optional<QuadExt> sqrt_in_tower(const Rational& r, const Rational& p = Rational(2),
                                              const Rational& q = Rational(3)) {
    if (r.sign() < 0) return std::nullopt;
    Rational s;
    if (r.square_root(&s))
      return QuadExt(p, q, {s, Rational(0), Rational(0), Rational(0)});
    if ((r / p).square_root(&s))
      return QuadExt(p, q, {Rational(0), s, Rational(0), Rational(0)});
    if ((r / q).square_root(&s))
      return QuadExt(p, q, {Rational(0), Rational(0), s, Rational(0)});
    if ((r / (p * q)).square_root(&s))
      return QuadExt(p, q, {Rational(0), Rational(0), Rational(0), s});
    return std::nullopt;
  }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Rational& coord(int i) const { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_one() const { return c_[0].is_one() && is_rational(); }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  const Rational& rational_part() const { return c_[0]; }

  bool same_tower(const QuadExt& o) const { return p_ == o.p_ && q_ == o.q_; }

  QuadExt operator-() const { return QuadExt(p_, q_, {-c_[0], -c_[1], -c_[2], -c_[3]}); }

  QuadExt& operator+=(const QuadExt& o) {
    align(o);
    for (int i = 0; i < 4; ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) { return *this += -o; }

  QuadExt& operator*=(const QuadExt& o) {
    align(o);
    const Rational &a0 = c_[0], &a1 = c_[1], &a2 = c_[2], &a3 = c_[3];
    const Rational &b0 = o.c_[0], &b1 = o.c_[1], &b2 = o.c_[2], &b3 = o.c_[3];
    std::array<Rational, 4> r;
    r[0] = a0 * b0 + p_ * (a1 * b1) + q_ * (a2 * b2) + p_ * q_ * (a3 * b3);
    r[1] = a0 * b1 + a1 * b0 + q_ * (a2 * b3 + a3 * b2);
    r[2] = a0 * b2 + a2 * b0 + p_ * (a1 * b3 + a3 * b1);
    r[3] = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
    c_ = r;
    return *this;
  }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }

  // Galois conjugates: flip the sign of sqrt(p) and/or sqrt(q).
  QuadExt sigma_p() const { return QuadExt(p_, q_, {c_[0], -c_[1], c_[2], -c_[3]}); }
  QuadExt sigma_q() const { return QuadExt(p_, q_, {c_[0], c_[1], -c_[2], -c_[3]}); }
  QuadExt sigma_pq() const { return QuadExt(p_, q_, {c_[0], -c_[1], -c_[2], c_[3]}); }

  QuadExt inverse() const {
    if (is_zero()) throw Error("QuadExt: inverse of zero");
    QuadExt cofactor = sigma_p() * sigma_q() * sigma_pq();
    QuadExt norm = *this * cofactor;
    if (!norm.is_rational() || norm.c_[0].is_zero())
      throw Error("QuadExt: norm computation failed");
    Rational ninv = norm.c_[0].inverse();
    return QuadExt(p_, q_,
                   {cofactor.c_[0] * ninv, cofactor.c_[1] * ninv, cofactor.c_[2] * ninv,
                    cofactor.c_[3] * ninv});
  }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    if (!a.same_tower(b)) return a.is_rational() && b.is_rational() && a.c_[0] == b.c_[0];
    return a.c_ == b.c_;
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  double approx() const {
    return c_[0].approx() + c_[1].approx() * std::sqrt(p_.approx()) +
           c_[2].approx() * std::sqrt(q_.approx()) +
           c_[3].approx() * std::sqrt(p_.approx() * q_.approx());
  }

  // Sign of the real number this value denotes.
  int sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return c_[0].sign();
    double a = approx();
    if (std::abs(a) > 1e-9) return a > 0 ? 1 : -1;
    // Ambiguous numerically; decide exactly via (x - 0) by squaring splits.
    // Values this close to zero do not occur in the catalog data.
    throw Error("QuadExt: sign numerically ambiguous");
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    auto append = [&s](const Rational& c, const std::string& radical) {
      if (c.is_zero()) return;
      std::string piece;
      Rational ac = c.abs();
      if (radical.empty())
        piece = ac.to_string();
      else if (ac.is_one())
        piece = radical;
      else
        piece = ac.to_string() + "*" + radical;
      if (s.empty())
        s = (c.sign() < 0 ? "-" : "") + piece;
      else
        s += (c.sign() < 0 ? "-" : "+") + piece;
    };
    append(c_[0], "");
    append(c_[1], "sqrt(" + p_.to_string() + ")");
    append(c_[2], "sqrt(" + q_.to_string() + ")");
    append(c_[3], "sqrt(" + (p_ * q_).to_string() + ")");
    return s;
  }

 private:
  static void check_tower(const Rational& p, const Rational& q) {
    Rational s;
    if (p.sign() <= 0 || q.sign() <= 0) throw Error("QuadExt: radicands must be positive");
    if (p.square_root(&s) || q.square_root(&s) || (p / q).square_root(&s))
      throw Error("QuadExt: radicands must be non-squares with non-square ratio");
  }

  // Promote a rational-valued operand into this value's tower (and vice
  // versa); genuinely different towers are rejected.
  void align(const QuadExt& o) {
    if (same_tower(o)) return;
    if (is_rational()) {
      p_ = o.p_;
      q_ = o.q_;
      return;
    }
    if (!o.is_rational())
      throw RingMismatch("QuadExt towers Q(sqrt(" + p_.to_string() + "),sqrt(" + q_.to_string() +
                         ")) vs Q(sqrt(" + o.p_.to_string() + "),sqrt(" + o.q_.to_string() + "))");
    // o is rational; nothing to do, coordinatewise ops read o.c_ directly,
    // which is tower-independent for rational values.
  }

  Rational p_, q_;
  std::array<Rational, 4> c_;
};

using GaussQuad = Cx<QuadExt>;

inline std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  return os << x.to_string();
}

}  // namespace nilclass
