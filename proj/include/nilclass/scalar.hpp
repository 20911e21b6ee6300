// The dynamic scalar: a value in exactly one ring of the tower
//
//   Rational -> GaussRational -> GaussQuad        (complexified)
//   Rational -> QuadExt       -> GaussQuad        (biquadratic)
//   Rational -> GaussRational -> Poly             (symbolic parameters)
//
// Binary operations promote to the smallest common ring; combinations with
// no common ring (polynomials with quadratic irrationals, distinct towers)
// raise RingMismatch. Matrices, Lie algebras and forms all carry Scalars,
// so the ring discipline is enforced at runtime in one place.
#pragma once

#include <complex>
#include <string>
#include <variant>

#include "nilclass/complexn.hpp"
#include "nilclass/errors.hpp"
#include "nilclass/poly.hpp"
#include "nilclass/quadext.hpp"
#include "nilclass/rational.hpp"

namespace nilclass {

enum class RingKind { Rational, Gauss, Quad, GaussQuad, Poly };

inline const char* ring_kind_name(RingKind k) {
  switch (k) {
    case RingKind::Rational: return "Q";
    case RingKind::Gauss: return "Q(i)";
    case RingKind::Quad: return "Q(sqrt)";
    case RingKind::GaussQuad: return "Q(sqrt,i)";
    case RingKind::Poly: return "poly";
  }
  return "?";
}

class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int n) : v_(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : v_(std::move(r)) {}       // NOLINT
  Scalar(GaussRational g) { assign_gauss(std::move(g)); }  // NOLINT
  Scalar(QuadExt q) { assign_quad(std::move(q)); }         // NOLINT
  Scalar(GaussQuad g) { assign_gauss_quad(std::move(g)); }  // NOLINT
  Scalar(Poly p) { assign_poly(std::move(p)); }             // NOLINT

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return Scalar(gauss_i()); }
  static Scalar var(const std::string& name) { return Scalar(Poly::variable(name)); }

  RingKind kind() const { return static_cast<RingKind>(v_.index()); }
  bool in_field() const { return kind() != RingKind::Poly; }

  bool is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
  }

  bool is_real() const {
    switch (kind()) {
      case RingKind::Rational:
      case RingKind::Quad: return true;
      case RingKind::Gauss: return std::get<GaussRational>(v_).is_real();
      case RingKind::GaussQuad: return std::get<GaussQuad>(v_).is_real();
      case RingKind::Poly: return std::get<Poly>(v_).is_real();
    }
    return false;
  }

  bool is_rational() const { return kind() == RingKind::Rational; }
  const Rational& rational() const {
    if (kind() != RingKind::Rational) throw Error("Scalar: not a rational value");
    return std::get<Rational>(v_);
  }

  // Sign of a real scalar.
  int sign() const {
    switch (kind()) {
      case RingKind::Rational: return std::get<Rational>(v_).sign();
      case RingKind::Quad: return std::get<QuadExt>(v_).sign();
      default: throw Error("Scalar: sign of a non-real value");
    }
  }

  Scalar conj() const {
    switch (kind()) {
      case RingKind::Rational:
      case RingKind::Quad: return *this;
      case RingKind::Gauss: return Scalar(std::get<GaussRational>(v_).conj());
      case RingKind::GaussQuad: return Scalar(std::get<GaussQuad>(v_).conj());
      case RingKind::Poly: return Scalar(std::get<Poly>(v_).conj());
    }
    return *this;
  }

  Scalar re() const {
    switch (kind()) {
      case RingKind::Rational:
      case RingKind::Quad: return *this;
      case RingKind::Gauss: return Scalar(std::get<GaussRational>(v_).re);
      case RingKind::GaussQuad: return Scalar(std::get<GaussQuad>(v_).re);
      case RingKind::Poly: throw Error("Scalar: re() of a symbolic value");
    }
    return *this;
  }
  Scalar im() const {
    switch (kind()) {
      case RingKind::Rational:
      case RingKind::Quad: return Scalar();
      case RingKind::Gauss: return Scalar(std::get<GaussRational>(v_).im);
      case RingKind::GaussQuad: return Scalar(std::get<GaussQuad>(v_).im);
      case RingKind::Poly: throw Error("Scalar: im() of a symbolic value");
    }
    return Scalar();
  }

  Scalar operator-() const {
    return std::visit([](const auto& x) { return Scalar(-x); }, v_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x + y; });
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x - y; });
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x * y; });
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    switch (kind()) {
      case RingKind::Rational: return Scalar(std::get<Rational>(v_).inverse());
      case RingKind::Gauss: return Scalar(std::get<GaussRational>(v_).inverse());
      case RingKind::Quad: return Scalar(std::get<QuadExt>(v_).inverse());
      case RingKind::GaussQuad: return Scalar(std::get<GaussQuad>(v_).inverse());
      case RingKind::Poly: {
        const Poly& p = std::get<Poly>(v_);
        if (p.is_constant()) return Scalar(p.constant_value().inverse());
        throw RingMismatch("inverse of a non-constant polynomial");
      }
    }
    throw Error("Scalar: bad kind");
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  const Poly& poly() const {
    if (kind() != RingKind::Poly) throw Error("Scalar: not a polynomial");
    return std::get<Poly>(v_);
  }
  Poly to_poly() const {
    switch (kind()) {
      case RingKind::Rational: return Poly::constant(std::get<Rational>(v_));
      case RingKind::Gauss: return Poly::constant(std::get<GaussRational>(v_));
      case RingKind::Poly: return std::get<Poly>(v_);
      default: throw RingMismatch("cannot promote a quadratic-extension value to a polynomial");
    }
  }
  GaussRational to_gauss() const {
    switch (kind()) {
      case RingKind::Rational: return GaussRational(std::get<Rational>(v_));
      case RingKind::Gauss: return std::get<GaussRational>(v_);
      case RingKind::Poly: {
        const Poly& p = std::get<Poly>(v_);
        if (p.is_constant()) return p.constant_value();
        throw RingMismatch("symbolic value where a number was required");
      }
      default: throw RingMismatch("quadratic-extension value where Q(i) was required");
    }
  }
  GaussQuad to_gauss_quad() const {
    switch (kind()) {
      case RingKind::Rational:
        return GaussQuad(QuadExt::from_rational(std::get<Rational>(v_)));
      case RingKind::Gauss: {
        const GaussRational& g = std::get<GaussRational>(v_);
        return GaussQuad(QuadExt::from_rational(g.re), QuadExt::from_rational(g.im));
      }
      case RingKind::Quad: return GaussQuad(std::get<QuadExt>(v_));
      case RingKind::GaussQuad: return std::get<GaussQuad>(v_);
      case RingKind::Poly: {
        const Poly& p = std::get<Poly>(v_);
        if (!p.is_constant()) throw RingMismatch("symbolic value where a number was required");
        GaussRational g = p.constant_value();
        return GaussQuad(QuadExt::from_rational(g.re), QuadExt::from_rational(g.im));
      }
    }
    throw Error("Scalar: bad kind");
  }

  // Evaluate a symbolic scalar; numeric kinds pass through.
  Scalar eval(const std::map<std::string, GaussRational>& assignment) const {
    if (kind() != RingKind::Poly) return *this;
    return Scalar(std::get<Poly>(v_).eval(assignment));
  }
  Scalar substitute(const std::map<std::string, GaussRational>& assignment) const {
    if (kind() != RingKind::Poly) return *this;
    return Scalar(std::get<Poly>(v_).substitute(assignment));
  }

  std::complex<double> approx() const {
    switch (kind()) {
      case RingKind::Rational: return {std::get<Rational>(v_).approx(), 0.0};
      case RingKind::Gauss: {
        const auto& g = std::get<GaussRational>(v_);
        return {g.re.approx(), g.im.approx()};
      }
      case RingKind::Quad: return {std::get<QuadExt>(v_).approx(), 0.0};
      case RingKind::GaussQuad: {
        const auto& g = std::get<GaussQuad>(v_);
        return {g.re.approx(), g.im.approx()};
      }
      case RingKind::Poly: throw Error("Scalar: approx of a symbolic value");
    }
    return {};
  }

  std::string to_string() const {
    return std::visit([](const auto& x) { return x.to_string(); }, v_);
  }

  // Ring descriptor for mismatch checks: two scalars are combinable iff
  // promote() succeeds; this reports the kind for error messages.
  std::string ring_name() const { return ring_kind_name(kind()); }

 private:
  template <class Op>
  static Scalar apply(const Scalar& a, const Scalar& b, Op op) {
    RingKind ka = a.kind(), kb = b.kind();
    if (ka == kb) {
      switch (ka) {
        case RingKind::Rational:
          return Scalar(op(std::get<Rational>(a.v_), std::get<Rational>(b.v_)));
        case RingKind::Gauss:
          return Scalar(op(std::get<GaussRational>(a.v_), std::get<GaussRational>(b.v_)));
        case RingKind::Quad:
          return Scalar(op(std::get<QuadExt>(a.v_), std::get<QuadExt>(b.v_)));
        case RingKind::GaussQuad:
          return Scalar(op(std::get<GaussQuad>(a.v_), std::get<GaussQuad>(b.v_)));
        case RingKind::Poly:
          return Scalar(op(std::get<Poly>(a.v_), std::get<Poly>(b.v_)));
      }
    }
    bool poly = (ka == RingKind::Poly || kb == RingKind::Poly);
    bool quad = (ka == RingKind::Quad || kb == RingKind::Quad || ka == RingKind::GaussQuad ||
                 kb == RingKind::GaussQuad);
    if (poly && quad)
      throw RingMismatch(std::string("cannot combine ") + a.ring_name() + " with " + b.ring_name());
    if (poly) return Scalar(op(a.to_poly(), b.to_poly()));
    if (quad) return Scalar(op(a.to_gauss_quad(), b.to_gauss_quad()));
    return Scalar(op(a.to_gauss(), b.to_gauss()));
  }

  // Values collapse to the smallest ring that represents them, so ring tags
  // stay canonical (e.g. a Gaussian with zero imaginary part is a Rational).
  void assign_gauss(GaussRational g) {
    if (g.is_real())
      v_ = std::move(g.re);
    else
      v_ = std::move(g);
  }
  void assign_quad(QuadExt q) {
    if (q.is_rational())
      v_ = q.rational_part();
    else
      v_ = std::move(q);
  }
  void assign_gauss_quad(GaussQuad g) {
    if (g.re.is_rational() && g.im.is_rational()) {
      assign_gauss(GaussRational(g.re.rational_part(), g.im.rational_part()));
    } else if (g.is_real()) {
      v_ = std::move(g.re);
    } else {
      v_ = std::move(g);
    }
  }
  void assign_poly(Poly p) {
    if (p.is_constant())
      assign_gauss(p.constant_value());
    else
      v_ = std::move(p);
  }

  std::variant<Rational, GaussRational, QuadExt, GaussQuad, Poly> v_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace nilclass
