// Complexification of an exact real field: values re + im*i with conjugation
// as the involutive automorphism. Instantiated with Rational (Gaussian
// rationals) and with QuadExt (complexified biquadratic extensions).
#pragma once

#include <string>

#include "nilclass/errors.hpp"
#include "nilclass/rational.hpp"

namespace nilclass {

template <class F>
struct Cx {
  F re{};
  F im{};

  Cx() = default;
  Cx(F r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Cx(F r, F i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  Cx conj() const { return Cx(re, -im); }

  Cx operator-() const { return Cx(-re, -im); }
  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
  Cx& operator*=(const Cx& o) {
    F r = re * o.re - im * o.im;
    F i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }

  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
  friend Cx operator*(Cx a, const Cx& b) { return a *= b; }

  Cx inverse() const {
    F n = re * re + im * im;
    if (n.is_zero()) throw Error("complex inverse of zero");
    F ninv = n.inverse();
    return Cx(re * ninv, -(im * ninv));
  }
  friend Cx operator/(const Cx& a, const Cx& b) { return a * b.inverse(); }

  friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }

  // "p/q" for real values, "p/q+r/s*i" otherwise (sign-aware). Composite
  // real parts (e.g. quadratic-extension values) are parenthesized before
  // "*i" so the rendering stays unambiguous.
  std::string to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string imabs = im.sign() < 0 ? (-im).to_string() : im.to_string();
    bool needs_paren = false;
    for (size_t k = 1; k < imabs.size(); ++k)
      if (imabs[k] == '+' || imabs[k] == '-') { needs_paren = true; break; }
    if (needs_paren) imabs = "(" + imabs + ")";
    std::string s;
    if (!re.is_zero()) s = re.to_string();
    s += (im.sign() < 0) ? "-" : (s.empty() ? "" : "+");
    s += imabs + "*i";
    return s;
  }
};

using GaussRational = Cx<Rational>;

inline GaussRational gauss_i() { return GaussRational(Rational(0), Rational(1)); }

template <class F>
std::ostream& operator<<(std::ostream& os, const Cx<F>& z) {
  return os << z.to_string();
}

}  // namespace nilclass
