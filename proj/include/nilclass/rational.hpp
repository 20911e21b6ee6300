// Exact rational numbers. Thin wrapper over GMP's mpq_class keeping the
// canonical form invariant (gcd(|num|, den) = 1, den > 0) and the text
// rendering "p/q" used verbatim in reports.
#pragma once

#include <gmpxx.h>

#include <string>

#include "nilclass/errors.hpp"

namespace nilclass {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}               // NOLINT(google-explicit-constructor)
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw Error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p", "-p", "p/q".
  static Rational from_string(const std::string& s) {
    try {
      mpq_class q(s);
      if (q.get_den() == 0) throw Error("Rational: zero denominator in '" + s + "'");
      q.canonicalize();
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw Error("Rational: cannot parse '" + s + "'");
    }
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const {
    if (is_zero()) throw Error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Exact square root if this is the square of a rational.
  bool square_root(Rational* out) const {
    if (sign() < 0) return false;
    mpz_class n = num(), d = den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    *out = Rational(mpq_class(rn) / mpq_class(rd));
    return true;
  }

  double approx() const { return v_.get_d(); }

  std::string to_string() const {
    return v_.get_str();  // "p" or "p/q", canonical
  }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace nilclass
