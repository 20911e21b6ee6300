// Exterior algebra over a finite covector basis, with a pluggable
// differential (a 2-form per generator, extended by the Leibniz rule).
// Serves both the real Chevalley-Eilenberg complex of a Lie algebra and the
// complexified bigraded complex of structure equations (where generators
// 1..n are omega^k and n+1..2n their conjugates).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilclass/lie.hpp"
#include "nilclass/scalar.hpp"

namespace nilclass {

class ExtForm {
 public:
  ExtForm() : n_(0), deg_(0) {}
  ExtForm(int n, int degree) : n_(n), deg_(degree) {}

  static ExtForm generator(int n, int index) {
    ExtForm f(n, 1);
    f.add_term({index}, Scalar::one());
    return f;
  }

  int generators() const { return n_; }
  int degree() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }

  Scalar coefficient(const std::vector<int>& tuple) const {
    std::vector<int> t = tuple;
    int sign = normalize(t);
    if (sign == 0) return Scalar::zero();
    auto it = terms_.find(t);
    if (it == terms_.end()) return Scalar::zero();
    return sign > 0 ? it->second : -it->second;
  }

  // Adds c * e^{tuple}; the tuple may be unsorted (sign handled), terms
  // with repeated indices vanish.
  void add_term(std::vector<int> tuple, const Scalar& c) {
    if (static_cast<int>(tuple.size()) != deg_) throw Error("ExtForm: degree mismatch");
    if (c.is_zero()) return;
    int sign = normalize(tuple);
    if (sign == 0) return;
    Scalar v = sign > 0 ? c : -c;
    auto it = terms_.find(tuple);
    if (it == terms_.end()) {
      terms_[tuple] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ExtForm operator-() const {
    ExtForm f(n_, deg_);
    for (const auto& [t, c] : terms_) f.terms_[t] = -c;
    return f;
  }
  friend ExtForm operator+(const ExtForm& a, const ExtForm& b) {
    if (a.n_ != b.n_ || a.deg_ != b.deg_) throw Error("ExtForm: shape mismatch");
    ExtForm f = a;
    for (const auto& [t, c] : b.terms_) f.add_term(t, c);
    return f;
  }
  friend ExtForm operator-(const ExtForm& a, const ExtForm& b) { return a + (-b); }
  ExtForm scaled(const Scalar& c) const {
    ExtForm f(n_, deg_);
    if (c.is_zero()) return f;
    for (const auto& [t, k] : terms_) {
      Scalar v = k * c;
      if (!v.is_zero()) f.terms_[t] = v;
    }
    return f;
  }
  friend bool operator==(const ExtForm& a, const ExtForm& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.terms_ == b.terms_;
  }

  friend ExtForm wedge(const ExtForm& a, const ExtForm& b) {
    if (a.n_ != b.n_) throw Error("wedge: generator count mismatch");
    ExtForm f(a.n_, a.deg_ + b.deg_);
    for (const auto& [ta, ca] : a.terms_)
      for (const auto& [tb, cb] : b.terms_) {
        std::vector<int> t = ta;
        t.insert(t.end(), tb.begin(), tb.end());
        f.add_term(t, ca * cb);
      }
    return f;
  }

  ExtForm conj_scalars() const {
    ExtForm f(n_, deg_);
    for (const auto& [t, c] : terms_) {
      Scalar v = c.conj();
      if (!v.is_zero()) f.terms_[t] = v;
    }
    return f;
  }

  ExtForm substituted(const std::map<std::string, GaussRational>& assignment) const {
    ExtForm f(n_, deg_);
    for (const auto& [t, c] : terms_) f.add_term(t, c.eval(assignment));
    return f;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  // Sort ascending, tracking parity; 0 for repeated indices.
  static int normalize(std::vector<int>& t) {
    int sign = 1;
    for (size_t i = 1; i < t.size(); ++i)
      for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
        std::swap(t[j], t[j - 1]);
        sign = -sign;
      }
    for (size_t i = 1; i < t.size(); ++i)
      if (t[i] == t[i - 1]) return 0;
    return sign;
  }

  int n_;
  int deg_;
  std::map<std::vector<int>, Scalar> terms_;
};

// A differential: the 2-form d(generator_i) for each generator, extended to
// all degrees by d(a ^ b) = da ^ b + (-1)^|a| a ^ db.
struct Differential {
  std::vector<ExtForm> d_gen;  // index 0 -> generator 1

  int generators() const { return static_cast<int>(d_gen.size()); }

  ExtForm apply(const ExtForm& w) const {
    int n = static_cast<int>(d_gen.size());
    ExtForm out(n, w.degree() + 1);
    if (w.degree() + 1 > n) return out;  // above top degree everything dies
    for (const auto& [tuple, c] : w.terms()) {
      for (size_t t = 0; t < tuple.size(); ++t) {
        const ExtForm& dgen = d_gen[static_cast<size_t>(tuple[t] - 1)];
        if (dgen.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(tuple.size() - 1);
        for (size_t r = 0; r < tuple.size(); ++r)
          if (r != t) rest.push_back(tuple[r]);
        Scalar sign_c = (t % 2 == 0) ? c : -c;
        for (const auto& [dt, dc] : dgen.terms()) {
          std::vector<int> full = dt;
          full.insert(full.end(), rest.begin(), rest.end());
          out.add_term(full, sign_c * dc);
        }
      }
    }
    return out;
  }
};

// Chevalley-Eilenberg differential of a Lie algebra in the display
// convention: d e^k = sum_{i<j} c_{ij}^k e^{ij}.
Differential ce_differential_of(const LieAlgebra& g);

inline ExtForm ce_differential(const LieAlgebra& g, const ExtForm& w) {
  return ce_differential_of(g).apply(w);
}

// All strictly increasing index tuples of length k from {1..n}, lex order.
std::vector<std::vector<int>> basis_tuples(int n, int k);

// Matrix of d : Lambda^k -> Lambda^{k+1} in the lex tuple bases.
Matrix differential_matrix(const Differential& d, int k);

}  // namespace nilclass
