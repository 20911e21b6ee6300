// Sparse multivariate polynomials with Gaussian-rational coefficients.
//
// Variables are kept in sorted name order (the declared order for the
// graded-lexicographic term order, which makes printing and serialization
// deterministic). Conjugation acts on coefficients and on variable names:
// names starting with an upper-case letter denote complex parameters and
// are toggled with a trailing '~' (A <-> A~); lower-case names denote real
// parameters and are fixed.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "nilclass/complexn.hpp"
#include "nilclass/errors.hpp"

namespace nilclass {

namespace detail {
struct GrlexDesc {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};
}  // namespace detail

class Poly {
 public:
  using Coeff = GaussRational;
  using Monomial = std::vector<unsigned>;
  using TermMap = std::map<Monomial, Coeff, detail::GrlexDesc>;

  Poly() = default;

  static Poly constant(Coeff c) {
    Poly p;
    if (!c.is_zero()) p.terms_[{}] = std::move(c);
    return p;
  }
  static Poly constant(const Rational& r) { return constant(Coeff(r)); }

  static Poly variable(const std::string& name) {
    Poly p;
    p.vars_ = {name};
    p.terms_[{1u}] = Coeff(Rational(1));
    return p;
  }

  static std::string conj_name(const std::string& name) {
    if (name.empty() || !(name[0] >= 'A' && name[0] <= 'Z')) return name;
    if (name.back() == '~') return name.substr(0, name.size() - 1);
    return name + "~";
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
  }
  Coeff constant_value() const {
    if (terms_.empty()) return Coeff();
    for (const auto& [m, c] : terms_)
      if (degree_of(m) == 0) return c;
    throw Error("Poly: not a constant");
  }
  bool is_real() const {
    for (const auto& [m, c] : terms_)
      if (!c.is_real()) return false;
    // Complex symbolic variables make the value formally non-real.
    for (const auto& v : vars_)
      if (!v.empty() && v[0] >= 'A' && v[0] <= 'Z') return false;
    return true;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
    return d;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    auto [x, y] = aligned(a, b);
    for (const auto& [m, c] : y.terms_) x.add_term(m, c);
    return x;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    auto [x, y] = aligned(a, b);
    Poly r;
    r.vars_ = x.vars_;
    for (const auto& [ma, ca] : x.terms_)
      for (const auto& [mb, cb] : y.terms_) {
        Monomial m(ma.size());
        for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    r.prune_vars();
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Coeff& c) const {
    Poly r;
    if (c.is_zero()) return r;
    r.vars_ = vars_;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    auto [x, y] = aligned(a, b);
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly conj() const {
    Poly r;
    std::vector<std::string> renamed;
    renamed.reserve(vars_.size());
    for (const auto& v : vars_) renamed.push_back(conj_name(v));
    std::vector<size_t> order(vars_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return renamed[i] < renamed[j]; });
    r.vars_.reserve(vars_.size());
    for (size_t i : order) r.vars_.push_back(renamed[i]);
    for (const auto& [m, c] : terms_) {
      Monomial nm(m.size());
      for (size_t i = 0; i < order.size(); ++i) nm[i] = m[order[i]];
      r.terms_[nm] = c.conj();
    }
    return r;
  }

  // Full evaluation; every variable must be assigned.
  Coeff eval(const std::map<std::string, Coeff>& assignment) const {
    for (const auto& v : vars_)
      if (assignment.find(v) == assignment.end()) throw MissingParameter(v);
    Coeff total;
    for (const auto& [m, c] : terms_) {
      Coeff t = c;
      for (size_t i = 0; i < m.size(); ++i) {
        const Coeff& val = assignment.at(vars_[i]);
        for (unsigned e = 0; e < m[i]; ++e) t *= val;
      }
      total += t;
    }
    return total;
  }

  // Partial substitution; unassigned variables stay symbolic.
  Poly substitute(const std::map<std::string, Coeff>& assignment) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      Poly term = Poly::constant(c);
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        auto it = assignment.find(vars_[i]);
        Poly base = (it == assignment.end()) ? Poly::variable(vars_[i]) : Poly::constant(it->second);
        for (unsigned e = 0; e < m[i]; ++e) term *= base;
      }
      r += term;
    }
    return r;
  }

  // Monic form: leading (graded-lex) coefficient scaled to 1. Used when
  // comparing condition polynomials up to a scalar.
  Poly monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.begin()->second.inverse());
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      std::string mono;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      bool lead = s.empty();
      std::string cs;
      if (c.is_real()) {
        Rational re = c.re;
        bool neg = re.sign() < 0;
        Rational a = re.abs();
        if (!mono.empty() && a.is_one())
          cs = "";
        else
          cs = a.to_string();
        s += lead ? (neg ? "-" : "") : (neg ? "-" : "+");
        if (!cs.empty() && !mono.empty())
          s += cs + "*" + mono;
        else
          s += cs + mono;
      } else {
        std::string inner = c.to_string();
        if (!lead) s += "+";
        if (mono.empty())
          s += inner;
        else
          s += "(" + inner + ")*" + mono;
      }
    }
    return s;
  }

 private:
  static unsigned degree_of(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Drop variables that no longer occur in any term.
  void prune_vars() {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [m, c] : terms_)
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) used[i] = true;
    bool all = true;
    for (bool u : used) all = all && u;
    if (all) return;
    std::vector<std::string> nv;
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) {
        keep.push_back(i);
        nv.push_back(vars_[i]);
      }
    TermMap nt;
    for (const auto& [m, c] : terms_) {
      Monomial nm(keep.size());
      for (size_t i = 0; i < keep.size(); ++i) nm[i] = m[keep[i]];
      nt[nm] = c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
  }

  // Remap both operands onto the union of their variable lists.
  static std::pair<Poly, Poly> aligned(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_) return {a, b};
    std::vector<std::string> merged = a.vars_;
    for (const auto& v : b.vars_)
      if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
    std::sort(merged.begin(), merged.end());
    return {a.remapped(merged), b.remapped(merged)};
  }

  Poly remapped(const std::vector<std::string>& merged) const {
    Poly r;
    r.vars_ = merged;
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(merged.begin(), merged.end(), vars_[i]);
      pos[i] = static_cast<size_t>(it - merged.begin());
    }
    for (const auto& [m, c] : terms_) {
      Monomial nm(merged.size(), 0u);
      for (size_t i = 0; i < m.size(); ++i) nm[pos[i]] = m[i];
      r.terms_[nm] = c;
    }
    return r;
  }

  std::vector<std::string> vars_;  // sorted
  TermMap terms_;                  // no zero coefficients
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace nilclass
