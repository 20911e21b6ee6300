// Complex structure equations in a (1,0)-basis {w^1..w^n}: each dw^k is a
// 2-form in the complexified exterior algebra spanned by generators
// 1..n (w^k) and n+1..2n (conjugates w^kbar), restricted to bidegrees
// (2,0) and (1,1). Conjugate equations are derived, never stored:
// dw^kbar = conj(dw^k).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilclass/exterior.hpp"
#include "nilclass/matrix.hpp"
#include "nilclass/scalar.hpp"

namespace nilclass {

// Conjugation on the complexified algebra: swaps generator i <-> i+n and
// conjugates coefficients.
ExtForm conj_form(const ExtForm& w, int n);

// Bidegree of a monomial over 2n generators: (#unbarred, #barred).
std::pair<int, int> bidegree(const std::vector<int>& tuple, int n);

class ComplexStructEqs {
 public:
  explicit ComplexStructEqs(int n) : n_(n), d_omega_(static_cast<size_t>(n), ExtForm(2 * n, 2)) {}

  int n() const { return n_; }
  int real_dim() const { return 2 * n_; }

  const ExtForm& d(int k) const { return d_omega_[static_cast<size_t>(k - 1)]; }

  // Adds c * w^{ab} (indices in 1..2n; a (0,2) monomial is rejected).
  void add_term(int k, int a, int b, const Scalar& c);

  // w^{ij}
  void add_20(int k, int i, int j, const Scalar& c) { add_term(k, i, j, c); }
  // w^{i jbar}
  void add_11(int k, int i, int jbar, const Scalar& c) { add_term(k, i, jbar + n_, c); }

  Scalar coeff_20(int k, int i, int j) const { return d(k).coefficient({i, j}); }
  Scalar coeff_11(int k, int i, int jbar) const { return d(k).coefficient({i, jbar + n_}); }

  // Full differential on the complexified algebra (conjugate generators get
  // the conjugated equations).
  Differential differential() const;

  // d^2 w^k for all k; empty forms everywhere iff the Jacobi identity
  // holds.
  std::vector<ExtForm> d_squared() const;
  bool validate() const;

  // Nonzero residual coefficients of d^2, flattened and deduplicated up to
  // sign and conjugation; the polynomial Jacobi conditions of a symbolic
  // instance.
  std::vector<Scalar> jacobi_residual_coefficients() const;

  ComplexStructEqs substituted(const std::map<std::string, GaussRational>& assignment) const;

  friend bool operator==(const ComplexStructEqs& a, const ComplexStructEqs& b) {
    return a.n_ == b.n_ && a.d_omega_ == b.d_omega_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::vector<ExtForm> d_omega_;
};

// New basis tau^i = sum_j lambda[i][j] w^j (lambda invertible over a
// field); returns the structure equations in the tau basis. Preserves
// validate().
ComplexStructEqs change_basis(const ComplexStructEqs& eqs, const Matrix& lambda);

}  // namespace nilclass
