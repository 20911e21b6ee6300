#include "nilclass/complex_eqs.hpp"

#include "nilclass/errors.hpp"

namespace nilclass {

ExtForm conj_form(const ExtForm& w, int n) {
  ExtForm out(2 * n, w.degree());
  for (const auto& [t, c] : w.terms()) {
    std::vector<int> mapped;
    mapped.reserve(t.size());
    for (int idx : t) mapped.push_back(idx <= n ? idx + n : idx - n);
    out.add_term(mapped, c.conj());
  }
  return out;
}

std::pair<int, int> bidegree(const std::vector<int>& tuple, int n) {
  int p = 0, q = 0;
  for (int idx : tuple) (idx <= n ? p : q)++;
  return {p, q};
}

void ComplexStructEqs::add_term(int k, int a, int b, const Scalar& c) {
  if (k < 1 || k > n_) throw Error("ComplexStructEqs: generator index out of range");
  if (a < 1 || b < 1 || a > 2 * n_ || b > 2 * n_)
    throw Error("ComplexStructEqs: monomial index out of range");
  if (a > n_ && b > n_)
    throw IntegrabilityError("(0,2) monomial w" + std::to_string(a - n_) + "~" +
                             std::to_string(b - n_) + "~ in dw" + std::to_string(k));
  d_omega_[static_cast<size_t>(k - 1)].add_term({a, b}, c);
}

Differential ComplexStructEqs::differential() const {
  Differential d;
  d.d_gen.reserve(static_cast<size_t>(2 * n_));
  for (int k = 1; k <= n_; ++k) d.d_gen.push_back(d_omega_[static_cast<size_t>(k - 1)]);
  for (int k = 1; k <= n_; ++k) d.d_gen.push_back(conj_form(d_omega_[static_cast<size_t>(k - 1)], n_));
  return d;
}

std::vector<ExtForm> ComplexStructEqs::d_squared() const {
  Differential d = differential();
  std::vector<ExtForm> out;
  out.reserve(static_cast<size_t>(n_));
  for (int k = 1; k <= n_; ++k) out.push_back(d.apply(d_omega_[static_cast<size_t>(k - 1)]));
  return out;
}

bool ComplexStructEqs::validate() const {
  for (const ExtForm& r : d_squared())
    if (!r.is_zero()) return false;
  return true;
}

std::vector<Scalar> ComplexStructEqs::jacobi_residual_coefficients() const {
  std::vector<Scalar> out;
  auto known = [&](const Scalar& c) {
    for (const Scalar& k : out) {
      if ((k - c).is_zero() || (k + c).is_zero()) return true;
      Scalar cc = c.conj();
      if ((k - cc).is_zero() || (k + cc).is_zero()) return true;
    }
    return false;
  };
  for (const ExtForm& r : d_squared())
    for (const auto& [t, c] : r.terms()) {
      (void)t;
      if (!known(c)) out.push_back(c);
    }
  return out;
}

ComplexStructEqs ComplexStructEqs::substituted(
    const std::map<std::string, GaussRational>& assignment) const {
  ComplexStructEqs out(n_);
  for (int k = 1; k <= n_; ++k)
    out.d_omega_[static_cast<size_t>(k - 1)] = d(k).substituted(assignment);
  return out;
}

std::string ComplexStructEqs::to_string() const {
  std::string s;
  std::vector<std::string> names;
  for (int i = 1; i <= n_; ++i) names.push_back("w" + std::to_string(i));
  for (int i = 1; i <= n_; ++i) names.push_back("w~" + std::to_string(i));
  for (int k = 1; k <= n_; ++k) {
    s += "dw" + std::to_string(k) + " = " + d(k).to_string(names);
    if (k < n_) s += "\n";
  }
  return s;
}

ComplexStructEqs change_basis(const ComplexStructEqs& eqs, const Matrix& lambda) {
  int n = eqs.n();
  if (lambda.rows() != n || lambda.cols() != n) throw Error("change_basis: matrix must be n x n");
  lambda.require_field_entries("change_basis");
  std::optional<Matrix> inv = inverse(lambda);
  if (!inv) throw SingularChange("basis-change matrix is singular");

  // Old generators in terms of new: w^j = sum_k inv[j][k] tau^k, and the
  // conjugate relation for barred generators.
  std::vector<ExtForm> old_in_new(static_cast<size_t>(2 * n), ExtForm(2 * n, 1));
  for (int j = 1; j <= n; ++j) {
    ExtForm f(2 * n, 1);
    for (int k = 1; k <= n; ++k) f.add_term({k}, (*inv)(j - 1, k - 1));
    old_in_new[static_cast<size_t>(j - 1)] = f;
    old_in_new[static_cast<size_t>(n + j - 1)] = conj_form(f, n);
  }

  ComplexStructEqs out(n);
  for (int i = 1; i <= n; ++i) {
    // d tau^i = sum_j lambda[i][j] dw^j, re-expanded in the tau basis.
    ExtForm dtau(2 * n, 2);
    for (int j = 1; j <= n; ++j) {
      const Scalar& lij = lambda(i - 1, j - 1);
      if (lij.is_zero()) continue;
      for (const auto& [t, c] : eqs.d(j).terms()) {
        ExtForm prod = wedge(old_in_new[static_cast<size_t>(t[0] - 1)],
                             old_in_new[static_cast<size_t>(t[1] - 1)]);
        dtau = dtau + prod.scaled(lij * c);
      }
    }
    for (const auto& [t, c] : dtau.terms()) out.add_term(i, t[0], t[1], c);
  }
  return out;
}

}  // namespace nilclass
