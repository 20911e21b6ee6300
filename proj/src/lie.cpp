#include "nilclass/lie.hpp"

#include "nilclass/exterior.hpp"

namespace nilclass {

namespace {

bool vector_is_zero(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

JacobiReport LieAlgebra::jacobi_check() const {
  JacobiReport rep;

  // Route 1: Jacobi identity on basis triples.
  for (int i = 1; i <= dim_; ++i)
    for (int j = i + 1; j <= dim_; ++j)
      for (int k = j + 1; k <= dim_; ++k) {
        std::vector<Scalar> r = bracket(bracket_basis(i, j), basis_vector(*this, k));
        std::vector<Scalar> r2 = bracket(bracket_basis(j, k), basis_vector(*this, i));
        std::vector<Scalar> r3 = bracket(bracket_basis(k, i), basis_vector(*this, j));
        for (int t = 0; t < dim_; ++t)
          r[static_cast<size_t>(t)] += r2[static_cast<size_t>(t)] + r3[static_cast<size_t>(t)];
        if (!vector_is_zero(r)) {
          rep.pass = false;
          rep.violations.push_back({i, j, k, std::move(r)});
        }
      }

  // Route 2: d^2 e^k = 0 for all k.
  Differential d = ce_differential_of(*this);
  bool d2_pass = true;
  for (int k = 1; k <= dim_; ++k) {
    ExtForm d2 = d.apply(d.d_gen[static_cast<size_t>(k - 1)]);
    if (!d2.is_zero()) {
      d2_pass = false;
      rep.d2_residuals.push_back("d^2 e" + std::to_string(k) + " = " + d2.to_string());
    }
  }

  rep.routes_agree = (rep.pass == d2_pass);
  rep.pass = rep.pass && d2_pass;
  return rep;
}

std::vector<Scalar> basis_vector(const LieAlgebra& g, int k) {
  std::vector<Scalar> v(static_cast<size_t>(g.dim()));
  v[static_cast<size_t>(k - 1)] = Scalar::one();
  return v;
}

// g_k = { X : [X, e_j] in g_{k-1} for all j }, computed as the kernel of
// X -> (coords of [X, e_j] in g / g_{k-1}).
static Subspace next_ascending_term(const LieAlgebra& g, const Subspace& prev) {
  int n = g.dim();
  int qdim = n - prev.dim();
  // Column i of the stacked matrix is the image of e_i.
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<Scalar> col;
    col.reserve(static_cast<size_t>(n * qdim));
    for (int j = 1; j <= n; ++j) {
      std::vector<Scalar> q = prev.quotient_coords(g.bracket_basis(i, j));
      col.insert(col.end(), q.begin(), q.end());
    }
    cols.push_back(std::move(col));
  }
  Matrix m(n * qdim, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n * qdim; ++r) m(r, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
  return Subspace::span(n, kernel_basis(m));
}

SeriesResult LieAlgebra::ascending_series() const {
  require_field("ascending_series");
  SeriesResult res;
  Subspace prev(dim_);
  while (true) {
    Subspace next = next_ascending_term(*this, prev);
    if (next.dim() == prev.dim()) break;  // stabilized below the whole algebra
    res.terms.push_back(next);
    if (next.dim() == dim_) {
      res.nilpotent = true;
      break;
    }
    prev = res.terms.back();
  }
  if (dim_ == 0) res.nilpotent = true;
  return res;
}

SeriesResult LieAlgebra::descending_series() const {
  require_field("descending_series");
  SeriesResult res;
  Subspace prev = Subspace::full(dim_);
  while (true) {
    std::vector<std::vector<Scalar>> images;
    for (const auto& v : prev.basis())
      for (int j = 1; j <= dim_; ++j) {
        std::vector<Scalar> w = bracket(v, basis_vector(*this, j));
        if (!vector_is_zero(w)) images.push_back(std::move(w));
      }
    Subspace next = Subspace::span(dim_, images);
    if (next.dim() == prev.dim() && !res.terms.empty()) break;  // stabilized above zero
    res.terms.push_back(next);
    if (next.dim() == 0) {
      res.nilpotent = true;
      break;
    }
    if (next.dim() == prev.dim()) break;
    prev = res.terms.back();
  }
  return res;
}

Subspace LieAlgebra::center() const {
  require_field("center");
  return next_ascending_term(*this, Subspace(dim_));
}

Subspace LieAlgebra::derived_subalgebra() const {
  require_field("derived_subalgebra");
  std::vector<std::vector<Scalar>> images;
  for (const auto& [key, c] : constants_) {
    (void)c;
    images.push_back(bracket_basis(key[0], key[1]));
  }
  return Subspace::span(dim_, images);
}

int LieAlgebra::nilpotency_step() const {
  SeriesResult asc = ascending_series();
  if (!asc.nilpotent) throw Error("nilpotency_step: algebra is not nilpotent");
  return static_cast<int>(asc.terms.size());
}

}  // namespace nilclass
