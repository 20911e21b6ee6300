#include "nilclass/invariants.hpp"

#include <algorithm>

#include "nilclass/errors.hpp"

namespace nilclass {

int betti(const LieAlgebra& g, int k) {
  int n = g.dim();
  if (k < 0 || k > n) throw Error("betti: degree out of range");
  Differential d = ce_differential_of(g);
  auto dim_lambda = [&](int deg) { return static_cast<int>(basis_tuples(n, deg).size()); };
  int rank_k = (k == n) ? 0 : rank_over_field(differential_matrix(d, k));
  int rank_km1 = (k == 0) ? 0 : rank_over_field(differential_matrix(d, k - 1));
  return dim_lambda(k) - rank_k - rank_km1;
}

std::vector<int> betti_all(const LieAlgebra& g) {
  int n = g.dim();
  Differential d = ce_differential_of(g);
  std::vector<int> ranks(static_cast<size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) ranks[static_cast<size_t>(k)] = rank_over_field(differential_matrix(d, k));
  std::vector<int> b;
  for (int k = 0; k <= n; ++k) {
    int dim_k = static_cast<int>(basis_tuples(n, k).size());
    int rk = (k == n) ? 0 : ranks[static_cast<size_t>(k)];
    int rkm1 = (k == 0) ? 0 : ranks[static_cast<size_t>(k - 1)];
    b.push_back(dim_k - rk - rkm1);
  }
  return b;
}

Matrix coadjoint_matrix(const LieAlgebra& g) {
  int m = g.dim();
  Matrix c(m, m);
  for (int k = 1; k <= m; ++k)
    for (int i = 1; i <= m; ++i) {
      Scalar entry;
      for (int j = 1; j <= m; ++j) {
        Scalar coef = g.structure_constant(k, i, j);
        if (!coef.is_zero()) entry += coef * Scalar::var("x" + std::to_string(j));
      }
      c(k - 1, i - 1) = entry;
    }
  return c;
}

int casimir_count(const LieAlgebra& g, int trials, std::uint64_t seed) {
  return g.dim() - rank_generic(coadjoint_matrix(g), trials, seed);
}

namespace {

std::vector<ExtForm> nonzero_differentials(const LieAlgebra& g) {
  Differential d = ce_differential_of(g);
  std::vector<ExtForm> out;
  for (const auto& f : d.d_gen)
    if (!f.is_zero()) out.push_back(f);
  return out;
}

bool is_decomposable(const ExtForm& w) { return wedge(w, w).is_zero(); }

}  // namespace

int decomposable_exact_2forms(const LieAlgebra& g) {
  int count = 0;
  for (const auto& f : nonzero_differentials(g))
    if (is_decomposable(f)) ++count;
  return count;
}

int decomposable_span_dimension(const LieAlgebra& g) {
  std::vector<ExtForm> gens = nonzero_differentials(g);
  int r = static_cast<int>(gens.size());
  int best = 0;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> idx;
    for (int t = 0; t < r; ++t)
      if (mask & (1u << t)) idx.push_back(t);
    if (static_cast<int>(idx.size()) <= best) continue;
    // Subspace of decomposables iff all pairwise products (including
    // squares) vanish; certified on the grid as documented.
    bool ok = true;
    for (size_t a = 0; a < idx.size() && ok; ++a)
      for (size_t b = a; b < idx.size() && ok; ++b)
        if (!wedge(gens[static_cast<size_t>(idx[a])], gens[static_cast<size_t>(idx[b])]).is_zero())
          ok = false;
    if (!ok) continue;
    std::vector<int> grid = {-2, -1, 0, 1, 2};
    std::vector<size_t> counter(idx.size(), 0);
    bool all_dec = true;
    while (all_dec) {
      ExtForm combo(gens[0].generators(), 2);
      for (size_t t = 0; t < idx.size(); ++t)
        combo = combo + gens[static_cast<size_t>(idx[t])].scaled(Scalar(grid[counter[t]]));
      if (!is_decomposable(combo)) all_dec = false;
      size_t pos = 0;
      while (pos < counter.size()) {
        if (++counter[pos] < grid.size()) break;
        counter[pos] = 0;
        ++pos;
      }
      if (pos == counter.size()) break;
    }
    if (!all_dec) continue;
    // The selected differentials must actually be independent.
    std::vector<std::vector<int>> tuples = basis_tuples(gens[0].generators(), 2);
    Matrix m(static_cast<int>(idx.size()), static_cast<int>(tuples.size()));
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t tcol = 0; tcol < tuples.size(); ++tcol)
        m(static_cast<int>(a), static_cast<int>(tcol)) =
            gens[static_cast<size_t>(idx[a])].coefficient(tuples[tcol]);
    best = std::max(best, rank_over_field(m));
  }
  return best;
}

std::vector<Scalar> order_minors(const Matrix& m, int k) {
  std::vector<std::vector<int>> row_sets = basis_tuples(m.rows(), k);
  std::vector<std::vector<int>> col_sets = basis_tuples(m.cols(), k);
  std::vector<Scalar> out;
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      Matrix sub(k, k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          sub(a, b) = m(rs[static_cast<size_t>(a)] - 1, cs[static_cast<size_t>(b)] - 1);
      out.push_back(determinant_symbolic(sub));
    }
  return out;
}

Fingerprint fingerprint(const LieAlgebra& g) {
  Fingerprint fp;
  SeriesResult asc = g.ascending_series();
  SeriesResult desc = g.descending_series();
  if (!asc.nilpotent) throw Error("fingerprint: algebra is not nilpotent");
  fp.ascending_type = asc.type();
  fp.descending_type = desc.type();
  fp.b1 = betti(g, 1);
  fp.b2 = betti(g, 2);
  fp.b3 = betti(g, 3);
  fp.casimir = casimir_count(g);
  fp.dim_derived = g.derived_subalgebra().dim();
  return fp;
}

std::string Fingerprint::to_string() const {
  auto tuple = [](const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };
  return "ascending " + tuple(ascending_type) + ", descending " + tuple(descending_type) +
         ", b1 " + std::to_string(b1) + ", b2 " + std::to_string(b2) + ", b3 " +
         std::to_string(b3) + ", n_I " + std::to_string(casimir) + ", dim[g,g] " +
         std::to_string(dim_derived);
}

}  // namespace nilclass
