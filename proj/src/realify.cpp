#include "nilclass/realify.hpp"

#include "nilclass/errors.hpp"

namespace nilclass {

RealificationMap RealificationMap::standard(int n) {
  RealificationMap m;
  m.n = n;
  m.alpha = Matrix(n, 2 * n);
  m.beta = Matrix(n, 2 * n);
  for (int k = 1; k <= n; ++k) {
    m.alpha(k - 1, 2 * k - 2) = Scalar::one();  // Re w^k = e^{2k-1}
    m.beta(k - 1, 2 * k - 1) = Scalar::one();   // Im w^k = e^{2k}
  }
  return m;
}

std::vector<Scalar> RealificationMap::complex_row(int k) const {
  std::vector<Scalar> row(static_cast<size_t>(2 * n));
  for (int c = 0; c < 2 * n; ++c)
    row[static_cast<size_t>(c)] = alpha(k - 1, c) + Scalar::i() * beta(k - 1, c);
  return row;
}

std::string RealificationMap::to_string() const {
  std::string s;
  for (int k = 1; k <= n; ++k) {
    s += "w" + std::to_string(k) + " =";
    bool any = false;
    for (int c = 0; c < 2 * n; ++c) {
      Scalar coef = alpha(k - 1, c) + Scalar::i() * beta(k - 1, c);
      if (coef.is_zero()) continue;
      std::string cs = coef.to_string();
      bool composite = false;
      for (size_t t = 1; t < cs.size(); ++t)
        if (cs[t] == '+' || cs[t] == '-') composite = true;
      if (composite) cs = "(" + cs + ")";
      s += std::string(any ? " + " : " ") + cs + "*e" + std::to_string(c + 1);
      any = true;
    }
    if (!any) s += " 0";
    if (k < n) s += "\n";
  }
  return s;
}

namespace {

// Complex covector matrix W: rows 1..n are w^k, rows n+1..2n their
// conjugates, columns the e-coordinates.
Matrix covector_matrix(const RealificationMap& map) {
  int n = map.n;
  Matrix w(2 * n, 2 * n);
  for (int k = 1; k <= n; ++k) {
    std::vector<Scalar> row = map.complex_row(k);
    for (int c = 0; c < 2 * n; ++c) {
      w(k - 1, c) = row[static_cast<size_t>(c)];
      w(n + k - 1, c) = row[static_cast<size_t>(c)].conj();
    }
  }
  return w;
}

// Expands a 2-form over the complexified w-generators into e-wedges using
// the covector rows.
ExtForm expand_in_e(const ExtForm& w_form, const Matrix& w) {
  int m = w.cols();
  ExtForm out(m, 2);
  for (const auto& [t, c] : w_form.terms()) {
    const int a = t[0], b = t[1];
    for (int p = 0; p < m; ++p) {
      if (w(a - 1, p).is_zero()) continue;
      for (int q = 0; q < m; ++q) {
        if (p == q || w(b - 1, q).is_zero()) continue;
        out.add_term({p + 1, q + 1}, c * w(a - 1, p) * w(b - 1, q));
      }
    }
  }
  return out;
}

}  // namespace

Realified realify(const ComplexStructEqs& eqs, const RealificationMap& map) {
  int n = eqs.n();
  if (map.n != n) throw Error("realify: map dimension mismatch");
  Matrix w = covector_matrix(map);
  w.require_field_entries("realify");
  std::optional<Matrix> winv = inverse(w);
  if (!winv) throw Error("realify: real covectors are dependent");

  // RHS_k = dw^k expanded in e-wedges (k = 1..2n with conjugates).
  std::vector<ExtForm> rhs;
  rhs.reserve(static_cast<size_t>(2 * n));
  for (int k = 1; k <= n; ++k) rhs.push_back(expand_in_e(eqs.d(k), w));
  for (int k = 1; k <= n; ++k) rhs.push_back(expand_in_e(conj_form(eqs.d(k), n), w));

  // de^i = sum_j winv[i][j] RHS_j; must come out real.
  LieAlgebra g(2 * n);
  for (int i = 1; i <= 2 * n; ++i) {
    ExtForm dei(2 * n, 2);
    for (int j = 1; j <= 2 * n; ++j) {
      const Scalar& coef = (*winv)(i - 1, j - 1);
      if (coef.is_zero()) continue;
      dei = dei + rhs[static_cast<size_t>(j - 1)].scaled(coef);
    }
    for (const auto& [t, c] : dei.terms()) {
      if (!c.is_real())
        throw Error("realify: non-real structure constant for de" + std::to_string(i));
      g.add_constant(t[0], t[1], i, c);
    }
  }

  // J on vectors: J e_i = 2 Re(i W_{ki} Z_k) with Z_k the dual (1,0)
  // vectors, i.e. J = -2 Im(Zmat * Wtop).
  Matrix zmat(2 * n, n);
  for (int r = 0; r < 2 * n; ++r)
    for (int k = 0; k < n; ++k) zmat(r, k) = (*winv)(r, k);
  Matrix wtop(n, 2 * n);
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < 2 * n; ++c) wtop(k, c) = w(k, c);
  Matrix prod = zmat * wtop;
  Matrix j(2 * n, 2 * n);
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c) j(r, c) = Scalar(-2) * prod(r, c).im();

  // J^2 = -Id is structural here; verify once.
  Matrix j2 = j * j;
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c)
      if (j2(r, c) != (r == c ? Scalar(-1) : Scalar::zero()))
        throw Error("realify: induced J fails J^2 = -Id");

  return Realified{std::move(g), std::move(j)};
}

std::vector<RealifyResidual> realify_verify(const ComplexStructEqs& eqs,
                                            const RealificationMap& map,
                                            const LieAlgebra& target) {
  int n = eqs.n();
  if (map.n != n || target.dim() != 2 * n) throw Error("realify_verify: dimension mismatch");
  Matrix w = covector_matrix(map);
  Differential d_target = ce_differential_of(target);

  std::vector<RealifyResidual> residuals;
  for (int k = 1; k <= n; ++k) {
    // d_target(F(w^k)) = sum_i (alpha+ i beta)_{k,i} de^i
    ExtForm lhs(2 * n, 2);
    for (int i = 1; i <= 2 * n; ++i) {
      const Scalar& coef = w(k - 1, i - 1);
      if (coef.is_zero()) continue;
      lhs = lhs + d_target.d_gen[static_cast<size_t>(i - 1)].scaled(coef);
    }
    ExtForm rhs = expand_in_e(eqs.d(k), w);
    ExtForm diff = lhs - rhs;
    for (const auto& [t, c] : diff.terms())
      residuals.push_back(
          {k, "e" + std::to_string(t[0]) + "^e" + std::to_string(t[1]), c});
  }
  return residuals;
}

std::vector<NijenhuisEntry> nijenhuis(const LieAlgebra& g, const Matrix& j) {
  int n = g.dim();
  if (j.rows() != n || j.cols() != n) throw Error("nijenhuis: dimension mismatch");
  Matrix j2 = j * j;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (j2(r, c) != (r == c ? Scalar(-1) : Scalar::zero()))
        throw NotAlmostComplex("J^2 != -Id");

  auto jcol = [&](int i) {
    std::vector<Scalar> v(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) v[static_cast<size_t>(r)] = j(r, i - 1);
    return v;
  };

  std::vector<NijenhuisEntry> out;
  for (int i = 1; i <= n; ++i)
    for (int jdx = i + 1; jdx <= n; ++jdx) {
      std::vector<Scalar> x = basis_vector(g, i), y = basis_vector(g, jdx);
      std::vector<Scalar> jx = jcol(i), jy = jcol(jdx);
      std::vector<Scalar> val = g.bracket(x, y);
      std::vector<Scalar> t1 = j.apply(g.bracket(jx, y));
      std::vector<Scalar> t2 = j.apply(g.bracket(x, jy));
      std::vector<Scalar> t3 = g.bracket(jx, jy);
      bool nonzero = false;
      for (int r = 0; r < n; ++r) {
        val[static_cast<size_t>(r)] += t1[static_cast<size_t>(r)] + t2[static_cast<size_t>(r)] -
                                        t3[static_cast<size_t>(r)];
        if (!val[static_cast<size_t>(r)].is_zero()) nonzero = true;
      }
      if (nonzero) out.push_back({i, jdx, std::move(val)});
    }
  return out;
}

bool nijenhuis_vanishes(const LieAlgebra& g, const Matrix& j) { return nijenhuis(g, j).empty(); }

SeriesResult ascending_j_series(const LieAlgebra& g, const Matrix& j) {
  int n = g.dim();
  SeriesResult res;
  Subspace prev(n);
  while (true) {
    // Kernel of X -> ([X, e_k] mod prev, [JX, e_k] mod prev).
    int qdim = n - prev.dim();
    std::vector<std::vector<Scalar>> cols;
    for (int i = 1; i <= n; ++i) {
      std::vector<Scalar> img;
      img.reserve(static_cast<size_t>(2 * n * qdim));
      std::vector<Scalar> jei(static_cast<size_t>(n));
      for (int r = 0; r < n; ++r) jei[static_cast<size_t>(r)] = j(r, i - 1);
      for (int k = 1; k <= n; ++k) {
        std::vector<Scalar> q1 = prev.quotient_coords(g.bracket_basis(i, k));
        img.insert(img.end(), q1.begin(), q1.end());
      }
      for (int k = 1; k <= n; ++k) {
        std::vector<Scalar> q2 = prev.quotient_coords(g.bracket(jei, basis_vector(g, k)));
        img.insert(img.end(), q2.begin(), q2.end());
      }
      cols.push_back(std::move(img));
    }
    Matrix m(2 * n * qdim, n);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < 2 * n * qdim; ++r)
        m(r, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
    Subspace next = Subspace::span(n, kernel_basis(m));
    if (next.dim() == prev.dim()) break;  // stabilized
    res.terms.push_back(next);
    if (next.dim() == n) {
      res.nilpotent = true;
      break;
    }
    prev = res.terms.back();
  }
  return res;
}

const char* jtype_name(JType t) {
  switch (t) {
    case JType::StronglyNonNilpotent: return "strongly non-nilpotent";
    case JType::Nilpotent: return "nilpotent";
    case JType::WeaklyNonNilpotent: return "weakly non-nilpotent";
  }
  return "?";
}

JType classify_j_type(const LieAlgebra& g, const Matrix& j) {
  SeriesResult s = ascending_j_series(g, j);
  if (s.terms.empty() || s.terms.front().dim() == 0) return JType::StronglyNonNilpotent;
  if (s.nilpotent) return JType::Nilpotent;
  return JType::WeaklyNonNilpotent;
}

}  // namespace nilclass
