// Lie algebras from structure constants, and exact linear subspaces.
//
// A LieAlgebra stores sparse constants c_{ij}^k for i < j (1-based), with
// [e_i, e_j] = sum_k c_{ij}^k e_k; antisymmetry is structural. The dual
// convention used throughout matches the abbreviated notation: the same
// coefficients give de^k = sum_{i<j} c_{ij}^k e^{ij}, so "(0,0,12)" means
// both de^3 = e^{12} and [e_1,e_2] = e_3.
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nilclass/errors.hpp"
#include "nilclass/matrix.hpp"
#include "nilclass/scalar.hpp"

namespace nilclass {

// Echelonized exact basis of a subspace; deterministic via reduced row
// echelon form with lowest-index pivots.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient) {}

  static Subspace span(int ambient, const std::vector<std::vector<Scalar>>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix m(static_cast<int>(vectors.size()), ambient);
    for (size_t r = 0; r < vectors.size(); ++r) {
      if (static_cast<int>(vectors[r].size()) != ambient)
        throw Error("Subspace: vector dimension mismatch");
      for (int c = 0; c < ambient; ++c) m(static_cast<int>(r), c) = vectors[r][static_cast<size_t>(c)];
    }
    EchelonForm ef = echelonize(m);
    for (int r = 0; r < ef.rank(); ++r) {
      std::vector<Scalar> row(static_cast<size_t>(ambient));
      for (int c = 0; c < ambient; ++c) row[static_cast<size_t>(c)] = ef.mat(r, c);
      s.basis_.push_back(std::move(row));
    }
    s.pivots_ = ef.pivots;
    return s;
  }

  static Subspace full(int ambient) {
    std::vector<std::vector<Scalar>> rows;
    for (int i = 0; i < ambient; ++i) {
      std::vector<Scalar> v(static_cast<size_t>(ambient));
      v[static_cast<size_t>(i)] = Scalar::one();
      rows.push_back(std::move(v));
    }
    return span(ambient, rows);
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<Scalar>>& basis() const { return basis_; }
  const std::vector<int>& pivot_columns() const { return pivots_; }

  // Residual of v after eliminating pivot coordinates with the basis rows;
  // zero iff v lies in the subspace.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const {
    if (static_cast<int>(v.size()) != ambient_) throw Error("Subspace: vector dimension mismatch");
    for (size_t r = 0; r < basis_.size(); ++r) {
      // by value: the elimination below zeroes v at the pivot column
      Scalar coef = v[static_cast<size_t>(pivots_[r])];
      if (coef.is_zero()) continue;
      for (int c = 0; c < ambient_; ++c)
        v[static_cast<size_t>(c)] = v[static_cast<size_t>(c)] - coef * basis_[r][static_cast<size_t>(c)];
    }
    return v;
  }

  bool contains(const std::vector<Scalar>& v) const {
    for (const Scalar& x : reduce(v))
      if (!x.is_zero()) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    for (const auto& row : other.basis_)
      if (!contains(row)) return false;
    return true;
  }

  // Coordinates in the quotient by this subspace: the non-pivot entries of
  // the reduced vector, in increasing column order.
  std::vector<Scalar> quotient_coords(const std::vector<Scalar>& v) const {
    std::vector<Scalar> red = reduce(v);
    std::vector<bool> is_pivot(static_cast<size_t>(ambient_), false);
    for (int p : pivots_) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Scalar> out;
    for (int c = 0; c < ambient_; ++c)
      if (!is_pivot[static_cast<size_t>(c)]) out.push_back(red[static_cast<size_t>(c)]);
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_;
  std::vector<std::vector<Scalar>> basis_;
  std::vector<int> pivots_;
};

struct JacobiViolation {
  int i, j, k;                    // basis triple (1-based)
  std::vector<Scalar> residual;   // coordinates of the Jacobi sum
};

struct JacobiReport {
  bool pass = true;
  std::vector<JacobiViolation> violations;        // bracket route
  std::vector<std::string> d2_residuals;          // d^2 e^k route, printed
  bool routes_agree = true;
};

struct SeriesResult {
  std::vector<Subspace> terms;  // g_1, g_2, ... (or g^1, g^2, ...)
  bool nilpotent = false;       // reached the whole algebra / zero
  std::vector<int> type() const {
    std::vector<int> t;
    for (const auto& s : terms) t.push_back(s.dim());
    return t;
  }
};

class LieAlgebra {
 public:
  explicit LieAlgebra(int dim) : dim_(dim) {
    if (dim < 0) throw Error("LieAlgebra: negative dimension");
  }

  int dim() const { return dim_; }

  // Sets c_{ij}^k for i < j. Entries with i >= j are rejected rather than
  // antisymmetrized, surfacing data-entry errors in hand-typed catalogs.
  void set_constant(int i, int j, int k, Scalar c) {
    if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
      throw Error("LieAlgebra: index out of range");
    if (i >= j) throw Error("LieAlgebra: constants require i < j");
    if (c.is_zero()) {
      constants_.erase({i, j, k});
      return;
    }
    constants_[{i, j, k}] = std::move(c);
  }

  void add_constant(int i, int j, int k, const Scalar& c) {
    auto it = constants_.find({i, j, k});
    Scalar next = (it == constants_.end()) ? c : it->second + c;
    if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
      throw Error("LieAlgebra: index out of range");
    if (i >= j) throw Error("LieAlgebra: constants require i < j");
    if (next.is_zero())
      constants_.erase({i, j, k});
    else
      constants_[{i, j, k}] = next;
  }

  const std::map<std::array<int, 3>, Scalar>& constants() const { return constants_; }

  Scalar structure_constant(int i, int j, int k) const {
    if (i == j) return Scalar::zero();
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = constants_.find({i, j, k});
    if (it == constants_.end()) return Scalar::zero();
    return flip ? -it->second : it->second;
  }

  bool all_entries_in_field() const {
    for (const auto& [key, c] : constants_)
      if (!c.in_field()) return false;
    return true;
  }

  std::vector<Scalar> bracket_basis(int i, int j) const {
    std::vector<Scalar> out(static_cast<size_t>(dim_));
    if (i == j) return out;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    for (auto it = constants_.lower_bound({i, j, 1}); it != constants_.end(); ++it) {
      const auto& key = it->first;
      if (key[0] != i || key[1] != j) break;
      out[static_cast<size_t>(key[2] - 1)] = flip ? -it->second : it->second;
    }
    return out;
  }

  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
      throw Error("bracket: vector dimension mismatch");
    std::vector<Scalar> out(static_cast<size_t>(dim_));
    for (const auto& [key, c] : constants_) {
      int i = key[0], j = key[1], k = key[2];
      Scalar coef = x[static_cast<size_t>(i - 1)] * y[static_cast<size_t>(j - 1)] -
                    x[static_cast<size_t>(j - 1)] * y[static_cast<size_t>(i - 1)];
      if (!coef.is_zero()) out[static_cast<size_t>(k - 1)] += coef * c;
    }
    return out;
  }

  // Substitute symbolic parameters in the constants.
  LieAlgebra specialized(const std::map<std::string, GaussRational>& assignment) const {
    LieAlgebra g(dim_);
    for (const auto& [key, c] : constants_) {
      Scalar v = c.eval(assignment);
      if (!v.is_zero()) g.constants_[key] = v;
    }
    return g;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.dim_ != b.dim_) return false;
    std::map<std::array<int, 3>, Scalar> keys;
    for (const auto& [k, c] : a.constants_)
      if (b.structure_constant(k[0], k[1], k[2]) != c) return false;
    for (const auto& [k, c] : b.constants_)
      if (a.structure_constant(k[0], k[1], k[2]) != c) return false;
    return true;
  }

  // Both Jacobi routes (basis-triple brackets and d^2 e^k = 0), compared.
  JacobiReport jacobi_check() const;

  Subspace center() const;
  SeriesResult ascending_series() const;
  SeriesResult descending_series() const;
  Subspace derived_subalgebra() const;
  int nilpotency_step() const;

 private:
  void require_field(const char* where) const {
    if (!all_entries_in_field())
      throw RingMismatch(std::string(where) +
                         ": structure constants carry symbolic parameters; specialize first");
  }

  int dim_;
  std::map<std::array<int, 3>, Scalar> constants_;
};

std::vector<Scalar> basis_vector(const LieAlgebra& g, int k);

}  // namespace nilclass
