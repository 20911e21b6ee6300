// Dense matrices over Scalar with exact linear algebra. Echelonization is
// deterministic: columns are scanned left to right, the pivot is the first
// remaining row with a nonzero entry, pivots are normalized to 1 and
// eliminated above and below (reduced row echelon form). Kernel bases and
// solutions are read off that form, so reports are reproducible.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nilclass/errors.hpp"
#include "nilclass/scalar.hpp"

namespace nilclass {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("Matrix: dimension mismatch in product");
    Matrix p(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          if (b(k, j).is_zero()) continue;
          p(i, j) += a(i, k) * b(k, j);
        }
      }
    return p;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("Matrix: dimension mismatch");
    Matrix s(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = a.data_[i] + b.data_[i];
    return s;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("Matrix: dimension mismatch");
    Matrix s(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = a.data_[i] - b.data_[i];
    return s;
  }
  Matrix scaled(const Scalar& c) const {
    Matrix s(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] * c;
    return s;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.data_.size(); ++i)
      if (a.data_[i] != b.data_[i]) return false;
    return true;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("Matrix: vector dimension mismatch");
    std::vector<Scalar> out(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[static_cast<size_t>(j)].is_zero())
          out[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
    return out;
  }

  bool has_symbolic_entries() const {
    for (const auto& s : data_)
      if (s.kind() == RingKind::Poly) return true;
    return false;
  }

  void require_field_entries(const char* where) const {
    for (const auto& s : data_)
      if (!s.in_field())
        throw RingMismatch(std::string(where) + ": entries must lie in a field; "
                           "specialize polynomial parameters first");
  }

  std::set<std::string> variables() const {
    std::set<std::string> vars;
    for (const auto& s : data_)
      if (s.kind() == RingKind::Poly)
        for (const auto& v : s.poly().variables()) vars.insert(v);
    return vars;
  }

  Matrix substituted(const std::map<std::string, GaussRational>& assignment) const {
    Matrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].eval(assignment);
    return m;
  }

  std::string to_string() const {
    std::string s;
    for (int r = 0; r < rows_; ++r) {
      s += "[";
      for (int c = 0; c < cols_; ++c) {
        if (c) s += ", ";
        s += (*this)(r, c).to_string();
      }
      s += "]\n";
    }
    return s;
  }

 private:
  int rows_, cols_;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  Matrix mat;               // reduced row echelon form
  std::vector<int> pivots;  // pivot column per pivot row
  int rank() const { return static_cast<int>(pivots.size()); }
};

inline EchelonForm echelonize(Matrix m) {
  m.require_field_entries("echelonize");
  EchelonForm ef{std::move(m), {}};
  Matrix& a = ef.mat;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    Scalar inv = a(r, c).inverse();
    for (int j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    ef.pivots.push_back(c);
    ++r;
  }
  return ef;
}

inline int rank_over_field(const Matrix& m) { return echelonize(m).rank(); }

// Basis of the right kernel, one vector per free column, in increasing
// free-column order.
inline std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  EchelonForm ef = echelonize(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : ef.pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(m.cols()));
    v[static_cast<size_t>(f)] = Scalar::one();
    for (size_t pr = 0; pr < ef.pivots.size(); ++pr)
      v[static_cast<size_t>(ef.pivots[pr])] = -ef.mat(static_cast<int>(pr), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Exact solution of M x = b (free variables set to zero); nullopt when the
// system is inconsistent.
inline std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error("solve: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[static_cast<size_t>(r)];
  }
  EchelonForm ef = echelonize(aug);
  for (int c : ef.pivots)
    if (c == m.cols()) return std::nullopt;
  std::vector<Scalar> x(static_cast<size_t>(m.cols()));
  for (size_t pr = 0; pr < ef.pivots.size(); ++pr)
    x[static_cast<size_t>(ef.pivots[pr])] = ef.mat(static_cast<int>(pr), m.cols());
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse: matrix not square");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one();
  }
  EchelonForm ef = echelonize(aug);
  if (ef.rank() < n || ef.pivots[static_cast<size_t>(n - 1)] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = ef.mat(r, n + c);
  return inv;
}

// Determinant over a field (Gaussian elimination with pivot bookkeeping).
inline Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
  Matrix a = m;
  a.require_field_entries("determinant");
  Scalar det = Scalar::one();
  int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar::zero();
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
      det = -det;
    }
    det = det * a(c, c);
    Scalar inv = a(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (int j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
    }
  }
  return det;
}

// Determinant of a (possibly symbolic) square matrix by cofactor expansion.
// Fine for the 6x6..8x8 symbolic minors that occur here.
inline Scalar determinant_symbolic(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
  int n = m.rows();
  if (n == 0) return Scalar::one();
  if (n == 1) return m(0, 0);
  Scalar det;
  for (int r = 0; r < n; ++r) {
    if (m(r, 0).is_zero()) continue;
    Matrix sub(n - 1, n - 1);
    int sr = 0;
    for (int i = 0; i < n; ++i) {
      if (i == r) continue;
      for (int j = 1; j < n; ++j) sub(sr, j - 1) = m(i, j);
      ++sr;
    }
    Scalar term = m(r, 0) * determinant_symbolic(sub);
    det = (r % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// Deterministic sample in {-97,...,97} \ {0}; hand-rolled so results are
// bit-for-bit reproducible across platforms.
inline int sample_nonzero_coordinate(std::mt19937_64& rng) {
  int r = static_cast<int>(rng() % 194u);
  int v = r - 97;
  if (v >= 0) v += 1;
  return v;
}

constexpr int kRankGenericTrials = 5;
constexpr std::uint64_t kDefaultSeed = 1729;

// Maximum rank over `trials` random rational specializations of the
// polynomial entries: a lower bound for the rank over the fraction field
// that is exact with overwhelming probability (Schwartz-Zippel; all minors
// here have degree <= 8 while coordinates range over 194 values).
inline int rank_generic(const Matrix& m, int trials = kRankGenericTrials,
                        std::uint64_t seed = kDefaultSeed) {
  if (trials < 1) throw Error("rank_generic: trials must be >= 1");
  if (!m.has_symbolic_entries()) return rank_over_field(m);
  std::set<std::string> vars = m.variables();
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    // Complex parameter pairs (V, V~) receive conjugate values; real
    // (lower-case) parameters receive real values.
    std::map<std::string, GaussRational> assignment;
    for (const auto& v : vars) {
      if (assignment.count(v)) continue;
      bool complex_param = !v.empty() && v[0] >= 'A' && v[0] <= 'Z';
      if (!complex_param) {
        assignment[v] = GaussRational(Rational(sample_nonzero_coordinate(rng)));
        continue;
      }
      GaussRational z(Rational(sample_nonzero_coordinate(rng)),
                      Rational(sample_nonzero_coordinate(rng)));
      std::string base = v.back() == '~' ? v.substr(0, v.size() - 1) : v;
      assignment[base] = z;
      assignment[base + "~"] = z.conj();
    }
    best = std::max(best, rank_over_field(m.substituted(assignment)));
  }
  return best;
}

}  // namespace nilclass
