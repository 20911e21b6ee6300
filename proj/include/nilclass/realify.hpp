// From complex structure equations to real Lie algebras and back: the
// realification map w^k = sum_i (alpha_{k,i} + i beta_{k,i}) e^i, the
// induced almost-complex endomorphism, the Nijenhuis tensor and the
// ascending J-compatible series with the SnN / nilpotent / weakly
// non-nilpotent trichotomy.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilclass/complex_eqs.hpp"
#include "nilclass/lie.hpp"
#include "nilclass/matrix.hpp"

namespace nilclass {

struct RealificationMap {
  int n = 0;      // complex dimension; ambient real dimension is 2n
  Matrix alpha;   // n x 2n, real parts of the covector coordinates
  Matrix beta;    // n x 2n, imaginary parts

  static RealificationMap standard(int n);

  // Row k of the complex covector matrix: alpha_k + i beta_k.
  std::vector<Scalar> complex_row(int k) const;

  std::string to_string() const;
};

struct Realified {
  LieAlgebra algebra;
  Matrix j;  // 2n x 2n, acts on coordinate columns
};

// Constructive realification; requires the 2n real covectors independent
// over a field (numeric parameter values). For symbolic rows use
// realify_verify against the claimed target.
Realified realify(const ComplexStructEqs& eqs, const RealificationMap& map);
inline Realified realify(const ComplexStructEqs& eqs) {
  return realify(eqs, RealificationMap::standard(eqs.n()));
}

struct RealifyResidual {
  int k;              // which dw^k fails
  std::string slot;   // offending e-wedge monomial
  Scalar value;
};

// Verifies d_target(F(w^k)) = F(dw^k) for the map F given by the
// realification covectors; symbolic parameters allowed throughout.
std::vector<RealifyResidual> realify_verify(const ComplexStructEqs& eqs,
                                            const RealificationMap& map, const LieAlgebra& target);

// Nijenhuis tensor values N(e_i, e_j) for i < j; all zero iff integrable.
struct NijenhuisEntry {
  int i, j;
  std::vector<Scalar> value;
};
std::vector<NijenhuisEntry> nijenhuis(const LieAlgebra& g, const Matrix& j);
bool nijenhuis_vanishes(const LieAlgebra& g, const Matrix& j);

// Ascending J-compatible series a_k(J).
SeriesResult ascending_j_series(const LieAlgebra& g, const Matrix& j);

enum class JType { StronglyNonNilpotent, Nilpotent, WeaklyNonNilpotent };

const char* jtype_name(JType t);

JType classify_j_type(const LieAlgebra& g, const Matrix& j);

}  // namespace nilclass
