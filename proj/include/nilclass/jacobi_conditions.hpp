// The generic structure equations covering every strongly non-nilpotent
// complex structure in real dimension 8 (complex coefficients A..P and
// real s, t), together with the polynomial Jacobi system they satisfy and
// the three center non-vanishing predicates.
#pragma once

#include <string>
#include <vector>

#include "nilclass/complex_eqs.hpp"
#include "nilclass/poly.hpp"

namespace nilclass {

// dw1 = 0
// dw2 = A w11~ - B (w14 - w14~)
// dw3 = F w11~ + K w22~ + C w12 + D w12~ + G w21~ - E (w14 - w14~)
//       - H (w24 - w24~)
// dw4 = L w11~ + i s w22~ + i t w33~ + (M w12~ - M~ w21~)
//       + (N w13~ - N~ w31~) + (P w23~ - P~ w32~)
ComplexStructEqs generic_equations();

struct NamedCondition {
  std::string name;          // e.g. "AH - BG + ~B D = 0"
  std::vector<Poly> polys;   // the atomic polynomials of the condition
};

// The twelve conditions equivalent to d^2 w^k = 0 on generic_equations(),
// hand-entered (real-part conditions appear as X + X~).
const std::vector<NamedCondition>& jacobi_conditions_general();

// Predicate tuples that must not vanish for the center to be a line:
// (B,E,H), (N,P,t), (C,D,G,H,K,M,P,s).
struct CenterPredicate {
  std::string name;
  std::vector<std::string> coefficients;
};
const std::vector<CenterPredicate>& center_conditions();

// Matches the residual coefficients of d^2 on the generic equations against
// the hand-entered conditions: every residual must equal one of the atomic
// polynomials up to a scalar factor and conjugation, and every atomic
// polynomial must appear. Returns a human-readable report of mismatches
// (empty = match).
std::vector<std::string> match_jacobi_residuals();

}  // namespace nilclass
