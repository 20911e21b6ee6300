// The two parametrized families of strongly non-nilpotent complex
// structure equations in real dimension 8, their parameter domains, and
// the correspondence between parameter constraints and the ascending type
// of the underlying algebra.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilclass/complex_eqs.hpp"
#include "nilclass/scalar.hpp"

namespace nilclass {

struct FamilyIParams {
  int eps = 0;    // 0 or 1
  int nu = 0;     // 0 or 1
  int delta = 1;  // +1 or -1
  Scalar a;       // rational >= 0 or symbolic
  Scalar b;       // rational or symbolic

  void check() const;  // throws InvalidParams naming the violated clause
};

struct FamilyIIParams {
  int eps = 0;
  int mu = 0;
  int nu = 0;
  Scalar a;
  Scalar b;

  void check() const;
};

// Family I:
//   dw1 = 0
//   dw2 = eps w11~
//   dw3 = w14 + w14~ + a w21~ + i delta eps b w12~
//   dw4 = i nu w11~ + b w22~ + i delta (w13~ - w31~)
ComplexStructEqs family_I(const FamilyIParams& p);

// Family II:
//   dw1 = 0
//   dw2 = w14 + w14~
//   dw3 = a w11~ + eps (w12 + w12~ - w21~) + i mu (w24 + w24~)
//   dw4 = i nu w11~ - mu w22~ + i b (w12~ - w21~) + i (w13~ - w31~)
ComplexStructEqs family_II(const FamilyIIParams& p);

// Variants without domain checks, for expressing transformed parameter
// tuples (e.g. a < 0) during equivalence tests.
ComplexStructEqs family_I_raw(int eps, int nu, int delta, const Scalar& a, const Scalar& b);
ComplexStructEqs family_II_raw(int eps, int mu, int nu, const Scalar& a, const Scalar& b);

// Predicted ascending type from the parameter constraints (requires
// numeric a, b when the split depends on them).
std::vector<int> predicted_ascending_type_I(const FamilyIParams& p);
std::vector<int> predicted_ascending_type_II(const FamilyIIParams& p);

// Identifier of the row of the classification table containing the
// canonical tuple, when the parameters match one; e.g. "(1,4,8)".
std::optional<std::string> table1_row(const FamilyIParams& p);
std::optional<std::string> table2_row(const FamilyIIParams& p);

}  // namespace nilclass
