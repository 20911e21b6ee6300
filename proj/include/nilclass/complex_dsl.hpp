// Mini-language for complex structure equations:
//
//   dw1 = 0
//   dw3 = w14 + w1~4 + a*w2~1 + i*d*e*b*w1~2
//
// One equation per line (or ';'-separated). A monomial wab is w^a ^ w^b,
// w a~b is w^a ^ conj(w^b); the (0,2) form w~a~b is rejected with
// IntegrabilityError. Coefficients are scalar expressions; 'i' is the
// imaginary unit; unbound identifiers stay symbolic.
#pragma once

#include <string>
#include <vector>

#include "nilclass/complex_eqs.hpp"
#include "nilclass/expr.hpp"

namespace nilclass {

struct ComplexTerm {
  Scalar coeff;
  int a = 0;        // first index (1..n)
  bool a_bar = false;
  int b = 0;
  bool b_bar = false;
};

struct ComplexEqAST {
  int n = 0;
  std::vector<std::vector<ComplexTerm>> rhs;  // per generator

  ComplexStructEqs to_eqs() const;
  std::string print() const;
};

ComplexEqAST parse_complex(const std::string& text, const Bindings& bindings = {});

inline ComplexStructEqs parse_complex_eqs(const std::string& text, const Bindings& bindings = {}) {
  return parse_complex(text, bindings).to_eqs();
}

}  // namespace nilclass
