// The abbreviated notation for real structure equations:
//   "(0^5, 13+15+24, 14-23+25, 16+27+g*34)"
// lists de^k entry by entry; "0^m" stands for m closed covectors, a term
// "c*ij" (two-digit juxtaposition, dim <= 9) or "c*(i,j)" contributes
// c e^i ^ e^j to de^k and c e_k to [e_i, e_j]. Coefficients are scalar
// expressions; unbound identifiers stay symbolic.
#pragma once

#include <string>
#include <vector>

#include "nilclass/expr.hpp"
#include "nilclass/lie.hpp"

namespace nilclass {

struct RealTerm {
  Scalar coeff;
  int i = 0;
  int j = 0;
};

struct RealEntry {
  int zeros = 0;                // > 0: a run of closed covectors
  std::vector<RealTerm> terms;  // otherwise: the sum for one covector
};

struct RealNotationAST {
  std::vector<RealEntry> entries;

  int dim() const {
    int d = 0;
    for (const auto& e : entries) d += e.zeros > 0 ? e.zeros : 1;
    return d;
  }

  LieAlgebra to_lie() const;
  std::string print() const;
};

RealNotationAST parse_real(const std::string& text, const Bindings& bindings = {});

// Canonical AST of an algebra: leading zero run compressed, terms sorted by
// (i, j). parse(print(g)) round-trips.
RealNotationAST notation_of(const LieAlgebra& g);

inline LieAlgebra parse_real_algebra(const std::string& text, const Bindings& bindings = {}) {
  return parse_real(text, bindings).to_lie();
}

}  // namespace nilclass
