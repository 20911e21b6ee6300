// Explicit linear maps claimed to intertwine two structures, verified by
// recomputing d o F - F o d exactly (symbolically where parameters remain).
// A certificate is data and is never trusted: the library ships the maps
// from the classification proofs, and the corruption harness checks that
// single-sign mutants fail.
#pragma once

#include <string>
#include <vector>

#include "nilclass/complex_eqs.hpp"
#include "nilclass/lie.hpp"
#include "nilclass/matrix.hpp"
#include "nilclass/realify.hpp"

namespace nilclass {

struct Certificate {
  enum class Kind { RealIso, ComplexEquivalence, Realification };

  std::string name;
  Kind kind = Kind::RealIso;

  // RealIso: rows of `lambda` express the source basis covectors in the
  // target basis; verified as d_target(F e'^i) = F(d_source e'^i).
  LieAlgebra source_algebra{0};
  LieAlgebra target_algebra{0};

  // ComplexEquivalence: same with (1,0)-bases.
  ComplexStructEqs source_eqs{0};
  ComplexStructEqs target_eqs{0};

  Matrix lambda;

  // Realification: complex equations + real covector map + claimed real
  // algebra.
  RealificationMap map;
};

struct CertResidual {
  int k;             // which source generator fails
  std::string slot;  // offending monomial
  Scalar value;
};

struct CertReport {
  bool pass = false;
  std::vector<CertResidual> residuals;
};

CertReport verify_certificate(const Certificate& cert);

// All certificates extracted from the classification proofs.
const std::vector<Certificate>& certificate_library();

// Sign-flip mutants (one per library certificate) for the corruption
// harness; each must fail verification.
std::vector<Certificate> corrupted_certificates();

}  // namespace nilclass
