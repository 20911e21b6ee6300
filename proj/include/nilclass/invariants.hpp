// Isomorphism invariants: Chevalley-Eilenberg Betti numbers, the count of
// functionally independent generalized Casimir operators, the count of
// decomposable d-exact 2-forms, and the combined fingerprint.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilclass/exterior.hpp"
#include "nilclass/lie.hpp"
#include "nilclass/matrix.hpp"

namespace nilclass {

int betti(const LieAlgebra& g, int k);
std::vector<int> betti_all(const LieAlgebra& g);

// The m x m coadjoint matrix C with C[k][i] = sum_j c_{ki}^j x_j over the
// polynomial ring in x1..xm (times any parameters of the constants).
Matrix coadjoint_matrix(const LieAlgebra& g);

// n_I(g) = dim g - generic rank of the coadjoint matrix.
int casimir_count(const LieAlgebra& g, int trials = kRankGenericTrials,
                  std::uint64_t seed = kDefaultSeed);

// Number of indices k with de^k nonzero and decomposable (de^k ^ de^k = 0),
// in the presented basis.
int decomposable_exact_2forms(const LieAlgebra& g);

// Largest size of a subset S of the nonzero de^k spanning a subspace that
// consists of decomposable forms; certified on the coefficient grid
// {-2..2}^S and by pairwise wedge vanishing.
int decomposable_span_dimension(const LieAlgebra& g);

// All k x k minors of a (possibly symbolic) matrix, by increasing row/col
// subsets in lexicographic order.
std::vector<Scalar> order_minors(const Matrix& m, int k);

struct Fingerprint {
  std::vector<int> ascending_type;
  std::vector<int> descending_type;
  int b1 = 0, b2 = 0, b3 = 0;
  int casimir = 0;
  int dim_derived = 0;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.ascending_type == b.ascending_type && a.descending_type == b.descending_type &&
           a.b1 == b.b1 && a.b2 == b.b2 && a.b3 == b.b3 && a.casimir == b.casimir &&
           a.dim_derived == b.dim_derived;
  }
  std::string to_string() const;
};

Fingerprint fingerprint(const LieAlgebra& g);

}  // namespace nilclass
