// The twelve families of 8-dimensional nilpotent Lie algebras with
// 1-dimensional center admitting a complex structure, as executable data:
// presented structure constants (abbreviated notation), parameter domains,
// aliases, and expected ascending types.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilclass/lie.hpp"
#include "nilclass/scalar.hpp"

namespace nilclass {

struct AlgebraSpec {
  std::string name;                       // canonical id: g1..g12
  std::string alias;                      // n1..n8 / m1..m4
  std::vector<std::string> param_names;   // identifiers used in `notation`
  std::string notation;                   // abbreviated structure equations
  std::string domain;                     // human-readable parameter domain
  std::vector<int> ascending_type;        // expected
};

const std::vector<AlgebraSpec>& algebra_catalog();

// Looks up by canonical name or alias ("g4", "n4", "m2", ...).
const AlgebraSpec& algebra_spec(const std::string& id);

// Instantiates the presented structure constants. Parameters are bound by
// name; missing parameters stay symbolic; numeric parameters are checked
// against the domain.
LieAlgebra real_algebra(const std::string& id, const std::map<std::string, Scalar>& params = {});

}  // namespace nilclass
