// The complex-to-real dictionaries: for each classified parameter tuple of
// Family I / Family II, the explicit real basis expressing the (1,0)-forms
// and the real algebra it lands on. Radical-valued rows live in the
// Q(sqrt(2), sqrt(3)) tower and require parameter values keeping every
// radicand a square times 1, 2, 3 or 6.
#pragma once

#include <map>
#include <string>

#include "nilclass/families.hpp"
#include "nilclass/realify.hpp"

namespace nilclass {

struct AppendixTarget {
  std::string algebra;                    // catalog id (g1..g12)
  std::map<std::string, Scalar> params;   // bound catalog parameters
};

struct AppendixResult {
  std::string row;  // identifier of the matching dictionary row
  RealificationMap map;
  AppendixTarget target;
};

// Throws InvalidParams when no dictionary row covers the tuple, and Error
// when a radicand falls outside the tower at these parameter values.
AppendixResult appendix_map_I(const FamilyIParams& p);
AppendixResult appendix_map_II(const FamilyIIParams& p);

}  // namespace nilclass
