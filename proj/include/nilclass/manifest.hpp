// The sampling manifest: per-table parameter sample points with exclusion
// rationale, kept as data so the case split of the classification tables
// stays auditable. A copy of data/manifest.json is compiled in as the
// default; --samples overrides it.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilclass/scalar.hpp"

namespace nilclass {

struct Manifest {
  nlohmann::ordered_json raw;

  static Manifest builtin();
  static Manifest load(const std::string& path);

  // Parses a JSON object of {name: "scalar expression"} into bindings.
  static std::map<std::string, Scalar> sample_params(const nlohmann::ordered_json& obj);
};

}  // namespace nilclass
