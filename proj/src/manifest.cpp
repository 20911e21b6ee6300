#include "nilclass/manifest.hpp"

#include <fstream>

#include "nilclass/errors.hpp"
#include "nilclass/expr.hpp"
#include "nilclass_manifest_data.hpp"

namespace nilclass {

Manifest Manifest::builtin() {
  Manifest m;
  m.raw = nlohmann::ordered_json::parse(kBuiltinManifestJson);
  return m;
}

Manifest Manifest::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("manifest: cannot open '" + path + "'");
  Manifest m;
  try {
    m.raw = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("manifest: " + std::string(e.what()));
  }
  return m;
}

std::map<std::string, Scalar> Manifest::sample_params(const nlohmann::ordered_json& obj) {
  std::map<std::string, Scalar> out;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it.key() == "delta" || it.key() == "eps" || it.key() == "mu" || it.key() == "nu") continue;
    if (it.value().is_number_integer()) {
      out[it.key()] = Scalar(Rational(it.value().get<long>()));
    } else {
      out[it.key()] = parse_scalar_expr(it.value().get<std::string>());
    }
  }
  return out;
}

}  // namespace nilclass
