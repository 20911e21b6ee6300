#include "nilclass/algebras.hpp"

#include "nilclass/errors.hpp"
#include "nilclass/notation.hpp"

namespace nilclass {

const std::vector<AlgebraSpec>& algebra_catalog() {
  static const std::vector<AlgebraSpec> catalog = {
      {"g1", "n1", {"g"}, "(0^5, 13+15+24, 14-23+25, 16+27+g*34)", "g in {0,1}", {1, 3, 8}},
      {"g2", "n2", {"al"}, "(0^4, 12, 13+15+24, 14-23+25, 16+27+al*34)", "al in R", {1, 3, 6, 8}},
      {"g3", "n3", {"g"}, "(0^4, 12, 13+g*15+25, 15+24+g*25, 16+27)", "g in {0,1}", {1, 3, 6, 8}},
      {"g4",
       "n4",
       {"h", "t"},
       "(0^4, 12, 15+(h+1)*24, (h-1)*14-23+(t-1)*25, 16+27+34-2*45)",
       "(h,t) in R* x R>0 or R>0 x {0}",
       {1, 3, 6, 8}},
      {"g5", "n5", {}, "(0^4, 2*12, 14-23, 13+24, 16+27+35)", "", {1, 4, 8}},
      {"g6", "n6", {}, "(0^4, 2*12, 14+15-23, 13+24+25, 16+27+35)", "", {1, 4, 6, 8}},
      {"g7", "n7", {}, "(0^5, 15, 25, 16+27+34)", "", {1, 5, 8}},
      {"g8", "n8", {}, "(0^4, 12, 15, 25, 16+27+34)", "", {1, 5, 6, 8}},
      {"g9", "m1", {"g"}, "(0^3, 13, 23, 35, g*12-34, 16+27+45)", "g in {0,1}", {1, 3, 5, 8}},
      {"g10", "m2", {"g"}, "(0^3, 13, 23, 14+25, 15+24, 16+g*25+27)", "g in {0,1}", {1, 3, 5, 8}},
      {"g11",
       "m3",
       {"al", "be"},
       "(0^3, 13, 23, 14+25-35, al*12+15+24+34, 16+27-45-2*be*25-be*35)",
       "(al,be) = (0,0), (1,0) or (al>=0, 1)",
       {1, 3, 5, 8}},
      {"g12",
       "m4",
       {"g"},
       "(0^2, 12, 13, 23, 14+25, 15+24, 16+g*25+27)",
       "g in {0,1}",
       {1, 3, 5, 6, 8}},
  };
  return catalog;
}

const AlgebraSpec& algebra_spec(const std::string& id) {
  for (const auto& spec : algebra_catalog())
    if (spec.name == id || spec.alias == id) return spec;
  throw InvalidParams("unknown algebra id '" + id + "'");
}

namespace {

bool numeric_real(const Scalar& s) { return s.kind() != RingKind::Poly && s.is_real(); }

void check_domain(const AlgebraSpec& spec, const std::map<std::string, Scalar>& params) {
  auto get = [&](const std::string& name) -> const Scalar* {
    auto it = params.find(name);
    return it == params.end() ? nullptr : &it->second;
  };
  auto is01 = [](const Scalar& s) { return s.is_zero() || s == Scalar(1); };

  if (spec.name == "g1" || spec.name == "g3" || spec.name == "g9" || spec.name == "g10" ||
      spec.name == "g12") {
    const Scalar* g = get("g");
    if (g && numeric_real(*g) && !is01(*g))
      throw InvalidParams(spec.name + ": g in {0,1}");
  } else if (spec.name == "g4") {
    const Scalar* h = get("h");
    const Scalar* t = get("t");
    if (h && t && numeric_real(*h) && numeric_real(*t)) {
      bool ok = (!h->is_zero() && t->sign() > 0) || (h->sign() > 0 && t->is_zero());
      if (!ok)
        throw InvalidParams("g4: (h,t) in R* x R>0 or R>0 x {0}; n4^{h,0} and "
                            "n4^{-h,0} are isomorphic");
    }
  } else if (spec.name == "g11") {
    const Scalar* al = get("al");
    const Scalar* be = get("be");
    if (al && be && numeric_real(*al) && numeric_real(*be)) {
      bool ok = (al->is_zero() && be->is_zero()) || (*al == Scalar(1) && be->is_zero()) ||
                (al->sign() >= 0 && *be == Scalar(1));
      if (!ok) throw InvalidParams("g11: (al,be) = (0,0), (1,0) or (al>=0, 1)");
    }
  }
  for (const auto& [name, value] : params) {
    (void)value;
    bool known = false;
    for (const auto& p : spec.param_names) known = known || p == name;
    if (!known) throw InvalidParams(spec.name + ": unknown parameter '" + name + "'");
  }
}

}  // namespace

LieAlgebra real_algebra(const std::string& id, const std::map<std::string, Scalar>& params) {
  const AlgebraSpec& spec = algebra_spec(id);
  check_domain(spec, params);
  Bindings bindings;
  for (const auto& [name, value] : params) bindings[name] = value;
  return parse_real_algebra(spec.notation, bindings);
}

}  // namespace nilclass
