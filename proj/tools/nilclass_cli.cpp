// nilclass: exact verification of the classification of 8-dimensional
// nilpotent Lie algebras with 1-dimensional center and their complex
// structures.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 input error.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "nilclass/algebras.hpp"
#include "nilclass/appendix.hpp"
#include "nilclass/certificates.hpp"
#include "nilclass/complex_dsl.hpp"
#include "nilclass/invariants.hpp"
#include "nilclass/manifest.hpp"
#include "nilclass/notation.hpp"
#include "nilclass/realify.hpp"
#include "nilclass/tables.hpp"

using nlohmann::ordered_json;
using namespace nilclass;

namespace {

struct Options {
  std::string params;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::string samples;
};

Bindings parse_params(const std::string& text) {
  Bindings out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--params expects k=v pairs", 1, 1);
    out[item.substr(0, eq)] = parse_scalar_expr(item.substr(eq + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool looks_like_complex(const std::string& text) { return text.find("dw") != std::string::npos; }

LieAlgebra algebra_from_arg(const std::string& arg, const Bindings& bindings) {
  if (!arg.empty() && arg[0] == '(') return parse_real_algebra(arg, bindings);
  std::map<std::string, Scalar> params(bindings.begin(), bindings.end());
  return real_algebra(arg, params);
}

Manifest manifest_from(const Options& opt) {
  return opt.samples.empty() ? Manifest::builtin() : Manifest::load(opt.samples);
}

void emit(const Options& opt, const ordered_json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string tuple_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

ordered_json json_tuple(const std::vector<int>& v) {
  ordered_json a = ordered_json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Scalar json_scalar(const ordered_json& v) {
  if (v.is_number_integer()) return Scalar(Rational(v.get<long>()));
  return parse_scalar_expr(v.get<std::string>());
}

// ---- commands --------------------------------------------------------

int cmd_check(const Options& opt, const std::string& input) {
  Bindings bindings = parse_params(opt.params);
  ordered_json j;
  std::string text;
  bool pass = false;
  if (looks_like_complex(input)) {
    ComplexStructEqs eqs = parse_complex_eqs(input, bindings);
    pass = eqs.validate();
    j["command"] = "check";
    j["kind"] = "complex";
    j["pass"] = pass;
    j["residuals"] = ordered_json::array();
    text = pass ? "d^2 = 0: pass\n" : "d^2 = 0: FAIL\n";
    if (!pass) {
      std::vector<ExtForm> d2 = eqs.d_squared();
      std::vector<std::string> names;
      for (int i = 1; i <= eqs.n(); ++i) names.push_back("w" + std::to_string(i));
      for (int i = 1; i <= eqs.n(); ++i) names.push_back("w~" + std::to_string(i));
      for (int k = 1; k <= eqs.n(); ++k)
        if (!d2[static_cast<size_t>(k - 1)].is_zero()) {
          std::string r = "d^2 w" + std::to_string(k) + " = " +
                          d2[static_cast<size_t>(k - 1)].to_string(names);
          j["residuals"].push_back(r);
          text += "  " + r + "\n";
        }
    }
  } else {
    LieAlgebra g = algebra_from_arg(input, bindings);
    JacobiReport rep = g.jacobi_check();
    pass = rep.pass;
    j["command"] = "check";
    j["kind"] = "real";
    j["pass"] = pass;
    j["routes_agree"] = rep.routes_agree;
    j["residuals"] = ordered_json::array();
    text = pass ? "jacobi: pass\n" : "jacobi: FAIL\n";
    for (const auto& r : rep.d2_residuals) {
      j["residuals"].push_back(r);
      text += "  " + r + "\n";
    }
  }
  emit(opt, j, text);
  return pass ? 0 : 1;
}

int cmd_series(const Options& opt, const std::string& input) {
  LieAlgebra g = algebra_from_arg(input, parse_params(opt.params));
  SeriesResult asc = g.ascending_series();
  SeriesResult desc = g.descending_series();
  ordered_json j;
  j["command"] = "series";
  j["ascending"] = json_tuple(asc.type());
  j["descending"] = json_tuple(desc.type());
  j["nilpotent"] = asc.nilpotent;
  std::string text = "ascending type:  " + tuple_str(asc.type()) + "\n" +
                     "descending type: " + tuple_str(desc.type()) + "\n" +
                     (asc.nilpotent ? "nilpotent\n" : "NOT nilpotent\n");
  emit(opt, j, text);
  return asc.nilpotent ? 0 : 1;
}

int cmd_betti(const Options& opt, const std::string& input) {
  LieAlgebra g = algebra_from_arg(input, parse_params(opt.params));
  std::vector<int> b = betti_all(g);
  ordered_json j;
  j["command"] = "betti";
  j["betti"] = json_tuple(b);
  emit(opt, j, "betti numbers: " + tuple_str(b) + "\n");
  return 0;
}

int cmd_casimir(const Options& opt, const std::string& input) {
  LieAlgebra g = algebra_from_arg(input, parse_params(opt.params));
  int n = casimir_count(g, kRankGenericTrials, opt.seed);
  ordered_json j;
  j["command"] = "casimir";
  j["n_I"] = n;
  j["seed"] = opt.seed;
  emit(opt, j, std::to_string(n) + "\n");
  return 0;
}

int cmd_fingerprint(const Options& opt, const std::string& input) {
  LieAlgebra g = algebra_from_arg(input, parse_params(opt.params));
  Fingerprint fp = fingerprint(g);
  int dec = decomposable_exact_2forms(g);
  int dec_span = decomposable_span_dimension(g);
  ordered_json j;
  j["command"] = "fingerprint";
  j["ascending"] = json_tuple(fp.ascending_type);
  j["descending"] = json_tuple(fp.descending_type);
  j["b1"] = fp.b1;
  j["b2"] = fp.b2;
  j["b3"] = fp.b3;
  j["n_I"] = fp.casimir;
  j["dim_derived"] = fp.dim_derived;
  j["decomposable_exact_2forms"] = dec;
  j["decomposable_span_dim"] = dec_span;
  emit(opt, j,
       fp.to_string() + ", decomposable d-exact 2-forms " + std::to_string(dec) +
           " (largest all-decomposable span " + std::to_string(dec_span) + ")\n");
  return 0;
}

int cmd_jtype(const Options& opt, const std::string& input) {
  ComplexStructEqs eqs = parse_complex_eqs(input, parse_params(opt.params));
  if (!eqs.validate()) {
    std::cerr << "equations fail d^2 = 0\n";
    return 1;
  }
  Realified real = realify(eqs);
  JType t = classify_j_type(real.algebra, real.j);
  SeriesResult a = ascending_j_series(real.algebra, real.j);
  ordered_json j;
  j["command"] = "jtype";
  j["type"] = jtype_name(t);
  j["a_series"] = json_tuple(a.type());
  emit(opt, j, std::string(jtype_name(t)) + ", a_k(J) dims " + tuple_str(a.type()) + "\n");
  return 0;
}

int cmd_realify(const Options& opt, const std::string& input) {
  ComplexStructEqs eqs = parse_complex_eqs(input, parse_params(opt.params));
  if (!eqs.validate()) {
    std::cerr << "equations fail d^2 = 0\n";
    return 1;
  }
  Realified real = realify(eqs);
  std::string notation = notation_of(real.algebra).print();
  ordered_json j;
  j["command"] = "realify";
  j["algebra"] = notation;
  j["jacobi"] = real.algebra.jacobi_check().pass;
  ordered_json jm = ordered_json::array();
  for (int r = 0; r < real.j.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < real.j.cols(); ++c) row.push_back(real.j(r, c).to_string());
    jm.push_back(row);
  }
  j["J"] = jm;
  emit(opt, j, notation + "\n");
  return 0;
}

Matrix matrix_from_json(const ordered_json& rows, const Bindings& bindings) {
  int n = static_cast<int>(rows.size());
  Matrix m(n, static_cast<int>(rows.at(0).size()));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < m.cols(); ++c)
      m(r, c) = parse_scalar_expr(rows.at(r).at(c).get<std::string>(), bindings);
  return m;
}

Certificate certificate_from_json(const ordered_json& j) {
  Certificate cert;
  cert.name = j.value("name", "unnamed");
  std::string kind = j.at("kind").get<std::string>();
  Bindings bindings;
  if (j.contains("params"))
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
      bindings[it.key()] = parse_scalar_expr(it.value().get<std::string>());
  auto algebra_of = [&](const ordered_json& side) {
    return parse_real_algebra(side.at("notation").get<std::string>(), bindings);
  };
  auto eqs_of = [&](const ordered_json& side) {
    return parse_complex_eqs(side.at("equations").get<std::string>(), bindings);
  };
  if (kind == "real-iso") {
    cert.kind = Certificate::Kind::RealIso;
    cert.source_algebra = algebra_of(j.at("source"));
    cert.target_algebra = algebra_of(j.at("target"));
    cert.lambda = matrix_from_json(j.at("matrix"), bindings);
  } else if (kind == "complex-equivalence") {
    cert.kind = Certificate::Kind::ComplexEquivalence;
    cert.source_eqs = eqs_of(j.at("source"));
    cert.target_eqs = eqs_of(j.at("target"));
    cert.lambda = matrix_from_json(j.at("matrix"), bindings);
  } else if (kind == "realification") {
    cert.kind = Certificate::Kind::Realification;
    cert.source_eqs = eqs_of(j.at("source"));
    cert.target_algebra = algebra_of(j.at("target"));
    const ordered_json& rows = j.at("map");
    RealificationMap map;
    map.n = cert.source_eqs.n();
    map.alpha = Matrix(map.n, 2 * map.n);
    map.beta = Matrix(map.n, 2 * map.n);
    for (int k = 0; k < map.n; ++k)
      for (int c = 0; c < 2 * map.n; ++c) {
        Scalar v = parse_scalar_expr(rows.at(k).at(c).get<std::string>(), bindings);
        map.alpha(k, c) = v.re();
        map.beta(k, c) = v.im();
      }
    cert.map = map;
  } else {
    throw InvalidParams("certificate kind must be real-iso, complex-equivalence or realification");
  }
  return cert;
}

int report_certificates(const Options& opt, const std::vector<Certificate>& certs) {
  ordered_json j = ordered_json::array();
  std::string text;
  bool all = true;
  for (const Certificate& cert : certs) {
    CertReport rep = verify_certificate(cert);
    all = all && rep.pass;
    ordered_json jc;
    jc["name"] = cert.name;
    jc["pass"] = rep.pass;
    jc["residuals"] = ordered_json::array();
    text += std::string(rep.pass ? "PASS " : "FAIL ") + cert.name + "\n";
    for (const auto& r : rep.residuals) {
      ordered_json jr;
      jr["equation"] = r.k;
      jr["slot"] = r.slot;
      jr["value"] = r.value.to_string();
      jc["residuals"].push_back(jr);
      text += "  residual in equation " + std::to_string(r.k) + " at " + r.slot + ": " +
              r.value.to_string() + "\n";
    }
    j.push_back(jc);
  }
  emit(opt, j, text);
  return all ? 0 : 1;
}

int cmd_certify(const Options& opt, const std::string& path) {
  if (path == "library") return report_certificates(opt, certificate_library());
  if (path == "library-corrupted") return report_certificates(opt, corrupted_certificates());
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot open certificate file '" + path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, 1);
  }
  std::vector<Certificate> certs;
  if (j.is_array())
    for (const auto& item : j) certs.push_back(certificate_from_json(item));
  else
    certs.push_back(certificate_from_json(j));
  return report_certificates(opt, certs);
}

int cmd_tables(const Options& opt, std::vector<std::string> ids) {
  Manifest manifest = manifest_from(opt);
  if (ids.empty()) ids = table_ids();
  ordered_json j = ordered_json::array();
  std::string text;
  bool all = true;
  for (const std::string& id : ids) {
    TableReport rep = reproduce_table(id, manifest, opt.seed);
    all = all && rep.pass;
    j.push_back(rep.to_json());
    text += rep.to_text();
  }
  emit(opt, j, text);
  return all ? 0 : 1;
}

int cmd_catalog(const Options& opt) {
  ordered_json j;
  j["catalog"] =
      "nilpotent Lie algebras of dimension 8 with 1-dimensional center admitting a complex "
      "structure";
  j["version"] = 1;
  j["algebras"] = ordered_json::array();
  for (const auto& spec : algebra_catalog()) {
    ordered_json ja;
    ja["name"] = spec.name;
    ja["alias"] = spec.alias;
    ja["notation"] = spec.notation;
    ja["parameters"] = ordered_json::array();
    for (const auto& p : spec.param_names) ja["parameters"].push_back(p);
    ja["domain"] = spec.domain;
    ja["ascending_type"] = json_tuple(spec.ascending_type);
    j["algebras"].push_back(ja);
  }
  // dictionary rows at the manifest sample points, maps as scalar strings
  Manifest manifest = manifest_from(opt);
  j["dictionary"] = ordered_json::array();
  auto dump_map = [](const RealificationMap& m) {
    ordered_json rows = ordered_json::array();
    for (int k = 1; k <= m.n; ++k) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < 2 * m.n; ++c)
        row.push_back((m.alpha(k - 1, c) + Scalar::i() * m.beta(k - 1, c)).to_string());
      rows.push_back(row);
    }
    return rows;
  };
  auto target_json = [](const AppendixResult& res) {
    ordered_json tp = ordered_json::object();
    for (const auto& [k, v] : res.target.params) tp[k] = v.to_string();
    return tp;
  };
  for (const auto& sample : manifest.raw.at("A")) {
    FamilyIParams p{sample.at("eps").get<int>(), sample.at("nu").get<int>(),
                    sample.at("delta").get<int>(), json_scalar(sample.at("a")),
                    json_scalar(sample.at("b"))};
    AppendixResult res = appendix_map_I(p);
    ordered_json jr;
    jr["family"] = "I";
    jr["row"] = res.row;
    jr["eps"] = p.eps;
    jr["nu"] = p.nu;
    jr["delta"] = p.delta;
    jr["a"] = p.a.to_string();
    jr["b"] = p.b.to_string();
    jr["target"] = res.target.algebra;
    jr["target_params"] = target_json(res);
    jr["map"] = dump_map(res.map);
    j["dictionary"].push_back(jr);
  }
  for (const auto& sample : manifest.raw.at("B")) {
    FamilyIIParams p{sample.at("eps").get<int>(), sample.at("mu").get<int>(),
                     sample.at("nu").get<int>(), json_scalar(sample.at("a")),
                     json_scalar(sample.at("b"))};
    AppendixResult res = appendix_map_II(p);
    ordered_json jr;
    jr["family"] = "II";
    jr["row"] = res.row;
    jr["eps"] = p.eps;
    jr["mu"] = p.mu;
    jr["nu"] = p.nu;
    jr["a"] = p.a.to_string();
    jr["b"] = p.b.to_string();
    jr["target"] = res.target.algebra;
    jr["target_params"] = target_json(res);
    jr["map"] = dump_map(res.map);
    j["dictionary"].push_back(jr);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nilclass - exact verification of complex structures on 8-dimensional nilpotent Lie "
      "algebras with 1-dimensional center"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("NILCLASS_SEED")) opt.seed = std::strtoull(env, nullptr, 10);

  std::string input;
  std::vector<std::string> id_args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--params", opt.params, "parameter bindings k=v,... (exact expressions)");
    sub->add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", opt.seed, "seed for generic-rank specializations");
    sub->add_option("--samples", opt.samples, "sampling manifest (default: built-in copy)");
  };

  CLI::App* check = app.add_subcommand("check", "Jacobi identity / integrability of equations");
  check->add_option("input", input, "structure equations (real notation or complex DSL)")
      ->required();
  add_common(check);

  CLI::App* series = app.add_subcommand("series", "ascending and descending central series");
  series->add_option("input", input, "algebra (notation or catalog id)")->required();
  add_common(series);

  CLI::App* betti_cmd = app.add_subcommand("betti", "Chevalley-Eilenberg Betti numbers");
  betti_cmd->add_option("input", input, "algebra (notation or catalog id)")->required();
  add_common(betti_cmd);

  CLI::App* casimir_cmd = app.add_subcommand("casimir", "generalized Casimir count n_I");
  casimir_cmd->add_option("input", input, "algebra (notation or catalog id)")->required();
  add_common(casimir_cmd);

  CLI::App* fp = app.add_subcommand("fingerprint", "all isomorphism invariants");
  fp->add_option("input", input, "algebra (notation or catalog id)")->required();
  add_common(fp);

  CLI::App* jtype = app.add_subcommand("jtype", "classify the complex structure type");
  jtype->add_option("input", input, "complex structure equations (DSL)")->required();
  add_common(jtype);

  CLI::App* re = app.add_subcommand("realify", "underlying real Lie algebra and J");
  re->add_option("input", input, "complex structure equations (DSL)")->required();
  add_common(re);

  CLI::App* certify = app.add_subcommand("certify", "verify certificates from a JSON file");
  certify->add_option("file", input,
                      "certificate file, or 'library' / 'library-corrupted' for built-in sets")
      ->required();
  add_common(certify);

  CLI::App* tables = app.add_subcommand("tables", "reproduce the classification tables");
  tables->add_option("ids", id_args, "table ids (T1 T2 T3 T4 T5 T8 T9 A B); default all");
  add_common(tables);

  CLI::App* catalog = app.add_subcommand("catalog", "dump the catalog as versioned JSON");
  add_common(catalog);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(opt, input);
    if (series->parsed()) return cmd_series(opt, input);
    if (betti_cmd->parsed()) return cmd_betti(opt, input);
    if (casimir_cmd->parsed()) return cmd_casimir(opt, input);
    if (fp->parsed()) return cmd_fingerprint(opt, input);
    if (jtype->parsed()) return cmd_jtype(opt, input);
    if (re->parsed()) return cmd_realify(opt, input);
    if (certify->parsed()) return cmd_certify(opt, input);
    if (tables->parsed()) return cmd_tables(opt, id_args);
    if (catalog->parsed()) return cmd_catalog(opt);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
