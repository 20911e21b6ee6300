// End-to-end CLI tests through the real binary: command surface, exit
// codes, parse errors, and byte-identical reports across runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(NILCLASS_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult res{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("check: pass and fail with the right exit codes") {
  RunResult ok = run("check \"(0,0,12)\"");
  CHECK(ok.exit_code == 0);
  RunResult bad = run("check \"(0,0,12,34)\"");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("d^2 e4 = e1^e2^e4") != std::string::npos);
  RunResult syntax = run("check \"(0,0,21)\"");
  CHECK(syntax.exit_code == 2);
}

TEST_CASE("casimir example from the proofs") {
  RunResult r = run("casimir \"(0^5,13+15+24,14-23+25,16+27)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4\n");
}

TEST_CASE("series and fingerprint on catalog ids") {
  RunResult r = run("series n7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("(1,5,8)") != std::string::npos);
  RunResult solvable = run("series \"(0, 12)\"");
  CHECK(solvable.exit_code == 1);
  CHECK(solvable.out.find("NOT nilpotent") != std::string::npos);
  RunResult f = run("fingerprint n4 --params h=2,t=1 --format json");
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("\"descending\"") != std::string::npos);
  RunResult invalid = run("fingerprint n4 --params h=-1,t=0");
  CHECK(invalid.exit_code == 2);
}

TEST_CASE("complex DSL commands") {
  std::string family_i_138 =
      "\"dw1 = 0; dw2 = 0; dw3 = w14 + w1~4 + w2~1; dw4 = i*w1~3 - i*w3~1\"";
  RunResult jt = run("jtype " + family_i_138);
  CHECK(jt.exit_code == 0);
  CHECK(jt.out.find("strongly non-nilpotent") != std::string::npos);
  RunResult re = run("realify " + family_i_138);
  CHECK(re.exit_code == 0);
  RunResult bad = run("check \"dw1 = 0; dw2 = w~1~2\"");
  CHECK(bad.exit_code == 2);  // (0,2) monomial is an input error
}

TEST_CASE("tables: pass status and byte-identical reports") {
  RunResult a = run("tables T9 --format json --seed 7");
  RunResult b = run("tables T9 --format json --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  // a manifest passed via --samples behaves like the built-in copy
  RunResult c = run("tables T9 --format json --seed 7 --samples " +
                    std::string(NILCLASS_MANIFEST));
  CHECK(c.exit_code == 0);
  CHECK(c.out == a.out);
  RunResult t3 = run("tables T3");
  CHECK(t3.exit_code == 0);
  CHECK(t3.out.find("PASS T3") != std::string::npos);
  RunResult unknown = run("tables T6");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("certify: library, corrupted library, and a JSON file") {
  RunResult lib = run("certify library");
  CHECK(lib.exit_code == 0);
  RunResult bad = run("certify library-corrupted");
  CHECK(bad.exit_code == 1);

  std::string path = std::string(NILCLASS_TMP) + "/cert_ok.json";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f);
    // n3^g = n3^{-g} with symbolic g, as an external certificate file
    fputs(R"JSON({
      "name": "external: n3^g to n3^{-g}",
      "kind": "real-iso",
      "source": {"notation": "(0^4, 12, 13-g*15+25, 15+24-g*25, 16+27)"},
      "target": {"notation": "(0^4, 12, 13+g*15+25, 15+24+g*25, 16+27)"},
      "matrix": [["1","0","0","0","0","0","0","0"],
                  ["0","-1","0","0","0","0","0","0"],
                  ["0","0","1","0","0","0","0","0"],
                  ["0","0","0","1","0","0","0","0"],
                  ["0","0","0","0","-1","0","0","0"],
                  ["0","0","0","0","0","1","0","0"],
                  ["0","0","0","0","0","0","-1","0"],
                  ["0","0","0","0","0","0","0","1"]]
    })JSON", f);
    fclose(f);
  }
  RunResult file_ok = run("certify " + path);
  CHECK(file_ok.exit_code == 0);

  std::string bad_path = std::string(NILCLASS_TMP) + "/cert_bad.json";
  {
    FILE* f = fopen(bad_path.c_str(), "w");
    REQUIRE(f);
    fputs(R"JSON({
      "name": "wrong sign",
      "kind": "real-iso",
      "source": {"notation": "(0,0,12)"},
      "target": {"notation": "(0,0,-12)"},
      "matrix": [["1","0","0"],["0","1","0"],["0","0","1"]]
    })JSON", f);
    fclose(f);
  }
  RunResult file_bad = run("certify " + bad_path);
  CHECK(file_bad.exit_code == 1);
  CHECK(file_bad.out.find("residual") != std::string::npos);

  RunResult missing = run("certify /nonexistent/cert.json");
  CHECK(missing.exit_code == 2);

  // realification-kind certificate: the standard covectors on an
  // integrable instance, against the algebra they produce
  std::string real_path = std::string(NILCLASS_TMP) + "/cert_realification.json";
  {
    FILE* f = fopen(real_path.c_str(), "w");
    REQUIRE(f);
    fputs(R"JSON({
      "name": "standard covectors",
      "kind": "realification",
      "source": {"equations": "dw1 = 0; dw2 = 0; dw3 = w14 + w1~4 + w2~1; dw4 = i*w1~3 - i*w3~1"},
      "target": {"notation": "(0^4, -13+2*17-24, -14+23+2*27, 0, 2*15+2*26)"},
      "map": [["1","i","0","0","0","0","0","0"],
               ["0","0","1","i","0","0","0","0"],
               ["0","0","0","0","1","i","0","0"],
               ["0","0","0","0","0","0","1","i"]]
    })JSON", f);
    fclose(f);
  }
  RunResult real_ok = run("certify " + real_path);
  CHECK(real_ok.exit_code == 0);
}

TEST_CASE("catalog dump is stable json") {
  RunResult a = run("catalog");
  RunResult b = run("catalog");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"g12\"") != std::string::npos);
  CHECK(a.out.find("\"dictionary\"") != std::string::npos);
}

namespace {

std::string slurp(const std::string& path) {
  FILE* f = fopen(path.c_str(), "rb");
  REQUIRE(f);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
  fclose(f);
  return out;
}

}  // namespace

TEST_CASE("reports match the checked-in golden files byte for byte") {
  RunResult t9 = run("tables T9 --format json");
  CHECK(t9.out == slurp(std::string(NILCLASS_GOLDEN) + "/tables_T9.json"));
  RunResult cat = run("catalog");
  CHECK(cat.out == slurp(std::string(NILCLASS_GOLDEN) + "/catalog.json"));
}
