#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "doctest.h"
#include "homhopf/cli.hpp"
#include "support.hpp"

using namespace hht;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "homhopf");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("homhopf-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string example_file(const TempDir& dir, const std::string& name) {
  const std::string f = dir / (name + ".json");
  REQUIRE(run({"example", "--name", name, "-o", f}).code == kExitPass);
  return f;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("builtin documents round-trip byte for byte") {
  TempDir dir;
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const std::string text = serialize_document(builtin_example(name));
    CHECK(serialize_document(parse_document(text)) == text);
    const std::string f = example_file(dir, name);
    CHECK(slurp(f) == text);
    save_document(load_document(f), dir / "again.json");
    CHECK(slurp(dir / "again.json") == text);
    CHECK(run({"example", "--name", name}).out == text);
  }
}

TEST_CASE("every builtin passes its advertised suite") {
  CHECK(check_hopf(hopf("kz2")).passed());
  CHECK(check_hopf(hopf("sweedler-hom")).passed());
  CHECK(check_hom_algebra(document_algebra(builtin_example("bicross-2-5-B"))).passed());
  CHECK(check_hom_coalgebra(document_coalgebra(builtin_example("bicross-2-5-B"))).passed());
  CHECK(check_bicross_data(worked_bicross_data()).passed());
  const AlgebraDocument rd = builtin_example("sweedler-hom-r");
  auto host = share(document_hopf(rd));
  Vec c(Q, 16);
  for (const auto& en : *rd.r) c[pair_index(en.i, en.j, 4)] = en.c;
  CHECK(check_quasitriangular(make_rvector(host, c)).passed());
}

TEST_CASE("documents") {
  const AlgebraDocument sw = builtin_example("sweedler-hom");
  CHECK(sw.dim == 4);
  CHECK(sw.basis == std::vector<std::string>{"1", "g", "x", "gx"});
  CHECK_THROWS_AS(parse_document(""), ParseError);
  CHECK_THROWS_AS(builtin_example("nope"), UnknownExample);

  try {
    parse_document(R"({"scalars": {"kind": "rational"}, "dim": 2, "basis": ["1", "g"], "alpha": [["1", "0"]],
                       "mul": [], "unit": ["1", "0"]})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("alpha") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_document(R"({"scalars": {"kind": "gfp", "p": 2}, "dim": 1, "alpha": [["1"]],
                                     "mul": [[0,0,0,"1"]], "unit": ["1"]})"),
                  FieldCharError);
  CHECK_THROWS_AS(parse_document(R"({"scalars": {"kind": "rational"}, "dim": 1, "alpha": [["0.5"]],
                                     "mul": [[0,0,0,"1"]], "unit": ["1"]})"),
                  ParseError);
  const AlgebraDocument g5 = parse_document(R"({"scalars": {"kind": "gfp", "p": 5}, "dim": 1, "alpha": [["1"]],
                                               "mul": [[0,0,0,"1"]], "unit": ["1"]})");
  CHECK(g5.field == Field::prime(5));
  CHECK(check_hom_algebra(document_algebra(g5)).passed());
}

TEST_CASE("exit codes") {
  TempDir dir;
  const std::string sw = example_file(dir, "sweedler-hom");
  const std::string b = example_file(dir, "bicross-2-5-B");
  const std::string data = example_file(dir, "bicross-2-5-data");
  const std::string kz2 = example_file(dir, "kz2");
  const std::string swr = example_file(dir, "sweedler-hom-r");

  Run r = run({"check"});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitPass);
  CHECK(run({"frobnicate"}).code == kExitInputError);

  r = run({"check", sw});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("hopf: pass (24 identities, 0 violations)") != std::string::npos);
  CHECK(run({"check", b}).code == kExitViolation);
  CHECK(run({"check", b, "--level", "algebra"}).code == kExitPass);
  CHECK(run({"check", b, "--level", "ring"}).code == kExitInputError);
  CHECK(run({"check", dir / "missing.json"}).code == kExitInputError);

  spit(dir / "empty.json", "");
  r = run({"check", dir / "empty.json"});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("line 1") != std::string::npos);
  spit(dir / "char2.json", R"({"scalars": {"kind": "gfp", "p": 2}, "dim": 1, "alpha": [["1"]], "mul": [[0,0,0,"1"]], "unit": ["1"]})");
  CHECK(run({"check", dir / "char2.json", "--level", "algebra"}).code == kExitInputError);

  CHECK(run({"example", "--name", "nope"}).code == kExitInputError);

  const std::string d = dir / "d.json";
  CHECK(run({"double", sw, "-o", d}).code == kExitPass);
  CHECK(run({"rcheck", d, "--canonical"}).code == kExitPass);
  CHECK(run({"rcheck", d, "--canonical", "--qhybe"}).code == kExitViolation);
  CHECK(run({"rcheck", sw, "--canonical"}).code == kExitInputError);
  CHECK(run({"rcheck", swr, "--qhybe"}).code == kExitPass);
  CHECK(run({"rcheck", sw, "--r", swr}).code == kExitPass);
  CHECK(run({"rcheck", sw}).code == kExitInputError);

  CHECK(run({"construct", "--op", "bicross", "--inputs", b, data, "-o", dir / "bc.json"}).code == kExitViolation);
  CHECK_FALSE(fs::exists(dir / "bc.json"));
  CHECK(run({"construct", "--op", "smash", "--inputs", b, data, "-o", dir / "smash.json"}).code == kExitPass);
  CHECK(run({"check", dir / "smash.json", "--level", "algebra"}).code == kExitPass);
  CHECK(run({"construct", "--op", "cosmash", "--inputs", b, data, "-o", dir / "cosmash.json"}).code == kExitPass);
  CHECK(run({"check", dir / "cosmash.json", "--level", "coalgebra"}).code == kExitPass);
  CHECK(run({"construct", "--op", "mirror", "--inputs", kz2, "-o", dir / "m.json"}).code == kExitPass);
  CHECK(run({"check", dir / "m.json"}).code == kExitPass);
  CHECK(run({"construct", "--op", "mirror", "--inputs", kz2, kz2, "-o", dir / "m2.json"}).code == kExitInputError);
  CHECK(run({"construct", "--op", "fuse", "--inputs", kz2, "-o", dir / "m3.json"}).code == kExitInputError);
}

TEST_CASE("max-violations caps the report") {
  TempDir dir;
  const std::string b = example_file(dir, "bicross-2-5-B");
  const std::string data = example_file(dir, "bicross-2-5-data");
  const Run r = run({"--json", "--max-violations", "1", "construct", "--op", "bicross", "--inputs", b, data, "-o",
                     dir / "x.json"});
  CHECK(r.code == kExitViolation);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["reports"][0]["violations"].size() == 1);
  CHECK(j["reports"][0]["violation_count"].get<int>() > 1);
}

TEST_CASE("--json output validates against the schema") {
  TempDir dir;
  const std::string sw = example_file(dir, "sweedler-hom");
  const std::string b = example_file(dir, "bicross-2-5-B");
  const std::string data = example_file(dir, "bicross-2-5-data");
  const std::vector<std::pair<std::vector<std::string>, int>> cases = {
      {{"--json", "check", sw}, kExitPass},
      {{"--json", "check", b}, kExitViolation},
      {{"--json", "check", dir / "missing.json"}, kExitInputError},
      {{"--json", "double", sw, "-o", dir / "d.json"}, kExitPass},
      {{"--json", "rcheck", dir / "d.json", "--canonical", "--qhybe"}, kExitViolation},
      {{"--json", "construct", "--op", "bicross", "--inputs", b, data, "-o", dir / "x.json"}, kExitViolation},
      {{"--json", "example", "--name", "kz2"}, kExitPass},
      {{"--json", "example", "--name", "nope"}, kExitInputError},
  };
  std::string files;
  int i = 0;
  for (const auto& [args, code] : cases) {
    const Run r = run(args);
    CHECK(r.code == code);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["exit_code"].get<int>() == code);
    CHECK(j["verdict"] == (code == 0 ? "pass" : code == 1 ? "fail" : "error"));
    const std::string f = dir / ("out" + std::to_string(i++) + ".json");
    spit(f, r.out);
    files += " " + f;
  }
  const std::string src = HOMHOPF_SOURCE_DIR;
  const std::string cmd =
      "python3 " + src + "/tools/validate_json.py " + src + "/schema/cli-output.schema.json" + files;
  CHECK(std::system(cmd.c_str()) == 0);
}

}  // TEST_SUITE
