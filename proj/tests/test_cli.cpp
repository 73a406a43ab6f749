#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "metlie/catalog.hpp"
#include "metlie/json_io.hpp"

using namespace metlie;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "metlie");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "metlie_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

const fs::path corpus = METLIE_CORPUS_DIR;

}  // namespace

TEST_CASE("json round trip") {
  for (const auto& spec : {FamilySpec{Family::Oscillator, {"1/2", "3"}, 0},
                           FamilySpec{Family::DoubleExtensionChain, {"2"}, 4}, FamilySpec{Family::R2, {}, 0}}) {
    const auto m = generate(spec);
    CHECK(metric_from_json(Json::parse(dump(to_json(m)))) == m);
  }
}

TEST_CASE("generate matches the shipped corpus") {
  const auto r = run_cli({"generate", "oscillator", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(corpus / "oscillator" / "osc1.json"));
  const auto r2 = run_cli({"generate", "double_extension_chain", "2", "--seed", "7"});
  CHECK(r2.out == slurp(corpus / "double_extension_chain" / "de2_seed7.json"));
}

TEST_CASE("analyze reports") {
  const auto r = run_cli({"analyze", (corpus / "oscillator" / "osc1.json").string(), "--json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["dim"] == 4);
  CHECK(j["solvable"] == true);
  CHECK(j["nilpotent"] == false);
  CHECK(j["is_invariant"] == true);
  CHECK(j["witt_index"] == 1);
  CHECK(j["invariance_witness"].is_null());
  CHECK(j["nil_invariance"]["verdict"] == "certificate");

  const auto h = run_cli({"analyze", (corpus / "heisenberg" / "h3.json").string(), "--json"});
  REQUIRE(h.code == 0);
  const auto hj = Json::parse(h.out);
  CHECK(hj["is_invariant"] == false);
  CHECK(hj["invariance_witness"]["x"] == "X");
  CHECK(hj["nil_invariance"]["verdict"] == "counterexample");

  const auto human = run_cli({"analyze", (corpus / "oscillator" / "osc1.json").string()});
  CHECK(human.out.find("signature: (3,1,0)") != std::string::npos);
}

TEST_CASE("reduce and verify") {
  const auto r = run_cli({"reduce", (corpus / "oscillator" / "osc1.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("steps: 1") != std::string::npos);

  const fs::path out = scratch() / "verify.json";
  const auto v = run_cli({"verify", (corpus / "abelian" / "abelian2.json").string(), "--out", out.string()});
  CHECK(v.code == 0);
  CHECK(Json::parse(slurp(out))["pass"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == cli::Parse);
  CHECK(run_cli({"frobnicate"}).code == cli::Parse);
  CHECK(run_cli({"analyze", (scratch() / "missing.json").string()}).code == cli::Parse);
  CHECK(run_cli({"analyze", write("bad.json", "{not json").string()}).code == cli::Parse);
  const auto asym = write("asym.json", R"({"dim":2,"basis_names":["a","b"],"brackets":[],"gram":[["1","1"],["0","1"]]})");
  const auto a = run_cli({"analyze", asym.string()});
  CHECK(a.code == cli::Parse);
  CHECK(Json::parse(a.err)["error"] == "ParseError");

  const auto jac = write("jacobi.json", R"({"dim":3,"basis_names":["e1","e2","e3"],"brackets":[
    {"i":0,"j":1,"k":1,"c":"1"},{"i":1,"j":2,"k":0,"c":"1"}],"gram":[["1","0","0"],["0","1","0"],["0","0","1"]]})");
  CHECK(run_cli({"analyze", jac.string()}).code == cli::Jacobi);
  CHECK(run_cli({"reduce", (corpus / "heisenberg" / "h3.json").string()}).code == cli::NotNilInvariant);
  const auto sl2 = write("sl2.json", R"({"dim":3,"basis_names":["H","E","F"],"brackets":[
    {"i":0,"j":1,"k":1,"c":"2"},{"i":0,"j":2,"k":2,"c":"-2"},{"i":1,"j":2,"k":0,"c":"1"}],
    "gram":[["8","0","0"],["0","0","4"],["0","4","0"]]})");
  CHECK(run_cli({"reduce", sl2.string()}).code == cli::NonSolvable);
  CHECK(run_cli({"generate", "sl2"}).code == cli::InvalidParams);
  CHECK(run_cli({"generate", "oscillator", "-1"}).code == cli::InvalidParams);
  CHECK(run_cli({"generate", "heisenberg", "2", "3"}).code == cli::InvalidParams);
}
