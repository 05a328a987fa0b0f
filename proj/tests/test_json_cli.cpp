#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "corrdyn/errors.hpp"
#include "corrdyn/json_io.hpp"

using namespace corrdyn;
using json_io::Json;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stdout and stderr merged.
Run cli(const std::string& args) {
  const std::string cmd = std::string(CORRDYN_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (const std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "corrdyn_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = (dir / name).string();
  std::ofstream(path) << text;
  return path;
}

const char* kSquare = R"({"d":2,"e":1,"coeffs":[["0","-1"],["0","0"],["1","0"]]})";
const char* kMovedSquare = R"({"d":2,"e":1,"coeffs":[["2","-3"],["-6","8"],["5","-6"]]})";

}  // namespace

TEST_CASE("rationals travel as strings") {
  CHECK(json_io::parse_rational(Json("1/2")) == Rational(1, 2));
  CHECK(json_io::parse_rational(Json("-6/4")) == Rational(-3, 2));
  CHECK(json_io::rationals({Rational(-3, 2), Rational(4)}) == Json::array({"-3/2", "4"}));
  CHECK_THROWS_AS(json_io::parse_rational(Json(0.5)), SchemaError);
  CHECK_THROWS_AS(json_io::parse_rational(Json("1/0")), SchemaError);
  CHECK_THROWS_AS(json_io::parse_rational(Json("one")), SchemaError);
}

TEST_CASE("correspondence documents") {
  const auto f = json_io::parse_correspondence(kSquare);
  CHECK(f.dx() == 2);
  CHECK(f.dy() == 1);
  CHECK(f.at(2, 0) == Rational(1));
  CHECK(f.at(0, 1) == Rational(-1));
  CHECK(json_io::dump(json_io::to_json(f)) == std::string(kSquare) + "\n");

  CHECK_THROWS_AS(json_io::parse_correspondence(R"({"d":1,"e":1,"coeffs":[["0","0"],["0","0"]]})"),
                  SchemaError);
  CHECK_THROWS_AS(json_io::parse_correspondence(R"({"d":1,"e":1,"coeffs":[["1","0"]]})"), SchemaError);
  CHECK_THROWS_AS(json_io::parse_correspondence(R"({"d":1})"), SchemaError);
  CHECK_THROWS_AS(json_io::parse_correspondence("not json"), SchemaError);
  CHECK_THROWS_AS(json_io::parse_correspondence(R"({"d":-1,"e":1,"coeffs":[]})"), SchemaError);
}

TEST_CASE("component documents round-trip") {
  const Json doc = Json::parse(R"({"d":1,"e":1,"parts":[["-1","2","-1"],["-2"]]})");
  const auto c = json_io::parse_components(doc);
  CHECK(json_io::to_json(c) == doc);
  CHECK_THROWS_AS(json_io::parse_components(Json::parse(R"({"d":1,"e":1,"parts":[["1"]]})")), SchemaError);
}

TEST_CASE("cli: success paths") {
  const auto sq = temp_file("square.json", kSquare);
  const auto moved = temp_file("moved.json", kMovedSquare);

  auto r = cli("compose --left " + sq + " --right " + sq);
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("d":4,"e":1)") != std::string::npos);

  r = cli("conjugate --input " + sq + " --moebius 2,-1,-1,1");
  CHECK(r.code == 0);
  CHECK(r.out == std::string(kMovedSquare) + "\n");

  r = cli("graph --moebius 2,-1,1,0");
  CHECK(r.out == "{\"d\":1,\"e\":1,\"coeffs\":[[\"-1\",\"0\"],[\"2\",\"-1\"]]}\n");

  r = cli("multipliers --input " + moved);
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("sigma":["1","2","0","0"])") != std::string::npos);

  r = cli("stability --input " + sq);
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("verdict":"Stable")") != std::string::npos);

  r = cli("decompose --input " + moved);
  CHECK(r.code == 0);
  const auto parts = temp_file("parts.json", r.out);
  r = cli("reconstruct --input " + parts);
  CHECK(r.out == std::string(kMovedSquare) + "\n");

  r = cli("iterate --input " + sq + " --n 3");
  CHECK(r.out.find(R"("d":8,"e":1)") != std::string::npos);

  r = cli("project --input " + moved + " --c0 2 --c1 3");
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("d":1,"e":2)") != std::string::npos);

  const auto out = (std::filesystem::temp_directory_path() / "corrdyn_cli_tests" / "out.json").string();
  r = cli("graph --moebius 1,0,0,1 --out " + out);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(line == R"({"d":1,"e":1,"coeffs":[["0","-1"],["1","0"]]})");
}

TEST_CASE("cli: precondition errors exit 2 and name the kind") {
  const auto sq = temp_file("square.json", kSquare);
  auto r = cli("multipliers --input " + sq);
  CHECK(r.code == 2);
  CHECK(r.out.find("BadPosition") != std::string::npos);

  const auto sing = temp_file("singular.json", R"({"d":1,"e":1,"coeffs":[["1","-1"],["-1","1"]]})");
  r = cli("multipliers --input " + sing);
  CHECK(r.code == 2);
  CHECK(r.out.find("IndeterminateMultiplier") != std::string::npos);

  const auto a = temp_file("a.json", R"({"d":1,"e":1,"coeffs":[["1","0"],["3","0"]]})");
  const auto b = temp_file("b.json", R"({"d":1,"e":1,"coeffs":[["2","5"],["0","0"]]})");
  r = cli("compose --left " + a + " --right " + b);
  CHECK(r.code == 2);
  CHECK(r.out.find("DegenerateComposition") != std::string::npos);
}

TEST_CASE("cli: schema errors exit 3") {
  const auto zero = temp_file("zero.json", R"({"d":1,"e":1,"coeffs":[["0","0"],["0","0"]]})");
  CHECK(cli("stability --input " + zero).code == 3);
  CHECK(cli("stability --input " + temp_file("bad.json", "{")).code == 3);
  CHECK(cli("stability --input /nonexistent/corrdyn.json").code == 3);
  CHECK(cli("graph --moebius 1,2,2,4").code == 3);
  CHECK(cli("graph --moebius 1,2").code == 3);
  CHECK(cli("nonsense").code == 3);
  CHECK(cli("verify --seed 1 --degree-cap 1").code == 3);
  CHECK(cli("verify --seed 1 --degree-cap 3 --only no_such_identity").code == 3);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("cli: verify") {
  const auto r = cli("verify --seed 3 --degree-cap 2 --instances 2 --only index_theorem");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("corrdyn verify seed=3 degree-cap=2 instances=2\n", 0) == 0);
  CHECK(r.out.find("summary: 1 identities, 1 passed, 0 failed") != std::string::npos);
}
