#include "doctest.h"

#include <fstream>
#include <sstream>

#include "branchkit/report.hpp"

using namespace branchkit;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/branchkit_test_") + name + ".json";
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kLadder = R"({
  "algebra": [["A", 1], ["A", 1]],
  "theta": {"mode": "signs", "simple_signs": [-1, -1]},
  "sigma": {"mode": "swap", "factors": [0, 1]},
  "grading": ["1", "1"],
  "lambda": ["2", "3"],
  "max_p": 4,
  "seed": 1
})";

const char* kAntiLadder = R"({
  "algebra": [["A", 1], ["A", 1]],
  "theta": {"mode": "signs", "simple_signs": [-1, -1]},
  "sigma": {"mode": "swap", "factors": [0, 1]},
  "grading": ["1", "-1"],
  "lambda": ["2", "3"],
  "max_p": 4
})";

const char* kSl2 = R"({
  "algebra": [["A", 1]],
  "theta": {"mode": "signs", "simple_signs": [-1]},
  "sigma": {"mode": "signs", "simple_signs": [-1]},
  "grading": ["1"],
  "lambda": ["3"],
  "max_p": 4
})";

int run(const std::vector<std::string>& args, std::string& out_text) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  out_text = out.str() + err.str();
  return code;
}

}  // namespace

TEST_CASE("validate echoes the instance and passes") {
  const std::string path = write_temp("ladder", kLadder);
  std::string out;
  CHECK(run({"validate", path}, out) == 0);
  CHECK(out.find("\"valid\": true") != std::string::npos);
  CHECK(out.find("\"dim\": 6") != std::string::npos);
  CHECK(out.find("extraspecial") != std::string::npos);
}

TEST_CASE("validate rejects a non-involutive sigma with a field path") {
  const std::string bad = R"({
    "algebra": [["A", 1]],
    "theta": {"mode": "signs", "simple_signs": [-1]},
    "sigma": {"mode": "matrix", "rows": [["2","0","0"],["0","1","0"],["0","0","1"]]},
    "grading": ["1"]
  })";
  const std::string path = write_temp("bad_sigma", bad);
  std::string out;
  CHECK(run({"validate", path}, out) == 1);
  CHECK(out.find("sigma") != std::string::npos);
}

TEST_CASE("validate rejects a grading outside the theta-fixed Cartan") {
  const std::string bad = R"({
    "algebra": [["A", 1], ["A", 1]],
    "theta": {"mode": "swap", "factors": [0, 1]},
    "sigma": {"mode": "swap", "factors": [0, 1]},
    "grading": ["1", "0"]
  })";
  const std::string path = write_temp("bad_grading", bad);
  std::string out;
  CHECK(run({"validate", path}, out) == 1);
  CHECK(out.find("NotThetaFixed") != std::string::npos);
}

TEST_CASE("check on the ladder and anti-ladder instances") {
  std::string out;
  CHECK(run({"check", write_temp("ladder", kLadder)}, out) == 0);
  CHECK(out.find("\"decomposable\": true") != std::string::npos);
  CHECK(run({"check", write_temp("anti", kAntiLadder)}, out) == 0);
  CHECK(out.find("\"decomposable\": false") != std::string::npos);
  CHECK(out.find("witness") != std::string::npos);
}

TEST_CASE("branch emits the ladder table and refuses the negative control") {
  std::string out;
  CHECK(run({"branch", write_temp("ladder", kLadder)}, out) == 0);
  // lambda' = 7, 9, 11, 13, 15
  CHECK(out.find("\"7\"") != std::string::npos);
  CHECK(out.find("\"15\"") != std::string::npos);
  CHECK(run({"branch", write_temp("anti", kAntiLadder)}, out) == 2);
}

TEST_CASE("blattner table for the su(1,1) instance") {
  std::string out;
  CHECK(run({"blattner", write_temp("sl2", kSl2), "--max-p", "3"}, out) == 0);
  CHECK(out.find("\"5\"") != std::string::npos);   // lambda + 2 at p = 0
  CHECK(out.find("\"11\"") != std::string::npos);  // lambda + 2 + 2p at p = 3
}

TEST_CASE("assvar and oracle run clean on the ladder") {
  std::string out;
  CHECK(run({"assvar", write_temp("ladder", kLadder)}, out) == 0);
  CHECK(out.find("\"projection_equal\": true") != std::string::npos);
  CHECK(run({"oracle", write_temp("ladder", kLadder)}, out) == 0);
  CHECK(out.find("\"pass\": false") == std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string path = write_temp("ladder", kLadder);
  std::string out1, out2;
  CHECK(run({"branch", path}, out1) == 0);
  CHECK(run({"branch", path}, out2) == 0);
  CHECK(out1 == out2);
}

TEST_CASE("text rendering produces the table grid") {
  std::string out;
  CHECK(run({"branch", write_temp("ladder", kLadder), "--text"}, out) == 0);
  CHECK(out.find("p | lambda'") != std::string::npos);
}
