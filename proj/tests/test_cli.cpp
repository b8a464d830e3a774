// Copyright 2026 The lqpcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lqp/cli.hpp"

using namespace lqp;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

/// Writes a temp model file and removes it at scope exit.
class TempModel {
 public:
  TempModel(std::string name, const std::string& text) : path_(std::move(name)) {
    std::ofstream f(path_);
    f << text;
  }
  ~TempModel() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

const char* kPair = R"(
qubits 2
var Q arity 1 = span { (1, -1) }
state plus0 = (1, 0, 1, 0)
state bell  = (1, 0, 0, 1)
)";

const char* kTele = R"(
qubits 3
var phi arity 1 = span { (2, 3i) }
)";

const char* kTeleProgram =
    "CNOT_{1,2}; H_1; (0_1 & 0_2)? "
    "+ CNOT_{1,2}; H_1; (0_1 & 1_2)?; X_3 "
    "+ CNOT_{1,2}; H_1; (1_1 & 0_2)?; Z_3 "
    "+ CNOT_{1,2}; H_1; (1_1 & 1_2)?; X_3; Z_3";

}  // namespace

TEST_CASE("run applies a program to a named state") {
  TempModel m("cli_pair.lqp", kPair);
  Result r = cli({"run", "--model", m.path(), "--state", "plus0", "--program",
                  "CNOT_{1,2}"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1, 0, 0, 1)\n");
  // undefined program: no successors, still exit 0
  Result u = cli({"run", "--model", m.path(), "--state", "bell", "--program",
                  "(0_1 & 1_2)?"});
  CHECK(u.code == 0);
  CHECK(u.out.find("no successors") != std::string::npos);
  Result v = cli({"run", "--model", m.path(), "--state", "plus0", "--program",
                  "X_1 + Z_2"});
  CHECK(v.code == 0);
  CHECK(v.out.find("\n") != std::string::npos);
}

TEST_CASE("check decides the teleportation validity") {
  TempModel m("cli_tele.lqp", kTele);
  std::string goal = std::string("phi_{1} & E[X_1; X_1](2,3) -> [") +
                     kTeleProgram + "] phi_{3}";
  Result r = cli({"check", "--model", m.path(), "--formula", goal});
  CHECK(r.code == 0);
  CHECK(r.out == "VALID\n");
  // dropping the corrections breaks it and yields a counterexample
  Result bad = cli({"check", "--model", m.path(), "--formula",
                    "phi_{1} & E[X_1; X_1](2,3) -> "
                    "[CNOT_{1,2}; H_1; (1_1 & 1_2)?] phi_{3}"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("INVALID") == 0);
  CHECK(bad.out.find("counterexample:") != std::string::npos);
}

TEST_CASE("sat and eval") {
  TempModel m("cli_pair2.lqp", kPair);
  Result r = cli({"sat", "--model", m.path(), "--formula", "1_1 & !1_1"});
  CHECK(r.code == 1);
  CHECK(r.out == "UNSATISFIABLE\n");
  Result s = cli({"sat", "--model", m.path(), "--formula", "E[X_1](1,2)"});
  CHECK(s.code == 0);
  CHECK(s.out.find("SATISFIABLE\nwitness:") == 0);
  Result e = cli({"eval", "--model", m.path(), "--state", "bell", "--formula",
                  "E[X_1; X_1](1,2)"});
  CHECK(e.code == 0);
  CHECK(e.out == "TRUE\n");
  Result f = cli({"eval", "--model", m.path(), "--state", "plus0",
                  "--formula", "E[top](1,2) & 1_1"});
  CHECK(f.code == 1);
  CHECK(f.out == "FALSE\n");
}

TEST_CASE("exit codes follow the error taxonomy") {
  TempModel m("cli_pair3.lqp", kPair);
  // parse error
  CHECK(cli({"check", "--model", m.path(), "--formula", "p &"}).code == 2);
  // arity error
  CHECK(cli({"check", "--model", m.path(), "--formula", "Q_{1,2}"}).code == 2);
  // fragment error: E[top] under a validity question
  Result fr = cli({"check", "--model", m.path(), "--formula", "E[top](1,2)"});
  CHECK(fr.code == 3);
  CHECK(fr.err.find("E_FRAGMENT") != std::string::npos);
  // eval of a non-symbolic test argument names the fragment
  Result ev = cli({"eval", "--model", m.path(), "--state", "bell",
                   "--formula", "[(E[top](1,2))?] 1_1"});
  CHECK(ev.code == 3);
  // star bound
  TempModel rot("cli_rot.lqp",
                "qubits 1\ngate R arity 1 = [[3,4],[-4,3]]\nstate z = (1,0)\n");
  Result sb = cli({"run", "--model", rot.path(), "--state", "z", "--program",
                   "R_1*", "--star-bound", "5"});
  CHECK(sb.code == 4);
  CHECK(sb.err.find("E_STAR_BOUND") != std::string::npos);
  // missing model
  CHECK(cli({"check", "--formula", "1_1"}).code == 2);
}

TEST_CASE("denote prints cells") {
  TempModel m("cli_pair4.lqp", kPair);
  Result r = cli({"denote", "--model", m.path(), "--formula", "!Q_{2}"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cell 0") != std::string::npos);
  CHECK(r.out.find("minus") != std::string::npos);
  // entanglement atoms with a zero induced map come with a note
  Result z = cli({"denote", "--model", m.path(), "--formula",
                  "E[1_1?; 0_1?](1,2)"});
  CHECK(z.code == 0);
  CHECK(z.out.find("empty denotation") != std::string::npos);
  CHECK(z.err.find("zero map") != std::string::npos);
}

TEST_CASE("structured output mirrors the text output") {
  TempModel m("cli_pair5.lqp", kPair);
  Result r = cli({"check", "--model", m.path(), "--formula", "0_1",
                  "--format", "structured"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "INVALID");
  CHECK(j.contains("counterexample"));
  Result t = cli({"suite", "bell", "--count", "2", "--seed", "4", "--format",
                  "structured"});
  CHECK(t.code == 0);
  auto js = nlohmann::json::parse(t.out);
  CHECK(js["suite"] == "bell");
  CHECK(js["summary"]["failed"] == 0);
  // determinism: byte-identical reruns
  Result t2 = cli({"suite", "bell", "--count", "2", "--seed", "4", "--format",
                   "structured"});
  CHECK(t.out == t2.out);
}

TEST_CASE("suite command") {
  Result r = cli({"suite", "teleport", "--count", "3", "--seed", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("summary:") != std::string::npos);
  // the flag spelling works too
  Result f = cli({"suite", "--suite", "teleport", "--count", "3", "--seed", "2"});
  CHECK(f.out == r.out);
  CHECK(cli({"suite", "bogus"}).code == 2);
}

TEST_CASE("formulas can come from a file") {
  TempModel m("cli_pair6.lqp", kPair);
  TempModel f("cli_formula.txt", "box Q_{2} -> [1_1?] Q_{2}\n");
  Result r = cli({"check", "--model", m.path(), "--formula-file", f.path()});
  CHECK(r.code == 0);
  CHECK(r.out == "VALID\n");
  CHECK(cli({"check", "--model", m.path(), "--formula-file", "missing.txt"})
            .code == 2);
}
