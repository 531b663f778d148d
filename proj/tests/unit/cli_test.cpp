// Copyright 2026 The psgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/circuit.hpp"
#include "cli/commands.hpp"
#include "psgraph/classes/catalogue.hpp"
#include "psgraph/errors.hpp"
#include "psgraph/explorer/explorer.hpp"

namespace psgraph::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("psgraph_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  fs::path dir_;
};

const char* kRing2 =
    "qubits 4\n"
    "source 0 1 degenerate\n"
    "source 2 3 degenerate\n"
    "gate 0 cz 0 2\n"
    "gate 1 cz 1 3\n";

TEST_F(CliTest, CatalogueFileHasElevenClasses) {
  const Outcome o = call({"catalogue", "--n", "6", "--out", path("cat6.txt")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("classes=11"), std::string::npos);
  const Catalogue c = parse_catalogue(slurp(path("cat6.txt")));
  EXPECT_EQ(c.classes().size(), 11u);
  EXPECT_EQ(c, build_catalogue(6));

  const Outcome csv = call({"--format", "csv", "catalogue", "--n", "4"});
  EXPECT_EQ(csv.out.rfind("class_id,representative,members,diameter\n", 0), 0u);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 3);
}

TEST_F(CliTest, ClassifyIsStable) {
  ASSERT_EQ(call({"catalogue", "--n", "6", "--out", path("cat6.txt")}).code, kExitOk);
  const std::vector<std::string> args{"classify", "--catalogue", path("cat6.txt"), "--graph",
                                      "6;0-1,1-2,2-3,3-4,4-5"};
  const Outcome a = call(args), b = call(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const std::size_t id = classify(build_catalogue(6), path_graph(6));
  EXPECT_EQ(a.out.rfind("class " + std::to_string(id) + "\n", 0), 0u);

  // Same answer through the catalogue directory and through a fresh build.
  setenv("PSGRAPH_CATALOGUE_DIR", dir_.c_str(), 1);
  EXPECT_EQ(call({"classify", "--graph", "6;0-1,1-2,2-3,3-4,4-5"}).out, a.out);
  unsetenv("PSGRAPH_CATALOGUE_DIR");
  EXPECT_EQ(call({"classify", "--graph", "6;0-1,1-2,2-3,3-4,4-5"}).out, a.out);

  EXPECT_EQ(call({"classify", "--catalogue", path("cat6.txt"), "--graph", "5;0-1,1-2,2-3,3-4"}).code,
            kExitError);
}

TEST_F(CliTest, CheckExitCodes) {
  const Outcome ring = call({"check", file("ring2.scheme", kRing2)});
  EXPECT_EQ(ring.code, kExitNegative);
  EXPECT_EQ(ring.out.rfind("fails\n", 0), 0u);
  EXPECT_NE(ring.out.find("source cycle parity"), std::string::npos);
  EXPECT_EQ(call({"check", "--rule", "oracle", path("ring2.scheme")}).code, kExitNegative);

  const std::string ring3 = file("ring3.scheme",
                                 "qubits 6\nsource 0 1 degenerate\nsource 2 3 degenerate\n"
                                 "source 4 5 degenerate\ngate 0 cz 1 2\ngate 1 cz 3 4\n"
                                 "gate 2 cz 5 0\n");
  EXPECT_EQ(call({"check", "--rule", "oracle", ring3}).code, kExitOk);

  const Outcome pass = call({"check", file("ok.scheme", "qubits 2\nsingle 0\nsingle 1\ngate 0 cz 0 1\n")});
  EXPECT_EQ(pass.code, kExitOk);
  EXPECT_EQ(pass.out, "passes-sufficient\n");

  const Outcome bad = call({"check", file("bad.scheme", "qubits 3\nsingle 0\nsingle 1\n")});
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_EQ(bad.err.rfind("modelling error:", 0), 0u);

  const Outcome csv = call({"--format", "csv", "check", path("ring2.scheme")});
  EXPECT_EQ(csv.out.rfind("result,rule,detail\nfails,", 0), 0u);
}

TEST_F(CliTest, DistinctDiagnostics) {
  const Outcome unknown = call({"bogus"});
  EXPECT_EQ(unknown.code, kExitError);
  EXPECT_NE(unknown.err.find("unknown subcommand"), std::string::npos);

  const Outcome missing = call({"check", path("absent.scheme")});
  EXPECT_EQ(missing.code, kExitError);
  EXPECT_EQ(missing.err.rfind("file error:", 0), 0u);

  const Outcome guard = call({"--max-order", "5", "classify", "--graph", "6;0-1,1-2,2-3,3-4,4-5"});
  EXPECT_EQ(guard.code, kExitError);
  EXPECT_EQ(guard.err.rfind("guard exceeded:", 0), 0u);

  const Outcome parse = call({"check", file("x.scheme", "qubits 2\nwidget\n")});
  EXPECT_EQ(parse.err.rfind("invalid argument:", 0), 0u);

  const Outcome format = call({"report", file("r.txt", "PSGRAPH-REPORT v9\n")});
  EXPECT_EQ(format.code, kExitError);
  EXPECT_EQ(format.err.rfind("format error:", 0), 0u);

  EXPECT_EQ(call({"catalogue"}).code, kExitError);
  EXPECT_EQ(call({"--format", "xml", "catalogue", "--n", "4"}).code, kExitError);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ExploreIsReproducibleAndEchoesSeed) {
  const std::vector<std::string> a{"--seed", "77", "explore", "--resource", "2xDEG-EPP,1xSINGLE",
                                   "--min-iterations", "2000", "--out", path("a.txt")};
  std::vector<std::string> b = a;
  b.back() = path("b.txt");
  b.insert(b.begin(), {"--jobs", "2"});
  const Outcome ra = call(a), rb = call(b);
  ASSERT_EQ(ra.code, kExitOk) << ra.err;
  ASSERT_EQ(rb.code, kExitOk) << rb.err;
  EXPECT_NE(ra.out.find("seed=77"), std::string::npos);
  EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
  const ExplorationReport report = parse_report(slurp(path("a.txt")));
  EXPECT_EQ(report.seed, 77u);
  EXPECT_EQ(render_report(report), slurp(path("a.txt")));

  const Outcome verify = call({"report", "--verify", path("a.txt")});
  EXPECT_EQ(verify.code, kExitOk);
  EXPECT_NE(verify.out.find("0 problem(s)"), std::string::npos);

  const Outcome stdout_report = call({"--seed", "77", "explore", "--resource",
                                      "2xDEG-EPP,1xSINGLE", "--min-iterations", "2000"});
  EXPECT_EQ(stdout_report.out, slurp(path("a.txt")));
}

TEST_F(CliTest, RecipeCommands) {
  const Outcome tree = call({"recipe", "--graph", "4;0-1,0-2,0-3"});
  ASSERT_EQ(tree.code, kExitOk) << tree.err;
  EXPECT_EQ(tree.out,
            "resource 2xND-EPP\nrecipe " + tree_recipe(star_graph(4)).to_string() +
                "\nprobability 0.5\nverdict passes-sufficient\n");
  EXPECT_EQ(call({"recipe", "--graph", "4;0-1,1-2,2-3,3-0"}).code, kExitError);
  EXPECT_EQ(call({"recipe"}).code, kExitError);

  ASSERT_EQ(call({"explore", "--resource", "2xND-EPP", "--out", path("r.txt")}).code, kExitOk);
  const Outcome cz = call({"recipe", "--report", path("r.txt"), "--class", "4"});
  EXPECT_EQ(cz.out, "resource 2xND-EPP\nrecipe CZ(0,2)\nprobability 0.111111111111\n");
  EXPECT_EQ(call({"recipe", "--report", path("r.txt"), "--class", "9"}).code, kExitError);
}

TEST_F(CliTest, CompareWithPublishedCounts) {
  ASSERT_EQ(call({"explore", "--resource", "2xND-EPP", "--out", path("r.txt")}).code, kExitOk);
  const Outcome text = call({"report", "--compare-table1", path("r.txt")});
  ASSERT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("2xND-EPP                       2      2       2  yes  match"),
            std::string::npos);
  EXPECT_EQ(std::count(text.out.begin(), text.out.end(), '\n'),
            static_cast<long>(table1_rows().size() + 1));

  const Outcome csv = call({"--format", "csv", "--seed", "3", "report", "--compare-table1",
                            "--run", "--max-n", "5"});
  ASSERT_EQ(csv.code, kExitOk) << csv.err;
  EXPECT_EQ(csv.out.rfind("# seed 3\nn,resource,published,found,classes,acceptance,status\n", 0), 0u);
  EXPECT_NE(csv.out.find("5,5xSINGLE,3,3,4,yes,match"), std::string::npos);
  EXPECT_NE(csv.out.find("6,3xND-EPP,6,-,11,yes,not run"), std::string::npos);
}

TEST_F(CliTest, SimulateCircuit) {
  const std::string f = file("f.circ", "modes 4\nplus 0 1\ngate fusion 0 1\nproject\n");
  const Outcome o = call({"simulate", f});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out,
            "|0,1,0,1> 0.353553390593\n"
            "|0,1,1,0> 0.353553390593\n"
            "|1,0,0,1> 0.353553390593\n"
            "|1,0,1,0> -0.353553390593\n"
            "squared_norm 0.5\n");

  const Outcome scheme = call({"simulate", "--scheme",
                               file("ok.scheme", "qubits 2\nsingle 0\nsingle 1\ngate 0 cz 0 1\n")});
  EXPECT_NE(scheme.out.find("fidelity 1\n"), std::string::npos);
  EXPECT_NE(scheme.out.find("probability 0.111111111111\n"), std::string::npos);
}

TEST(Circuit, CzOnPlusStatesIsAThirdOfCz) {
  const CircuitRun r = run_circuit(Circuit::parse("modes 4\nplus 0 1\ngate cz 0 1\nproject 0 1\n"));
  // |1,0> rails are logical 1; only |11> picks up the sign.
  EXPECT_NEAR(r.output.amplitude({1, 0, 1, 0}).real(), -1.0 / 6.0, 1e-12);
  EXPECT_NEAR(r.output.amplitude({0, 1, 0, 1}).real(), 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(r.squared_norm, 1.0 / 9.0, 1e-12);
}

TEST(Circuit, StatesAndErrors) {
  const Circuit c = Circuit::parse("modes 2 # one qubit\nstate 10:0.5-0.5i,01:1i\n");
  EXPECT_EQ(c.initial.amplitude({1, 0}), Complex(0.5, -0.5));
  EXPECT_EQ(c.initial.amplitude({0, 1}), Complex(0.0, 1.0));
  EXPECT_FALSE(c.projected.has_value());
  EXPECT_EQ(run_circuit(c).output.terms().size(), 2u);

  EXPECT_THROW(Circuit::parse("plus 0\n"), InvalidArgument);
  EXPECT_THROW(Circuit::parse("modes 2\n"), InvalidArgument);
  EXPECT_THROW(Circuit::parse("modes 2\nstate 1:1\n"), InvalidArgument);
  EXPECT_THROW(Circuit::parse("modes 2\nstate 10:x\n"), InvalidArgument);
  EXPECT_THROW(Circuit::parse("modes 4\nplus 0 1\ngate cz 0 0\n"), InvalidArgument);
  EXPECT_THROW(Circuit::parse("modes 4\nplus 0 1\ngate swap 0 1\n"), InvalidArgument);
  EXPECT_THROW(Circuit::parse("modes 4\nplus 0 2\n"), InvalidArgument);
  EXPECT_THROW(Circuit::parse("modes 4\nplus 0\nproject\ngate cz 0 1\n"), InvalidArgument);
  EXPECT_THROW(Circuit::parse("modes 40\n"), GuardExceeded);
}

TEST(Circuit, LcOnAPairMatchesGraphRewrite) {
  // CZ then LC on 0: a single edge stays a single edge, so amplitudes keep |.| = 1/6.
  const CircuitRun r =
      run_circuit(Circuit::parse("modes 4\nplus 0 1\ngate cz 0 1\nlc 0 1\nproject\n"));
  EXPECT_NEAR(r.squared_norm, 1.0 / 9.0, 1e-12);
  for (const auto& [occ, a] : r.output.terms()) EXPECT_NEAR(std::abs(a), 1.0 / 6.0, 1e-12);
}

}  // namespace
}  // namespace psgraph::cli
