// End-to-end tests that spawn the real command-line binary (path baked in at
// build time) and assert on exit codes, output files, and messages.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

using nlohmann::json;

std::string bin() { return TIA_BIN_PATH; }

std::string tmp_path(const std::string& name) {
  return ::testing::TempDir() + "tia_cli_" + name;
}

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  ASSERT_TRUE(out.good()) << path;
}

RunResult run(const std::string& args) {
  const std::string outFile = tmp_path("stdout.txt");
  const std::string errFile = tmp_path("stderr.txt");
  const std::string cmd = bin() + " " + args + " > " + outFile + " 2> " + errFile;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(outFile);
  r.err = slurp(errFile);
  return r;
}

const char* kPoint = R"({"lattice":{"h":"1"},"terms":[{"coeff":"1","gen":{"kind":"point","a":0,"m":0,"n":0}}]})";
const char* kInterval = R"({"lattice":{"h":"1"},"terms":[{"coeff":"1","gen":{"kind":"interval","a":0,"b":1,"m":0,"n":0}}]})";

}  // namespace

TEST(Cli, ProductOfPointAndIntervalIsHalf) {
  const std::string a = tmp_path("a.json"), b = tmp_path("b.json"), o = tmp_path("o.json");
  spit(a, kPoint);
  spit(b, kInterval);
  const auto r = run("product " + a + " " + b + " " + o);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json out = json::parse(slurp(o));
  ASSERT_EQ(out["terms"].size(), 1u);
  EXPECT_EQ(out["terms"][0]["coeff"], "1/2");
  EXPECT_EQ(out["terms"][0]["gen"]["kind"], "point");
  EXPECT_EQ(out["terms"][0]["gen"]["m"], 1);
  EXPECT_EQ(out["terms"][0]["gen"]["n"], 0);
}

TEST(Cli, EmptyChainProducesEmptyProduct) {
  const std::string a = tmp_path("ea.json"), b = tmp_path("eb.json"), o = tmp_path("eo.json");
  spit(a, R"({"lattice":{"h":"1"},"terms":[]})");
  spit(b, kInterval);
  const auto r = run("product " + a + " " + b + " " + o);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(json::parse(slurp(o))["terms"].empty());
}

TEST(Cli, MalformedInputNamesTheFieldAndExitsTwo) {
  const std::string a = tmp_path("bad.json"), o = tmp_path("bo.json");
  spit(a, R"({"lattice":{"h":"1"},"terms":[{"coeff":"1","gen":{"kind":"interval","a":0,"m":0,"n":0}}]})");
  const std::string b = tmp_path("ok.json");
  spit(b, kInterval);
  const auto r = run("product " + a + " " + b + " " + o);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("terms[0].gen.b"), std::string::npos) << r.err;
}

TEST(Cli, MissingInputFileExitsTwo) {
  const auto r = run("boundary /nonexistent/x.json " + tmp_path("n.json"));
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, LatticeMismatchExitsThree) {
  const std::string a = tmp_path("ma.json"), b = tmp_path("mb.json"), o = tmp_path("mo.json");
  spit(a, kPoint);
  spit(b, R"({"lattice":{"h":"1","period":5},"terms":[{"coeff":"1","gen":{"kind":"point","a":0,"m":0,"n":0}}]})");
  const auto r = run("product " + a + " " + b + " " + o);
  EXPECT_EQ(r.exit_code, 3);
}

TEST(Cli, ProductOutputIsByteIdenticalAcrossReruns) {
  const std::string a = tmp_path("da.json"), b = tmp_path("db.json");
  const std::string o1 = tmp_path("d1.json"), o2 = tmp_path("d2.json");
  spit(a, kPoint);
  spit(b, kInterval);
  ASSERT_EQ(run("product " + a + " " + b + " " + o1).exit_code, 0);
  ASSERT_EQ(run("product " + a + " " + b + " " + o2).exit_code, 0);
  EXPECT_EQ(slurp(o1), slurp(o2));
}

TEST(Cli, BoundaryOfInfinitesimal) {
  const std::string a = tmp_path("inf.json"), o = tmp_path("infb.json");
  spit(a, R"({"lattice":{"h":"1"},"terms":[{"coeff":"1","gen":{"kind":"infinitesimal","a":2,"m":0,"n":0}}]})");
  const auto r = run("boundary " + a + " " + o);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json out = json::parse(slurp(o));
  ASSERT_EQ(out["terms"].size(), 2u);
}

TEST(Cli, VerifySmallSweepPasses) {
  const auto r = run("verify --dims 1 --dec-bound 0 --window 3");
  EXPECT_EQ(r.exit_code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_NE(r.out.find("associativity"), std::string::npos);
}

TEST(Cli, VerifyInjectedDefectFailsWithCounterexample) {
  const auto r = run("verify --dims 1 --dec-bound 0 --window 3 --inject-defect");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("counterexample"), std::string::npos);
}

TEST(Cli, VerifyRejectsUnsupportedDims) {
  EXPECT_EQ(run("verify --dims 2").exit_code, 3);
  EXPECT_EQ(run("verify --dims 1 --dec-bound 9").exit_code, 3);
}

TEST(Cli, OracleCheckAgreesOnTinyWindow) {
  const auto r = run("oracle-check --dec-bound 0 --window 3");
  EXPECT_EQ(r.exit_code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("AGREE: 81 products, 9 boundaries"), std::string::npos) << r.out;
}

TEST(Cli, OracleCheckFlagsTheWrongCoefficientVariant) {
  const auto r = run("oracle-check --dec-bound 1 --window 3 --use-swapped-binomial");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("DISAGREE"), std::string::npos) << r.out;
}

TEST(Cli, FluidBuildReportsTheAlgebra) {
  const auto r = run("fluid build --n 3 --delta 1 --skip-triple");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json rep = json::parse(r.out);
  EXPECT_EQ(rep["basis_dimension"], 52);
  EXPECT_EQ(rep["definiteness"], "positive definite");
  EXPECT_EQ(rep["gram_symmetric"], true);
  EXPECT_EQ(rep["linking_symmetric"], true);
  EXPECT_EQ(rep["cells"]["squares"], 81);
}

TEST(Cli, FluidBuildRejectsTinyLattice) {
  EXPECT_EQ(run("fluid build --n 2").exit_code, 3);
}

TEST(Cli, FluidRunWritesCsvAndSidecar) {
  const std::string csv = tmp_path("t.csv"), fs = tmp_path("t.json");
  const auto r = run("fluid run --n 3 --steps 10 --seed 7 --out " + csv + " --final-state " + fs);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const std::string data = slurp(csv);
  EXPECT_EQ(data.rfind("step,time,energy,helicity\n", 0), 0u);
  EXPECT_EQ(std::count(data.begin(), data.end(), '\n'), 12);  // header + 11 records
  const json sidecar = json::parse(slurp(fs));
  EXPECT_EQ(sidecar["steps"], 10);
  EXPECT_EQ(sidecar["final_state"].size(), 52u);
  EXPECT_LT(sidecar["energy_drift_rel"].get<double>(), 1e-10);
}

TEST(Cli, HelpIsAvailableEverywhere) {
  EXPECT_EQ(run("--help").exit_code, 0);
  const auto r = run("fluid run --help");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("--dt"), std::string::npos);
  EXPECT_NE(r.out.find("--seed"), std::string::npos);
}
