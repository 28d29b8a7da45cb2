#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// file names carry the test name so tests can run in parallel
std::string scratch(const std::string& name) {
  return std::string(SHV_WORKDIR) + "/cli_" + ::testing::UnitTest::GetInstance()->current_test_info()->name() + "_" +
         name;
}

std::string write_input(const std::string& name, const std::string& text) {
  const std::string path = scratch(name + ".json");
  std::ofstream(path) << text;
  return path;
}

// env is prepended verbatim, e.g. "SHV_FUEL=3 "
Run shv(const std::string& args, const std::string& stdin_text = "", const std::string& env = "") {
  const std::string in = write_input("stdin", stdin_text);
  const std::string err = scratch("stderr.txt");
  const std::string cmd = env + "'" SHV_BINARY "' " + args + " < '" + in + "' 2> '" + err + "'";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

const std::string kL2 = R"({"terms":[{"coeff":"1","family":"L","index":2}]})";
const std::string kL3 = R"({"terms":[{"coeff":"1","family":"L","index":3}]})";
const std::string kVerma = R"({"type":"verma","h":"2","c0":"1"})";
const std::string kVermaDegenerate = R"({"type":"verma","h":"2","c0":"0"})";
const std::string kWhittaker = R"({"type":"whittaker","k":1,"phi":{"I1":"1"},"c0":"1"})";
const std::string kIminus1 = R"({"terms":[{"coeff":"1","word":["I-1"],"base":"v"}]})";

}  // namespace

TEST(Cli, BracketFromFiles) {
  const auto r = shv("bracket " + write_input("l2", kL2) + " " + write_input("l3", kL3));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, R"({"terms":[{"coeff":"1","family":"L","index":5}]})"
                   "\n");
}

TEST(Cli, BracketFromStdin) {
  const auto i1 = write_input("i1", R"({"terms":[{"coeff":"1","family":"I","index":1}]})");
  const auto r = shv("bracket - " + i1, R"({"terms":[{"coeff":"1","family":"I","index":2}]})");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"terms\":[]}\n");
}

TEST(Cli, BracketNeveuSchwarz) {
  const auto x = write_input("nl1", R"({"terms":[{"coeff":"1","family":"L","index":1}]})");
  const auto y = write_input("ng", R"({"terms":[{"coeff":"1","family":"G","index":"3/2"}]})");
  const auto r = shv("bracket --algebra ns " + x + " " + y);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"({"coeff":"3/2","family":"G","index":"5/2"})"), std::string::npos) << r.out;
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(shv("bracket - " + write_input("l3b", kL3), "{\"terms\": [").code, 2);
  EXPECT_EQ(shv("bracket - " + write_input("l3c", kL3), R"({"terms":[{"family":"Q","index":1}]})").code, 2);
  EXPECT_EQ(shv("bracket /nonexistent/x.json /nonexistent/y.json").code, 2);
  const auto r = shv("bracket - " + write_input("l3d", kL3), "not json");
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << "one-line diagnostic";
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(shv("").code, 2);
  EXPECT_EQ(shv("frobnicate").code, 2);
  EXPECT_EQ(shv("lie-of --range 65").code, 2);
  EXPECT_EQ(shv("lie-of --range x").code, 2);
  EXPECT_EQ(shv("quotient --alpha 1 --beta 1 --z 0").code, 2);
  EXPECT_EQ(shv("conformal classify").code, 2);
  EXPECT_EQ(shv("probe " + write_input("vm", kVerma) + " --random 3").code, 2);
  EXPECT_EQ(shv("probe " + write_input("vm2", kVerma)).code, 2);
  EXPECT_EQ(shv("bracket - -").code, 2);
  EXPECT_EQ(shv("validate-module " + write_input("vm3", kVerma), "", "SHV_FUEL=abc ").code, 2);
}

TEST(Cli, TagMismatchExitsOne) {
  const auto ns = write_input("nsdoc", R"({"algebra":"ns","terms":[{"coeff":"1","family":"L","index":1}]})");
  const auto r = shv("bracket " + ns + " " + write_input("l2b", kL2));
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ConformalCheck) {
  const auto r = shv("conformal check");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("jacobi":"pass")"), std::string::npos);
  EXPECT_NE(r.out.find(R"("skew":"pass")"), std::string::npos);
  EXPECT_EQ(r.out.find("fail"), std::string::npos);
  const auto bad = shv("conformal check -", R"({"a":"1","b":"1","c":"0","phi":"0","psi":"1"})");
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(shv("conformal check -", R"({"a":"1"})").code, 2);
}

TEST(Cli, ConformalClassify) {
  const auto r = shv("conformal classify --degree 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"({"a":"1","b":"0","c":"0","phi":"0","psi":"Δ"})"), std::string::npos) << r.out;
  const auto c = shv("conformal classify --degree 6 --c-nonzero");
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find(R"("families":[])"), std::string::npos) << c.out;
}

TEST(Cli, ConformalProducts) {
  const auto r = shv("conformal products");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"({"pair":["L","L"],"products":[[0,"∂L"],[1,"2L"]]})"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(R"({"pair":["G","G"],"products":[[0,"2I"]]})"), std::string::npos);
}

TEST(Cli, LieOfAndEmbedding) {
  const auto lie = shv("lie-of --range 8");
  EXPECT_EQ(lie.code, 0);
  EXPECT_NE(lie.out.find(R"("matches_S":true)"), std::string::npos);
  EXPECT_EQ(shv("ns-check --range 8").code, 0);
  EXPECT_EQ(shv("ns-check --range 8 --corrupt").code, 1);
}

TEST(Cli, Quotient) {
  const auto r = shv("quotient --alpha 0 --beta 0 --z 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("survivors":["L0","I0","G0"])"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(R"("ideal_check":"pass")"), std::string::npos);
}

TEST(Cli, ProbeVerma) {
  const auto r = shv("probe " + write_input("vm4", kVerma) + " -", kIminus1);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("terminal_text":"-1·v")"), std::string::npos) << r.out;
  const auto bad = shv("probe " + write_input("vm5", kVermaDegenerate) + " -", kIminus1);
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("condition (a) failed: I_0 not injective"), std::string::npos) << bad.err;
}

TEST(Cli, ProbeRandomIsDeterministic) {
  const auto module = write_input("vm6", kVerma);
  const auto a = shv("probe " + module + " --random 50 --max-weight 6 --seed 7");
  const auto b = shv("probe " + module + " --random 50 --max-weight 6 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find(R"("all_succeeded":true)"), std::string::npos);
  const auto c = shv("probe " + module + " --random 50 --max-weight 6 --seed 8");
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, ValidateModule) {
  EXPECT_EQ(shv("validate-module -", kWhittaker).code, 0);
  EXPECT_EQ(shv("validate-module -", kVermaDegenerate).code, 1);
  EXPECT_EQ(shv("validate-module -", R"({"type":"whittaker","k":1,"phi":{"I2":"1"},"c0":"1"})").code, 1);
  EXPECT_EQ(shv("validate-module -", R"({"type":"verma"})").code, 2);
}

TEST(Cli, ActAndNormalForm) {
  const auto module = write_input("vm7", kVerma);
  const auto act = shv("act " + module + " - --word L1", R"({"terms":[{"word":["L-1"],"base":"v"}]})");
  EXPECT_EQ(act.code, 0);
  EXPECT_EQ(act.out, R"({"terms":[{"base":"v","coeff":"-4","word":[]}]})"
                     "\n");
  const auto nf = shv("normal-form " + module + " --word \"G-1 G-1\"");
  EXPECT_EQ(nf.code, 0);
  EXPECT_EQ(nf.out, R"({"terms":[{"base":"v","coeff":"1","word":["I-2"]}]})"
                    "\n");
  const auto left = shv("normal-form " + module + " --word \"L2 L-1 G-1 L-2\" --strategy leftmost");
  const auto right = shv("normal-form " + module + " --word \"L2 L-1 G-1 L-2\" --strategy rightmost");
  EXPECT_EQ(left.out, right.out);
  EXPECT_EQ(shv("normal-form " + module + " --word L1 --strategy sideways").code, 2);
}

TEST(Cli, FuelOverride) {
  const auto module = write_input("vm8", kVerma);
  const auto r = shv("normal-form " + module + " --word \"L2 L1 L-1 L-2\"", "", "SHV_FUEL=3 ");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("fuel"), std::string::npos);
  EXPECT_EQ(shv("normal-form " + module + " --word \"L2 L1 L-1 L-2\"", "", "SHV_FUEL=100000 ").code, 0);
}
