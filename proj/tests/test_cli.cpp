#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "weylres/cli.hpp"
#include "weylres/fuzz.hpp"

using namespace weylres;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, PowCheck) {
  const CliRun r = run({"pow-check", "--field", "p=2", "x"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK: (d+x)^2 = d^2+x^2+1\n");
}

TEST(Cli, FieldDefaultsToTwo) {
  EXPECT_EQ(run({"theta-inv", "x^2"}).out, "x+1\n");
  EXPECT_EQ(run({"--field", "p=3", "theta", "x"}).out, "x^3\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"theta", "X"}).code, 2);
  EXPECT_EQ(run({"theta", "X"}).err, "error: X not valid in a K[x] expression\n");
  EXPECT_EQ(run({"theta", "x+"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"theta", "--field", "p=4", "x"}).code, 2);
  EXPECT_EQ(run({"fuzz", "no-such-suite"}).code, 2);
  EXPECT_EQ(run({"theta-inv", "x"}).code, 1);
  EXPECT_EQ(run({"res-inv", "--field", "p=3", "gamma[2]"}).code, 1);
  EXPECT_EQ(run({"decompose", "(X^2 ; Y)"}).code, 1);
  EXPECT_EQ(run({"res", "(x ; x)"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, JsonOutput) {
  const CliRun r = run({"--json", "theta-inv", "--field", "p=2", "x^2"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kind"], "theta-inv");
  EXPECT_EQ(j["field"], "p=2");
  EXPECT_EQ(j["result"], "x+1");
  EXPECT_EQ(j["checks"]["oracle"], true);
  EXPECT_EQ(j["checks"]["round_trip"], true);
}

TEST(Cli, ComposeInfersTarget) {
  EXPECT_EQ(run({"compose", "--field", "p=3", "s", "s"}).out, "(2*X ; 2*Y)\n");
  EXPECT_EQ(run({"compose", "--field", "p=3", "(x ; d+x)", "s"}).out, "(d+x ; 2*x)\n");
}

TEST(Cli, FuzzIsReproducible) {
  const CliRun a = run({"fuzz", "thm17", "--count", "30", "--seed", "5", "--field", "p=3"});
  const CliRun b = run({"fuzz", "thm17", "--count", "30", "--seed", "5", "--field", "p=3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "30/30 OK\n");
  EXPECT_EQ(a.out, b.out);
}

TEST(Fuzz, SerialAndParallelReportsAgree) {
  const auto& f = FieldSpec::prime(3);
  for (const auto& suite : fuzz_suites()) {
    const FuzzReport s = run_fuzz(suite, f, 20, 9, Execution::serial);
    const FuzzReport p = run_fuzz(suite, f, 20, 9, Execution::parallel);
    EXPECT_EQ(s.summary(), p.summary()) << suite;
    EXPECT_TRUE(s.ok()) << suite << ": " << s.summary();
  }
  EXPECT_THROW(run_fuzz("nope", f, 1, 0), precondition_error);
}
