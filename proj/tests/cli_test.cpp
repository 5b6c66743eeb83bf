#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

namespace sopra {
namespace {

using namespace sopra::testing;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sopra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  std::string config(const std::string& text, const std::string& name = "scenario.ini") {
    const auto p = dir_ / name;
    write_file(p, text);
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  TempDir dir_;
};

TEST_F(CliTest, ValidatePrintsResolvedConfig) {
  const auto r = cli({"validate", "--config", config("[scenario]\nagent_count = 12\n")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("agent_count = 12"), std::string::npos);
  EXPECT_NE(r.out.find("p_transmit = 1"), std::string::npos);
  EXPECT_EQ(parse_config(r.out).agent_count, 12);
}

TEST_F(CliTest, UsageErrorsExit64) {
  EXPECT_EQ(cli({"validate"}).code, 64);
  EXPECT_EQ(cli({}).code, 64);
  EXPECT_EQ(cli({"fly"}).code, 64);
  const auto c = config("");
  EXPECT_EQ(cli({"experiment", "--config", c, "--variant", "hallways", "--levels", "1", "--reps", "1", "--out",
                 path("t.csv")})
                .code,
            64);
}

TEST_F(CliTest, HelpExitsZero) {
  const auto r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("experiment"), std::string::npos);
}

TEST_F(CliTest, RunIsReproducible) {
  const auto c = config("[scenario]\ndays = 1\n");
  ASSERT_EQ(cli({"run", "--config", c, "--seed", "42", "--out", path("a.csv")}).code, 0);
  ASSERT_EQ(cli({"run", "--config", c, "--seed", "42", "--out", path("b.csv")}).code, 0);
  const std::string a = read_file(path("a.csv"));
  EXPECT_EQ(a, read_file(path("b.csv")));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 481);
  ASSERT_EQ(cli({"run", "--config", c, "--seed", "43", "--out", path("c.csv")}).code, 0);
  EXPECT_NE(a, read_file(path("c.csv")));
}

TEST_F(CliTest, RunSeedDefaultsToConfigSeed) {
  const auto c = config("[scenario]\ndays = 1\nseed = 42\n");
  ASSERT_EQ(cli({"run", "--config", c, "--out", path("a.csv")}).code, 0);
  ASSERT_EQ(cli({"run", "--config", c, "--seed", "42", "--out", path("b.csv")}).code, 0);
  EXPECT_EQ(read_file(path("a.csv")), read_file(path("b.csv")));
}

TEST_F(CliTest, ExperimentWritesTable) {
  const auto c = config("[scenario]\ndays = 1\n");
  const auto r = cli({"experiment", "--config", c, "--variant", "coffee-places", "--levels", "1,2", "--reps", "3",
                      "--out", path("t.csv"), "--threads", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string t = read_file(path("t.csv"));
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 1 + 6 + 4);
  EXPECT_NE(t.find("coffee-places,2,mean,"), std::string::npos);
  ASSERT_EQ(cli({"experiment", "--config", c, "--variant", "coffee-places", "--levels", "1,2", "--reps", "3",
                 "--out", path("u.csv"), "--threads", "1"})
                .code,
            0);
  EXPECT_EQ(t, read_file(path("u.csv")));
}

TEST_F(CliTest, ConfigErrorsMapToExitCodes) {
  EXPECT_EQ(cli({"validate", "--config", config("[scenario]\np_transmit = x\n")}).code, 2);
  const auto r = cli({"validate", "--config", config("[scenario]\np_transmit = 1.5\n")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("p_transmit"), std::string::npos);
  EXPECT_EQ(cli({"validate", "--config", config("[scenario]\nspeed = 2\n")}).code, 4);
  EXPECT_EQ(cli({"validate", "--config", path("missing.ini")}).code, 5);
  EXPECT_EQ(cli({"experiment", "--config", config(""), "--variant", "office-size", "--levels", "0", "--reps", "1",
                 "--out", path("t.csv")})
                .code,
            3);
}

TEST_F(CliTest, UnwritableOutputExitsFive) {
  const auto c = config("[scenario]\ndays = 1\n");
  EXPECT_EQ(cli({"run", "--config", c, "--out", path("nope/a.csv")}).code, 5);
}

TEST_F(CliTest, InputConfigIsNotModified) {
  const std::string text = "# mine\n[scenario]\ndays = 1\n";
  const auto c = config(text);
  cli({"run", "--config", c, "--out", path("a.csv")});
  cli({"validate", "--config", c});
  EXPECT_EQ(read_file(c), text);
}

}  // namespace
}  // namespace sopra
