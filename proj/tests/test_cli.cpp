#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fdsum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, Sigma) {
  const auto r = run({"sigma", "--t", "0", "--args", "1", "1", "--mod", "3", "--check"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["schema"], "1");
  EXPECT_EQ(j["value"], "1/9");
  EXPECT_EQ(j["check"], "passed");
  EXPECT_EQ(parse(run({"sigma", "--t", "-1", "--args", "1", "--mod", "5"}))["value"], "-1/5");
}

TEST(Cli, CountsAndPartitions) {
  EXPECT_EQ(parse(run({"ehrhart", "--parts", "3", "5", "--t", "15", "--check"}))["count"], "13");
  EXPECT_EQ(parse(run({"ehrhart", "--parts", "3", "5", "--t", "3", "--interior"}))["count"], "0");
  EXPECT_EQ(parse(run({"partitions", "--parts", "3", "5", "--t", "16", "--restricted", "--check"}))["count"], "1");
  EXPECT_EQ(parse(run({"partitions", "--parts", "3", "5", "--t", "8"}))["count"], "1");
}

TEST(Cli, FrobeniusAndBounds) {
  const auto j = parse(run({"frobenius", "--parts", "3", "5", "7", "--gaps", "--check"}));
  EXPECT_EQ(j["f"], "19");
  EXPECT_EQ(j["g"], "4");
  EXPECT_EQ(j["gaps"], nlohmann::json::array({"1", "2", "4"}));
  const auto b = run({"bounds", "--parts", "3", "5", "7", "--check"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(parse(b)["bounds"]["g_selmer"], "13");
}

TEST(Cli, ResidueAndTextOutput) {
  const auto r = run({"residue", "--parts", "3", "5", "--prime", "--text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("coefficients: -4/15 1/15"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("schema: 1"), std::string::npos);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--suite", "gessel2d", "--max", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["failed"], "0");
  const auto z = run({"verify", "--suite", "zagier", "--max", "4"});
  EXPECT_EQ(z.code, 1);
  EXPECT_NE(parse(z)["failures"].size(), 0u);
}

TEST(Cli, ErrorsAndUsage) {
  const auto e = run({"ehrhart", "--parts", "2", "4", "--t", "3"});
  EXPECT_EQ(e.code, 1);
  EXPECT_EQ(parse(e)["error"]["message"], "unsupported: non-simple poles");
  const auto g = run({"frobenius", "--parts", "4", "6"});
  EXPECT_EQ(g.code, 1);
  EXPECT_EQ(parse(g)["error"]["kind"], "computation");
  const auto u = run({"sigma", "--t", "1"});
  EXPECT_EQ(u.code, 2);
  EXPECT_TRUE(u.out.empty());
  EXPECT_NE(u.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
