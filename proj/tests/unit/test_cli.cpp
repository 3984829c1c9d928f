#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "kmforms");
  args.insert(args.begin() + 1, "--no-cache");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = kmforms::cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Delta5Csv) {
  const auto r = run({"delta5", "--trace", "6", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1,1,1,64\n"), std::string::npos);
  EXPECT_NE(r.out.find("1,-1,1,-64\n"), std::string::npos);
}

TEST(Cli, WeylCount) {
  const auto r = run({"weyl", "2", "--max-len", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count 53"), std::string::npos);
}

TEST(Cli, VerifyListsAndRuns) {
  auto r = run({"verify", "--list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("A13"), std::string::npos);
  EXPECT_NE(r.out.find("eta9-identity"), std::string::npos);
  r = run({"verify", "eta9-identity", "--order", "6"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  r = run({"verify", "A99"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"weyl", "3"}).code, 2);
  EXPECT_EQ(run({"delta5", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"jacobi", "phi9_9"}).code, 2);
}

TEST(Cli, JacobiAndMultiplicities) {
  auto r = run({"jacobi", "phi0_1", "--order", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("108"), std::string::npos);
  r = run({"multiplicities", "1", "--lambda", "6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("-540"), std::string::npos);
}
