#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "published_tables.hpp"
#include "test_support.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "faddeeva");
  std::ostringstream out, err;
  const int code = faddeeva::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

}  // namespace

TEST(Cli, EvalErfAtOneOne) {
  const auto r = run({"eval", "--func", "erf", "--x", "1", "--y", "1", "--method", "rational"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1.316151281697949E0 + 1.904534692378354E-1i\n");
}

TEST(Cli, EvalAtOrigin) {
  const auto r = run({"eval", "--func", "erf", "--x", "0", "--y", "0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0E0 + 0E0i\n");
}

TEST(Cli, EvalNegativeArgumentsUseReflection) {
  const auto r = run({"eval", "--func", "w", "--x", "1", "--y", "-1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 7), "-1.1370");
  const auto strict = run({"eval", "--func", "w", "--x", "1", "--y", "-1", "--strict-domain"});
  EXPECT_EQ(strict.code, 3);
  EXPECT_NE(strict.err.find("error:"), std::string::npos);
}

TEST(Cli, EvalVoigtAndOracle) {
  const auto v = run({"eval", "--func", "voigt", "--x", "1", "--y", "1"});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(v.out.substr(0, 4), "K = ");
  const auto o = run({"eval", "--func", "erf", "--x", "1", "--y", "1", "--method", "oracle"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out.substr(0, 10), "1.31615128");
}

TEST(Cli, TableCsvMatchesPublished) {
  const auto r = run({"table", "--id", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = split(r.out, '\n');
  ASSERT_EQ(lines.size(), 18u);
  EXPECT_EQ(lines[0], "x,y,rational,reference,delta");
  for (std::size_t i = 0; i < 17; ++i) {
    const auto f = split(lines[i + 1], ',');
    ASSERT_EQ(f.size(), 5u);
    EXPECT_LE(test_support::ulp_distance(test_support::parse(f[2]),
                                         test_support::parse(published_real[i].rational)),
              2u)
        << lines[i + 1];
    EXPECT_LE(test_support::ulp_distance(test_support::parse(f[3]),
                                         test_support::parse(published_real[i].reference)),
              2u)
        << lines[i + 1];
  }
}

TEST(Cli, ParameterOverrides) {
  const auto a = run({"eval", "--x", "1", "--y", "1", "-N", "30", "--tau-m", "13", "--sigma", "1.5"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out.substr(0, 10), "1.31615128");
  EXPECT_EQ(run({"eval", "--x", "1", "--y", "1", "-N", "0"}).code, 2);
  EXPECT_EQ(run({"eval", "--x", "1", "--y", "1", "--tau-m", "-3"}).code, 2);
}

TEST(Cli, ArgumentErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"eval", "--x", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--func", "gamma", "--x", "1", "--y", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--method", "guess", "--x", "1", "--y", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--format", "json", "--x", "1", "--y", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--x", "one", "--y", "1"}).code, 2);
  EXPECT_EQ(run({"table", "--id", "3"}).code, 2);
  EXPECT_EQ(run({"errmap", "--spacing", "cubic"}).code, 2);
  EXPECT_EQ(run({"errmap", "--nx", "1"}).code, 2);
  EXPECT_EQ(run({"bench", "--points", "10"}).code, 2);
  EXPECT_EQ(run({"bench", "--points", "10000", "--repeats", "4"}).code, 2);
}

TEST(Cli, NumericErrorsExitThree) {
  const auto r = run({"eval", "--func", "w", "--x", "0", "--y", "-30"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  EXPECT_EQ(run({"eval", "--func", "voigt", "--x", "1", "--y", "-1"}).code, 3);
}

TEST(Cli, Idempotent) {
  const std::vector<std::string> args = {"errmap", "--func", "w", "--nx", "4", "--ny", "3",
                                         "--format", "csv", "--threads", "2"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"table", "--id", "2"}).out, run({"table", "--id", "2"}).out);
}

TEST(Cli, ErrmapTty) {
  const auto r = run({"errmap", "--spacing", "log", "--nx", "3", "--ny", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("max delta_re: "), std::string::npos);
}

TEST(Cli, BenchSeparatesTiming) {
  const auto r = run({"bench", "--points", "10000", "--repeats", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto cut = r.out.find("[timing]");
  ASSERT_NE(cut, std::string::npos);
  const auto again = run({"bench", "--points", "10000", "--repeats", "3"});
  EXPECT_EQ(r.out.substr(0, cut), again.out.substr(0, again.out.find("[timing]")));
}

TEST(Cli, OutputFileWrittenWhole) {
  const auto dir = std::filesystem::temp_directory_path() / "faddeeva_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "table.csv").string();
  std::filesystem::remove(path);
  ASSERT_EQ(run({"table", "--format", "csv", "-o", path}).code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run({"table", "--format", "csv"}).out);

  const auto failed = (dir / "failed.csv").string();
  std::filesystem::remove(failed);
  EXPECT_EQ(run({"eval", "--func", "w", "--x", "0", "--y", "-30", "-o", failed}).code, 3);
  EXPECT_FALSE(std::filesystem::exists(failed));
  EXPECT_FALSE(std::filesystem::exists(failed + ".tmp"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, UnwritableOutputExitsOne) {
  EXPECT_EQ(run({"table", "-o", "/nonexistent-dir/x.csv"}).code, 1);
}
