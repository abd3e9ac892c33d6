#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "expriordan/format.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "expriordan");
  std::ostringstream out, err;
  const int code = expriordan::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

TEST(Cli, ArrayPascal) {
  const Result r = run({"array", "pascal", "--order", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).back(), "1 4 6 4 1");
}

TEST(Cli, ArrayIdentityFromSpec) {
  const Result r = run({"array", "--g", "1", "--f", "0,1", "--order", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
}

TEST(Cli, ArrayJsonRoundTrips) {
  const Result r = run({"--format", "json", "array", "gompertz", "--order", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = expriordan::matrix_from_json(r.out);
  EXPECT_EQ(m.matrix.row(3), (std::vector<expriordan::Rational>{1, -4, 0, 1, 0, 0, 0}));
}

TEST(Cli, ProduceReportsParams) {
  Result r = run({"produce", "tanh", "--order", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 8u);
  EXPECT_EQ(lines(r.out).back(), "tridiagonal: (alpha, beta, gamma, delta) = (0, -2, 0, -1)");
  r = run({"produce", "algebraic", "--order", "6"});
  EXPECT_EQ(lines(r.out).back(), "not tridiagonal");
}

TEST(Cli, Hankel) {
  const Result r = run({"hankel", "tanh", "--n", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0, -1, 0, 144, 0, -1194393600\n");
  const Result s = run({"hankel", "--seq", "1,1,2,5,14", "--n", "2"});
  EXPECT_EQ(s.out, "1, 1, 1\n");
  EXPECT_NE(run({"hankel", "--seq", "1,1", "--n", "2"}).code, 0);
}

TEST(Cli, Poly) {
  const Result r = run({"poly", "algebraic", "--n", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).back(), "P_6(x) = x^6 - 105x^4 + 1575x^2 - 1575");
  const Result t = run({"poly", "tanh", "--n", "4", "--inverse"});
  EXPECT_EQ(lines(t.out).back(), "P_4(x) = x^4 + 20x^2 + 24");
}

TEST(Cli, MomentsAndCf) {
  Result r = run({"moments", "arctan", "--n", "6"});
  EXPECT_EQ(r.out, "1, 0, 2, 0, 16, 0, 272\n");
  r = run({"moments", "--b", "0,0,0,0", "--lambda", "1,1,1", "--n", "4"});
  EXPECT_EQ(r.out, "1, 0, 1, 0, 2\n");
  r = run({"cf", "gompertz", "--depth", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "b: 0, -1, -2, -3\nlambda: -1, -2, -3, -4\n");
}

TEST(Cli, PlotData) {
  Result r = run({"plotdata", "cos_sin", "--kind", "parametric", "--samples", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 51u);
  EXPECT_EQ(rows[0], "x,y");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double x = 0, y = 0;
    ASSERT_EQ(std::sscanf(rows[i].c_str(), "%lf,%lf", &x, &y), 2);
    EXPECT_NEAR(x * x + y * y, 1.0, 1e-12);
  }
  r = run({"plotdata", "gompertz", "--t-min", "-1", "--t-max", "1", "--samples", "3"});
  EXPECT_EQ(lines(r.out)[2], "0,0,1");
  r = run({"plotdata", "tanh", "--kind", "parametric", "--samples", "3"});
  EXPECT_EQ(lines(r.out)[2], "1,0");
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(run({"array", "erf", "--order", "8"}).out, run({"array", "erf", "--order", "8"}).out);
}

TEST(Cli, Errors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"array", "nope"},
           {"array", "--g", "2", "--f", "0,1"},
           {"array", "--g", "1", "--f", "0,x"},
           {"array", "--g", "1"},
           {"plotdata", "tanh", "--t-min", "1", "--t-max", "0"},
           {"plotdata", "tanh", "--samples", "1"},
           {"cf", "--seq", "1,0,0,0,0", "--depth", "2"},
           {"--format", "yaml", "array", "tanh"},
           {"frobnicate"},
       }) {
    const Result r = run(args);
    EXPECT_NE(r.code, 0) << args[0];
    EXPECT_FALSE(r.err.empty()) << args[0];
  }
}

TEST(Cli, CatalogList) {
  const Result r = run({"catalog", "list"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 10u);
  EXPECT_EQ(r.out.rfind("tanh ", 0), 0u);
}

}  // namespace
