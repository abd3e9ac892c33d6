#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "expriordan/catalog.hpp"
#include "expriordan/elementary.hpp"
#include "expriordan/riordan.hpp"
#include "oracles.hpp"

namespace {

using namespace expriordan;
namespace el = expriordan::elementary;

ExpRiordan from_pair(const oracle::RandomPair& p) {
  const std::size_t order = p.g.size() - 1;
  return build(Series(order, p.g), Series(order, p.f));
}

TEST(ExpRiordan, NormalizationIsChecked) {
  EXPECT_THROW(build(Series(3, {2}), Series::identity(3)), std::invalid_argument);
  EXPECT_THROW(build(Series::constant(3, 1), Series(3, {1, 1})), std::invalid_argument);
  EXPECT_THROW(build(Series::constant(3, 1), Series(3, {0, 2})), std::invalid_argument);
  EXPECT_THROW(build(Series::constant(3, 1), Series::identity(4)), std::invalid_argument);
}

TEST(ExpRiordan, PascalIsBinomial) {
  const ExpRiordan p = build(el::exp(8), Series::identity(8));
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(p(n, k), Rational(binomial(n, k)));
  }
}

TEST(ExpRiordan, MatrixMatchesOracle) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const oracle::RandomPair p = oracle::random_pair(rng, 8);
    const auto rows = oracle::riordan_rows(p.g, p.f);
    const ExpRiordan a = from_pair(p);
    for (std::size_t n = 0; n < 8; ++n) {
      for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(a(n, k), rows[n][k]);
    }
  }
}

TEST(ExpRiordan, GroupLawOnRandomPairs) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const ExpRiordan a = from_pair(oracle::random_pair(rng, 9));
    const ExpRiordan b = from_pair(oracle::random_pair(rng, 9));
    const ExpRiordan c = from_pair(oracle::random_pair(rng, 9));
    EXPECT_EQ(multiply(a, b).matrix(), mat_mul(a.matrix(), b.matrix()));
    EXPECT_EQ(inverse(a).matrix(), mat_inverse(a.matrix()));
    EXPECT_EQ(multiply(a, inverse(a)), identity_array(8));
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
  }
}

TEST(ExpRiordan, OrderMismatch) {
  EXPECT_THROW(multiply(identity_array(3), identity_array(4)), std::invalid_argument);
}

TEST(ExpRiordan, RowPolynomials) {
  const PolynomialFamily fam = row_polynomials(build(el::exp(4), Series::identity(4)));
  ASSERT_EQ(fam.size(), 5u);
  EXPECT_EQ(fam[2], (std::vector<Rational>{1, 2, 1}));
  EXPECT_EQ(fam[4], (std::vector<Rational>{1, 4, 6, 4, 1}));
}

// Any f with f(0)=0, f'(0)=1 gives [f', f] in the derivative subgroup; the
// subgroup must be closed under the group operations.
TEST(ExpRiordan, DerivativeSubgroupClosure) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const oracle::RandomPair p = oracle::random_pair(rng, 10);
    const Series f(9, p.f);
    const ExpRiordan a = build(derive(f), f.truncated(8));
    const oracle::RandomPair q = oracle::random_pair(rng, 10);
    const Series h(9, q.f);
    const ExpRiordan b = build(derive(h), h.truncated(8));
    ASSERT_TRUE(is_derivative_subgroup(a));
    EXPECT_TRUE(is_derivative_subgroup(multiply(a, b)));
    EXPECT_TRUE(is_derivative_subgroup(inverse(a)));
  }
  EXPECT_FALSE(is_derivative_subgroup(build(el::exp(6), Series::identity(6))));
}

TEST(ExpRiordan, CatalogClosure) {
  const std::size_t order = 10;
  std::vector<ExpRiordan> members;
  for (const auto& e : entries()) {
    if (e.derivative_subgroup) members.push_back(e.array(order));
  }
  for (const auto& a : members) {
    EXPECT_TRUE(is_derivative_subgroup(inverse(a)));
    for (const auto& b : members) EXPECT_TRUE(is_derivative_subgroup(multiply(a, b)));
  }
}

TEST(ExpRiordan, Checkerboard) {
  const std::size_t order = 10;
  for (const auto& e : entries()) {
    const ExpRiordan a = e.array(order);
    EXPECT_EQ(is_checkerboard(a), e.checkerboard) << e.id;
    if (e.checkerboard) {
      EXPECT_TRUE(is_checkerboard(inverse(a))) << e.id;
      for (std::size_t n = 0; n <= order; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
          if ((n + k) % 2 == 1) EXPECT_EQ(a(n, k), 0) << e.id;
        }
      }
    }
  }
}

}  // namespace
