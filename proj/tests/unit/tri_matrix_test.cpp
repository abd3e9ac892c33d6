#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "expriordan/tri_matrix.hpp"

namespace {

using namespace expriordan;

TriMatrix random_unit_lower(std::mt19937& rng, std::size_t dim) {
  std::uniform_int_distribution<int> num(-6, 6);
  TriMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m.set(i, i, 1);
    for (std::size_t j = 0; j < i; ++j) m.set(i, j, num(rng));
  }
  return m;
}

TEST(TriMatrix, BandIsEnforced) {
  TriMatrix m(3);
  EXPECT_THROW(m.set(0, 1, 1), std::invalid_argument);
  EXPECT_NO_THROW(m.set(0, 1, 0));
  EXPECT_THROW(m.set(3, 0, 1), std::out_of_range);
  TriMatrix h(3, Band::lower_hessenberg);
  EXPECT_NO_THROW(h.set(0, 1, 1));
  EXPECT_THROW(h.set(0, 2, 1), std::invalid_argument);
  EXPECT_THROW(TriMatrix(0), std::invalid_argument);
}

TEST(TriMatrix, IdentityAndLeading) {
  const TriMatrix id = TriMatrix::identity(4);
  EXPECT_TRUE(id.is_unit_lower_triangular());
  EXPECT_TRUE(id.is_tridiagonal());
  EXPECT_EQ(id.leading(2), TriMatrix::identity(2));
  EXPECT_THROW(id.leading(5), std::invalid_argument);
}

TEST(TriMatrix, InverseRoundTrip) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const TriMatrix a = random_unit_lower(rng, 7);
    EXPECT_EQ(mat_mul(a, mat_inverse(a)), TriMatrix::identity(7));
    EXPECT_EQ(mat_mul(mat_inverse(a), a), TriMatrix::identity(7));
  }
}

TEST(TriMatrix, InverseRejectsSingularAndHessenberg) {
  TriMatrix a(2);
  a.set(0, 0, 1);
  EXPECT_THROW(mat_inverse(a), std::domain_error);
  EXPECT_THROW(mat_inverse(TriMatrix(2, Band::lower_hessenberg)), std::invalid_argument);
}

TEST(TriMatrix, MultiplicationAssociates) {
  std::mt19937 rng(5);
  const TriMatrix a = random_unit_lower(rng, 6), b = random_unit_lower(rng, 6), c = random_unit_lower(rng, 6);
  EXPECT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
  EXPECT_THROW(mat_mul(a, TriMatrix(5)), std::invalid_argument);
}

TEST(TriMatrix, ShiftDropsFirstRow) {
  TriMatrix a(3);
  a.set(0, 0, 1);
  a.set(1, 0, 2);
  a.set(1, 1, 3);
  a.set(2, 0, 4);
  a.set(2, 1, 5);
  a.set(2, 2, 6);
  const TriMatrix s = shift_apply(a);
  EXPECT_EQ(s.band(), Band::lower_hessenberg);
  EXPECT_EQ(s.row(0), (std::vector<Rational>{2, 3, 0}));
  EXPECT_EQ(s.row(1), (std::vector<Rational>{4, 5, 6}));
  EXPECT_EQ(s.row(2), (std::vector<Rational>{0, 0, 0}));
  EXPECT_EQ(a.column(0), (std::vector<Rational>{1, 2, 4}));
}

TEST(TriMatrix, Tridiagonality) {
  TriMatrix h(3, Band::lower_hessenberg);
  h.set(0, 1, 1);
  h.set(1, 0, 2);
  EXPECT_TRUE(h.is_tridiagonal());
  h.set(2, 0, 1);
  EXPECT_FALSE(h.is_tridiagonal());
}

}  // namespace
