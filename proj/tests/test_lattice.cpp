#include <gtest/gtest.h>

#include <random>

#include "cayci/intlin.hpp"
#include "cayci/lattice.hpp"
#include "support.hpp"

namespace cayci {
namespace {

using testing::random_matrix;
using testing::random_unimodular;

Lattice two_z_by_z() { return Lattice::span({int_vector({2, 0}), int_vector({0, 1}), int_vector({2, 1})}, 2); }

TEST(Lattice, SpanExamples) {
  EXPECT_EQ(two_z_by_z(), Lattice::standard(2, 2));
  EXPECT_TRUE(equal(two_z_by_z().basis(), int_matrix({{2, 0}, {0, 1}})));
  EXPECT_TRUE(equal(Lattice::span({int_vector({1, 0}), int_vector({0, 1})}, 2).basis(), identity_matrix(2)));
  const Lattice z = Lattice::span({int_vector({2}), int_vector({3})}, 1);
  EXPECT_TRUE(equal(z.basis(), int_matrix({{1}})));
}

TEST(Lattice, SpanRejectsBadInput) {
  EXPECT_THROW(Lattice::span({int_vector({0, 0})}, 2), std::invalid_argument);
  EXPECT_THROW(Lattice::span({int_vector({1, 0, 0})}, 2), std::invalid_argument);
  EXPECT_THROW(Lattice::from_basis(int_matrix({{1, 2}, {2, 4}})), std::invalid_argument);
}

TEST(Lattice, BasisIsCanonical) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix b = random_matrix(rng, 3, 3, -4, 4);
    if (det<Integer>(b) == 0) continue;
    const IntMatrix u = random_unimodular(rng, 3);
    EXPECT_EQ(Lattice::from_basis(b), Lattice::from_basis(b * u));
  }
}

TEST(Lattice, IndexExamples) {
  EXPECT_EQ(index(two_z_by_z()), LatticeIndex(Integer(2)));
  EXPECT_EQ(index(Lattice::standard(2, 1)), LatticeIndex(Integer(1)));
  const LatticeIndex inf = index(Lattice::span({int_vector({1, 0})}, 2));
  EXPECT_FALSE(inf.is_finite());
  EXPECT_EQ(inf, LatticeIndex::infinite());
  EXPECT_EQ(inf.to_string(), "INFINITE");
  EXPECT_THROW(inf.value(), std::logic_error);
}

TEST(Lattice, IndexMultiplicativity) {
  std::mt19937_64 rng(4);
  int checked = 0;
  while (checked < 30) {
    const IntMatrix m = random_matrix(rng, 3, 3, -3, 3);
    const IntMatrix c = random_matrix(rng, 3, 3, -2, 2);
    if (det<Integer>(m) == 0 || det<Integer>(c) == 0) continue;
    const Lattice outer = Lattice::from_basis(m);
    const Lattice inner = Lattice::from_basis(m * c);
    for (Index j = 0; j < 3; ++j) ASSERT_TRUE(outer.contains(IntVector((m * c).col(j))));
    const Integer relative = abs(det<Integer>(c));
    EXPECT_EQ(index(inner).value(), index(outer).value() * relative);
    ++checked;
  }
}

TEST(Lattice, SimultaneousBasisExamples) {
  const auto sb = simultaneous_basis(two_z_by_z());
  EXPECT_EQ(sb.factors, (std::vector<Integer>{1, 2}));
  EXPECT_TRUE(is_unimodular<Integer>(sb.y));
  EXPECT_EQ(simultaneous_basis(Lattice::standard(3, 1)).factors, (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(simultaneous_basis(Lattice::span({int_vector({2, 0})}, 2)).factors, (std::vector<Integer>{2}));
}

TEST(Lattice, SimultaneousBasisRoundTrip) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const Index cols = 1 + trial % 3;
    IntMatrix g = random_matrix(rng, 3, cols, -5, 5);
    if (rank<Integer>(g) < cols) continue;
    const Lattice l = Lattice::from_basis(g);
    const auto sb = simultaneous_basis(l);
    ASSERT_TRUE(equal(IntMatrix(sb.y * sb.y_inverse), identity_matrix(3)));
    IntMatrix scaled(3, static_cast<Index>(sb.factors.size()));
    for (std::size_t i = 0; i < sb.factors.size(); ++i) {
      scaled.col(static_cast<Index>(i)) = sb.y.col(static_cast<Index>(i)) * sb.factors[i];
      if (i > 0) EXPECT_EQ(sb.factors[i] % sb.factors[i - 1], 0);
    }
    EXPECT_EQ(Lattice::from_basis(scaled), l);
  }
}

TEST(Lattice, StandardizeExamples) {
  EXPECT_TRUE(equal(standardize(two_z_by_z()), identity_matrix(2)));
  const Lattice swapped = Lattice::span({int_vector({1, 0}), int_vector({0, 2})}, 2);
  const IntMatrix sigma = standardize(swapped);
  EXPECT_TRUE(equal(sigma, int_matrix({{0, 1}, {1, 0}})));
  const Lattice diagonal = Lattice::span({int_vector({1, 1}), int_vector({1, -1})}, 2);
  const IntMatrix tau = standardize(diagonal);
  EXPECT_TRUE(is_unimodular<Integer>(tau));
  EXPECT_EQ(diagonal.image(tau), Lattice::standard(2, 2));
}

TEST(Lattice, StandardizeRandomSquareFree) {
  std::mt19937_64 rng(9);
  for (const long long k : {2, 3, 5, 6, 10, 30}) {
    for (int trial = 0; trial < 6; ++trial) {
      const Index n = 2 + trial % 2;
      const IntMatrix alpha = random_unimodular(rng, n);
      const Lattice l = Lattice::standard(n, k).image(alpha);
      const IntMatrix sigma = standardize(l);
      ASSERT_TRUE(is_unimodular<Integer>(sigma));
      EXPECT_EQ(l.image(sigma), Lattice::standard(n, k));
    }
  }
}

TEST(Lattice, StandardizeRejections) {
  EXPECT_THROW(standardize(Lattice::span({int_vector({4, 0}), int_vector({0, 1})}, 2)), std::invalid_argument);
  EXPECT_THROW(standardize(Lattice::span({int_vector({1, 0})}, 2)), std::invalid_argument);
  EXPECT_THROW(standardize(Lattice::span({int_vector({2})}, 1)), std::invalid_argument);
}

TEST(Lattice, Coordinates) {
  const Lattice l = two_z_by_z();
  EXPECT_TRUE(equal(*coordinates(l, int_vector({0, 0})), int_vector({0, 0})));
  EXPECT_TRUE(equal(*coordinates(l, int_vector({2, 1})), int_vector({1, 1})));
  EXPECT_FALSE(coordinates(l, int_vector({1, 0})));
  EXPECT_TRUE(l.contains(int_vector({-4, 7})));
  EXPECT_FALSE(l.contains(int_vector({3, 7})));
}

TEST(Lattice, Saturation) {
  const Lattice l = Lattice::span({int_vector({2, 2})}, 2);
  EXPECT_EQ(saturation(l), Lattice::span({int_vector({1, 1})}, 2));
  EXPECT_EQ(saturation(two_z_by_z()), Lattice::standard(2, 1));
}

}  // namespace
}  // namespace cayci
