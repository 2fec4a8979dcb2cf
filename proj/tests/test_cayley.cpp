#include <gtest/gtest.h>

#include "cayci/cayley.hpp"
#include "support.hpp"

namespace cayci {
namespace {

using testing::make_set;

TEST(ConnectionSet, ValidateClosesUnderNegation) {
  const auto s = make_set({{2, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(s.size(), 6u);
  EXPECT_TRUE(s.contains(int_vector({-2, -1})));
  EXPECT_EQ(s.mode(), Mode::Undirected);
}

TEST(ConnectionSet, DirectedSingletonKept) {
  const auto s = make_set({{1, 0}}, Mode::Directed);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_FALSE(s.contains(int_vector({-1, 0})));
}

TEST(ConnectionSet, Rejections) {
  EXPECT_THROW(make_set({{0, 0}}), std::invalid_argument);
  EXPECT_THROW(ConnectionSet::validate({}, 2, Mode::Undirected), std::invalid_argument);
  EXPECT_THROW(ConnectionSet::validate({int_vector({1})}, 2, Mode::Undirected), std::invalid_argument);
}

TEST(ConnectionSet, ValidateIsIdempotentAndDeduplicates) {
  const auto s = make_set({{1, 2}, {-1, -2}, {1, 2}, {0, 3}});
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(ConnectionSet::validate(s.vectors(), 2, Mode::Undirected), s);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_TRUE(lex_less(s.vectors()[i - 1], s.vectors()[i]));
}

TEST(ConnectionSet, TransformedAndMax) {
  const auto s = make_set({{1, 0}, {0, 1}});
  const auto t = s.transformed(int_matrix({{1, 1}, {0, 1}}));
  EXPECT_EQ(t, make_set({{1, 0}, {1, 1}}));
  EXPECT_EQ(make_set({{2, -7}}).max_abs_entry(), 7);
}

TEST(ComponentCount, Examples) {
  EXPECT_EQ(component_count(make_set({{2, 0}, {0, 1}, {2, 1}})), LatticeIndex(Integer(2)));
  EXPECT_FALSE(component_count(make_set({{1, 0}})).is_finite());
  EXPECT_EQ(component_count(make_set({{4, 0}, {0, 1}})), LatticeIndex(Integer(4)));
  EXPECT_EQ(component_count(make_set({{2, 0}, {0, 1}}, Mode::Directed)), LatticeIndex(Integer(2)));
}

TEST(ComponentCount, AgreesWithTorusComponents) {
  // With k | m, m Z^n lies inside the span, so the torus has exactly k components.
  struct Case {
    ConnectionSet s;
    std::int64_t m;
  };
  const std::vector<Case> cases = {{make_set({{2, 0}, {0, 1}, {2, 1}}), 6},
                                   {make_set({{4, 0}, {0, 1}}), 12},
                                   {make_set({{1, 1}, {1, -1}}), 4},
                                   {make_set({{3, 0}, {0, 2}}), 12}};
  for (const auto& c : cases)
    EXPECT_EQ(Integer(torus(c.s, c.m).connected_components()), component_count(c.s).value());
}

TEST(Ball, Examples) {
  const auto path = ball(make_set({{1}}), 2);
  EXPECT_EQ(path.order(), 5);
  EXPECT_EQ(path.arcs().size(), 8u);
  const auto star = ball(make_set({{1, 0}, {0, 1}}), 1);
  EXPECT_EQ(star.order(), 5);
  EXPECT_EQ(star.arcs().size(), 8u);
  EXPECT_EQ(ball(make_set({{1, 0}, {0, 1}}), 2).order(), 13);
  EXPECT_THROW(ball(make_set({{1}}), -1), std::invalid_argument);
}

TEST(Ball, Monotone) {
  const auto s = make_set({{2, 1}, {0, 1}, {1, 3}});
  for (int r = 0; r < 4; ++r) {
    const auto small = ball(s, r);
    const auto large = ball(s, r + 1);
    std::vector<int> where;
    for (const auto& label : small.labels()) {
      const auto v = large.find(label);
      ASSERT_TRUE(v);
      where.push_back(*v);
    }
    const auto induced = large.induced(where);
    EXPECT_EQ(induced.labels(), small.labels());
    EXPECT_EQ(induced.arcs().size(), small.arcs().size());
    for (const auto& a : small.arcs()) EXPECT_TRUE(induced.has_arc(a.from, a.to));
  }
}

TEST(Ball, DirectedSetUsesUndirectedDistance) {
  const auto b = ball(make_set({{1}}, Mode::Directed), 2);
  EXPECT_EQ(b.order(), 5);
  EXPECT_EQ(b.arcs().size(), 4u);
  EXPECT_FALSE(b.is_symmetric());
}

TEST(Torus, Examples) {
  const auto grid = torus(make_set({{1, 0}, {0, 1}}), 4);
  EXPECT_EQ(grid.order(), 16);
  for (int v = 0; v < grid.order(); ++v) EXPECT_EQ(grid.out_neighbors(v).size(), 4u);
  EXPECT_TRUE(grid.is_symmetric());
  const auto cycle = torus(make_set({{1}}), 5);
  EXPECT_EQ(cycle.order(), 5);
  EXPECT_EQ(cycle.arcs().size(), 10u);
  const auto six = torus(make_set({{2, 0}, {0, 1}, {2, 1}}), 6);
  EXPECT_EQ(six.order(), 36);
  for (int v = 0; v < six.order(); ++v) EXPECT_EQ(six.out_neighbors(v).size(), 6u);
}

TEST(Torus, ModulusBound) {
  try {
    torus(make_set({{3, 0}}), 6);
    FAIL() << "expected a modulus error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("2*max|s| = 6"), std::string::npos);
  }
}

TEST(ResidueWindow, Examples) {
  const auto r = residue_window(ResidueSet::make(5, {1, 4}, Mode::Undirected), 5);
  const int zero = *r.find({0}), one = *r.find({1}), two = *r.find({2});
  EXPECT_TRUE(r.has_arc(zero, one));
  EXPECT_FALSE(r.has_arc(zero, two));
  const auto r2 = residue_window(ResidueSet::make(5, {2, 3}, Mode::Undirected), 5);
  EXPECT_TRUE(r2.has_arc(*r2.find({0}), *r2.find({2})));
  const auto parity = residue_window(ResidueSet::make(2, {1}, Mode::Undirected), 2);
  EXPECT_EQ(parity.order(), 5);
  EXPECT_EQ(parity.arcs().size(), 12u);
  EXPECT_THROW(residue_window(ResidueSet::make(5, {1}, Mode::Undirected), 4), std::invalid_argument);
  EXPECT_THROW(ResidueSet::make(5, {5}, Mode::Undirected), std::invalid_argument);
  EXPECT_THROW(ResidueSet::make(5, {}, Mode::Undirected), std::invalid_argument);
  EXPECT_TRUE(ResidueSet::make(5, {0}, Mode::Undirected).contains(10));
  EXPECT_FALSE(ResidueSet::make(5, {0}, Mode::Undirected).contains(0));
}

TEST(FiniteGraph, ComponentsAndLookup) {
  const FiniteGraph g({{0}, {1}, {2}}, {{0, 1, -1}, {1, 0, -1}});
  EXPECT_EQ(g.connected_components(), 2);
  EXPECT_FALSE(g.find({7}));
  EXPECT_THROW(FiniteGraph({{0}}, {{0, 3, -1}}), std::invalid_argument);
}

}  // namespace
}  // namespace cayci
