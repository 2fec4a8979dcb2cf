#include <gtest/gtest.h>

#include <random>

#include "cayci/torsion.hpp"

namespace cayci {
namespace {

FiniteAbelianGroup group(std::vector<std::int64_t> moduli) { return FiniteAbelianGroup(std::move(moduli)); }

GroupHom inversion(const FiniteAbelianGroup& g) {
  std::vector<Element> images;
  for (int i = 0; i < g.rank(); ++i) images.push_back(g.negate(g.generator(i)));
  return GroupHom(g, g, images);
}

TEST(Torsion, ElementaryGrowth) {
  const auto z3 = group({3}), z33 = group({3, 3});
  const GroupHom ext = extend_automorphism(inclusion(z3, z33), inversion(z3));
  for (const auto& x : z33.elements()) EXPECT_EQ(ext(x), (Element{(3 - x[0]) % 3, x[1]}));
}

TEST(Torsion, TwoGrowsToFour) {
  const auto z2 = group({2}), z4 = group({4});
  EXPECT_EQ(extend_automorphism(inclusion(z2, z4), GroupHom::identity(z2)), GroupHom::identity(z4));
}

TEST(Torsion, UnchangedStep) {
  const auto g = group({4, 3});
  const auto auts = automorphisms(g);
  for (const auto& alpha : auts) EXPECT_EQ(extend_automorphism(GroupHom::identity(g), alpha), alpha);
}

TEST(Torsion, UnsupportedGrowthNamesPrime) {
  try {
    extend_automorphism(inclusion(group({3}), group({9})), GroupHom::identity(group({3})));
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
  EXPECT_THROW(extend_automorphism(inclusion(group({4}), group({8})), GroupHom::identity(group({4}))),
               std::invalid_argument);
  EXPECT_THROW(extend_automorphism(inclusion(group({2}), group({2, 2, 2})), GroupHom::identity(group({2}))),
               std::invalid_argument);
}

TEST(Torsion, ChainExamples) {
  const auto chain = AbelianChain::by_inclusion({group({2}), group({4}), group({4, 3})});
  const auto stages = chain_extend(chain, GroupHom::identity(group({2})));
  ASSERT_EQ(stages.size(), 3u);
  EXPECT_EQ(stages.back(), GroupHom::identity(group({4, 3})));

  const auto chain3 = AbelianChain::by_inclusion({group({3}), group({3, 3}), group({3, 3, 5})});
  const auto inv = chain_extend(chain3, inversion(group({3})));
  const auto& last = inv.back();
  for (const auto& x : last.source().elements()) EXPECT_EQ(last(x), (Element{(3 - x[0]) % 3, x[1], x[2]}));
}

TEST(Torsion, ChainPreservesConnectionSet) {
  const auto chain = AbelianChain::by_inclusion({group({3}), group({3, 3}), group({3, 3, 5})});
  const auto stages = chain_extend(chain, inversion(group({3})));
  const GroupHom embed = chain.embedding(0, 2);
  std::set<Element> s, image;
  for (const Element& x : {Element{1}, Element{2}}) {
    s.insert(embed(x));
    image.insert(stages.back()(embed(x)));
  }
  EXPECT_EQ(s, image);
}

TEST(Torsion, RestrictionIdentityOnRandomAutomorphisms) {
  std::mt19937_64 rng(3);
  const auto chain = AbelianChain::by_inclusion({group({2, 3}), group({4, 3}), group({4, 3, 3}), group({4, 3, 3, 5})});
  const auto auts = automorphisms(chain.groups().front());
  for (int trial = 0; trial < 8; ++trial) {
    const auto& alpha = auts[rng() % auts.size()];
    const auto stages = chain_extend(chain, alpha);
    for (std::size_t i = 0; i < stages.size(); ++i) {
      EXPECT_TRUE(stages[i].is_bijective());
      EXPECT_TRUE(is_homomorphism_exhaustive(stages[i]));
      for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(restricts_to(stages[i], chain.embedding(j, i), stages[j]));
    }
  }
}

TEST(Torsion, ChainValidation) {
  EXPECT_THROW(AbelianChain::by_inclusion({group({6})}), std::invalid_argument);
  EXPECT_THROW(AbelianChain({group({2}), group({4})}, {}), std::invalid_argument);
  EXPECT_THROW(AbelianChain({group({2}), group({4})}, {GroupHom(group({2}), group({4}), {{0}})}), std::invalid_argument);
  EXPECT_THROW(AbelianChain::by_inclusion({group({4}), group({2})}), std::invalid_argument);
  EXPECT_THROW(chain_extend(AbelianChain::by_inclusion({group({3})}), GroupHom(group({3}), group({3}), {{0}})),
               std::invalid_argument);
}

TEST(Torsion, InclusionMatchesFactors) {
  const GroupHom i = inclusion(group({2, 3}), group({4, 3, 3}));
  EXPECT_EQ(i.images(), (std::vector<Element>{{2, 0, 0}, {0, 1, 0}}));
  EXPECT_TRUE(i.is_injective());
}

}  // namespace
}  // namespace cayci
