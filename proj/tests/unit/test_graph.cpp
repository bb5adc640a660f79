#include <gtest/gtest.h>

#include "cannonball/errors.hpp"
#include "cannonball/graph.hpp"
#include "cannonball/verify.hpp"
#include "generators.hpp"

using namespace cannonball;

namespace {

CannonballGraph flat(std::vector<DemandEntry> demands, int side = 4) {
  return gen::make_graph(StackingSequence("A"), LayerBox{0, side, 0, side}, demands);
}

}  // namespace

TEST(BuildGraph, EmptyAndSingleton) {
  auto empty = flat({});
  EXPECT_TRUE(empty.support().empty());
  EXPECT_EQ(empty.total_demand(), 0);

  auto one = flat({{{0, 2, 2}, 5}});
  ASSERT_EQ(one.support().size(), 1u);
  EXPECT_EQ(one.demand({0, 2, 2}), 5);
  EXPECT_EQ(one.demand({0, 1, 1}), 0);
  EXPECT_EQ(one.demand({0, 50, 50}), 0);
}

TEST(BuildGraph, RejectsBadInput) {
  EXPECT_THROW(flat({{{0, 1, 1}, 2}, {{0, 1, 1}, 3}}), InputError);
  EXPECT_THROW(flat({{{0, 1, 1}, -1}}), InputError);
  EXPECT_THROW(flat({{{0, 9, 1}, 1}}), InputError);
  EXPECT_THROW(flat({{{1, 1, 1}, 1}}), InputError);
}

TEST(BuildGraph, PaddedGridAddsRing) {
  auto g = flat({{{0, 0, 0}, 1}}, 2);
  EXPECT_EQ(g.region().size(), 9u);
  EXPECT_EQ(g.grid_size(), 25u);
  auto i = g.index_of({0, 0, 0});
  ASSERT_TRUE(i.has_value());
  EXPECT_EQ(g.neighbors_at(*i).size(), 6u);

  auto bare = build_graph(GridRegion(StackingSequence("A"), LayerBox{0, 2, 0, 2}),
                          std::vector<DemandEntry>{{{0, 0, 0}, 1}}, Padding::none);
  EXPECT_EQ(bare.grid_size(), 9u);
}

TEST(CliqueNumbers, Tetrahedron) {
  auto g = gen::clique_instance({1, 2, 3, 4});
  auto w = clique_numbers(g);
  EXPECT_EQ(w, (CliqueNumbers{4, 7, 9, 10}));
  EXPECT_EQ(w.omega(), 10);
}

TEST(CliqueNumbers, EmptyAndNonAdjacent) {
  EXPECT_EQ(clique_numbers(flat({})), (CliqueNumbers{0, 0, 0, 0}));
  auto g = flat({{{0, 0, 0}, 6}, {{0, 3, 3}, 8}});
  EXPECT_EQ(clique_numbers(g), (CliqueNumbers{8, 8, 8, 8}));
}

TEST(CliqueNumbers, ChainAndBruteForceAgreement) {
  gen::Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = gen::random_instance(rng, 4, 5, 20, 0.5);
    auto w = clique_numbers(g);
    EXPECT_LE(w.omega1, w.omega2);
    EXPECT_LE(w.omega2, w.omega3);
    EXPECT_LE(w.omega3, w.omega4);
    ASSERT_EQ(w, brute_cliques(g)) << g.stacking().str();
  }
}

TEST(Kappa, SpecExamples) {
  auto lone = flat({{{0, 2, 2}, 9}});
  EXPECT_EQ(kappa(lone, {0, 2, 2}), 3);
  EXPECT_EQ(kappa(lone, {0, 2, 3}), 3);
  EXPECT_EQ(kappa(lone, {0, 0, 0}), 0);

  auto tri = flat({{{0, 1, 1}, 3}, {{0, 2, 1}, 4}, {{0, 1, 2}, 5}});
  EXPECT_EQ(kappa(tri, {0, 1, 1}), 4);
  EXPECT_EQ(kappa(tri, {0, 2, 1}), 4);
  EXPECT_EQ(kappa(tri, {0, 1, 2}), 4);
}

TEST(Kappa, OffGridThrows) {
  auto g = flat({{{0, 1, 1}, 3}}, 2);
  EXPECT_THROW(kappa(g, {0, 10, 10}), DomainError);
  // Unpadded corner vertex with a single neighbor has no triangle.
  auto strip = build_graph(GridRegion(StackingSequence("A"), LayerBox{0, 1, 0, 0}),
                           std::vector<DemandEntry>{{{0, 0, 0}, 2}}, Padding::none);
  EXPECT_THROW(kappa(strip, {0, 0, 0}), DomainError);
}

TEST(Kappa, BoundsProperty) {
  gen::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gen::random_instance(rng, 4, 6, 50, 0.6);
    const int cap = ceil_div(clique_numbers(g).omega3, 3);
    for (std::size_t i = 0; i < g.grid_size(); ++i) {
      const int k = kappa_at(g, i);
      ASSERT_LE(k, cap);
      ASSERT_GE(k, ceil_div(g.demand_at(i), 3));
    }
  }
}

TEST(Classify, Examples) {
  auto lone = flat({{{0, 2, 2}, 9}});
  EXPECT_EQ(classify(lone, {0, 2, 2}), VertexClass::very_heavy);
  auto tri = flat({{{0, 1, 1}, 3}, {{0, 2, 1}, 4}, {{0, 1, 2}, 5}});
  EXPECT_EQ(classify(tri, {0, 1, 2}), VertexClass::heavy);
  EXPECT_EQ(classify(tri, {0, 1, 1}), VertexClass::light);
  EXPECT_EQ(classify(tri, {0, 3, 3}), VertexClass::light);
  EXPECT_EQ(classify(0, 0), VertexClass::light);
  EXPECT_EQ(classify(8, 4), VertexClass::heavy);
  EXPECT_EQ(classify(9, 4), VertexClass::very_heavy);
  EXPECT_EQ(to_string(VertexClass::very_heavy), "very_heavy");
}

TEST(PaletteDeficit, Examples) {
  // v = (0,2,2), bc 0. Color-1 neighbors: (0,1,2), (0,3,2).
  auto g = flat({{{0, 2, 2}, 13}, {{0, 1, 2}, 2}, {{0, 3, 2}, 0}});
  EXPECT_EQ(base_color({0, 2, 2}, StackingSequence("A")), 0);
  const int k = kappa(g, {0, 2, 2});
  EXPECT_EQ(k, 5);
  EXPECT_EQ(palette_deficit(g, {0, 2, 2}, 1), 3);
  EXPECT_EQ(palette_deficit(g, {0, 2, 2}, 2), k);
  EXPECT_THROW(palette_deficit(g, {0, 2, 2}, 0), DomainError);
  EXPECT_THROW(palette_deficit(g, {0, 2, 2}, 7), DomainError);
}

TEST(PaletteDeficit, DefinitionExample) {
  // kappa 5 with color-1 neighbor demands {2, 3, 0, 0}: 3D window, v on layer 1.
  StackingSequence s("ABC");
  GridVertex v{1, 2, 2};
  std::vector<DemandEntry> demands{{v, 12}};
  std::vector<int> wanted{2, 3};
  int color = base_color(v, s) == 1 ? 2 : 1;
  for (const auto& w : grid_neighbors(v, s)) {
    if (base_color(w, s) == color && !wanted.empty()) {
      demands.push_back({w, wanted.back()});
      wanted.pop_back();
    }
  }
  auto g = gen::make_graph(s, LayerBox{0, 4, 0, 4}, demands);
  ASSERT_EQ(kappa(g, v), 5);
  EXPECT_EQ(palette_deficit(g, v, color), 2);
}

TEST(PaletteDeficit, VeryHeavyPositive) {
  gen::Rng rng(8);
  int seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto g = gen::random_instance(rng, 4, 6, 50, 0.25);
    for (auto i : g.support()) {
      const int k = kappa_at(g, i);
      if (classify(g.demand_at(i), k) != VertexClass::very_heavy) continue;
      ++seen;
      for (int c = 0; c < 4; ++c) {
        if (c == g.base_color_at(i)) continue;
        EXPECT_GT(palette_deficit_at(g, i, c, k), 0);
      }
    }
  }
  EXPECT_GT(seen, 0);
}
