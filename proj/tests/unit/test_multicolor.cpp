#include <gtest/gtest.h>

#include <bit>

#include "cannonball/errors.hpp"
#include "cannonball/multicolor.hpp"
#include "cannonball/verify.hpp"
#include "generators.hpp"

using namespace cannonball;

namespace {

CannonballGraph flat(std::vector<DemandEntry> demands) {
  return gen::make_graph(StackingSequence("A"), LayerBox{0, 4, 0, 4}, demands);
}

std::size_t at(const CannonballGraph& g, GridVertex v) { return *g.index_of(v); }

ColorSet palette_run(int palette, int from, int to) {
  ColorSet s;
  for (int j = from; j <= to; ++j) s.insert({palette, j});
  return s;
}

// Very heavy center (0,2,2) of base color 0 with one demand-3 neighbor of each
// other color, pairwise non-adjacent: kappa 5, D_1 = D_2 = D_3 = 2.
CannonballGraph star_of_threes(int center) {
  return flat({{{0, 2, 2}, center}, {{0, 3, 2}, 3}, {{0, 1, 3}, 3}, {{0, 2, 1}, 3}});
}

}  // namespace

TEST(ColorBound, Values) {
  EXPECT_EQ(color_bound(0), 10);
  EXPECT_EQ(color_bound(6), 21);
  EXPECT_EQ(color_bound(7), 23);  // ceil(77/6) = 13
  EXPECT_EQ(color_bound(12), 32);
}

TEST(ColorAssignment, Semantics) {
  ColorAssignment f;
  EXPECT_TRUE(f.empty());
  EXPECT_TRUE(f.colors({0, 0, 0}).empty());
  f.touch({0, 0, 0});
  EXPECT_FALSE(f.empty());
  f.add({0, 1, 0}, {2, 3});
  f.add({0, 1, 0}, {2, 3});
  EXPECT_EQ(f.count({0, 1, 0}), 1u);
  EXPECT_TRUE(PaletteColor({3, 1}).is_base());
  EXPECT_FALSE(PaletteColor({4, 1}).is_base());
}

TEST(Step0, Tables) {
  auto zero = flat({});
  auto s0 = step0(zero);
  for (int k : s0.kappa) EXPECT_EQ(k, 0);

  auto tri = flat({{{0, 1, 1}, 3}, {{0, 2, 1}, 4}, {{0, 1, 2}, 5}});
  auto st = step0(tri);
  EXPECT_EQ(st.kappa[at(tri, {0, 1, 1})], 4);
  EXPECT_EQ(st.kappa[at(tri, {0, 2, 1})], 4);
  EXPECT_EQ(st.kappa[at(tri, {0, 1, 2})], 4);
  EXPECT_EQ(st.base_cap, 4);
  EXPECT_EQ(st.base_color[at(tri, {0, 1, 1})], 3);
}

TEST(Step0, BaseColorsFollowClosedForm) {
  auto s = StackingSequence::fcc(4);
  auto g = gen::uniform_window(s, 4, 4, 1);
  auto st = step0(g);
  for (std::size_t i = 0; i < g.grid_size(); ++i) {
    EXPECT_EQ(st.base_color[i], base_color(g.vertex_at(i), s));
  }
}

TEST(Step1, LightAndHeavy) {
  auto tri = flat({{{0, 1, 1}, 3}, {{0, 2, 1}, 4}, {{0, 1, 2}, 5}});
  auto st = step0(tri);
  step1(st);
  // d=3 and d=4 are light under kappa 4; d=5 keeps one unit.
  EXPECT_EQ(st.assignment.colors({0, 1, 1}), palette_run(3, 1, 3));
  EXPECT_EQ(st.assignment.colors({0, 1, 2}), palette_run(1, 1, 4));
  ASSERT_EQ(st.v1.size(), 1u);
  EXPECT_EQ(tri.vertex_at(st.v1[0]), (GridVertex{0, 1, 2}));
  EXPECT_EQ(st.d1[st.v1[0]], 1);

  auto light = flat({{{0, 2, 2}, 2}, {{0, 3, 2}, 6}});  // kappa 3 at (0,2,2)
  auto sl = step0(light);
  step1(sl);
  EXPECT_EQ(sl.assignment.colors({0, 2, 2}), palette_run(0, 1, 2));
  EXPECT_EQ(sl.d1[at(light, {0, 2, 2})], 0);
}

TEST(Step2, LoneVertex) {
  auto g = flat({{{0, 2, 2}, 9}});
  auto st = step0(g);
  step1(st);
  EXPECT_EQ(st.assignment.count({0, 2, 2}), 3u);
  step2(st);
  const auto i = at(g, {0, 2, 2});
  EXPECT_EQ(st.d2[i], 3);
  auto colors = st.assignment.colors({0, 2, 2});
  EXPECT_EQ(colors.size(), 6u);
  for (int c = 1; c <= 3; ++c) EXPECT_TRUE(colors.contains({c, 1}));
  EXPECT_TRUE(st.bound_risk.empty());
}

TEST(Step2, IdentityWithoutVeryHeavy) {
  auto tri = flat({{{0, 1, 1}, 3}, {{0, 2, 1}, 4}, {{0, 1, 2}, 5}});
  auto st = step0(tri);
  step1(st);
  auto before = st.assignment;
  step2(st);
  EXPECT_EQ(st.assignment, before);
  EXPECT_EQ(st.d2, st.d1);
}

TEST(Step2, GrantsFiveOfSixFreeIndices) {
  auto g = star_of_threes(12);
  const auto v = at(g, {0, 2, 2});
  auto st = step0(g);
  ASSERT_EQ(st.kappa[v], 5);
  ASSERT_EQ(st.base_cap, 5);
  for (int c = 1; c <= 3; ++c) ASSERT_EQ(palette_deficit_at(g, v, c, 5), 2);
  step1(st);
  step2(st);
  ColorSet borrowed;
  for (const auto& c : st.assignment.colors({0, 2, 2})) {
    if (c.palette != 0) borrowed.insert(c);
  }
  EXPECT_EQ(borrowed, (ColorSet{{1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}}));
  EXPECT_EQ(st.d2[v], 2);
  EXPECT_TRUE(st.bound_risk.empty());
}

TEST(Step2, SupplyShortfallEscalates) {
  // Center demand 13 raises kappa to the cap 6 while the color-c neighbors
  // block indices 1..5: only three indices are free below the cap.
  auto g = flat({{{0, 2, 2}, 13}, {{0, 3, 2}, 5}, {{0, 1, 3}, 5}, {{0, 2, 1}, 5}});
  auto result = solve(g);
  ASSERT_EQ(result.stats.bound_risk.size(), 1u);
  EXPECT_EQ(result.stats.bound_risk[0].step, 2);
  EXPECT_EQ(result.stats.bound_risk[0].shortfall, 3);
  EXPECT_TRUE(verify(g, result.assignment).ok);
  EXPECT_LE(static_cast<int>(result.stats.colors_used), result.stats.bound_value);
}

TEST(Step3, IdentityWithoutDegreeFour) {
  auto g = flat({{{0, 2, 2}, 9}});
  auto st = step0(g);
  step1(st);
  step2(st);
  auto before = st.assignment;
  step3(st);
  EXPECT_EQ(st.assignment, before);
  EXPECT_TRUE(st.step3_choices.empty());
}

namespace {

// Heavy center v = (1,3,3) on "ABC" with two in-layer neighbors a, b and one
// neighbor above and below that touch neither a nor b. Every demand is 9, so
// kappa = 6 and d1 = 3 everywhere and G2 is a star centered at v.
struct HeavyStar {
  CannonballGraph graph;
  GridVertex center, a, b, up, down;
};

HeavyStar heavy_star(GridVertex a_offset, GridVertex b_offset) {
  StackingSequence s("ABC");
  GridVertex v{1, 3, 3};
  GridVertex a{1, v.u + a_offset.u, v.v + a_offset.v};
  GridVertex b{1, v.u + b_offset.u, v.v + b_offset.v};
  std::vector<GridVertex> ups, downs;
  for (const auto& w : grid_neighbors(v, s)) {
    if (w.layer == 1 || are_adjacent(w, a, s) || are_adjacent(w, b, s)) continue;
    (w.layer == 2 ? ups : downs).push_back(w);
  }
  EXPECT_EQ(ups.size(), 1u);
  EXPECT_EQ(downs.size(), 1u);
  HeavyStar h{gen::make_graph(s, LayerBox{0, 6, 0, 6},
                              {{v, 9}, {a, 9}, {b, 9}, {ups.at(0), 9}, {downs.at(0), 9}}),
              v, a, b, ups.at(0), downs.at(0)};
  return h;
}

void check_star(const HeavyStar& h, int expected_free) {
  auto st = run_pipeline(h.graph);
  const auto& g = h.graph;
  const auto c = at(g, h.center);
  EXPECT_EQ(st.kappa[c], 6);
  EXPECT_EQ(st.d1[c], 3);
  for (auto w : {h.a, h.b, h.up, h.down}) {
    EXPECT_EQ(st.d2[at(g, w)], 3);
    EXPECT_EQ(st.d3[at(g, w)], 3);
  }
  ASSERT_EQ(st.step3_choices.size(), 1u);
  const auto& ch = st.step3_choices[0];
  EXPECT_EQ(ch.vertex, h.center);
  EXPECT_EQ(std::popcount(ch.candidates), expected_free);
  EXPECT_FALSE(ch.candidates & (1u << st.base_color[c]));
  for (auto w : {h.a, h.b, h.up, h.down}) {
    EXPECT_FALSE(ch.candidates & (1u << st.base_color[at(g, w)]));
  }
  // Equal free counts, so the smallest candidate wins.
  EXPECT_EQ(ch.palette, std::countr_zero(ch.candidates));
  EXPECT_EQ(ch.deficit, 6);
  EXPECT_EQ(ch.granted, 3);
  EXPECT_EQ(st.d3[c], 0);
  EXPECT_TRUE(verify(g, st.assignment).ok);
}

}  // namespace

TEST(Step3, OppositeNeighborsLeaveTwoFreeColors) {
  auto h = heavy_star({0, 1, 0}, {0, -1, 0});
  auto st = run_pipeline(h.graph);
  EXPECT_EQ(st.base_color[at(h.graph, h.a)], st.base_color[at(h.graph, h.b)]);
  check_star(h, 2);
}

TEST(Step3, WideAngleLeavesOneFreeColor) {
  auto h = heavy_star({0, 1, 0}, {0, -1, 1});
  check_star(h, 1);
}

TEST(Step4, IsolatedResidualAndEmpty) {
  auto g = flat({{{0, 2, 2}, 9}});
  auto st = run_pipeline(g);
  ASSERT_EQ(st.v3.size(), 1u);
  EXPECT_EQ(st.d3[st.v3[0]], 3);
  std::map<int, int> per_palette;
  for (const auto& c : st.assignment.colors({0, 2, 2})) {
    if (!c.is_base()) per_palette[c.palette]++;
  }
  EXPECT_EQ(per_palette.size(), 2u);
  std::vector<int> sizes;
  for (auto [p, n] : per_palette) sizes.push_back(n);
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{1, 2}));

  auto tri = flat({{{0, 1, 1}, 3}, {{0, 2, 1}, 4}, {{0, 1, 2}, 4}});
  auto st2 = run_pipeline(tri);
  EXPECT_TRUE(st2.v3.empty());
  EXPECT_TRUE(st2.step_grants[4].empty());
}

TEST(Solve, SpecExamples) {
  auto lone = solve(flat({{{0, 2, 2}, 9}}));
  EXPECT_EQ(lone.stats.colors_used, 9u);
  EXPECT_EQ(lone.stats.omega.omega(), 9);

  auto tri = solve(flat({{{0, 1, 1}, 3}, {{0, 2, 1}, 4}, {{0, 1, 2}, 5}}));
  EXPECT_EQ(tri.stats.colors_used, 12u);
  EXPECT_EQ(tri.stats.step_colors[4], 1u);

  auto empty = solve(flat({}));
  EXPECT_EQ(empty.stats.colors_used, 0u);
  EXPECT_TRUE(empty.assignment.empty());
}

TEST(Solve, CliquesAreOptimal) {
  gen::Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> demands(static_cast<std::size_t>(rng.uniform(1, 4)));
    for (auto& d : demands) d = rng.uniform(1, 30);
    auto g = gen::clique_instance(demands);
    auto r = solve(g);
    ASSERT_EQ(static_cast<int>(r.stats.colors_used), clique_numbers(g).omega());
  }
}

TEST(NaiveSolve, Examples) {
  EXPECT_EQ(naive_solve(flat({{{0, 2, 2}, 9}})).stats.colors_used, 9u);
  EXPECT_EQ(naive_solve(gen::clique_instance({7, 7, 7, 7})).stats.colors_used, 28u);
  EXPECT_EQ(naive_solve(flat({})).stats.colors_used, 0u);
  auto g = gen::clique_instance({2, 5});
  EXPECT_TRUE(verify(g, naive_solve(g).assignment).ok);
}

TEST(Solve, RandomInstancesRespectBound) {
  gen::Rng rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = gen::random_instance(rng, 4, 8, 50, rng.chance(0.5) ? 1.0 : 0.5);
    auto r = solve(g);
    ASSERT_TRUE(verify(g, r.assignment).ok);
    ASSERT_EQ(r.stats.colors_used, count_colors(r.assignment));
    if (r.stats.bound_risk.empty()) {
      ASSERT_LE(static_cast<int>(r.stats.colors_used), r.stats.bound_value);
    }
  }
}

TEST(InducedDegree, CountsMembers) {
  auto g = flat({{{0, 2, 2}, 1}});
  std::vector<char> members(g.grid_size(), 0);
  const auto v = at(g, {0, 2, 2});
  members[at(g, {0, 3, 2})] = 1;
  members[at(g, {0, 4, 4})] = 1;
  EXPECT_EQ(induced_degree(g, v, members), 1u);
}
