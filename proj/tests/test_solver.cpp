#include <gtest/gtest.h>

#include <functional>

#include "fixtures.hpp"
#include "skein/skein.hpp"

using namespace skein;
using skein::testing::bundled;
using skein::testing::kHopf;
using skein::testing::kTrefoil;

TEST(DepthAtMost, Examples) {
  EXPECT_EQ(depth_at_most(OrientedDiagram::unlink(2), 0).verdict, DepthVerdict::True);
  EXPECT_EQ(depth_at_most(parse_pd(kHopf), 0).verdict, DepthVerdict::False);
  EXPECT_EQ(depth_at_most(parse_pd(kHopf), 1).verdict, DepthVerdict::True);
  EXPECT_EQ(depth_at_most(parse_pd(kTrefoil), 1).verdict, DepthVerdict::False);
  EXPECT_EQ(depth_at_most(parse_pd(kTrefoil), 2).verdict, DepthVerdict::True);
}

TEST(DepthAtMost, TinyBudgetGivesUnknown) {
  const auto r = depth_at_most(*bundled("K5a2").pd, 4, 2);
  EXPECT_EQ(r.verdict, DepthVerdict::Unknown);
  EXPECT_FALSE(r.witness);
}

TEST(DepthAtMost, Monotone) {
  for (const auto& row : skein::testing::bundled_rows()) {
    Solver solver;
    std::vector<DepthVerdict> v;
    for (int k = 0; k <= 6; ++k) v.push_back(solver.depth_at_most(*row.pd, k).verdict);
    for (int k = 1; k <= 6; ++k) {
      if (v[k - 1] == DepthVerdict::True) { EXPECT_EQ(v[k], DepthVerdict::True) << row.name << " k=" << k; }
      if (v[k] == DepthVerdict::False) { EXPECT_EQ(v[k - 1], DepthVerdict::False) << row.name << " k=" << k; }
    }
  }
}

TEST(ComputeTd, Examples) {
  const auto u = compute_td(OrientedDiagram::unlink(3));
  EXPECT_TRUE(u.exact());
  EXPECT_EQ(u.link_lower, 0);

  const auto t = compute_td(parse_pd(kTrefoil));
  EXPECT_TRUE(t.exact());
  EXPECT_EQ(t.link_lower, 2);
  EXPECT_EQ(t.diagram_upper, 2);
  ASSERT_TRUE(t.witness);
  EXPECT_EQ(t.witness->depth(), 2);

  const auto f = compute_td(parse_pd(skein::testing::kFigureEight));
  EXPECT_TRUE(f.exact());
  EXPECT_EQ(f.link_lower, 2);
}

TEST(ComputeTd, BundledTable) {
  for (const auto& row : skein::testing::bundled_rows()) {
    if (!row.expected) continue;
    const auto r = compute_td(*row.pd, {row.genus, row.braid_words});
    EXPECT_LE(r.link_lower, row.expected->lo) << row.name;
    EXPECT_GE(r.diagram_upper, row.expected->hi) << row.name;
    if (r.exact() && row.expected->lo == row.expected->hi) {
      EXPECT_EQ(r.link_lower, row.expected->lo) << row.name;
    }
    EXPECT_TRUE(r.exact()) << row.name << " " << r.render();
    if (r.witness) { EXPECT_EQ(r.witness->depth(), r.diagram_upper) << row.name; }
  }
}

TEST(ComputeTd, IntervalWhenBudgetRunsOut) {
  SolverConfig cfg;
  cfg.node_budget = 1;
  Solver solver(cfg);
  const auto r = solver.compute_td(*bundled("K5a1").pd);
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_EQ(r.render(), "[3, 4]");
  EXPECT_FALSE(r.exact());
}

TEST(ComputeTd, RenderFormats) {
  TdResult r;
  r.link_lower = 3;
  r.diagram_upper = 9;
  EXPECT_EQ(r.render(), "[3, 9]");
  r.diagram_upper = 3;
  EXPECT_EQ(r.render(), "3");
}

TEST(ComputeTd, MirrorPairsAgree) {
  for (const auto& row : skein::testing::bundled_rows()) {
    const auto a = compute_td(*row.pd);
    const auto b = compute_td(mirror(*row.pd));
    EXPECT_EQ(a.render(), b.render()) << row.name;
  }
}

TEST(ExtractTree, Trefoil) {
  const auto t = parse_pd(kTrefoil);
  const SkeinTree tree = extract_tree(t, 2);
  EXPECT_EQ(tree.depth(), 2);
  ASSERT_FALSE(tree.is_leaf());
  // one child is an unknot leaf, the other the Hopf link resolving in one step
  const SkeinTree* leaf = tree.switched->is_leaf() ? tree.switched.get() : tree.smoothed.get();
  const SkeinTree* hopf = tree.switched->is_leaf() ? tree.smoothed.get() : tree.switched.get();
  EXPECT_TRUE(leaf->is_leaf());
  EXPECT_EQ(leaf->components, 1);
  EXPECT_EQ(canonical_code(hopf->diagram), canonical_code(parse_pd(kHopf)));
  ASSERT_FALSE(hopf->is_leaf());
  EXPECT_TRUE(hopf->switched->is_leaf());
  EXPECT_TRUE(hopf->smoothed->is_leaf());
  EXPECT_EQ(hopf->switched->components + hopf->smoothed->components, 3);
  EXPECT_TRUE(verify_skein_tree(t, tree));
}

TEST(ExtractTree, HopfAndUnlink) {
  const SkeinTree h = extract_tree(parse_pd(kHopf), 1);
  EXPECT_EQ(h.depth(), 1);
  EXPECT_EQ(h.node_count(), 3U);
  const SkeinTree u = extract_tree(OrientedDiagram::unlink(2), 0);
  EXPECT_TRUE(u.is_leaf());
  EXPECT_EQ(u.components, 2);
  EXPECT_THROW(extract_tree(parse_pd(kTrefoil), 1), std::runtime_error);
}

TEST(VerifySkeinTree, AcceptsEveryWitness) {
  for (const auto& [name, d] : skein::testing::fixture_diagrams()) {
    const auto r = compute_td(d);
    ASSERT_TRUE(r.witness) << name;
    const TreeCheck c = verify_skein_tree(d, *r.witness);
    EXPECT_TRUE(c) << name << ": " << c.error;
    EXPECT_EQ(c.depth, r.witness->depth()) << name;
  }
}

TEST(VerifySkeinTree, RejectsTamperedTrees) {
  const auto t = parse_pd(kTrefoil);
  const SkeinTree tree = extract_tree(t, 2);

  SkeinTree wrong_root = tree;
  wrong_root.diagram = canonical_form(parse_pd(kHopf));
  EXPECT_FALSE(verify_skein_tree(t, wrong_root));

  SkeinTree swapped = tree;
  std::swap(swapped.switched, swapped.smoothed);
  EXPECT_FALSE(verify_skein_tree(t, swapped));

  SkeinTree early_leaf = tree;
  early_leaf.crossing = -1;
  early_leaf.components = 1;
  EXPECT_FALSE(verify_skein_tree(t, early_leaf));

  EXPECT_FALSE(verify_skein_tree(parse_pd(kHopf), tree));
}

TEST(Solver, MatchesBruteForceOnSmallFixtures) {
  int checked = 0;
  for (const auto& [name, d] : skein::testing::fixture_diagrams()) {
    if (simplify(d).crossing_count() > 4) continue;
    const auto r = compute_td(d);
    EXPECT_EQ(r.diagram_upper, skein::testing::brute_force_td(d, 4)) << name;
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(Solver, PositiveBraidsMatchFormula) {
  // every positive word on 2 or 3 strands, length <= 6, using all generators
  int checked = 0;
  for (int strands = 2; strands <= 3; ++strands) {
    for (int len = 1; len <= 6; ++len) {
      const int gens = strands - 1;
      int total = 1;
      for (int i = 0; i < len; ++i) total *= gens;
      for (int code = 0; code < total; ++code) {
        BraidWord w{strands, {}};
        for (int i = 0, c = code; i < len; ++i, c /= gens) w.letters.push_back(1 + c % gens);
        if (!braid_stats(w).all_indices_used) continue;
        const auto r = compute_td(braid_closure(w));
        EXPECT_TRUE(r.exact()) << w.to_string() << " " << r.render();
        EXPECT_EQ(r.link_lower, positive_braid_td(w)) << w.to_string();
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 60);
}

TEST(Solver, MixedWordBoundIsSoundButNotTight) {
  const auto w = parse_braid("p=3: 1 1 -2");
  EXPECT_EQ(mixed_braid_upper({w}), 2);
  const auto r = compute_td(braid_closure(w));
  EXPECT_EQ(r.render(), "1");
}
