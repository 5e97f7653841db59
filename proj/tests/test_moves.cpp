#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "skein/skein.hpp"

using namespace skein;
using skein::testing::kHopf;
using skein::testing::kTrefoil;

TEST(SwitchCrossing, Examples) {
  const auto t = parse_pd(kTrefoil);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(writhe(switch_crossing(t, i)), 1);
    EXPECT_EQ(canonical_code(switch_crossing(switch_crossing(t, i), i)), canonical_code(t));
  }
  const auto h = switch_crossing(parse_pd(kHopf), 0);
  EXPECT_EQ(h.crossing_count(), 2);
  EXPECT_EQ(writhe(h), 0);
  EXPECT_EQ(component_count(h), 2);
  EXPECT_THROW(switch_crossing(t, 3), std::out_of_range);
  EXPECT_THROW(switch_crossing(t, -1), std::out_of_range);
}

TEST(SmoothCrossing, Examples) {
  const auto h = parse_pd(kHopf);
  for (int i = 0; i < 2; ++i) {
    const auto s = smooth_crossing(h, i);
    EXPECT_EQ(s.crossing_count(), 1);
    EXPECT_EQ(component_count(s), 1);
  }
  const auto t = parse_pd(kTrefoil);
  for (int i = 0; i < 3; ++i) {
    const auto s = smooth_crossing(t, i);
    EXPECT_EQ(s.crossing_count(), 2);
    EXPECT_EQ(component_count(s), 2);
    EXPECT_EQ(canonical_code(s), canonical_code(parse_pd(kHopf)));
  }
  const auto kink = parse_pd("X[1,2,2,1]");
  const auto s = smooth_crossing(kink, 0);
  EXPECT_TRUE(s.is_crossingless());
  EXPECT_EQ(s.free_loops(), 2);
  EXPECT_THROW(smooth_crossing(kink, 1), std::out_of_range);
}

TEST(SkeinMoves, StructuralInvariantsOnEveryFixtureCrossing) {
  for (const auto& [name, d] : skein::testing::fixture_diagrams()) {
    const auto comp = arc_components(d);
    for (int i = 0; i < d.crossing_count(); ++i) {
      const Crossing& x = d.crossings()[i];
      const Passages p(x);
      const bool self = comp[p.under_in] == comp[p.over_in];

      const auto sw = switch_crossing(d, i);
      EXPECT_EQ(sw.crossing_count(), d.crossing_count()) << name << " #" << i;
      EXPECT_EQ(component_count(sw), component_count(d)) << name << " #" << i;
      EXPECT_EQ(writhe(sw), writhe(d) - 2 * x.sign) << name << " #" << i;
      EXPECT_EQ(sw.crossings()[i].sign, -x.sign);

      const auto sm = smooth_crossing(d, i);
      EXPECT_EQ(sm.crossing_count(), d.crossing_count() - 1) << name << " #" << i;
      EXPECT_EQ(component_count(sm), component_count(d) + (self ? 1 : -1)) << name << " #" << i;
      EXPECT_TRUE(is_planar(sm)) << name << " #" << i;
    }
  }
}

TEST(Simplify, Examples) {
  const auto kink = simplify(parse_pd("X[1,2,2,1]"));
  EXPECT_TRUE(kink.is_crossingless());
  EXPECT_EQ(kink.free_loops(), 1);

  const auto bigon = braid_closure(parse_braid("p=2: 1 -1"));
  EXPECT_EQ(component_count(bigon), 2);
  const auto b = simplify(bigon);
  EXPECT_TRUE(b.is_crossingless());
  EXPECT_EQ(b.free_loops(), 2);

  const auto unknot_bigon = parse_pd("X[1,1,2,4];X[2,3,3,4]");
  EXPECT_EQ(component_count(unknot_bigon), 1);
  const auto u = simplify(unknot_bigon);
  EXPECT_TRUE(u.is_crossingless());
  EXPECT_EQ(u.free_loops(), 1);

  const auto t = parse_pd(kTrefoil);
  EXPECT_EQ(canonical_code(simplify(t)), canonical_code(t));
}

TEST(Simplify, RemovesNugatoryCrossings) {
  // a generator used once in a braid word closes to a nugatory crossing
  const auto trefoil = parse_pd(kTrefoil);
  for (const char* w : {"p=3: 1 1 1 2", "p=3: 1 1 1 -2", "p=3: 1 -2 1 1"}) {
    const auto s = simplify(braid_closure(parse_braid(w)));
    EXPECT_EQ(s.crossing_count(), 3) << w;
    EXPECT_EQ(homfly(s), homfly(trefoil)) << w;
  }
}

TEST(Simplify, IdempotentPreservesComponentsAndHomfly) {
  for (const auto& [name, d] : skein::testing::fixture_diagrams()) {
    const auto s = simplify(d);
    EXPECT_LE(s.crossing_count(), d.crossing_count()) << name;
    EXPECT_EQ(canonical_code(simplify(s)), canonical_code(s)) << name;
    EXPECT_EQ(component_count(s), component_count(d)) << name;
    EXPECT_EQ(homfly(s), homfly(d)) << name;
  }
}

TEST(Kink, AddsOneCrossingAndKeepsHomfly) {
  const auto t = parse_pd(kTrefoil);
  for (int arc = 1; arc <= t.arc_count(); ++arc)
    for (bool over : {false, true})
      for (int sign : {1, -1}) {
        const auto k = add_kink(t, arc, over, sign);
        EXPECT_TRUE(is_planar(k));
        EXPECT_EQ(writhe(k), 3 + sign);
        EXPECT_EQ(homfly(k), homfly(t));
        EXPECT_EQ(canonical_code(simplify(k)), canonical_code(t));
      }
  EXPECT_THROW(add_kink(t, 0, false, 1), std::invalid_argument);
  EXPECT_THROW(add_kink(t, 7, false, 1), std::out_of_range);
}

TEST(NonReducingMoves, PreserveHomfly) {
  for (const auto& [name, d] : skein::testing::fixture_diagrams()) {
    if (d.crossing_count() > 5) continue;
    const auto p = homfly(d);
    for (const auto& n : r3_neighbours(d)) EXPECT_EQ(homfly(n), p) << name;
    for (const auto& n : r2_creation_neighbours(d)) {
      EXPECT_EQ(n.crossing_count(), d.crossing_count() + 2) << name;
      EXPECT_EQ(homfly(n), p) << name;
    }
  }
}

TEST(RecognizeUnlink, Examples) {
  const auto two = recognize_unlink(OrientedDiagram::unlink(2));
  EXPECT_EQ(two.status, UnlinkStatus::Unlink);
  EXPECT_EQ(two.components, 2);

  EXPECT_EQ(recognize_unlink(parse_pd(kTrefoil)).status, UnlinkStatus::NotUnlink);

  const auto bigon = recognize_unlink(braid_closure(parse_braid("p=2: 1 -1")));
  EXPECT_EQ(bigon.status, UnlinkStatus::Unlink);
  EXPECT_EQ(bigon.components, 2);
}

TEST(RecognizeUnlink, RandomUnlinkDiagrams) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    OrientedDiagram cur = OrientedDiagram::unlink(1 + trial % 2);
    for (int step = 0; step < 12; ++step) cur = skein::testing::random_reidemeister_step(cur, rng, 7);
    const auto v = recognize_unlink(cur);
    EXPECT_NE(v.status, UnlinkStatus::NotUnlink) << to_pd_text(cur);
    if (v.is_unlink()) { EXPECT_EQ(v.components, component_count(cur)); }
  }
}

TEST(RecognizeUnlink, ComponentCountAlwaysMatches) {
  for (const auto& [name, d] : skein::testing::fixture_diagrams()) {
    const auto v = recognize_unlink(d);
    if (v.is_unlink()) { EXPECT_EQ(v.components, component_count(d)) << name; }
  }
}
