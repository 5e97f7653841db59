#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "skein/skein.hpp"

using namespace skein;
using skein::testing::kHopf;
using skein::testing::kTrefoil;

TEST(ParsePd, Trefoil) {
  const auto d = parse_pd(kTrefoil);
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(d.free_loops(), 0);
  EXPECT_EQ(component_count(d), 1);
  EXPECT_EQ(writhe(d), 3);
}

TEST(ParsePd, Hopf) {
  const auto d = parse_pd(kHopf);
  EXPECT_EQ(d.crossing_count(), 2);
  EXPECT_EQ(component_count(d), 2);
  EXPECT_EQ(writhe(d), 2);
}

TEST(ParsePd, FreeLoopsAndWhitespace) {
  const auto d = parse_pd(" O ; O ");
  EXPECT_TRUE(d.is_crossingless());
  EXPECT_EQ(d.free_loops(), 2);
  EXPECT_EQ(component_count(d), 2);
  EXPECT_EQ(parse_pd("X[1, 4, 2, 5]; X[3,6,4,1] ;X[5,2,6,3]"), parse_pd(kTrefoil));
}

TEST(ParsePd, SyntaxErrors) {
  EXPECT_THROW(parse_pd(""), InputError);
  EXPECT_THROW(parse_pd("X[1,2,3]"), InputError);
  EXPECT_THROW(parse_pd("Y[1,2,2,1]"), InputError);
  EXPECT_THROW(parse_pd("X[1,4,2,5];;X[3,6,4,1]"), InputError);
}

TEST(ParsePd, MultiplicityErrorNamesLabel) {
  try {
    // label 3 occurs once, label 6 three times
    parse_pd("X[1,4,2,5];X[3,6,4,1];X[5,2,6,6]");
    FAIL() << "expected an error";
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_TRUE(msg.find("label 3") != std::string::npos || msg.find("label 6") != std::string::npos) << msg;
  }
  EXPECT_THROW(parse_pd("X[1,4,2,5];X[3,6,4,1];X[5,2,7,3]"), InputError);
}

TEST(ParsePd, BrokenSequence) {
  // under-strand 1 -> 3 skips a label
  EXPECT_THROW(parse_pd("X[1,4,3,5];X[2,6,4,1];X[5,3,6,2]"), InputError);
}

TEST(ParsePd, RoundTripsThroughText) {
  for (const auto& [name, d] : skein::testing::fixture_diagrams()) {
    const auto again = parse_pd(to_pd_text(d));
    EXPECT_EQ(canonical_code(again), canonical_code(d)) << name;
    EXPECT_EQ(writhe(again), writhe(d)) << name;
  }
}

TEST(Diagram, ArcLabelsAppearTwice) {
  for (const auto& [name, d] : skein::testing::fixture_diagrams()) {
    std::vector<int> count(d.arc_count() + 1, 0);
    for (const Crossing& c : d.crossings())
      for (int a : c.arcs) {
        ASSERT_GE(a, 1) << name;
        ASSERT_LE(a, d.arc_count()) << name;
        ++count[a];
      }
    for (int a = 1; a <= d.arc_count(); ++a) EXPECT_EQ(count[a], 2) << name << " arc " << a;
  }
}

TEST(Writhe, Examples) {
  EXPECT_EQ(writhe(parse_pd(kTrefoil)), 3);
  EXPECT_EQ(writhe(mirror(parse_pd(kTrefoil))), -3);
  EXPECT_EQ(writhe(OrientedDiagram::unlink(2)), 0);
}

TEST(ComponentCount, Examples) {
  EXPECT_EQ(component_count(parse_pd(kTrefoil)), 1);
  EXPECT_EQ(component_count(parse_pd(kHopf)), 2);
  EXPECT_EQ(component_count(OrientedDiagram::unlink(3)), 3);
}

TEST(SplitComponents, Examples) {
  const auto t = parse_pd(kTrefoil);
  auto parts = split_components(t);
  ASSERT_EQ(parts.size(), 1U);
  EXPECT_EQ(canonical_code(parts[0]), canonical_code(t));

  parts = split_components(parse_pd(std::string(kTrefoil) + ";O"));
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(canonical_code(parts[0]), canonical_code(t));
  EXPECT_EQ(parts[1].free_loops(), 1);

  // Hopf on labels 1..4, trefoil on 5..10
  const auto both = parse_pd("X[4,1,3,2];X[2,3,1,4];X[5,8,6,9];X[7,10,8,5];X[9,6,10,7]");
  parts = split_components(both);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(canonical_code(parts[0]), canonical_code(parse_pd(kHopf)));
  EXPECT_EQ(canonical_code(parts[1]), canonical_code(t));
}

TEST(SplitComponents, ComponentCountsAdd) {
  for (const auto& [name, d] : skein::testing::fixture_diagrams()) {
    int total = 0;
    for (const auto& p : split_components(d)) total += component_count(p);
    EXPECT_EQ(total, component_count(d)) << name;
  }
}

TEST(Mirror, Examples) {
  const auto t = parse_pd(kTrefoil);
  EXPECT_EQ(writhe(mirror(t)), -3);
  EXPECT_EQ(canonical_code(mirror(mirror(t))), canonical_code(t));
  EXPECT_EQ(mirror(OrientedDiagram::unlink(2)), OrientedDiagram::unlink(2));
  for (const auto& [name, d] : skein::testing::fixture_diagrams()) {
    EXPECT_EQ(component_count(mirror(d)), component_count(d)) << name;
    EXPECT_EQ(writhe(mirror(d)), -writhe(d)) << name;
  }
}

TEST(CanonicalCode, Deterministic) {
  const auto t = parse_pd(kTrefoil);
  EXPECT_EQ(canonical_code(t), canonical_code(t));
  EXPECT_NE(canonical_code(t), canonical_code(parse_pd(kHopf)));
  EXPECT_NE(canonical_code(t), canonical_code(mirror(t)));
}

TEST(CanonicalCode, CyclicShiftOfTrefoilLabels) {
  // every label of the trefoil code advanced by 2 (mod 6)
  EXPECT_EQ(canonical_code(parse_pd("X[3,6,4,1];X[5,2,6,3];X[1,4,2,5]")),
            canonical_code(parse_pd(kTrefoil)));
  EXPECT_EQ(canonical_code(parse_pd("X[3,6,4,1];X[5,2,6,3];X[1,4,2,5]")),
            canonical_code(parse_pd("X[2,5,3,6];X[4,1,5,2];X[6,3,1,4]")));
}

TEST(CanonicalCode, InvariantUnderRandomRelabeling) {
  std::mt19937 rng(2024);
  for (const auto& [name, d] : skein::testing::fixture_diagrams()) {
    const CanonicalCode code = canonical_code(d);
    for (int i = 0; i < 50; ++i)
      ASSERT_EQ(canonical_code(skein::testing::random_relabel(d, rng)), code) << name << " trial " << i;
  }
}

TEST(CanonicalCode, HexRoundTrip) {
  const auto code = canonical_code(parse_pd(kHopf));
  EXPECT_EQ(CanonicalCode::from_hex(code.hex()), code);
  EXPECT_THROW(CanonicalCode::from_hex("abc"), InputError);
  EXPECT_THROW(CanonicalCode::from_hex("zz"), InputError);
}

TEST(ReverseComponent, ChangesLinkingSign) {
  const auto hopf = parse_pd(kHopf);
  const auto rev = reverse_component(hopf, 1);
  EXPECT_EQ(writhe(rev), -2);
  EXPECT_EQ(component_count(rev), 2);
  const auto knot = reverse_component(parse_pd(kTrefoil), 0);
  EXPECT_EQ(writhe(knot), 3);
}
