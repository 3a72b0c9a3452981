// Copyright 2026 The hecke authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hecke/ford.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace hecke {
namespace {

FordCircle Root() {
  FordCircle f;
  f.p = 0;
  f.q = 1;
  f.diameter = 1;
  return f;
}

TEST(InitialCircle, Configuration) {
  EXPECT_THROW(InitialCircle(0), std::invalid_argument);
  EXPECT_EQ(InitialCircle(1), Circle::Horizontal(1));
  EXPECT_EQ(InitialCircle(2), Circle::Tangent(0, 1));
  EXPECT_EQ(InitialCircle(3), Circle::Tangent(4, 1));
}

TEST(TangenciesAtTime, Examples) {
  const auto a = TangenciesAtTime(17, Interval{0, 1});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].Tangency(), 0);
  EXPECT_EQ(a[0].diameter, 1);
  EXPECT_EQ(a[1].Tangency(), Rational(1, 4));
  EXPECT_EQ(a[1].diameter, Rational(1, 16));
  // Diameter 1 is not strictly larger than 1/1.
  EXPECT_TRUE(TangenciesAtTime(1, Interval{0, 4}).empty());
}

TEST(TangenciesAtTime, EqualsFareyAtSquareRoot) {
  for (std::int64_t Q : {10, 50}) {
    const auto circles = TangenciesAtTime(Q * Q, Interval{0, 4});
    const auto farey = EnumerateFarey(Q, Interval{0, 4}).points;
    ASSERT_EQ(circles.size(), farey.size());
    for (std::size_t i = 0; i < farey.size(); ++i) {
      EXPECT_EQ(circles[i].Tangency(), farey[i].Exact());
      EXPECT_EQ(circles[i].diameter, Rational(1, circles[i].q * circles[i].q));
    }
  }
}

TEST(Children, Examples) {
  const auto c1 = Children(Root(), 1, 1);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0].Tangency(), Rational(1, 4));
  EXPECT_EQ(c1[0].diameter, Rational(1, 16));
  const auto c2 = Children(c1[0], 1, 1);
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c2[0].Tangency(), Rational(4, 17));
  EXPECT_EQ(c2[0].diameter, Rational(1, 289));
  EXPECT_EQ(Children(Root(), -2, 2).size(), 4u);
}

TEST(Children, DiameterDecay) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> k(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FordCircle> chain{Root()};
    for (int n = 0; n < 8; ++n) {
      int kk = 0;
      while (kk == 0) kk = k(rng);
      chain.push_back(Children(chain.back(), kk, kk)[0]);
    }
    for (std::size_t n = 0; n + 2 < chain.size(); ++n)
      EXPECT_LE(chain[n + 2].diameter, chain[n].diameter / 9);
  }
}

TEST(CircleTree, ChildrenTangentToParent) {
  const auto kids = Children(Root(), -3, 3);
  for (const auto& ch : kids) {
    const Circle a = Root().AsCircle(), b = ch.AsCircle();
    const double d = std::abs(a.Center() - b.Center());
    EXPECT_NEAR(d, a.Radius() + b.Radius(), 1e-12);
  }
}

TEST(AdjacentPairs, Examples) {
  const auto p = AdjacentPairs(17, Interval{0, 1});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].scaled_gap, Rational(17, 4));
  EXPECT_TRUE(AdjacentPairs(2, Interval{0, 1}).empty());
}

TEST(AdjacentPairs, LevelRepulsion) {
  for (int T : {100, 1000}) {
    for (const auto& ap : AdjacentPairs(T, Interval{0, 4}, kDefaultC, true))
      EXPECT_GT(ap.scaled_gap, 2);
  }
}

TEST(AdjacentPairs, Periodic) {
  const auto a = AdjacentPairs(1000, Interval{0, 4});
  const auto b = AdjacentPairs(1000, Interval{4, 8});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].scaled_gap, b[i].scaled_gap);
    EXPECT_EQ(a[i].left.Tangency() + 4, b[i].left.Tangency());
  }
}

TEST(ClassifyPair, TangentPairAtZero) {
  const auto p = AdjacentPairs(17, Interval{0, 1});
  ASSERT_EQ(p.size(), 1u);
  const PairClass pc = ClassifyPair(p[0]);
  EXPECT_EQ(pc.kind, PairKind::k12);
  ASSERT_EQ(pc.gammas.size(), 2u);
  for (const auto& g : pc.gammas) {
    EXPECT_TRUE(InHeckeGroup(g));
    std::set<Rational> img;
    for (const auto& alpha :
         {BoundaryPoint::Infinity(), BoundaryPoint::FromRational(0, 1),
          BoundaryPoint::FromRational(4, 1)}) {
      const BoundaryPoint z = MobiusApply(g, alpha);
      if (!(z == BoundaryPoint::Infinity())) img.insert(z.ToRational());
    }
    EXPECT_TRUE(img.count(0));
    EXPECT_TRUE(img.count(Rational(1, 4)));
  }
}

TEST(ClassifyPair, SmallGapsAreRectangles) {
  for (const auto& ap :
       AdjacentPairs(10000, Interval{0, 4}, kDefaultC, true)) {
    const PairClass pc = ClassifyPair(ap);
    if (ap.scaled_gap <= 7) EXPECT_NE(pc.kind, PairKind::kNonRectangle);
    if (pc.kind == PairKind::k23) EXPECT_EQ(pc.gammas.size(), 1u);
    if (pc.kind == PairKind::k12) EXPECT_EQ(pc.gammas.size(), 2u);
  }
}

TEST(OmegaMembership, EmptyBelowThresholds) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> u(-1000, 1000);
  const Rational T = 100;
  const auto half = OmegaConvention::kHalfT;
  for (int i = 0; i < 2000; ++i) {
    const Rational cc(std::abs(u(rng)), 100), dd(u(rng), 100);
    EXPECT_FALSE(OmegaMembership(
        cc, dd, {PairKind::k12, T, Rational(199, 100), half}));
    EXPECT_FALSE(OmegaMembership(
        cc, dd, {PairKind::k23, T, Rational(399, 100), half}));
    EXPECT_FALSE(OmegaMembership(cc, dd, {PairKind::k23, T, Rational(399, 100)}));
  }
  // With the full-T bounds the (1,2) region meets s < 2, but no bottom row
  // of the group lands there.
  EXPECT_TRUE(OmegaMembership(9, 9, {PairKind::k12, T, Rational(199, 100)}));
  EXPECT_TRUE(OmegaElements(10000, Rational(199, 100)).empty());
  EXPECT_TRUE(OmegaElements(10000, Rational(399, 100)).empty());
}

TEST(OmegaMembership, Scaling) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> u(-800, 800);
  for (PairKind kind : {PairKind::k12, PairKind::k23}) {
    for (int i = 0; i < 2000; ++i) {
      const Rational cc(std::abs(u(rng)), 100), dd(u(rng), 100);
      const bool big = OmegaMembership(cc, dd, {kind, 100, 6});
      const bool unit = OmegaMembership(cc / 10, dd / 10, {kind, 1, 6});
      EXPECT_EQ(big, unit);
    }
  }
}

TEST(OmegaElements, BijectionWithPairs) {
  const Rational T = 1000;
  const auto pairs = AdjacentPairs(T, Interval{0, 4}, kDefaultC, true);
  for (int s : {5, 7}) {
    std::set<PeriodicPair> from_pairs, from_omega;
    for (const auto& ap : pairs) {
      if (ap.scaled_gap > s) continue;
      from_pairs.insert(ReducePair(ap.left.Tangency(), ap.right.Tangency(),
                                   ClassifyPair(ap).kind));
    }
    for (const auto& e : OmegaElements(T, s)) from_omega.insert(e.pair);
    EXPECT_EQ(from_pairs, from_omega) << "s=" << s;
  }
}

TEST(ScaledGapBounds, Thresholds) {
  for (int T : {1000, 10000}) {
    const GapBounds b = ScaledGapBounds(T, Interval{0, 4});
    ASSERT_TRUE(b.min_rect_nontangent.has_value());
    EXPECT_GE(*b.min_rect_nontangent, 4);
    if (b.min_nonrect) EXPECT_GE(*b.min_nonrect, Rational(15, 2));
    EXPECT_GT(*b.min_all, 2);
  }
}

TEST(RectangleGamma, MapsInitialRectangle) {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> k(-4, 4), depth(0, 4), sgn(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    FordCircle parent = Root();
    const int dep = depth(rng);
    for (int n = 0; n < dep; ++n) {
      int kk = 0;
      while (kk == 0) kk = k(rng);
      parent = Children(parent, kk, kk)[0];
    }
    int kk = 0;
    while (kk == 0) kk = k(rng);
    int dk = sgn(rng) ? 1 : -1;
    if (kk + dk == 0) dk = -dk;
    const Rectangle r = MakeRectangle(parent, kk, dk);
    const GroupElement g = RectangleGamma(r);
    EXPECT_TRUE(InHeckeGroup(g));
    EXPECT_EQ(CircleImage(g, InitialCircle(1)), r.parent.AsCircle());
    const Circle a = CircleImage(g, InitialCircle(2));
    const Circle b = CircleImage(g, InitialCircle(3));
    const Circle x = r.child.AsCircle(), y = r.sibling.AsCircle();
    EXPECT_TRUE((a == x && b == y) || (a == y && b == x));
  }
}

}  // namespace
}  // namespace hecke
