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

#include "hecke/coding.h"

#include <gtest/gtest.h>

#include <random>

namespace hecke {
namespace {

CuttingSequence Seq(const std::string& s) {
  std::vector<char> v;
  for (char ch : s)
    if (ch != ',') v.push_back(ch);
  return ParseCutting(v);
}

TEST(CfToCutting, Examples) {
  EXPECT_EQ(CfToCutting(CFWord({4})).ToString(), "r,l,l");
  EXPECT_EQ(CfToCutting(CFWord({-8})).ToString(), "r,r,c,r");
  // The second block flips sign under the alternating rule.
  EXPECT_EQ(CfToCutting(CFWord({4, 4})).ToString(), "r,l,l,r,r");
  EXPECT_EQ(CfToCutting(CFWord({4, 4}), BlockSign::kPlain).ToString(),
            "r,l,l,l,l");
}

TEST(CuttingToCf, Examples) {
  EXPECT_EQ(CuttingToCf(Seq("r,l,l")), CFWord({4}));
  EXPECT_EQ(CuttingToCf(Seq("r,r,c,r")), CFWord({-8}));
  EXPECT_EQ(CuttingToCf(Seq("r,l,l,r,r")), CFWord({4, 4}));
}

TEST(ParseCutting, Grammar) {
  const CuttingSequence s = Seq("r,l,c,c,l,r,r");
  ASSERT_EQ(s.blocks.size(), 2u);
  EXPECT_EQ(s.blocks[0], (CuttingBlock{'l', 2}));
  EXPECT_EQ(s.blocks[1], (CuttingBlock{'r', 0}));
  EXPECT_THROW(Seq("l,l,l"), GrammarError);    // must start with r
  EXPECT_THROW(Seq("r,l,c"), GrammarError);    // missing repeated q
  EXPECT_THROW(Seq("r,l,c,r"), GrammarError);  // closing symbol differs
  EXPECT_THROW(Seq("r,l,x,l"), GrammarError);
}

TEST(Coding, RoundTripExhaustive) {
  std::vector<std::vector<std::int64_t>> words{{}};
  const std::int64_t digits[] = {4, -4, 8, -8, 12, -12};
  for (int len = 1; len <= 5; ++len) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& w : words) {
      if (static_cast<int>(w.size()) != len - 1) continue;
      for (auto a : digits) {
        auto v = w;
        v.push_back(a);
        next.push_back(v);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& q : words) {
    if (q.empty()) continue;
    const CFWord w(q);
    for (BlockSign sign : {BlockSign::kAlternating, BlockSign::kPlain}) {
      const CuttingSequence s = CfToCutting(w, sign);
      EXPECT_EQ(CuttingToCf(ParseCutting(s.symbols), kDefaultC, sign), w);
      EXPECT_EQ(ChangeTypePoints(s).size(), w.size());
    }
  }
}

TEST(ChangeTypePoints, Positions) {
  const auto p = ChangeTypePoints(CfToCutting(CFWord({4, 4})));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_LT(p[0], p[1]);
  const auto q = ChangeTypePoints(CfToCutting(CFWord({8, -12, 4, 16})));
  for (std::size_t i = 1; i < q.size(); ++i) EXPECT_LT(q[i - 1], q[i]);
}

TEST(TraceGeodesic, QuarterMatchesSymbolic) {
  const CuttingSequence t = TraceGeodesic(Cusp(1, 4), Rational(-7, 2));
  EXPECT_FALSE(t.truncated);
  EXPECT_EQ(t.ToString(), CfToCutting(CFWord({4})).ToString());
}

TEST(TraceGeodesic, RandomWordsAndTailInvariance) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> len(1, 5), dig(1, 4), sgn(0, 1);
  std::uniform_int_distribution<int> left(201, 999);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<std::int64_t> q(len(rng));
    for (auto& a : q) a = (sgn(rng) ? 4 : -4) * dig(rng);
    const CFWord w(q);
    const std::string want = CfToCutting(w).ToString();
    std::string first;
    for (int j = 0; j < 2; ++j) {
      try {
        const CuttingSequence t =
            TraceGeodesic(CfEval(w), -Rational(left(rng), 100));
        EXPECT_EQ(t.ToString(), want) << w.ToString();
        if (j == 0) first = t.ToString();
        else EXPECT_EQ(t.ToString(), first);
        ++checked;
      } catch (const DegenerateGeodesic&) {
      }
    }
  }
  EXPECT_GT(checked, 150);
}

TEST(TraceGeodesic, Truncation) {
  const CuttingSequence t =
      TraceGeodesic(CfEval(CFWord({4, -4, 8, 4})), Rational(-5), 3);
  EXPECT_TRUE(t.truncated);
  EXPECT_EQ(t.symbols.size(), 3u);
}

}  // namespace
}  // namespace hecke
