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

// The sparse Ford configuration: the orbit of the four initial circles
// R, R + i, C(i/2, 1/2) and C(4 + i/2, 1/2).

#ifndef HECKE_FORD_H_
#define HECKE_FORD_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "hecke/arith.h"
#include "hecke/cf.h"
#include "hecke/moebius.h"
#include "hecke/orbit.h"

namespace hecke {

// A circle tangent to R at a0 + [0; word] = p/q.  The diameter is derived
// from tangency with the parent circle, not from q.
struct FordCircle {
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::int64_t a0 = 0;
  std::vector<std::int64_t> word;
  Rational diameter = 1;

  Rational Tangency() const { return Rational(p, q); }
  double Value() const { return static_cast<double>(p) / q; }
  Circle AsCircle() const { return Circle::Tangent(Tangency(), diameter); }
};

// The initial circles 1, 2, 3; R itself is circle 0 and has no Circle form.
Circle InitialCircle(int index, int c = kDefaultC);

// Circles tangent to R in the interval with diameter > 1/T (strict),
// sorted by tangency.  Built from the circle tree under C(i/2, 1/2) and its
// translates.
std::vector<FordCircle> TangenciesAtTime(const Rational& T,
                                         const Interval& interval,
                                         int c = kDefaultC,
                                         const EnumerationLimits& lim = {});

// Children [0; word, a] for a = c k, k in [k_lo, k_hi] \ {0}.
std::vector<FordCircle> Children(const FordCircle& parent, std::int64_t k_lo,
                                 std::int64_t k_hi, int c = kDefaultC);

struct AdjacentPair {
  FordCircle left;
  FordCircle right;
  Rational gap;
  Rational scaled_gap;  // T * gap
};

// Consecutive pairs of TangenciesAtTime.  With cyclic set, the interval is
// treated as one period and the wrap pair (last, first + period) is added.
std::vector<AdjacentPair> AdjacentPairs(const Rational& T,
                                        const Interval& interval,
                                        int c = kDefaultC, bool cyclic = false);
std::vector<AdjacentPair> PairsOf(const std::vector<FordCircle>& circles,
                                  const Rational& T, bool cyclic,
                                  const Rational& period);

enum class PairKind { k12, k23, kNonRectangle };
const char* PairKindName(PairKind k);

struct PairClass {
  PairKind kind = PairKind::kNonRectangle;
  // gamma with {left, right} = {gamma alpha_i, gamma alpha_j}; one element
  // for (2,3), two for tangent (1,2) pairs.
  std::vector<GroupElement> gammas;
};

// alpha_1 = inf, alpha_2 = 0, alpha_3 = c are the tangencies of the initial
// circles.  Searches the sign and order choices of the two column vectors.
PairClass ClassifyPair(const AdjacentPair& pair, int c = kDefaultC);

enum class OmegaConvention { kT, kHalfT };

struct OmegaRegion {
  PairKind kind = PairKind::k12;
  Rational T = 1;
  Rational s = 1;
  OmegaConvention convention = OmegaConvention::kT;
};

// Membership of a bottom row (c, d), c >= 0, in Omega_T^{kind}(s).
bool OmegaMembership(const Rational& c, const Rational& d,
                     const OmegaRegion& region, int group_c = kDefaultC);

// A pair of tangencies reduced mod the period, lo in [0, period).
struct PeriodicPair {
  Rational lo, hi;
  PairKind kind;
  bool operator<(const PeriodicPair& o) const {
    if (lo != o.lo) return lo < o.lo;
    if (hi != o.hi) return hi < o.hi;
    return kind < o.kind;
  }
  bool operator==(const PeriodicPair& o) const {
    return lo == o.lo && hi == o.hi && kind == o.kind;
  }
};
PeriodicPair ReducePair(const Rational& x, const Rational& y, PairKind kind,
                        int c = kDefaultC);

struct OmegaElement {
  GroupElement gamma;
  PairKind kind;
  PeriodicPair pair;
};

// Every gamma (mod left translation) whose bottom row lies in the region,
// with the image pair (gamma alpha_i, gamma alpha_j) reduced mod c.
std::vector<OmegaElement> OmegaElements(const Rational& T, const Rational& s,
                                        int c = kDefaultC,
                                        OmegaConvention conv =
                                            OmegaConvention::kT);

struct GapBounds {
  std::optional<Rational> min_rect_nontangent;
  std::optional<Rational> min_rect_tangent;
  std::optional<Rational> min_nonrect;
  std::optional<Rational> min_all;
  std::size_t n_pairs = 0;
  std::size_t n_nonrect = 0;
};
GapBounds ScaledGapBounds(const Rational& T, const Interval& interval,
                          int c = kDefaultC);

// (child_k, child_{k+dk}, parent, R) with k, k + dk nonzero, dk = +-1.
struct Rectangle {
  FordCircle child;
  FordCircle sibling;
  FordCircle parent;
};
Rectangle MakeRectangle(const FordCircle& parent, std::int64_t k,
                        int dk, int c = kDefaultC);
// The unique gamma mapping the initial rectangle onto r: gamma sends the
// line R + i to the parent and the two unit circles to the children.
// Throws std::logic_error if none exists.
GroupElement RectangleGamma(const Rectangle& r, int c = kDefaultC);

}  // namespace hecke

#endif  // HECKE_FORD_H_
