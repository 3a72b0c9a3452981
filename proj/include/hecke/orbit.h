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

// Orbit of infinity: generalized Farey sequences and the primitive set.

#ifndef HECKE_ORBIT_H_
#define HECKE_ORBIT_H_

#include <cstdint>
#include <vector>

#include "hecke/arith.h"
#include "hecke/cf.h"

namespace hecke {

// Half-open interval [lo, hi) with exact endpoints.
struct Interval {
  Rational lo = 0;
  Rational hi = 4;
  bool Contains(const Rational& x) const { return lo <= x && x < hi; }
  double Length() const { return ToDouble(hi - lo); }
};

// An orbit point p/q = a0 + [0; word], q > 0.
struct FareyPoint {
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::int64_t a0 = 0;
  std::vector<std::int64_t> word;

  double Value() const { return static_cast<double>(p) / q; }
  Rational Exact() const { return Rational(p, q); }
  CFWord Word(int c = kDefaultC) const;
};

// Strict order by value.
bool FareyLess(const FareyPoint& x, const FareyPoint& y);

struct FareySnapshot {
  Rational Q;  // points have q < Q
  Interval interval;
  int c = kDefaultC;
  std::vector<FareyPoint> points;  // sorted, distinct
};

struct EnumerationLimits {
  std::size_t cap_points = 50'000'000;
};

// All orbit points in [-h, h] (a0 = 0) with denominator <= qmax.
std::vector<FareyPoint> WindowPoints(std::int64_t qmax, int c = kDefaultC,
                                     const EnumerationLimits& lim = {});

// Orbit points in the interval with denominator < Q.  Depth-first over words
// with the monotone denominator growth used for pruning.
FareySnapshot EnumerateFarey(const Rational& Q, const Interval& interval,
                             int c = kDefaultC,
                             const EnumerationLimits& lim = {});

// Same with the inclusive bound q <= qmax (snapshot Q = qmax + 1).
FareySnapshot EnumerateFareyUpTo(std::int64_t qmax, const Interval& interval,
                                 int c = kDefaultC,
                                 const EnumerationLimits& lim = {});

// Largest integer strictly below Q.
std::int64_t StrictBelow(const Rational& Q);

// Images of infinity under generator words of length <= L in T^{+-c} and S,
// restricted to the interval, deduplicated and sorted.
std::vector<FareyPoint> EnumerateByWordLength(int L, const Interval& interval,
                                              int c = kDefaultC,
                                              const EnumerationLimits& lim = {});

struct PrimitiveVector {
  std::int64_t p;
  std::int64_t q;
  bool operator==(const PrimitiveVector& o) const {
    return p == o.p && q == o.q;
  }
};

// (p, q) for p/q in one period [0, c) with 0 < q < qmax.
std::vector<PrimitiveVector> PrimitiveVectors(std::int64_t qmax,
                                              int c = kDefaultC);

struct DeltaFit {
  double delta_hat = 0.0;
  double c_hat = 0.0;  // N(Q) ~ c_hat Q^{2 delta_hat}
  std::vector<double> residuals;  // log N - fitted
};

// Least squares log N = log C + 2 delta log Q.
DeltaFit FitDelta(const std::vector<double>& Q, const std::vector<double>& N);

// Counts |F_Q| on one period for each Q and fits the exponent.
struct CountFitResult {
  std::vector<std::int64_t> Q;
  std::vector<std::int64_t> counts;
  DeltaFit fit;
};
CountFitResult CountAndFitDelta(const std::vector<std::int64_t>& Q_list,
                                int c = kDefaultC);

}  // namespace hecke

#endif  // HECKE_ORBIT_H_
