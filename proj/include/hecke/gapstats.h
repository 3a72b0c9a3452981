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

// Empirical gap statistics of the tangency sets.

#ifndef HECKE_GAPSTATS_H_
#define HECKE_GAPSTATS_H_

#include <cstdint>
#include <vector>

#include "hecke/ford.h"
#include "hecke/orbit.h"

namespace hecke {

struct GapCdf {
  Rational T;
  Interval interval;
  std::vector<double> s_grid;
  std::vector<std::int64_t> raw;       // #{scaled gaps <= s}
  std::vector<std::int64_t> raw12;     // tangent rectangle pairs
  std::vector<std::int64_t> raw23;     // non-tangent rectangle pairs
  std::vector<std::int64_t> raw_none;  // non-rectangle pairs
  std::vector<double> values;          // raw / T^delta_hat
  double delta_hat = 0.0;
};

// Grid values s are converted exactly to rationals before comparison.
GapCdf GapCdfEmpirical(const Rational& T, const Interval& interval,
                       const std::vector<double>& s_grid, double delta_hat,
                       int c = kDefaultC, bool cyclic = false);

// lo:hi:step, inclusive of hi up to rounding.
std::vector<double> MakeGrid(double lo, double hi, double step);

struct Histogram {
  double bin_width = 0.0;
  std::vector<double> bin_lo;
  std::vector<std::int64_t> counts;
  std::int64_t Total() const;
};

// Histogram of consecutive differences (times scale) of sorted points.
Histogram GapHistogram(const std::vector<double>& sorted_points,
                       double bin_width, double scale = 1.0);
// Histogram of the points themselves.
Histogram PointHistogram(const std::vector<double>& points, double lo,
                         double hi, double bin_width);

enum class LocalStatKind { kPQ, kP0Q };

struct LocalStat {
  LocalStatKind kind = LocalStatKind::kPQ;
  std::int64_t Q = 0;
  double value = 0.0;    // scaled statistic
  double raw = 0.0;      // unscaled probability (kPQ) or count (kP0Q)
  double std_error = 0.0;
  std::size_t samples = 0;
};

struct LocalStatSpec {
  LocalStatKind kind = LocalStatKind::kPQ;
  std::int64_t Q = 256;
  Interval window{0, 4};    // D
  double a_lo = 0.0;        // A = [a_lo, a_hi], scaled by Q^{-2}
  double a_hi = 1.0;
  int k = 1;
  double delta_hat = 0.0;
  std::size_t samples = 100000;  // kPQ only
};

// kPQ: Lebesgue share of x in D with exactly k points of F_Q in
// x + A Q^{-2} (mod the period), times Q^{2(1 - delta)}, estimated on a
// Weyl sequence.  kP0Q: number of r in F_Q n D whose window r + A Q^{-2}
// holds exactly k points, divided by Q^{2 delta}.
LocalStat ComputeLocalStat(const LocalStatSpec& spec, int c = kDefaultC);

struct KappaFit {
  double kappa = 0.0;
  double sup_discrepancy = 0.0;       // sup |F - k G| / sup F
  double pointwise_discrepancy = 0.0;  // sup over F > 0 of |F - k G| / F
};

// Least-squares kappa for F ~ kappa G over the entries with lo <= s <= hi.
KappaFit FitKappaAndCompare(const std::vector<double>& s,
                            const std::vector<double>& empirical,
                            const std::vector<double>& explicit_curve,
                            double lo, double hi);

// max over s in [lo, hi) of (F(s + h) - F(s)) / h for each step.
std::vector<double> LipschitzProbe(const Rational& T, const Interval& interval,
                                   double delta_hat,
                                   const std::vector<double>& steps,
                                   double lo = 2.0, double hi = 4.0,
                                   int c = kDefaultC);

}  // namespace hecke

#endif  // HECKE_GAPSTATS_H_
