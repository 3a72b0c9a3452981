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

// Critical exponent estimators, discrete surrogates for the conformal
// density on the limit set, and the explicit gap-law integrals.

#ifndef HECKE_PSMEASURE_H_
#define HECKE_PSMEASURE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/moebius.h"
#include "hecke/orbit.h"

namespace hecke {

struct Atom {
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::int64_t a0 = 0;
  std::vector<std::int64_t> word;
  double x = 0.0;
  double w = 0.0;
};

// kPower: weight q^{-2 delta} for q < Q.
// kShell: weight 1 for Q/2 <= q < Q.  Both tend to the same limit; the shell
// converges much faster near heavy low-denominator atoms.
enum class PsWeighting { kPower, kShell };
const char* PsWeightingName(PsWeighting w);

struct DiscreteMeasure {
  std::vector<Atom> atoms;  // sorted by x
  double total = 0.0;
  std::int64_t Q = 0;
  double delta = 0.0;
  PsWeighting weighting = PsWeighting::kPower;

  // Mass of the closed interval [lo, hi].
  double Mass(double lo, double hi) const;
  std::size_t size() const { return atoms.size(); }
};

// Atoms at orbit points p/q in the interval with q < Q, normalized to total
// mass 1 when normalize is set.
DiscreteMeasure PsMeasureApprox(std::int64_t Q, double delta,
                                const Interval& interval,
                                PsWeighting weighting = PsWeighting::kPower,
                                int c = kDefaultC, bool normalize = true);

struct DeltaEstimate {
  double value = 0.0;
  std::string method;
  double error_bar = 0.0;
  std::vector<std::pair<std::int64_t, double>> trace;  // (K or Q, estimate)
};

struct TransferOptions {
  int K = 8;        // smallest explicit branch cutoff; K, 2K and 4K are run
  int nodes = 24;   // Chebyshev collocation nodes on [-h, h]
  double tol = 1e-11;
  bool tail = true;  // rank-one Hurwitz zeta correction for |k| > K
};

// Spectral radius of the collocated operator
// (L_s f)(x) = sum_{0<|k|<=K} |ck + x|^{-2s} f(1/(ck + x)) plus the tail.
double TransferSpectralRadius(double s, int K, int nodes, bool tail,
                              int c = kDefaultC);
DeltaEstimate DeltaViaTransferOperator(const TransferOptions& opt = {},
                                       int c = kDefaultC);
DeltaEstimate DeltaViaCounting(const std::vector<std::int64_t>& Q_list,
                               int c = kDefaultC);

// |nu(gamma E) - int_E |gamma'|^delta dnu| / nu(gamma E), nullopt when
// nu(gamma E) = 0.  gamma must have no pole in E.
std::optional<double> ConformalityCheck(const DiscreteMeasure& nu,
                                        const GroupElement& gamma, double lo,
                                        double hi);

struct GapIntegrals {
  double F12 = 0.0;  // tangent region
  double F23 = 0.0;  // non-tangent region, both triangles
};

// Region masses in the d-scale: atoms x = c/d of nu carry weight w and the
// radial integral is taken in closed form.  nu must cover [0, s] including
// period translates.  Throws for s <= 0 or s >= 7.5.
GapIntegrals ExplicitGapCdf(double s, double delta, const DiscreteMeasure& nu);

// Pair-count combinations of the two integrals.
enum class GapCombination {
  kLiteral,    // F23 + 2 F12
  kCorrected,  // F23 + F12 (tangent pairs counted once)
};
std::vector<double> ExplicitGapCurve(const std::vector<double>& s_grid,
                                     double delta, const DiscreteMeasure& nu,
                                     GapCombination comb);

struct PowerLawWindow {
  double lo = 0.0;
  double hi = 0.0;
  double exponent = 0.0;
  std::size_t n_points = 0;
  bool conforming = false;  // within tol of -(delta + 1)
};

// Least-squares slope of log P against log s inside each window.
std::vector<PowerLawWindow> PowerLawWindowCheck(
    const std::vector<double>& s, const std::vector<double>& density,
    double delta, const std::vector<std::pair<double, double>>& windows,
    double tol = 0.15);

}  // namespace hecke

#endif  // HECKE_PSMEASURE_H_
