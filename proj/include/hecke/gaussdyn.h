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

// The invariant measure m0 of the generalized Gauss map, its invariance
// defect, and digit statistics along typical orbits.

#ifndef HECKE_GAUSSDYN_H_
#define HECKE_GAUSSDYN_H_

#include <cstdint>
#include <random>
#include <vector>

#include "hecke/cf.h"
#include "hecke/psmeasure.h"

namespace hecke {

struct GaussAtom {
  double x = 0.0;
  std::vector<std::int64_t> word;
  double base = 0.0;  // nu weight
  double rho = 0.0;   // sum_x nu(x) |x y - 1|^{-2 delta}
  double mass = 0.0;  // normalized base * rho
};

struct GaussMeasure {
  std::vector<GaussAtom> atoms;  // sorted by x
  double delta = 0.0;
  double base_total = 0.0;  // sum of base weights
  double rho_norm = 0.0;    // sum base * rho
  int c = kDefaultC;

  double Mass(double lo, double hi) const;  // closed interval
  // Atoms whose expansion starts with the word.
  double CylinderMass(const CFWord& w) const;
};

// nu must be the window copy (a0 = 0).
GaussMeasure M0Approx(const DiscreteMeasure& nu, double delta);

struct InvarianceResult {
  double m_E = 0.0;
  double m_pre_truncated = 0.0;  // sum over |k| <= K of m0(psi_k E)
  double tail = 0.0;             // conformal estimate of |k| > K
  double defect_truncated = 0.0;
  double defect = 0.0;  // with tail
  int K = 0;
};

// E = cylinder of w; the preimage under the Gauss map is the union of the
// cylinders [ck, w].
InvarianceResult InvarianceDefect(const GaussMeasure& m, const CFWord& E,
                                  int K);
// E = [lo, hi] in the window; the preimage is tested atom by atom through
// the exact Gauss map.
InvarianceResult InvarianceDefectInterval(const GaussMeasure& m, double lo,
                                          double hi, int K);

// Markov chain on the past variable y = q_{n-1}/q_n:
// P(a | y) proportional to h(a + y), h(z) = sum_x nu(x) |z + x|^{-2 delta}.
class GaussKuzminChain {
 public:
  GaussKuzminChain(const DiscreteMeasure& nu, double delta, int K = 200,
                   int cheb_degree = 24);
  // n digits after burn_in steps, started from y0.
  std::vector<std::int64_t> Sample(double y0, std::size_t n,
                                   std::size_t burn_in,
                                   std::mt19937_64& rng) const;
  std::int64_t Step(double* y, std::mt19937_64& rng) const;
  // Stationary law of the first digit:
  // C0 sum sum nu(x) nu(x') |a + x + x'|^{-2 delta}.
  double DigitTarget(std::int64_t a) const;
  int K() const { return K_; }

 private:
  double H(double z) const;
  double Hurwitz2(double q) const;
  double ChebEval(const std::vector<double>& coef, double y) const;

  std::vector<double> x_, w_;
  double delta_;
  int K_;
  int c_;
  double h_;
  double C0_ = 0.0;
  // Chebyshev coefficients in y on [-h, h]: per digit index, and totals.
  std::vector<std::vector<double>> digit_coef_;  // order k = 1, -1, 2, -2, ...
  std::vector<double> total_coef_;
  std::vector<double> tail_pos_coef_, tail_neg_coef_;
};

struct DigitStatistic {
  std::int64_t k = 0;
  std::size_t n = 0;
  double estimate = 0.0;
  double target_interval = 0.0;  // m0((1/(k + c), 1/k])
  double target_cylinder = 0.0;  // m0({a_1 = k})
  double std_error = 0.0;
};

// (1/n) #{i < n : a_{i+1} = k}.  Throws if n exceeds the word.
double GkStatistic(const std::vector<std::int64_t>& digits, std::size_t n,
                   std::int64_t k);
// (1/n) sum_{s < n} 1_E(T^s x) with x = [0; digits] and E = [lo, hi].
double BirkhoffAverage(const std::vector<std::int64_t>& digits, double lo,
                       double hi, std::size_t n);

}  // namespace hecke

#endif  // HECKE_GAUSSDYN_H_
