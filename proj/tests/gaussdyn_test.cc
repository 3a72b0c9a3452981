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

#include "hecke/gaussdyn.h"

#include <gtest/gtest.h>

#include <gsl/gsl_sf_zeta.h>

#include <cmath>

namespace hecke {
namespace {

constexpr double kDelta = 0.6837;

DiscreteMeasure Window(std::int64_t Q) {
  const double h = HullRadius();
  const Rational lim(static_cast<std::int64_t>(h * 1e6) + 1, 1000000);
  return PsMeasureApprox(Q, kDelta, Interval{-lim, lim}, PsWeighting::kShell);
}

TEST(M0Approx, SingleAtomAtZero) {
  DiscreteMeasure nu;
  Atom a;
  a.x = 0.0;
  a.w = 1.0;
  nu.atoms = {a};
  nu.total = 1.0;
  const GaussMeasure m = M0Approx(nu, kDelta);
  ASSERT_EQ(m.atoms.size(), 1u);
  EXPECT_DOUBLE_EQ(m.atoms[0].rho, 1.0);
  EXPECT_DOUBLE_EQ(m.atoms[0].mass, 1.0);
}

TEST(M0Approx, RejectsEmpty) {
  EXPECT_THROW(M0Approx(DiscreteMeasure{}, kDelta), std::invalid_argument);
}

TEST(M0Approx, SymmetricAndBounded) {
  const DiscreteMeasure nu = Window(1024);
  const GaussMeasure m = M0Approx(nu, kDelta);
  double total = 0.0;
  const double r = 2.0 - std::sqrt(3.0);
  for (const auto& a : m.atoms) {
    total += a.mass;
    EXPECT_GE(a.rho, std::pow(1 + r * r, -2 * kDelta) * nu.total - 1e-12);
    EXPECT_LE(a.rho, std::pow(1 - r * r, -2 * kDelta) * nu.total + 1e-12);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  for (double lo : {0.01, 0.05, 0.2}) {
    EXPECT_NEAR(m.Mass(lo, lo + 0.03), m.Mass(-lo - 0.03, -lo), 1e-12);
  }
}

TEST(M0Approx, RefinementStable) {
  const double a = M0Approx(Window(1024), kDelta).Mass(1.0 / 6, 0.5);
  const double b = M0Approx(Window(4096), kDelta).Mass(1.0 / 6, 0.5);
  EXPECT_LT(std::abs(a - b) / b, 0.05);
}

TEST(InvarianceDefect, EmptyAndFull) {
  const GaussMeasure m = M0Approx(Window(2048), kDelta);
  const InvarianceResult e = InvarianceDefectInterval(m, 0.3, 0.4, 50);
  EXPECT_EQ(e.m_E, 0.0);
  EXPECT_EQ(e.defect, 0.0);
  const double h = HullRadius();
  const InvarianceResult f = InvarianceDefectInterval(m, -h, h, 50);
  EXPECT_NEAR(f.m_E, 1.0, 1e-12);
  EXPECT_LE(f.defect_truncated, 1.5 * f.tail + 1e-3);
}

TEST(InvarianceDefect, CylindersSmall) {
  const GaussMeasure m = M0Approx(Window(4096), kDelta);
  for (std::int64_t a : {4, -4, 8, 12}) {
    const InvarianceResult r = InvarianceDefect(m, CFWord({a}), 50);
    EXPECT_GT(r.m_E, 0.0);
    EXPECT_LT(r.defect, 0.02) << a;
  }
  const InvarianceResult r = InvarianceDefect(m, CFWord({4, -4}), 50);
  EXPECT_LT(r.defect, 0.02);
}

TEST(GkStatistic, PeriodicWord) {
  const std::vector<std::int64_t> w(1000, 4);
  EXPECT_DOUBLE_EQ(GkStatistic(w, 1000, 4), 1.0);
  EXPECT_DOUBLE_EQ(GkStatistic(w, 1000, 8), 0.0);
  EXPECT_THROW(GkStatistic(w, 1001, 4), std::invalid_argument);
}

TEST(BirkhoffAverage, FullAndEmpty) {
  const std::vector<std::int64_t> w{4, -8, 12, 4, 4, -4, 16, 8};
  const double h = HullRadius();
  EXPECT_DOUBLE_EQ(BirkhoffAverage(w, -h, h, 6), 1.0);
  EXPECT_DOUBLE_EQ(BirkhoffAverage(w, 0.3, 0.35, 6), 0.0);
}

TEST(BirkhoffAverage, AgreesWithDigitCount) {
  std::mt19937_64 rng(21);
  const GaussKuzminChain chain(Window(1024), kDelta);
  const auto digits = chain.Sample(0.0, 3000, 50, rng);
  for (std::int64_t k : {4, -4, 8}) {
    const auto [lo, hi] = BranchCylinder(CFWord({k}));
    EXPECT_DOUBLE_EQ(BirkhoffAverage(digits, lo, hi, 2000),
                     GkStatistic(digits, 2000, k));
  }
}

TEST(GaussKuzminChain, DigitsValidAndTargetNormalized) {
  const GaussKuzminChain chain(Window(1024), kDelta);
  std::mt19937_64 rng(22);
  const auto d = chain.Sample(0.0, 5000, 10, rng);
  ASSERT_EQ(d.size(), 5000u);
  for (auto a : d) {
    EXPECT_NE(a, 0);
    EXPECT_EQ(a % 4, 0);
  }
  double total = 0.0;
  const int K = 100;
  for (std::int64_t k = 1; k <= K; ++k)
    total += chain.DigitTarget(4 * k) + chain.DigitTarget(-4 * k);
  // Beyond K the target is C |a|^{-2 delta} up to O(1/K).
  const double a = 4.0 * (K + 1);
  const double C = chain.DigitTarget(4 * (K + 1)) * std::pow(a, 2 * kDelta);
  total += 2 * C * std::pow(4.0, -2 * kDelta) * gsl_sf_hzeta(2 * kDelta, K + 1);
  EXPECT_NEAR(total, 1.0, 2e-3);
  EXPECT_NEAR(chain.DigitTarget(4), chain.DigitTarget(-4), 1e-12);
}

TEST(GaussKuzminChain, FrequenciesMatchTarget) {
  const GaussKuzminChain chain(Window(1024), kDelta);
  std::mt19937_64 rng(23);
  const std::size_t n = 200000;
  const auto d = chain.Sample(0.0, n, 100, rng);
  for (std::int64_t k : {4, -4, 8, -8}) {
    const double p = GkStatistic(d, n, k);
    const double t = chain.DigitTarget(k);
    // Correlated draws; allow a generous multiple of the iid error.
    EXPECT_NEAR(p, t, 6 * std::sqrt(t * (1 - t) / n)) << k;
  }
}

}  // namespace
}  // namespace hecke
