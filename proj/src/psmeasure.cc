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

#include "hecke/psmeasure.h"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hecke/cf.h"

namespace hecke {
namespace {

std::vector<double> ChebNodes(int n, double h) {
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) {
    x[j] = h * std::cos(std::numbers::pi * (j + 0.5) / n);
  }
  return x;
}

// Barycentric Lagrange weights at y for first-kind Chebyshev nodes.
void LagrangeRow(const std::vector<double>& nodes, double y, double* row) {
  const int n = static_cast<int>(nodes.size());
  for (int j = 0; j < n; ++j) {
    if (y == nodes[j]) {
      for (int i = 0; i < n; ++i) row[i] = (i == j) ? 1.0 : 0.0;
      return;
    }
  }
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double wj =
        ((j % 2) ? -1.0 : 1.0) * std::sin(std::numbers::pi * (j + 0.5) / n);
    row[j] = wj / (y - nodes[j]);
    sum += row[j];
  }
  for (int j = 0; j < n; ++j) row[j] /= sum;
}

double Hzeta(double s, double q) {
  gsl_sf_result r;
  const int status = gsl_sf_hzeta_e(s, q, &r);
  if (status != GSL_SUCCESS) {
    throw std::runtime_error("Hurwitz zeta evaluation failed");
  }
  return r.val;
}

struct GslQuiet {
  GslQuiet() { gsl_set_error_handler_off(); }
};
const GslQuiet kGslQuiet;

}  // namespace

const char* PsWeightingName(PsWeighting w) {
  return w == PsWeighting::kPower ? "power" : "shell";
}

double DiscreteMeasure::Mass(double lo, double hi) const {
  if (hi < lo) return 0.0;
  auto first = std::lower_bound(
      atoms.begin(), atoms.end(), lo,
      [](const Atom& a, double v) { return a.x < v; });
  double m = 0.0;
  for (auto it = first; it != atoms.end() && it->x <= hi; ++it) m += it->w;
  return m;
}

DiscreteMeasure PsMeasureApprox(std::int64_t Q, double delta,
                                const Interval& interval,
                                PsWeighting weighting, int c, bool normalize) {
  if (Q < 32) throw std::invalid_argument("ps_measure_approx needs Q >= 32");
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1]");
  }
  const FareySnapshot snap = EnumerateFarey(Rational(Q), interval, c);
  DiscreteMeasure m;
  m.Q = Q;
  m.delta = delta;
  m.weighting = weighting;
  for (const FareyPoint& pt : snap.points) {
    double w = 0.0;
    if (weighting == PsWeighting::kPower) {
      w = std::pow(static_cast<double>(pt.q), -2.0 * delta);
    } else if (2 * pt.q >= Q) {
      w = 1.0;
    }
    if (w <= 0.0) continue;
    m.atoms.push_back({pt.p, pt.q, pt.a0, pt.word, pt.Value(), w});
  }
  if (m.atoms.empty()) throw std::invalid_argument("measure has no atoms");
  double total = 0.0;
  for (const Atom& a : m.atoms) total += a.w;
  if (normalize) {
    for (Atom& a : m.atoms) a.w /= total;
    total = 0.0;
    for (const Atom& a : m.atoms) total += a.w;
  }
  m.total = total;
  return m;
}

double TransferSpectralRadius(double s, int K, int nodes, bool tail, int c) {
  const double h = HullRadius(c);
  const std::vector<double> x = ChebNodes(nodes, h);
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(nodes, nodes);
  std::vector<double> row(nodes);
  for (int i = 0; i < nodes; ++i) {
    for (int k = -K; k <= K; ++k) {
      if (k == 0) continue;
      const double z = c * k + x[i];
      const double wt = std::pow(std::abs(z), -2.0 * s);
      LagrangeRow(x, 1.0 / z, row.data());
      for (int j = 0; j < nodes; ++j) L(i, j) += wt * row[j];
    }
  }
  if (tail) {
    // For |k| > K the branch images sit next to 0, so f(1/(ck + x)) ~ f(0).
    LagrangeRow(x, 0.0, row.data());
    for (int i = 0; i < nodes; ++i) {
      const double t = std::pow(static_cast<double>(c), -2.0 * s) *
                       (Hzeta(2 * s, K + 1 + x[i] / c) +
                        Hzeta(2 * s, K + 1 - x[i] / c));
      for (int j = 0; j < nodes; ++j) L(i, j) += t * row[j];
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(L, false);
  double r = 0.0;
  for (int i = 0; i < nodes; ++i) r = std::max(r, std::abs(es.eigenvalues()[i]));
  return r;
}

DeltaEstimate DeltaViaTransferOperator(const TransferOptions& opt, int c) {
  if (opt.K < 8) throw std::invalid_argument("transfer operator needs K >= 8");
  auto solve = [&](int K) {
    double lo = 0.5 + 1e-4, hi = 1.0;
    const double rlo = TransferSpectralRadius(lo, K, opt.nodes, opt.tail, c);
    const double rhi = TransferSpectralRadius(hi, K, opt.nodes, opt.tail, c);
    if (!(rlo > 1.0 && rhi < 1.0)) {
      throw std::runtime_error("spectral radius does not bracket 1");
    }
    while (hi - lo > opt.tol) {
      const double mid = 0.5 * (lo + hi);
      if (TransferSpectralRadius(mid, K, opt.nodes, opt.tail, c) > 1.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  DeltaEstimate est;
  est.method = "transfer_operator";
  std::vector<double> d;
  for (int K : {opt.K, 2 * opt.K, 4 * opt.K}) {
    d.push_back(solve(K));
    est.trace.push_back({K, d.back()});
  }
  double value = d[2];
  const double den = d[2] - 2 * d[1] + d[0];
  if (std::abs(den) > 1e-14) {
    const double aitken = d[2] - (d[2] - d[1]) * (d[2] - d[1]) / den;
    if (std::abs(aitken - d[2]) <= 10 * std::abs(d[2] - d[1])) value = aitken;
  }
  est.value = value;
  est.error_bar = std::abs(d[2] - d[1]) + std::abs(value - d[2]) + opt.tol;
  return est;
}

DeltaEstimate DeltaViaCounting(const std::vector<std::int64_t>& Q_list,
                               int c) {
  const CountFitResult r = CountAndFitDelta(Q_list, c);
  DeltaEstimate est;
  est.method = "counting_fit";
  est.value = r.fit.delta_hat;
  // Standard error of the fitted slope, halved.
  const std::size_t n = r.Q.size();
  double mx = 0.0;
  for (auto q : r.Q) mx += std::log(static_cast<double>(q));
  mx /= n;
  double sxx = 0.0, rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(static_cast<double>(r.Q[i])) - mx;
    sxx += dx * dx;
    rss += r.fit.residuals[i] * r.fit.residuals[i];
  }
  const double se = n > 2 ? std::sqrt(rss / (n - 2) / sxx) : 0.0;
  est.error_bar = se / 2;
  for (std::size_t i = 0; i < n; ++i) {
    est.trace.push_back({r.Q[i], static_cast<double>(r.counts[i])});
  }
  return est;
}

std::optional<double> ConformalityCheck(const DiscreteMeasure& nu,
                                        const GroupElement& gamma, double lo,
                                        double hi) {
  const Mat2<double> g = gamma.ToFloat();
  const double p0 = g.c * lo + g.d, p1 = g.c * hi + g.d;
  if (p0 == 0.0 || p1 == 0.0 || (p0 < 0) != (p1 < 0)) {
    throw std::invalid_argument("gamma has a pole in the test interval");
  }
  const double y0 = (g.a * lo + g.b) / p0, y1 = (g.a * hi + g.b) / p1;
  const double image = nu.Mass(std::min(y0, y1), std::max(y0, y1));
  if (image <= 0.0) return std::nullopt;
  double pulled = 0.0;
  auto first = std::lower_bound(
      nu.atoms.begin(), nu.atoms.end(), lo,
      [](const Atom& a, double v) { return a.x < v; });
  for (auto it = first; it != nu.atoms.end() && it->x <= hi; ++it) {
    const double den = g.c * it->x + g.d;
    pulled += it->w * std::pow(den * den, -nu.delta);
  }
  return std::abs(image - pulled) / image;
}

GapIntegrals ExplicitGapCdf(double s, double delta, const DiscreteMeasure& nu) {
  if (!(s > 0.0) || s >= 7.5) {
    throw std::invalid_argument("explicit gap law needs 0 < s < 7.5");
  }
  GapIntegrals out;
  double t1 = 0.0;
  for (const Atom& a : nu.atoms) {
    const double x = a.x;
    if (x > 0.0) {
      // With c = x d in units of sqrt T the region is the segment
      // (s x)^{-1/2} <= d < min(1, 1/x); (4c + d)^2 >= 1 holds there.
      const double top = std::pow(std::min(1.0, 1.0 / x), 2.0 * delta);
      const double bot = std::pow(s * x, -delta);
      if (top > bot) out.F12 += a.w * (top - bot);
    }
    if (x >= 0.0 && x < 0.3) {
      // 4c + d = e d < 1 and e d^2 >= 4/s.
      const double e = 4.0 * x + 1.0;
      const double top = std::pow(1.0 / e, 2.0 * delta);
      const double bot = std::pow(4.0 / (s * e), delta);
      if (top > bot) t1 += a.w * (top - bot);
    }
  }
  // The second triangle is the image of the first under (c, d) -> (c, -4c-d).
  out.F23 = 2.0 * t1;
  return out;
}

std::vector<double> ExplicitGapCurve(const std::vector<double>& s_grid,
                                     double delta, const DiscreteMeasure& nu,
                                     GapCombination comb) {
  std::vector<double> out;
  out.reserve(s_grid.size());
  for (double s : s_grid) {
    const GapIntegrals g = ExplicitGapCdf(s, delta, nu);
    out.push_back(g.F23 + (comb == GapCombination::kLiteral ? 2.0 : 1.0) * g.F12);
  }
  return out;
}

std::vector<PowerLawWindow> PowerLawWindowCheck(
    const std::vector<double>& s, const std::vector<double>& density,
    double delta, const std::vector<std::pair<double, double>>& windows,
    double tol) {
  if (s.size() != density.size()) {
    throw std::invalid_argument("s and density sizes differ");
  }
  std::vector<PowerLawWindow> out;
  for (const auto& [lo, hi] : windows) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < lo || s[i] > hi || !(density[i] > 0.0) || !(s[i] > 0.0)) {
        continue;
      }
      const double x = std::log(s[i]), y = std::log(density[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
    if (n < 3) throw std::invalid_argument("insufficient points in window");
    PowerLawWindow w;
    w.lo = lo;
    w.hi = hi;
    w.n_points = n;
    w.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    w.conforming = std::abs(w.exponent + (delta + 1.0)) <= tol;
    out.push_back(w);
  }
  return out;
}

}  // namespace hecke
