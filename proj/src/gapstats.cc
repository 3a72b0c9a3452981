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

#include "hecke/gapstats.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hecke {
namespace {

std::int64_t CountAtMost(const std::vector<Rational>& sorted,
                         const Rational& s) {
  return std::upper_bound(sorted.begin(), sorted.end(), s) - sorted.begin();
}

std::size_t CountIn(const std::vector<double>& sorted, double lo, double hi) {
  return std::upper_bound(sorted.begin(), sorted.end(), hi) -
         std::lower_bound(sorted.begin(), sorted.end(), lo);
}

}  // namespace

std::vector<double> MakeGrid(double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo) throw std::invalid_argument("bad grid");
  std::vector<double> g;
  const auto n = static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::int64_t i = 0; i <= n; ++i) g.push_back(lo + i * step);
  return g;
}

GapCdf GapCdfEmpirical(const Rational& T, const Interval& interval,
                       const std::vector<double>& s_grid, double delta_hat,
                       int c, bool cyclic) {
  if (T < 16) throw std::invalid_argument("gap CDF needs T >= 16");
  GapCdf out;
  out.T = T;
  out.interval = interval;
  out.s_grid = s_grid;
  out.delta_hat = delta_hat;
  const auto pairs = AdjacentPairs(T, interval, c, cyclic);
  std::vector<Rational> all, g12, g23, gnone;
  for (const auto& ap : pairs) {
    all.push_back(ap.scaled_gap);
    switch (ClassifyPair(ap, c).kind) {
      case PairKind::k12:
        g12.push_back(ap.scaled_gap);
        break;
      case PairKind::k23:
        g23.push_back(ap.scaled_gap);
        break;
      case PairKind::kNonRectangle:
        gnone.push_back(ap.scaled_gap);
        break;
    }
  }
  for (auto* v : {&all, &g12, &g23, &gnone}) std::sort(v->begin(), v->end());
  const double norm = std::pow(ToDouble(T), delta_hat);
  for (double s : s_grid) {
    const Rational rs(s);  // exact binary value of s
    out.raw.push_back(CountAtMost(all, rs));
    out.raw12.push_back(CountAtMost(g12, rs));
    out.raw23.push_back(CountAtMost(g23, rs));
    out.raw_none.push_back(CountAtMost(gnone, rs));
    out.values.push_back(out.raw.back() / norm);
  }
  return out;
}

std::int64_t Histogram::Total() const {
  std::int64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

Histogram GapHistogram(const std::vector<double>& pts, double bin_width,
                       double scale) {
  if (!(bin_width > 0.0)) throw std::invalid_argument("bin width must be > 0");
  Histogram h;
  h.bin_width = bin_width;
  if (pts.size() < 2) return h;
  std::vector<double> gaps;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    gaps.push_back((pts[i + 1] - pts[i]) * scale);
  }
  const double gmax = *std::max_element(gaps.begin(), gaps.end());
  const auto nb = static_cast<std::size_t>(std::floor(gmax / bin_width)) + 1;
  h.counts.assign(nb, 0);
  for (std::size_t b = 0; b < nb; ++b) h.bin_lo.push_back(b * bin_width);
  for (double g : gaps) {
    auto b = static_cast<std::size_t>(std::floor(g / bin_width));
    h.counts[std::min(b, nb - 1)]++;
  }
  return h;
}

Histogram PointHistogram(const std::vector<double>& points, double lo,
                         double hi, double bin_width) {
  if (!(bin_width > 0.0) || !(hi > lo)) {
    throw std::invalid_argument("bad histogram range");
  }
  Histogram h;
  h.bin_width = bin_width;
  const auto nb = static_cast<std::size_t>(std::ceil((hi - lo) / bin_width));
  h.counts.assign(nb, 0);
  for (std::size_t b = 0; b < nb; ++b) h.bin_lo.push_back(lo + b * bin_width);
  for (double x : points) {
    if (x < lo || x >= hi) continue;
    auto b = static_cast<std::size_t>(std::floor((x - lo) / bin_width));
    h.counts[std::min(b, nb - 1)]++;
  }
  return h;
}

LocalStat ComputeLocalStat(const LocalStatSpec& spec, int c) {
  if (spec.k < 1) throw std::invalid_argument("local statistics need k >= 1");
  if (spec.a_hi < spec.a_lo) throw std::invalid_argument("bad test interval");
  const double Q2 = static_cast<double>(spec.Q) * spec.Q;
  const double alo = spec.a_lo / Q2, ahi = spec.a_hi / Q2;
  const Interval cover{spec.window.lo - 1 + Rational(std::floor(spec.a_lo / Q2)),
                       spec.window.hi + 1 + Rational(std::ceil(spec.a_hi / Q2))};
  const FareySnapshot snap = EnumerateFarey(Rational(spec.Q), cover, c);
  std::vector<double> xs;
  xs.reserve(snap.points.size());
  for (const auto& pt : snap.points) xs.push_back(pt.Value());
  LocalStat out;
  out.kind = spec.kind;
  out.Q = spec.Q;
  if (spec.kind == LocalStatKind::kPQ) {
    if (spec.samples == 0) throw std::invalid_argument("need samples");
    const double lo = spec.window.lo.convert_to<double>();
    const double len = spec.window.Length();
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < spec.samples; ++i) {
      const double u = std::fmod((i + 0.5) * phi, 1.0);
      const double x = lo + len * u;
      if (CountIn(xs, x + alo, x + ahi) == static_cast<std::size_t>(spec.k)) {
        ++hits;
      }
    }
    const double p = static_cast<double>(hits) / spec.samples;
    out.raw = p;
    out.samples = spec.samples;
    const double scale = std::pow(Q2, 1.0 - spec.delta_hat);
    out.value = p * scale;
    out.std_error = std::sqrt(p * (1 - p) / spec.samples) * scale;
    return out;
  }
  std::size_t hits = 0, n = 0;
  for (const auto& pt : snap.points) {
    if (!spec.window.Contains(pt.Exact())) continue;
    ++n;
    const double r = pt.Value();
    if (CountIn(xs, r + alo, r + ahi) == static_cast<std::size_t>(spec.k)) {
      ++hits;
    }
  }
  out.raw = static_cast<double>(hits);
  out.samples = n;
  out.value = hits / std::pow(Q2, spec.delta_hat);
  return out;
}

KappaFit FitKappaAndCompare(const std::vector<double>& s,
                            const std::vector<double>& emp,
                            const std::vector<double>& cur, double lo,
                            double hi) {
  if (s.size() != emp.size() || s.size() != cur.size()) {
    throw std::invalid_argument("grid sizes differ");
  }
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < lo || s[i] > hi) continue;
    num += emp[i] * cur[i];
    den += cur[i] * cur[i];
  }
  if (!(den > 0.0)) {
    throw std::invalid_argument("explicit curve vanishes on the fit range");
  }
  KappaFit f;
  f.kappa = num / den;
  double sup_emp = 0.0, sup_res = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < lo || s[i] > hi) continue;
    const double r = std::abs(emp[i] - f.kappa * cur[i]);
    sup_emp = std::max(sup_emp, std::abs(emp[i]));
    sup_res = std::max(sup_res, r);
    if (emp[i] > 0.0) {
      f.pointwise_discrepancy = std::max(f.pointwise_discrepancy, r / emp[i]);
    }
  }
  f.sup_discrepancy = sup_emp > 0.0 ? sup_res / sup_emp : 0.0;
  return f;
}

std::vector<double> LipschitzProbe(const Rational& T, const Interval& interval,
                                   double delta_hat,
                                   const std::vector<double>& steps, double lo,
                                   double hi, int c) {
  std::vector<double> out;
  for (double h : steps) {
    std::vector<double> grid = MakeGrid(lo, hi, h);
    const GapCdf g = GapCdfEmpirical(T, interval, grid, delta_hat, c);
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      m = std::max(m, (g.values[i + 1] - g.values[i]) / h);
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace hecke
