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

#include "hecke/orbit.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace hecke {
namespace {

struct Node {
  std::int64_t b1, d1, b2, d2;
  std::vector<std::int64_t> word;
};

void PushPoint(std::int64_t b, std::int64_t d, std::vector<std::int64_t> word,
               std::vector<FareyPoint>* out) {
  FareyPoint pt;
  if (d < 0) {
    b = -b;
    d = -d;
  }
  pt.p = b;
  pt.q = d;
  pt.a0 = 0;
  pt.word = std::move(word);
  out->push_back(std::move(pt));
}

}  // namespace

CFWord FareyPoint::Word(int c) const { return CFWord(word, c); }

bool FareyLess(const FareyPoint& x, const FareyPoint& y) {
  return static_cast<i128>(x.p) * y.q < static_cast<i128>(y.p) * x.q;
}

std::int64_t StrictBelow(const Rational& Q) {
  const BigInt f = Floor(Q);
  BigInt r = (Rational(f) == Q) ? BigInt(f - 1) : f;
  if (r > std::numeric_limits<std::int32_t>::max()) {
    throw ResourceError("height too large for the int64 enumeration kernel");
  }
  return r.convert_to<std::int64_t>();
}

std::vector<FareyPoint> WindowPoints(std::int64_t qmax, int c,
                                     const EnumerationLimits& lim) {
  if (c < 3) throw std::invalid_argument("group parameter c must be >= 3");
  std::vector<FareyPoint> out;
  if (qmax < 1) return out;
  out.push_back(FareyPoint{0, 1, 0, {}});
  std::vector<Node> stack;
  stack.push_back({0, 1, 1, 0, {}});
  while (!stack.empty()) {
    Node n = std::move(stack.back());
    stack.pop_back();
    for (int sign : {1, -1}) {
      // |a d1 + d2| grows with |a| because |d2| < |d1|, and every descendant
      // has a larger denominator, so the first overshoot ends the branch.
      for (std::int64_t k = 1;; ++k) {
        const std::int64_t a = sign * k * c;
        const std::int64_t d = a * n.d1 + n.d2;
        if ((d < 0 ? -d : d) > qmax) break;
        const std::int64_t b = a * n.b1 + n.b2;
        std::vector<std::int64_t> w = n.word;
        w.push_back(a);
        stack.push_back({b, d, n.b1, n.d1, w});
        PushPoint(b, d, std::move(w), &out);
        if (out.size() > lim.cap_points) {
          throw ResourceError("orbit enumeration exceeded the point cap");
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), FareyLess);
  return out;
}

FareySnapshot EnumerateFarey(const Rational& Q, const Interval& interval,
                             int c, const EnumerationLimits& lim) {
  if (Q <= 1) throw std::invalid_argument("height Q must exceed 1");
  FareySnapshot snap = EnumerateFareyUpTo(StrictBelow(Q), interval, c, lim);
  snap.Q = Q;
  return snap;
}

FareySnapshot EnumerateFareyUpTo(std::int64_t qmax, const Interval& interval,
                                 int c, const EnumerationLimits& lim) {
  if (!(interval.lo < interval.hi)) {
    throw std::invalid_argument("empty interval");
  }
  FareySnapshot snap;
  snap.Q = Rational(qmax + 1);
  snap.interval = interval;
  snap.c = c;
  const std::vector<FareyPoint> window = WindowPoints(qmax, c, lim);
  // Translates a0 in cZ whose window copy can meet the interval.
  const BigInt k_lo = Floor((interval.lo - 1) / c);
  const BigInt k_hi = Ceil((interval.hi + 1) / c);
  const BigInt copies = k_hi - k_lo + 1;
  if (copies * window.size() > 4 * BigInt(lim.cap_points)) {
    throw ResourceError("interval too long for the point cap");
  }
  const std::int64_t k0 = k_lo.convert_to<std::int64_t>();
  const std::int64_t k1 = k_hi.convert_to<std::int64_t>();
  for (std::int64_t k = k0; k <= k1; ++k) {
    const std::int64_t a0 = k * c;
    for (const FareyPoint& w : window) {
      FareyPoint pt = w;
      pt.a0 = a0;
      pt.p = w.p + MulChecked(a0, w.q);
      if (!interval.Contains(Rational(pt.p, pt.q))) continue;
      snap.points.push_back(std::move(pt));
      if (snap.points.size() > lim.cap_points) {
        throw ResourceError("orbit enumeration exceeded the point cap");
      }
    }
  }
  std::sort(snap.points.begin(), snap.points.end(), FareyLess);
  return snap;
}

std::vector<FareyPoint> EnumerateByWordLength(int L, const Interval& interval,
                                              int c,
                                              const EnumerationLimits& lim) {
  if (L < 0 || L > 26) throw std::invalid_argument("word length out of range");
  if (3.0 * std::pow(2.0, L) > 4.0 * lim.cap_points) {
    throw ResourceError("word-length enumeration exceeded the point cap");
  }
  // Letters: 0 = T^c, 1 = T^-c, 2 = S.  Reduced words only.
  struct W {
    Mat2<std::int64_t> m;
    int last;
  };
  auto mul = [](const Mat2<std::int64_t>& x, const Mat2<std::int64_t>& y) {
    Mat2<std::int64_t> r;
    r.a = MulChecked(x.a, y.a) + MulChecked(x.b, y.c);
    r.b = MulChecked(x.a, y.b) + MulChecked(x.b, y.d);
    r.c = MulChecked(x.c, y.a) + MulChecked(x.d, y.c);
    r.d = MulChecked(x.c, y.b) + MulChecked(x.d, y.d);
    return r;
  };
  const Mat2<std::int64_t> gens[3] = {
      {1, c, 0, 1}, {1, -c, 0, 1}, {0, 1, -1, 0}};
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<W> level{{{1, 0, 0, 1}, -1}};
  auto record = [&](const Mat2<std::int64_t>& m) {
    if (m.c == 0) return;
    std::int64_t p = m.a, q = m.c;
    if (q < 0) {
      p = -p;
      q = -q;
    }
    if (interval.Contains(Rational(p, q))) seen.insert({p, q});
  };
  for (int len = 1; len <= L; ++len) {
    std::vector<W> next;
    next.reserve(level.size() * 2);
    for (const W& w : level) {
      for (int g = 0; g < 3; ++g) {
        if ((w.last == 2 && g == 2) || (w.last == 0 && g == 1) ||
            (w.last == 1 && g == 0)) {
          continue;
        }
        W n{mul(w.m, gens[g]), g};
        record(n.m);
        next.push_back(n);
      }
    }
    level = std::move(next);
  }
  std::vector<FareyPoint> out;
  out.reserve(seen.size());
  for (const auto& [p, q] : seen) {
    const OrbitCoordinates oc = SplitCusp(Cusp(p, q), c);
    FareyPoint pt;
    pt.p = p;
    pt.q = q;
    pt.a0 = oc.a0.convert_to<std::int64_t>();
    pt.word = oc.word.quotients;
    out.push_back(std::move(pt));
  }
  std::sort(out.begin(), out.end(), FareyLess);
  return out;
}

std::vector<PrimitiveVector> PrimitiveVectors(std::int64_t qmax, int c) {
  std::vector<PrimitiveVector> out;
  if (qmax <= 1) return out;
  const FareySnapshot s = EnumerateFarey(Rational(qmax), Interval{0, c}, c);
  out.reserve(s.points.size());
  for (const FareyPoint& pt : s.points) out.push_back({pt.p, pt.q});
  return out;
}

DeltaFit FitDelta(const std::vector<double>& Q, const std::vector<double>& N) {
  if (Q.size() != N.size() || Q.size() < 2) {
    throw std::invalid_argument("need at least two (Q, N) pairs");
  }
  for (std::size_t i = 1; i < N.size(); ++i) {
    if (!(N[i] > N[i - 1]) || !(Q[i] > Q[i - 1])) {
      throw std::invalid_argument("counts must increase with Q");
    }
  }
  const std::size_t n = Q.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(Q[i]), y = std::log(N[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icpt = (sy - slope * sx) / n;
  DeltaFit f;
  f.delta_hat = slope / 2;
  f.c_hat = std::exp(icpt);
  for (std::size_t i = 0; i < n; ++i) {
    f.residuals.push_back(std::log(N[i]) - icpt - slope * std::log(Q[i]));
  }
  return f;
}

CountFitResult CountAndFitDelta(const std::vector<std::int64_t>& Q_list,
                                int c) {
  if (Q_list.size() < 4) throw std::invalid_argument("need >= 4 heights");
  CountFitResult r;
  r.Q = Q_list;
  std::sort(r.Q.begin(), r.Q.end());
  // One period holds exactly one copy of the window [-h, h].
  const std::vector<FareyPoint> w = WindowPoints(r.Q.back() - 1, c);
  std::vector<std::int64_t> dens;
  dens.reserve(w.size());
  for (const auto& pt : w) dens.push_back(pt.q);
  std::sort(dens.begin(), dens.end());
  std::vector<double> qs, ns;
  for (std::int64_t Q : r.Q) {
    const auto cnt = std::lower_bound(dens.begin(), dens.end(), Q) - dens.begin();
    r.counts.push_back(cnt);
    qs.push_back(static_cast<double>(Q));
    ns.push_back(static_cast<double>(cnt));
  }
  r.fit = FitDelta(qs, ns);
  return r;
}

}  // namespace hecke
