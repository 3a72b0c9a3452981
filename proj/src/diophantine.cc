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

#include "hecke/diophantine.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hecke {
namespace {

// Bottom-right entry q' of a group element (p p'; q q') with q > 0.
std::int64_t PartnerDenominator(const std::vector<std::int64_t>& word) {
  std::int64_t b1 = 0, d1 = 1, b2 = 1, d2 = 0;
  for (std::int64_t a : word) {
    const std::int64_t b = a * b1 + b2, d = a * d1 + d2;
    b2 = b1;
    d2 = d1;
    b1 = b;
    d1 = d;
  }
  if (d1 < 0) {
    b1 = -b1;
    d1 = -d1;
    b2 = -b2;
    d2 = -d2;
  }
  if (b1 * d2 - b2 * d1 == -1) d2 = -d2;
  return d2;
}

void CheckCover(const PrimitiveSet& z, double lo, double hi) {
  if (lo < z.lo() || hi > z.hi()) {
    throw std::invalid_argument("primitive set does not cover the search range");
  }
}

}  // namespace

PrimitiveSet::PrimitiveSet(std::int64_t qmax, double lo, double hi, int c)
    : qmax_(qmax), lo_(lo), hi_(hi) {
  if (!(hi > lo)) throw std::invalid_argument("empty range");
  const Interval iv{Rational(std::floor(lo)), Rational(std::ceil(hi) + 1)};
  const FareySnapshot s = EnumerateFareyUpTo(qmax, iv, c);
  for (const FareyPoint& pt : s.points) {
    const double x = pt.Value();
    if (x < lo || x > hi) continue;
    v_.push_back({pt.p, pt.q});
    x_.push_back(x);
  }
}

std::pair<std::size_t, std::size_t> PrimitiveSet::Range(double lo,
                                                        double hi) const {
  const auto a = std::lower_bound(x_.begin(), x_.end(), lo) - x_.begin();
  const auto b = std::upper_bound(x_.begin(), x_.end(), hi) - x_.begin();
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(std::max(a, b))};
}

bool EstHit(const PrimitiveVector& v, long double x, long double A) {
  const long double q = v.q;
  return std::fabs(static_cast<long double>(v.p) - q * x) <= A / q;
}

bool KestenHit(const PrimitiveVector& v, long double x, long double A,
               long double Q) {
  return std::fabs(x * v.q - static_cast<long double>(v.p)) <= A / Q;
}

std::int64_t EstCount(const PrimitiveSet& z, double x, double A, double theta,
                      double Q) {
  if (!(A > 0) || !(theta > 0 && theta < 1) || !(Q > 1)) {
    throw std::invalid_argument("EST needs A > 0, 0 < theta < 1, Q > 1");
  }
  if (Q - 1 > z.qmax()) throw std::invalid_argument("primitive set too small");
  // q > theta Q bounds the distance |p/q - x| <= A / q^2.
  const double r = A / (theta * Q * theta * Q) * (1 + 1e-12);
  CheckCover(z, x - r, x + r);
  const auto [i0, i1] = z.Range(x - r, x + r);
  std::int64_t n = 0;
  for (std::size_t i = i0; i < i1; ++i) {
    const auto& v = z.vectors()[i];
    if (v.q > theta * Q && v.q < Q && EstHit(v, x, A)) ++n;
  }
  return n;
}

std::int64_t KestenCount(const PrimitiveSet& z, double x, double A, double Q) {
  if (!(A >= 0) || !(Q >= 1)) throw std::invalid_argument("bad Kesten input");
  if (std::floor(Q) > z.qmax()) throw std::invalid_argument("primitive set too small");
  const double r = A / Q * (1 + 1e-12);
  CheckCover(z, x - r, x + r);
  const auto [i0, i1] = z.Range(x - r, x + r);
  std::int64_t n = 0;
  for (std::size_t i = i0; i < i1; ++i) {
    const auto& v = z.vectors()[i];
    if (v.q >= 1 && v.q <= Q && KestenHit(v, x, A, Q)) ++n;
  }
  return n;
}

std::int64_t EstCountExact(const PrimitiveSet& z, const Rational& x,
                           const Rational& A, const Rational& theta,
                           const Rational& Q) {
  const double r = ToDouble(A / (theta * Q * theta * Q)) * 1.001 + 1e-12;
  const double xd = ToDouble(x);
  CheckCover(z, xd - r, xd + r);
  const auto [i0, i1] = z.Range(xd - r, xd + r);
  std::int64_t n = 0;
  for (std::size_t i = i0; i < i1; ++i) {
    const auto& v = z.vectors()[i];
    const Rational q(v.q);
    if (!(q > theta * Q && q < Q)) continue;
    Rational e = Rational(v.p) - q * x;
    if (e < 0) e = -e;
    if (e * q <= A) ++n;
  }
  return n;
}

std::int64_t KestenCountExact(const PrimitiveSet& z, const Rational& x,
                              const Rational& A, const Rational& Q) {
  const double r = ToDouble(A / Q) * 1.001 + 1e-12;
  const double xd = ToDouble(x);
  CheckCover(z, xd - r, xd + r);
  const auto [i0, i1] = z.Range(xd - r, xd + r);
  std::int64_t n = 0;
  for (std::size_t i = i0; i < i1; ++i) {
    const auto& v = z.vectors()[i];
    if (Rational(v.q) > Q) continue;
    Rational e = x * v.q - v.p;
    if (e < 0) e = -e;
    if (e * Q <= A) ++n;
  }
  return n;
}

std::int64_t EstCountBrute(const PrimitiveSet& z, double x, double A,
                           double theta, double Q) {
  std::int64_t n = 0;
  for (const auto& v : z.vectors()) {
    if (v.q > theta * Q && v.q < Q && EstHit(v, x, A)) ++n;
  }
  return n;
}

std::int64_t KestenCountBrute(const PrimitiveSet& z, double x, double A,
                              double Q) {
  std::int64_t n = 0;
  for (const auto& v : z.vectors()) {
    if (v.q >= 1 && v.q <= Q && KestenHit(v, x, A, Q)) ++n;
  }
  return n;
}

bool CountRegion::Contains(double x1, double x2) const {
  switch (kind) {
    case Kind::kEst:
      return std::abs(x1) * x2 <= A && theta < x2 && x2 < 1;
    case Kind::kKesten:
      return std::abs(x1) <= A && 0 <= x2 && x2 <= 1;
    case Kind::kBox:
      return x_lo <= x1 && x1 <= x_hi && y_lo < x2 && x2 <= y_hi;
  }
  return false;
}

std::int64_t ShearedCount(const PrimitiveSet& z, const CountRegion& region,
                          double x, double Q) {
  // Search radius for |p/q - x| = |x1| / (Q q).
  double r = 0.0;
  switch (region.kind) {
    case CountRegion::Kind::kEst:
      r = region.A / (region.theta * Q * region.theta * Q);
      break;
    case CountRegion::Kind::kKesten:
      r = region.A / Q;
      break;
    case CountRegion::Kind::kBox:
      r = std::max(std::abs(region.x_lo), std::abs(region.x_hi)) /
          (Q * std::max(1.0, region.y_lo * Q));
      break;
  }
  r *= 1 + 1e-9;
  CheckCover(z, x - r, x + r);
  const auto [i0, i1] = z.Range(x - r, x + r);
  std::int64_t n = 0;
  for (std::size_t i = i0; i < i1; ++i) {
    const auto& v = z.vectors()[i];
    const double x1 = Q * (static_cast<double>(v.p) - v.q * x);
    const double x2 = v.q / Q;
    if (region.Contains(x1, x2)) ++n;
  }
  return n;
}

double Sampler::Draw(std::mt19937_64& rng) const {
  if (kind == Kind::kUniform) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  std::normal_distribution<double> g(mean, sigma);
  for (int i = 0; i < 1000000; ++i) {
    const double x = g(rng);
    if (x >= lo && x < hi) return x;
  }
  throw std::invalid_argument("truncated Gaussian has no mass on the support");
}

std::map<std::int64_t, double> CountDistribution::Scaled() const {
  std::map<std::int64_t, double> out;
  for (const auto& [k, m] : mass) out[k] = m * scale;
  return out;
}

CountDistribution SampleCountDistribution(const PrimitiveSet& z,
                                          const CountRegion& region, double Q,
                                          const Sampler& sampler,
                                          std::size_t N, std::uint64_t seed,
                                          double delta) {
  if (N == 0) throw std::invalid_argument("need samples");
  std::mt19937_64 rng(seed);
  CountDistribution d;
  d.Q = Q;
  d.samples = N;
  d.scale = std::pow(Q, 2 * (1 - delta));
  for (std::size_t i = 0; i < N; ++i) {
    const double x = sampler.Draw(rng);
    d.mass[ShearedCount(z, region, x, Q)] += 1.0;
  }
  for (auto& [k, m] : d.mass) m /= N;
  return d;
}

CountDistribution ExactCountLaw(double Q, double A, double theta, bool kesten,
                                double lo, double hi, double delta, int c) {
  const auto qmax = static_cast<std::int64_t>(std::floor(Q));
  const PrimitiveSet z(qmax, lo - 1, hi + 1, c);
  std::vector<std::pair<long double, int>> ev;
  for (const auto& v : z.vectors()) {
    long double r;
    if (kesten) {
      if (v.q < 1 || v.q > Q) continue;
      r = static_cast<long double>(A) / (static_cast<long double>(Q) * v.q);
    } else {
      if (!(v.q > theta * Q && v.q < Q)) continue;
      r = static_cast<long double>(A) / (static_cast<long double>(v.q) * v.q);
    }
    const long double x = static_cast<long double>(v.p) / v.q;
    const long double a = std::max<long double>(x - r, lo);
    const long double b = std::min<long double>(x + r, hi);
    if (a < b) {
      ev.push_back({a, +1});
      ev.push_back({b, -1});
    }
  }
  std::sort(ev.begin(), ev.end());
  CountDistribution d;
  d.Q = Q;
  d.scale = std::pow(Q, 2 * (1 - delta));
  long double last = lo;
  std::int64_t cur = 0;
  std::map<std::int64_t, long double> acc;
  for (const auto& [x, step] : ev) {
    acc[cur] += x - last;
    cur += step;
    last = x;
  }
  acc[0] += hi - last;
  for (const auto& [k, m] : acc) {
    if (m > 0) d.mass[k] = static_cast<double>(m / (hi - lo));
  }
  return d;
}

DirectionSet::DirectionSet(double R, int c) : R_(R) {
  if (!(R > 1)) throw std::invalid_argument("direction radius must exceed 1");
  const auto qmax = static_cast<std::int64_t>(std::floor(R));
  const std::vector<FareyPoint> w = WindowPoints(qmax, c);
  for (const FareyPoint& pt : w) {
    const double q = static_cast<double>(pt.q);
    const double pmax = std::sqrt(std::max(0.0, R * R - q * q));
    // p + c m q within [-pmax, pmax].
    const auto m_lo = static_cast<std::int64_t>(std::ceil((-pmax - pt.p) / (c * q)));
    const auto m_hi = static_cast<std::int64_t>(std::floor((pmax - pt.p) / (c * q)));
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
      const double p = static_cast<double>(pt.p + c * m * pt.q);
      if (p * p + q * q <= R * R) angles_.push_back(std::atan2(q, p));
    }
  }
  std::sort(angles_.begin(), angles_.end());
}

std::int64_t DirectionSet::Count(double v, double sigma) const {
  // Vectors are taken with q > 0, so directions are compared mod pi.
  const double pi = std::numbers::pi;
  double u = std::fmod(v, pi);
  if (u < 0) u += pi;
  const double half = sigma / (2 * R_);
  auto in = [&](double a, double b) {
    return static_cast<std::int64_t>(
        std::upper_bound(angles_.begin(), angles_.end(), b) -
        std::lower_bound(angles_.begin(), angles_.end(), a));
  };
  std::int64_t n = in(u - half, u + half);
  if (u - half < 0) n += in(u - half + pi, pi);
  if (u + half > pi) n += in(0, u + half - pi);
  return n;
}

double Bump::operator()(double u) const {
  if (u <= lo || u >= hi) return (!smooth && u == lo) ? 1.0 : 0.0;
  if (!smooth) return 1.0;
  const double z = (2 * u - lo - hi) / (hi - lo);
  return std::exp(1.0 - 1.0 / (1.0 - z * z));
}

EquidistResult EquidistSum(const EquidistSpec& f, std::int64_t Q, double sigma,
                           double delta, int c) {
  if (Q < 2) throw std::invalid_argument("Q must be >= 2");
  EquidistResult out;
  out.t = 2 * std::log(static_cast<double>(Q)) + sigma;
  const double et = std::exp(out.t);
  const std::vector<FareyPoint> w = WindowPoints(Q - 1, c);
  double sum = 0.0;
  for (const FareyPoint& pt : w) {
    // One copy of each window point lies in [0, c).
    double r = pt.Value();
    if (r < 0) r += c;
    const double fr = f.phi(r);
    if (fr == 0.0) continue;
    const double q = static_cast<double>(pt.q);
    // Reduced into (-c/2, c/2], where the limit set lives.
    double x = std::fmod(-static_cast<double>(PartnerDenominator(pt.word)) / q, c);
    if (x <= -0.5 * c) x += c;
    if (x > 0.5 * c) x -= c;
    const double v = fr * f.psi(x) * f.chi(et / (q * q));
    if (v != 0.0) {
      sum += v;
      ++out.terms;
    }
  }
  out.value = std::exp(-delta * out.t) * sum;
  return out;
}

}  // namespace hecke
