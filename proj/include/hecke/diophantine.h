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

// Counting problems for the primitive set Z: approximation counts,
// sheared-region count distributions, directions and equidistribution sums.

#ifndef HECKE_DIOPHANTINE_H_
#define HECKE_DIOPHANTINE_H_

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hecke/orbit.h"

namespace hecke {

// Z restricted to 0 < q <= qmax and p/q within [lo, hi], sorted by p/q.
class PrimitiveSet {
 public:
  PrimitiveSet(std::int64_t qmax, double lo, double hi, int c = kDefaultC);
  const std::vector<PrimitiveVector>& vectors() const { return v_; }
  const std::vector<double>& values() const { return x_; }
  std::int64_t qmax() const { return qmax_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  // Indices of vectors with p/q in [lo, hi].
  std::pair<std::size_t, std::size_t> Range(double lo, double hi) const;

 private:
  std::int64_t qmax_;
  double lo_, hi_;
  std::vector<PrimitiveVector> v_;
  std::vector<double> x_;
};

// |p - q x| <= A / q in long double arithmetic.
bool EstHit(const PrimitiveVector& v, long double x, long double A);
bool KestenHit(const PrimitiveVector& v, long double x, long double A,
               long double Q);

// #{(p, q) in Z : |p - q x| <= A/q, theta Q < q < Q}.  z must hold q < Q.
std::int64_t EstCount(const PrimitiveSet& z, double x, double A, double theta,
                      double Q);
// #{(p, q) in Z : |x q - p| <= A/Q, 1 <= q <= Q}.
std::int64_t KestenCount(const PrimitiveSet& z, double x, double A, double Q);
// Exact versions for rational x.
std::int64_t EstCountExact(const PrimitiveSet& z, const Rational& x,
                           const Rational& A, const Rational& theta,
                           const Rational& Q);
std::int64_t KestenCountExact(const PrimitiveSet& z, const Rational& x,
                              const Rational& A, const Rational& Q);
// Double loop over every vector; oracle for the windowed searches.
std::int64_t EstCountBrute(const PrimitiveSet& z, double x, double A,
                           double theta, double Q);
std::int64_t KestenCountBrute(const PrimitiveSet& z, double x, double A,
                              double Q);

// Regions in the (x1, x2) plane for (p, q) n_+(-x) Phi^t
// = (Q (p - q x), q / Q).
struct CountRegion {
  enum class Kind { kEst, kKesten, kBox };
  Kind kind = Kind::kEst;
  double A = 1.0;
  double theta = 0.5;
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;  // kBox, y open below
  bool Contains(double x1, double x2) const;
};

// Count of Z points sheared into the region.
std::int64_t ShearedCount(const PrimitiveSet& z, const CountRegion& region,
                          double x, double Q);

struct Sampler {
  enum class Kind { kUniform, kGaussian };
  Kind kind = Kind::kUniform;
  double lo = 0.0, hi = 4.0;        // support
  double mean = 2.0, sigma = 0.5;   // kGaussian, truncated to [lo, hi]
  double Draw(std::mt19937_64& rng) const;
};

struct CountDistribution {
  double Q = 0.0;
  std::size_t samples = 0;
  double scale = 1.0;  // Q^{2(1 - delta)}
  std::map<std::int64_t, double> mass;
  std::map<std::int64_t, double> Scaled() const;
};

CountDistribution SampleCountDistribution(const PrimitiveSet& z,
                                          const CountRegion& region, double Q,
                                          const Sampler& sampler,
                                          std::size_t N, std::uint64_t seed,
                                          double delta);

// Exact Lebesgue law of the EST (or Kesten) count for x uniform on [lo, hi),
// by sweeping the union of approximation intervals.
CountDistribution ExactCountLaw(double Q, double A, double theta, bool kesten,
                                double lo, double hi, double delta,
                                int c = kDefaultC);

// Directions: #{y in Z, |y| <= R, angle(y) within sigma / (2R) of v}.
class DirectionSet {
 public:
  DirectionSet(double R, int c = kDefaultC);
  std::int64_t Count(double v, double sigma) const;
  double R() const { return R_; }
  std::size_t size() const { return angles_.size(); }

 private:
  double R_;
  std::vector<double> angles_;  // in (0, pi), sorted
};

struct Bump {
  double lo = 0.0, hi = 1.0;
  bool smooth = true;  // C-infinity bump, else indicator
  double operator()(double u) const;
};

struct EquidistSpec {
  Bump phi;  // in r
  Bump psi;  // in the reduced real part, taken in (-c/2, c/2]
  Bump chi;  // in the reduced height
};

struct EquidistResult {
  double value = 0.0;
  std::size_t terms = 0;  // r with nonzero contribution
  double t = 0.0;
};

// e^{-delta t} sum_{r in F_Q n [0, c)} phi(r) psi(-q'/q mod c) chi(e^t/q^2),
// with -q'/q reduced into (-c/2, c/2],
// t = 2 ln Q + sigma, where (p p'; q q') is a group element sending inf to r.
EquidistResult EquidistSum(const EquidistSpec& f, std::int64_t Q,
                           double sigma, double delta, int c = kDefaultC);

}  // namespace hecke

#endif  // HECKE_DIOPHANTINE_H_
