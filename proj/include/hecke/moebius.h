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

// Moebius algebra on the upper half-plane.

#ifndef HECKE_MOEBIUS_H_
#define HECKE_MOEBIUS_H_

#include <complex>
#include <ostream>
#include <string>

#include "hecke/arith.h"

namespace hecke {

using Complex = std::complex<double>;

template <typename T>
struct Mat2 {
  T a{1}, b{0}, c{0}, d{1};

  T Det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  // Inverse of a determinant-one matrix.
  Mat2 Inverse() const { return {d, -b, -c, a}; }
  Mat2 Transpose() const { return {a, c, b, d}; }
  Mat2 Negated() const { return {-a, -b, -c, -d}; }
};

// Exact element of PSL(2, Z)-type groups; entries are big integers.
class GroupElement {
 public:
  GroupElement() = default;
  // Throws std::invalid_argument unless ad - bc = 1.
  GroupElement(BigInt a, BigInt b, BigInt c, BigInt d);
  static GroupElement Identity() { return GroupElement(); }
  static GroupElement Translation(const BigInt& t) {
    return GroupElement(1, t, 0, 1);
  }
  static GroupElement Inversion() { return GroupElement(0, 1, -1, 0); }

  const Mat2<BigInt>& m() const { return m_; }
  const BigInt& a() const { return m_.a; }
  const BigInt& b() const { return m_.b; }
  const BigInt& c() const { return m_.c; }
  const BigInt& d() const { return m_.d; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement Inverse() const;
  // Sign-normalized representative: c > 0, or c == 0 and d > 0.
  GroupElement Canonical() const;
  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  Mat2<double> ToFloat() const;
  std::string ToString() const;

 private:
  Mat2<BigInt> m_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

// A point of R u {inf}: either an exact reduced rational p/q (q >= 0,
// q == 0 meaning infinity) or a floating real.
class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  static BoundaryPoint FromRational(const BigInt& p, const BigInt& q);
  static BoundaryPoint FromRational(const Rational& r);
  static BoundaryPoint Infinity();
  static BoundaryPoint FromReal(double x);

  bool exact() const { return exact_; }
  bool IsInfinity() const { return exact_ && q_ == 0; }
  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  // Only for finite exact points.
  Rational ToRational() const;
  double ToDouble() const;
  bool operator==(const BoundaryPoint& o) const;
  std::string ToString() const;

 private:
  bool exact_ = true;
  BigInt p_ = 0;
  BigInt q_ = 1;
  double x_ = 0.0;
};

BoundaryPoint MobiusApply(const GroupElement& g, const BoundaryPoint& z);
Complex MobiusApply(const GroupElement& g, Complex z);
Complex MobiusApply(const Mat2<double>& g, Complex z);

// Circles tangent to R (kTangent), horizontal lines R + hi (kHorizontal) and
// generic circles (kGeneral).  Tangent and horizontal circles are exact.
struct Circle {
  enum class Kind { kTangent, kHorizontal, kGeneral };
  Kind kind = Kind::kTangent;
  Rational tangency = 0;  // kTangent
  Rational size = 1;      // diameter (kTangent) or height (kHorizontal)
  Complex center{0.0, 0.0};  // kGeneral
  double radius = 0.0;       // kGeneral

  static Circle Tangent(const Rational& x, const Rational& diameter);
  static Circle Horizontal(const Rational& height);
  static Circle General(Complex center, double radius);
  bool operator==(const Circle& o) const;
  // Euclidean center and radius, for any kind except kHorizontal.
  Complex Center() const;
  double Radius() const;
  std::string ToString() const;
};

// Image of a tangent circle or horizontal line; throws for kGeneral.
Circle CircleImage(const GroupElement& g, const Circle& circle);

struct NAKDecomposition {
  double x = 0.0;
  double y = 1.0;
  double theta = 0.0;  // in [0, pi)
};

// g = n(x) diag(y^{-1/2}, y^{1/2}) k(theta) up to the overall sign, with
// n(x) = (1 x; 0 1) and k(theta) = (cos -sin; sin cos).
NAKDecomposition NakDecompose(const Mat2<double>& g);
Mat2<double> NakRecompose(const NAKDecomposition& nak);

// Busemann function for an exact boundary point; throws on boundary inputs.
double Busemann(const BoundaryPoint& xi, Complex x, Complex y);
double HypDistance(Complex z, Complex w);

}  // namespace hecke

#endif  // HECKE_MOEBIUS_H_
