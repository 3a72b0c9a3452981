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

#include "hecke/moebius.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hecke {

GroupElement::GroupElement(BigInt a, BigInt b, BigInt c, BigInt d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (m_.Det() != 1) {
    throw std::invalid_argument("group element must have determinant 1: " +
                                ToString());
  }
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  GroupElement r;
  r.m_ = m_ * o.m_;
  return r;
}

GroupElement GroupElement::Inverse() const {
  GroupElement r;
  r.m_ = m_.Inverse();
  return r;
}

GroupElement GroupElement::Canonical() const {
  if (m_.c < 0 || (m_.c == 0 && m_.d < 0)) {
    GroupElement r;
    r.m_ = m_.Negated();
    return r;
  }
  return *this;
}

bool GroupElement::operator==(const GroupElement& o) const {
  const Mat2<BigInt> x = Canonical().m_;
  const Mat2<BigInt> y = o.Canonical().m_;
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

Mat2<double> GroupElement::ToFloat() const {
  return {hecke::ToDouble(m_.a), hecke::ToDouble(m_.b), hecke::ToDouble(m_.c),
          hecke::ToDouble(m_.d)};
}

std::string GroupElement::ToString() const {
  std::ostringstream os;
  os << "(" << m_.a << " " << m_.b << "; " << m_.c << " " << m_.d << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  return os << g.ToString();
}

BoundaryPoint BoundaryPoint::FromRational(const BigInt& p, const BigInt& q) {
  if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not a point");
  BoundaryPoint r;
  BigInt g = boost::multiprecision::gcd(p, q);
  r.p_ = p / g;
  r.q_ = q / g;
  if (r.q_ < 0 || (r.q_ == 0 && r.p_ < 0)) {
    r.p_ = -r.p_;
    r.q_ = -r.q_;
  }
  return r;
}

BoundaryPoint BoundaryPoint::FromRational(const Rational& r) {
  return FromRational(Numer(r), Denom(r));
}

BoundaryPoint BoundaryPoint::Infinity() { return FromRational(1, 0); }

BoundaryPoint BoundaryPoint::FromReal(double x) {
  BoundaryPoint r;
  r.exact_ = false;
  r.x_ = x;
  return r;
}

Rational BoundaryPoint::ToRational() const {
  if (!exact_ || q_ == 0) {
    throw std::logic_error("not a finite exact point");
  }
  return Frac(p_, q_);
}

double BoundaryPoint::ToDouble() const {
  if (!exact_) return x_;
  if (q_ == 0) return HUGE_VAL;
  return ToRational().convert_to<double>();
}

bool BoundaryPoint::operator==(const BoundaryPoint& o) const {
  if (exact_ != o.exact_) return false;
  if (!exact_) return x_ == o.x_;
  return p_ == o.p_ && q_ == o.q_;
}

std::string BoundaryPoint::ToString() const {
  if (!exact_) return FormatReal(x_);
  if (q_ == 0) return "inf";
  std::ostringstream os;
  os << p_;
  if (q_ != 1) os << "/" << q_;
  return os.str();
}

BoundaryPoint MobiusApply(const GroupElement& g, const BoundaryPoint& z) {
  if (!z.exact()) {
    const double x = z.ToDouble();
    const Mat2<double> f = g.ToFloat();
    const double den = f.c * x + f.d;
    if (den == 0.0) return BoundaryPoint::Infinity();
    return BoundaryPoint::FromReal((f.a * x + f.b) / den);
  }
  // Projective action on the column (p, q).
  return BoundaryPoint::FromRational(g.a() * z.p() + g.b() * z.q(),
                                     g.c() * z.p() + g.d() * z.q());
}

Complex MobiusApply(const Mat2<double>& g, Complex z) {
  return (g.a * z + g.b) / (g.c * z + g.d);
}

Complex MobiusApply(const GroupElement& g, Complex z) {
  return MobiusApply(g.ToFloat(), z);
}

Circle Circle::Tangent(const Rational& x, const Rational& diameter) {
  if (diameter <= 0) throw std::invalid_argument("diameter must be positive");
  Circle c;
  c.kind = Kind::kTangent;
  c.tangency = x;
  c.size = diameter;
  return c;
}

Circle Circle::Horizontal(const Rational& height) {
  if (height <= 0) throw std::invalid_argument("height must be positive");
  Circle c;
  c.kind = Kind::kHorizontal;
  c.size = height;
  return c;
}

Circle Circle::General(Complex center, double radius) {
  if (!(radius > 0)) throw std::invalid_argument("radius must be positive");
  Circle c;
  c.kind = Kind::kGeneral;
  c.center = center;
  c.radius = radius;
  return c;
}

bool Circle::operator==(const Circle& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::kTangent:
      return tangency == o.tangency && size == o.size;
    case Kind::kHorizontal:
      return size == o.size;
    case Kind::kGeneral:
      return center == o.center && radius == o.radius;
  }
  return false;
}

Complex Circle::Center() const {
  switch (kind) {
    case Kind::kTangent: {
      const double h = hecke::ToDouble(size);
      return {hecke::ToDouble(tangency), h / 2};
    }
    case Kind::kGeneral:
      return center;
    case Kind::kHorizontal:
      break;
  }
  throw std::logic_error("horizontal line has no center");
}

double Circle::Radius() const {
  switch (kind) {
    case Kind::kTangent:
      return hecke::ToDouble(size) / 2;
    case Kind::kGeneral:
      return radius;
    case Kind::kHorizontal:
      break;
  }
  throw std::logic_error("horizontal line has no radius");
}

std::string Circle::ToString() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kTangent:
      os << "Tangent(" << tangency << ", " << size << ")";
      break;
    case Kind::kHorizontal:
      os << "Horizontal(" << size << ")";
      break;
    case Kind::kGeneral:
      os << "General(" << center << ", " << radius << ")";
      break;
  }
  return os.str();
}

Circle CircleImage(const GroupElement& g, const Circle& circle) {
  const Rational a(g.a()), b(g.b()), c(g.c()), d(g.d());
  switch (circle.kind) {
    case Circle::Kind::kTangent: {
      const Rational& x = circle.tangency;
      const Rational den = c * x + d;
      if (den == 0) return Circle::Horizontal(1 / (c * c * circle.size));
      return Circle::Tangent((a * x + b) / den, circle.size / (den * den));
    }
    case Circle::Kind::kHorizontal: {
      if (c == 0) return Circle::Horizontal(a * a * circle.size);
      return Circle::Tangent(a / c, 1 / (c * c * circle.size));
    }
    case Circle::Kind::kGeneral:
      break;
  }
  throw std::invalid_argument("CircleImage expects a tangent circle or line");
}

NAKDecomposition NakDecompose(const Mat2<double>& g) {
  NAKDecomposition r;
  r.y = g.c * g.c + g.d * g.d;
  if (!(r.y > 0)) throw std::invalid_argument("singular bottom row");
  r.x = (g.a * g.c + g.b * g.d) / r.y;
  double theta = std::atan2(g.c, g.d);
  if (theta < 0) theta += std::numbers::pi;
  if (theta >= std::numbers::pi) theta -= std::numbers::pi;
  r.theta = theta;
  return r;
}

Mat2<double> NakRecompose(const NAKDecomposition& nak) {
  const double s = std::sqrt(nak.y);
  const Mat2<double> n{1.0, nak.x, 0.0, 1.0};
  const Mat2<double> a{1.0 / s, 0.0, 0.0, s};
  const double ct = std::cos(nak.theta), st = std::sin(nak.theta);
  const Mat2<double> k{ct, -st, st, ct};
  return n * a * k;
}

double Busemann(const BoundaryPoint& xi, Complex x, Complex y) {
  if (!(x.imag() > 0) || !(y.imag() > 0)) {
    throw std::invalid_argument("Busemann arguments must be interior points");
  }
  if (xi.IsInfinity()) return std::log(y.imag() / x.imag());
  const double e = xi.ToDouble();
  const double nx = std::norm(x - e), ny = std::norm(y - e);
  return std::log(nx * y.imag() / (ny * x.imag()));
}

double HypDistance(Complex z, Complex w) {
  return 2.0 * std::asinh(std::abs(z - w) /
                          (2.0 * std::sqrt(z.imag() * w.imag())));
}

}  // namespace hecke
