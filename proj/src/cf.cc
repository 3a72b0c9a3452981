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

#include "hecke/cf.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hecke {
namespace {

BigInt CeilDiv(const Rational& num, std::int64_t den) {
  return Ceil(num / den);
}

}  // namespace

CFWord::CFWord(std::vector<std::int64_t> q, int c_param)
    : quotients(std::move(q)), c(c_param) {
  ValidateWord(*this);
}

std::string CFWord::ToString() const {
  std::ostringstream os;
  os << "[0;";
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (i) os << ",";
    os << quotients[i];
  }
  os << "]";
  return os.str();
}

std::string CFWord::Joined(char sep) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (i) os << sep;
    os << quotients[i];
  }
  return os.str();
}

void ValidateWord(const CFWord& w) {
  if (w.c < 3) throw std::invalid_argument("group parameter c must be >= 3");
  for (std::int64_t a : w.quotients) {
    if (a == 0 || a % w.c != 0) {
      throw std::invalid_argument("quotient " + std::to_string(a) +
                                  " is not a nonzero multiple of " +
                                  std::to_string(w.c));
    }
  }
}

Cusp::Cusp(BigInt num, BigInt den) {
  if (num == 0 && den == 0) throw std::invalid_argument("0/0 is not a cusp");
  BigInt g = boost::multiprecision::gcd(num, den);
  p = num / g;
  q = den / g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
}

Rational Cusp::ToRational() const {
  if (q == 0) throw std::logic_error("infinite cusp has no rational value");
  return Rational(p, q);
}

double Cusp::ToDouble() const {
  if (q == 0) return HUGE_VAL;
  return ToRational().convert_to<double>();
}

bool Cusp::operator<(const Cusp& o) const { return p * o.q < o.p * q; }

std::string Cusp::ToString() const {
  if (q == 0) return "inf";
  std::ostringstream os;
  os << p << "/" << q;
  return os.str();
}

double HullRadius(int c) {
  return (c - std::sqrt(static_cast<double>(c) * c - 4.0)) / 2.0;
}

bool InsideHull(const Rational& x, int c) {
  // The radius h is the small root of u^2 - c u + 1 = 0, so for u >= 0:
  // u < h  <=>  u < c/2 and u^2 - c u + 1 > 0.
  const Rational u = x < 0 ? Rational(-x) : x;
  if (u >= Rational(c, 2)) return false;
  return u * u - c * u + 1 > 0;
}

ConvergentTable Convergents(const CFWord& w) {
  ValidateWord(w);
  ConvergentTable t;
  t.rows.reserve(w.size());
  // Row 0 is (b, d) = (0, 1); row -1 is (1, 0).
  BigInt b1 = 0, d1 = 1, b2 = 1, d2 = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const BigInt a = w.quotients[i];
    BigInt b = a * b1 + b2;
    BigInt d = a * d1 + d2;
    if (d == 0) throw std::invalid_argument("word evaluation hits a pole");
    b2 = std::move(b1);
    d2 = std::move(d1);
    b1 = b;
    d1 = d;
    t.rows.push_back({i + 1, a, std::move(b), std::move(d)});
  }
  return t;
}

Cusp CfEval(const CFWord& w) {
  if (w.empty()) return Cusp(0, 1);
  const ConvergentTable t = Convergents(w);
  return Cusp(t.rows.back().b, t.rows.back().d);
}

Rational CfValue(const CFWord& w) { return CfEval(w).ToRational(); }

std::pair<std::int64_t, Rational> GaussMapExact(const Rational& x, int c) {
  if (x == 0) throw std::invalid_argument("Gauss map undefined at 0");
  const Rational y = 1 / x;
  // Smallest multiple of c that is >= y - c/2, so y - a lies in (-c/2, c/2].
  const BigInt k = CeilDiv(y - Rational(c, 2), c);
  const BigInt a = k * c;
  return {a.convert_to<std::int64_t>(), y - Rational(a)};
}

CFWord CfExpand(const Rational& r, int c) {
  CFWord w;
  w.c = c;
  Rational x = r;
  while (x != 0) {
    if (!InsideHull(x, c)) {
      std::ostringstream os;
      os << r << " is not the value of a finite word (remainder " << x
         << " outside the hull)";
      throw NotInOrbit(os.str());
    }
    auto [a, rem] = GaussMapExact(x, c);
    w.quotients.push_back(a);
    x = rem;
  }
  return w;
}

CFWord CfExpand(const Cusp& r, int c) {
  if (r.IsInfinity()) throw NotInOrbit("infinity has no finite word");
  return CfExpand(r.ToRational(), c);
}

CFWord GaussShift(const CFWord& w) {
  if (w.empty()) throw std::invalid_argument("Gauss shift of the empty word");
  CFWord r;
  r.c = w.c;
  r.quotients.assign(w.quotients.begin() + 1, w.quotients.end());
  return r;
}

GaussStep GaussMapReal(double x, int c) {
  if (x == 0.0) throw std::invalid_argument("Gauss map undefined at 0");
  const double y = 1.0 / x;
  double k = std::ceil((y - c / 2.0) / c);
  double tx = y - k * c;
  // Guard the half-open convention against rounding.
  if (tx <= -c / 2.0) {
    k -= 1;
    tx += c;
  } else if (tx > c / 2.0) {
    k += 1;
    tx -= c;
  }
  return {static_cast<std::int64_t>(k) * c, tx};
}

std::pair<Rational, Rational> Cylinder(const CFWord& w) {
  if (w.empty()) throw std::invalid_argument("cylinder of the empty word");
  const ConvergentTable t = Convergents(w);
  const auto& last = t.rows.back();
  BigInt pb = 0, qb = 1;  // row n-1
  if (t.rows.size() >= 2) {
    pb = t.rows[t.rows.size() - 2].b;
    qb = t.rows[t.rows.size() - 2].d;
  }
  Rational e0 = Frac(last.b, last.d);
  Rational e1 = Frac(last.b + pb, last.d + qb);
  if (e1 < e0) std::swap(e0, e1);
  return {e0, e1};
}

std::pair<double, double> BranchCylinder(const CFWord& w) {
  if (w.empty()) throw std::invalid_argument("cylinder of the empty word");
  const ConvergentTable t = Convergents(w);
  const auto& last = t.rows.back();
  double pb = 0, qb = 1;
  if (t.rows.size() >= 2) {
    pb = ToDouble(t.rows[t.rows.size() - 2].b);
    qb = ToDouble(t.rows[t.rows.size() - 2].d);
  }
  const double p = ToDouble(last.b), q = ToDouble(last.d);
  const double h = HullRadius(w.c);
  double e0 = (p - pb * h) / (q - qb * h);
  double e1 = (p + pb * h) / (q + qb * h);
  if (e1 < e0) std::swap(e0, e1);
  return {e0, e1};
}

bool HasPrefix(const CFWord& v, const CFWord& w) {
  if (w.size() > v.size()) return false;
  return std::equal(w.quotients.begin(), w.quotients.end(),
                    v.quotients.begin());
}

OrbitCoordinates SplitCusp(const Cusp& r, int c) {
  if (r.IsInfinity()) throw NotInOrbit("infinity has no finite coordinates");
  const Rational x = r.ToRational();
  // Nearest multiple of c; remainder in [-c/2, c/2).
  const BigInt k = Floor(x / c + Rational(1, 2));
  OrbitCoordinates oc;
  oc.a0 = k * c;
  oc.word = CfExpand(x - Rational(oc.a0), c);
  return oc;
}

GroupElement CuspToMatrix(const Cusp& r, int c) {
  if (r.IsInfinity()) return GroupElement::Identity();
  const OrbitCoordinates oc = SplitCusp(r, c);
  // (b_n b_{n-1}; d_n d_{n-1}) is a product of n + 1 matrices (a 1; 1 0) of
  // determinant -1, so flip the second column when n is even.
  BigInt bn = 0, dn = 1, bp = 1, dp = 0;
  if (!oc.word.empty()) {
    const ConvergentTable t = Convergents(oc.word);
    bn = t.rows.back().b;
    dn = t.rows.back().d;
    if (t.rows.size() >= 2) {
      bp = t.rows[t.rows.size() - 2].b;
      dp = t.rows[t.rows.size() - 2].d;
    } else {
      bp = 0;
      dp = 1;
    }
  }
  if (oc.word.size() % 2 == 0) {
    bp = -bp;
    dp = -dp;
  }
  GroupElement m(bn, bp, dn, dp);
  return (GroupElement::Translation(oc.a0) * m).Canonical();
}

bool InHeckeGroup(const GroupElement& g, int c) {
  const GroupElement h = g.Canonical();
  if (h.c() == 0) {
    // +-(1 t; 0 1)
    return h.a() == 1 && h.d() == 1 && h.b() % c == 0;
  }
  GroupElement m;
  try {
    m = CuspToMatrix(Cusp(h.a(), h.c()), c);
  } catch (const NotInOrbit&) {
    return false;
  }
  const GroupElement s = (m.Inverse() * h).Canonical();
  return s.c() == 0 && s.a() == 1 && s.d() == 1 && s.b() % c == 0;
}

}  // namespace hecke
