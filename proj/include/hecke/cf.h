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

// Continued fractions [0; a_1, ..., a_k] with every a_i in cZ \ {0}.

#ifndef HECKE_CF_H_
#define HECKE_CF_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke/arith.h"
#include "hecke/moebius.h"

namespace hecke {

constexpr int kDefaultC = 4;

class NotInOrbit : public std::domain_error {
 public:
  explicit NotInOrbit(const std::string& what) : std::domain_error(what) {}
};

struct CFWord {
  std::vector<std::int64_t> quotients;
  int c = kDefaultC;

  CFWord() = default;
  explicit CFWord(std::vector<std::int64_t> q, int c_param = kDefaultC);
  std::size_t size() const { return quotients.size(); }
  bool empty() const { return quotients.empty(); }
  bool operator==(const CFWord& o) const {
    return c == o.c && quotients == o.quotients;
  }
  // "[0;4,-8]"
  std::string ToString() const;
  // "4;-8", for CSV cells.
  std::string Joined(char sep = ';') const;
};

// Throws std::invalid_argument unless every quotient is a nonzero multiple
// of c and c >= 3.
void ValidateWord(const CFWord& w);

// Reduced p/q with q >= 0; q == 0 is infinity.
struct Cusp {
  BigInt p = 0;
  BigInt q = 1;

  Cusp() = default;
  Cusp(BigInt num, BigInt den);  // reduces and normalizes the sign
  static Cusp Infinity() { return Cusp(1, 0); }
  bool IsInfinity() const { return q == 0; }
  Rational ToRational() const;
  double ToDouble() const;
  bool operator==(const Cusp& o) const { return p == o.p && q == o.q; }
  bool operator<(const Cusp& o) const;  // finite cusps only
  std::string ToString() const;
};

struct ConvergentRow {
  std::size_t n;
  BigInt a, b, d;  // quotient, numerator, denominator of [0;a_1..a_n]
};

struct ConvergentTable {
  std::vector<ConvergentRow> rows;  // n = 1..k
};

// Radius of the hull of word values, (c - sqrt(c^2 - 4)) / 2.
double HullRadius(int c = kDefaultC);
// Exact test |x| < hull radius (the radius is irrational).
bool InsideHull(const Rational& x, int c = kDefaultC);

Cusp CfEval(const CFWord& w);
Rational CfValue(const CFWord& w);
// Greedy nearest-multiple expansion with remainders in (-c/2, c/2].
// Throws NotInOrbit unless r is the value of a finite word.
CFWord CfExpand(const Cusp& r, int c = kDefaultC);
CFWord CfExpand(const Rational& r, int c = kDefaultC);
ConvergentTable Convergents(const CFWord& w);
CFWord GaussShift(const CFWord& w);

struct GaussStep {
  std::int64_t a;
  double tx;
};
GaussStep GaussMapReal(double x, int c = kDefaultC);
// Exact version: (a, 1/x - a).
std::pair<std::int64_t, Rational> GaussMapExact(const Rational& x,
                                                int c = kDefaultC);

// {(p_n + p_{n-1} t) / (q_n + q_{n-1} t) : 0 <= t <= 1}, ordered endpoints.
std::pair<Rational, Rational> Cylinder(const CFWord& w);
// Same map over the admissible tails t in [-h, h]; contains every orbit
// point whose expansion starts with w.
std::pair<double, double> BranchCylinder(const CFWord& w);
// True when w is a prefix of v.
bool HasPrefix(const CFWord& v, const CFWord& w);

// r = a0 + [0; word] with a0 in cZ.  Throws NotInOrbit.
struct OrbitCoordinates {
  BigInt a0;
  CFWord word;
};
OrbitCoordinates SplitCusp(const Cusp& r, int c = kDefaultC);

// gamma in the Hecke group with gamma(inf) = r, canonical sign.
GroupElement CuspToMatrix(const Cusp& r, int c = kDefaultC);
// Membership of an exact determinant-one matrix in the Hecke group G_c.
bool InHeckeGroup(const GroupElement& g, int c = kDefaultC);

}  // namespace hecke

#endif  // HECKE_CF_H_
