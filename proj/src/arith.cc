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

#include "hecke/arith.h"

#include <cstdio>
#include <limits>
#include <numeric>

namespace hecke {

BigInt Floor(const Rational& r) {
  BigInt n = Numer(r);
  BigInt d = Denom(r);  // always positive
  BigInt q = n / d;     // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

BigInt Ceil(const Rational& r) { return -Floor(-r); }

std::int64_t Gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

std::int64_t MulChecked(std::int64_t a, std::int64_t b) {
  i128 p = static_cast<i128>(a) * b;
  if (p > std::numeric_limits<std::int64_t>::max() ||
      p < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceError("int64 overflow in exact product");
  }
  return static_cast<std::int64_t>(p);
}

std::string FormatReal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace hecke
