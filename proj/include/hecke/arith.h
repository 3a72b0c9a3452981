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

#ifndef HECKE_ARITH_H_
#define HECKE_ARITH_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using i128 = __int128;

// Thrown when a projected or actual output size exceeds a configured cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

inline double ToDouble(const BigInt& v) { return v.convert_to<double>(); }
inline double ToDouble(const Rational& v) { return v.convert_to<double>(); }

inline BigInt Numer(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt Denom(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

// num/den for any nonzero den.  The two-argument Rational constructor
// rejects negative denominators.
inline Rational Frac(const BigInt& num, const BigInt& den) {
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

// floor and ceil of a rational, exact.
BigInt Floor(const Rational& r);
BigInt Ceil(const Rational& r);

// Signed 64-bit gcd, always nonnegative.
std::int64_t Gcd64(std::int64_t a, std::int64_t b);

// Exact a*b for int64 inputs, throws ResourceError on overflow.
std::int64_t MulChecked(std::int64_t a, std::int64_t b);

// Formats a double with 17 significant digits (round-trip safe).
std::string FormatReal(double v);

}  // namespace hecke

#endif  // HECKE_ARITH_H_
