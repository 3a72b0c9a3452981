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

#include "hecke/coding.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hecke {

std::string CuttingSequence::ToString() const {
  std::string s;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) s += ',';
    s += symbols[i];
  }
  return s;
}

CuttingSequence ParseCutting(const std::vector<char>& symbols) {
  CuttingSequence seq;
  seq.symbols = symbols;
  if (symbols.empty() || symbols[0] != 'r') {
    throw GrammarError("a cutting sequence starts with r");
  }
  std::size_t i = 1;
  while (i < symbols.size()) {
    const char q = symbols[i];
    if (q != 'l' && q != 'r') {
      throw GrammarError("block " + std::to_string(seq.blocks.size()) +
                         " must open with l or r");
    }
    std::size_t j = i + 1;
    while (j < symbols.size() && symbols[j] == 'c') ++j;
    if (j >= symbols.size() || symbols[j] != q) {
      throw GrammarError("block " + std::to_string(seq.blocks.size()) +
                         " is not closed by a repeated " + std::string(1, q));
    }
    seq.blocks.push_back({q, static_cast<int>(j - i - 1)});
    i = j + 1;
  }
  return seq;
}

namespace {

bool Flipped(BlockSign sign, std::size_t i) {
  return sign == BlockSign::kAlternating && i % 2 == 1;
}

}  // namespace

CuttingSequence CfToCutting(const CFWord& w, BlockSign sign) {
  ValidateWord(w);
  std::vector<char> s{'r'};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::int64_t a = w.quotients[i];
    const char q = (a > 0) != Flipped(sign, i) ? 'l' : 'r';
    const std::int64_t alpha = std::abs(a) / w.c - 1;
    s.push_back(q);
    s.insert(s.end(), static_cast<std::size_t>(alpha), 'c');
    s.push_back(q);
  }
  return ParseCutting(s);
}

CFWord CuttingToCf(const CuttingSequence& seq, int c, BlockSign sign) {
  const CuttingSequence parsed = ParseCutting(seq.symbols);
  std::vector<std::int64_t> q;
  for (std::size_t i = 0; i < parsed.blocks.size(); ++i) {
    const auto& b = parsed.blocks[i];
    const std::int64_t a = static_cast<std::int64_t>(c) * (b.alpha + 1);
    q.push_back((b.q == 'l') != Flipped(sign, i) ? a : -a);
  }
  return CFWord(std::move(q), c);
}

namespace {

enum Side { kLeft, kRight, kArc };

bool Between(const Rational& a, const Rational& b, const Rational& v) {
  return (a < v && v < b) || (b < v && v < a);
}

void CheckVertex(const Rational& u, const Rational& half) {
  for (const Rational& v : {Rational(-1), Rational(1), Rational(-half), half}) {
    if (abs(u - v) < Rational(1, 1000000000)) {
      throw DegenerateGeodesic("geodesic endpoint " + u.str() +
                               " is within 1e-9 of the vertex " + v.str());
    }
  }
}

}  // namespace

CuttingSequence TraceGeodesic(const Cusp& xi, const Rational& xi_left,
                              std::size_t max_crossings, int c) {
  if (c < 3) throw std::invalid_argument("group parameter c must be >= 3");
  const Rational half(c, 2);
  if (xi.IsInfinity() || abs(xi.ToRational()) >= half) {
    throw std::invalid_argument("xi must lie in (-c/2, c/2)");
  }
  if (xi_left >= -half) throw std::invalid_argument("xi_left must be < -c/2");
  const Rational test = (half + 1) / 2;
  Rational um = xi_left;
  Rational up = xi.ToRational();
  bool up_inf = false;
  Side entry = kLeft;
  CuttingSequence seq;
  while (!up_inf) {
    if (seq.symbols.size() >= max_crossings) {
      seq.truncated = true;
      break;
    }
    CheckVertex(um, half);
    CheckVertex(up, half);
    std::vector<Side> crossed;
    if (Between(um, up, -half)) crossed.push_back(kLeft);
    if (Between(um, up, half)) crossed.push_back(kRight);
    if ((abs(um) < 1) != (abs(up) < 1)) crossed.push_back(kArc);
    std::vector<Side> exits;
    for (Side s : crossed) {
      if (s != entry) exits.push_back(s);
    }
    if (exits.size() != 1 ||
        std::find(crossed.begin(), crossed.end(), entry) == crossed.end()) {
      std::ostringstream os;
      os << "geodesic (" << um.str() << ", " << up.str()
         << ") does not cross the domain through two sides";
      throw DegenerateGeodesic(os.str());
    }
    const Side exit = exits[0];
    const Side other = entry == kArc ? exit : (exit == kArc ? entry : exit);
    char sym = 'c';
    if (entry == kArc || exit == kArc) {
      const Rational p = other == kLeft ? Rational(-test) : test;
      const bool right = um < up ? (um < p && p < up) : !(up <= p && p <= um);
      sym = right ? 'r' : 'l';
    }
    seq.symbols.push_back(sym);
    switch (exit) {
      case kRight:
        um -= c;
        up -= c;
        entry = kLeft;
        break;
      case kLeft:
        um += c;
        up += c;
        entry = kRight;
        break;
      case kArc:
        if (um == 0) throw DegenerateGeodesic("left endpoint maps to infinity");
        um = -1 / um;
        if (up == 0) {
          up_inf = true;
        } else {
          up = -1 / up;
        }
        entry = kArc;
        break;
    }
  }
  if (!seq.truncated) {
    try {
      seq = ParseCutting(seq.symbols);
    } catch (const GrammarError&) {
      // Geometric output that fails the grammar is returned unparsed so the
      // caller can compare symbol by symbol.
    }
  }
  return seq;
}

std::vector<std::size_t> ChangeTypePoints(const CuttingSequence& seq) {
  const CuttingSequence parsed = ParseCutting(seq.symbols);
  std::vector<std::size_t> out;
  std::size_t i = 1;
  for (const auto& b : parsed.blocks) {
    out.push_back(i);
    i += static_cast<std::size_t>(b.alpha) + 2;
  }
  return out;
}

}  // namespace hecke
