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

// Cutting sequences over {r, l, c} and their correspondence with words.

#ifndef HECKE_CODING_H_
#define HECKE_CODING_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/arith.h"
#include "hecke/cf.h"

namespace hecke {

struct CuttingBlock {
  char q = 'l';  // 'l' or 'r'
  int alpha = 0;
  bool operator==(const CuttingBlock& o) const {
    return q == o.q && alpha == o.alpha;
  }
};

struct CuttingSequence {
  std::vector<char> symbols;
  std::vector<CuttingBlock> blocks;  // filled by ParseCutting
  bool truncated = false;            // tracer stopped at max_crossings

  std::string ToString() const;  // "r,l,l"
};

class GrammarError : public std::invalid_argument {
 public:
  explicit GrammarError(const std::string& what)
      : std::invalid_argument(what) {}
};

class DegenerateGeodesic : public std::domain_error {
 public:
  explicit DegenerateGeodesic(const std::string& what)
      : std::domain_error(what) {}
};

// Fills blocks from symbols.  Throws GrammarError.
CuttingSequence ParseCutting(const std::vector<char>& symbols);

// Sign rule linking block i to the digit a_{i+1} = +-c (alpha_i + 1).
enum class BlockSign {
  kAlternating,  // q_i = l iff (-1)^i a_{i+1} > 0; what the tracer sees
  kPlain,        // q_i = l iff a_{i+1} > 0
};

CuttingSequence CfToCutting(const CFWord& w,
                            BlockSign sign = BlockSign::kAlternating);
CFWord CuttingToCf(const CuttingSequence& seq, int c = kDefaultC,
                   BlockSign sign = BlockSign::kAlternating);

// Walks the geodesic from xi_left (< -c/2) to xi through translates of
// {|Re z| <= c/2, |z| >= 1}, one symbol per domain crossed.  Stops when the
// geodesic reaches a cusp or after max_crossings symbols.
CuttingSequence TraceGeodesic(const Cusp& xi, const Rational& xi_left,
                              std::size_t max_crossings = 10000,
                              int c = kDefaultC);

// Symbol indices where a new block starts; one per digit.
std::vector<std::size_t> ChangeTypePoints(const CuttingSequence& seq);

}  // namespace hecke

#endif  // HECKE_CODING_H_
