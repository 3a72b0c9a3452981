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

#include "hecke/ford.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hecke {
namespace {

struct TreeNode {
  std::int64_t b1, d1, b2, d2;
  Rational x;  // tangency in the window copy
  Rational diameter;
  std::vector<std::int64_t> word;
};

// Child diameter from tangency of two circles resting on R:
// (x - x')^2 = h h'.
Rational TangentDiameter(const Rational& x, const Rational& parent_x,
                         const Rational& parent_diameter) {
  const Rational dx = x - parent_x;
  return dx * dx / parent_diameter;
}

std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t IsqrtBelow(const Rational& T) {
  // largest q >= 0 with q^2 < T
  std::int64_t q = static_cast<std::int64_t>(std::sqrt(ToDouble(T)));
  while (q > 0 && Rational(q) * q >= T) --q;
  while (Rational(q + 1) * (q + 1) < T) ++q;
  return q;
}

bool InGroup(const BigInt& a, const BigInt& b, const BigInt& c,
             const BigInt& d, int gc) {
  if (a * d - b * c != 1) return false;
  return InHeckeGroup(GroupElement(a, b, c, d), gc);
}

void AddUnique(std::vector<GroupElement>* v, const GroupElement& g) {
  const GroupElement h = g.Canonical();
  for (const auto& e : *v) {
    if (e == h) return;
  }
  v->push_back(h);
}

}  // namespace

Circle InitialCircle(int index, int c) {
  switch (index) {
    case 1:
      return Circle::Horizontal(1);
    case 2:
      return Circle::Tangent(0, 1);
    case 3:
      return Circle::Tangent(c, 1);
    default:
      throw std::invalid_argument("initial circle index must be 1, 2 or 3");
  }
}

std::vector<FordCircle> TangenciesAtTime(const Rational& T,
                                         const Interval& interval, int c,
                                         const EnumerationLimits& lim) {
  if (T < 1) throw std::invalid_argument("T must be >= 1");
  if (!(interval.lo < interval.hi)) {
    throw std::invalid_argument("empty interval");
  }
  const Rational cutoff = 1 / T;
  std::vector<FordCircle> window;
  if (Rational(1) > cutoff) {
    window.push_back({0, 1, 0, {}, Rational(1)});
    std::vector<TreeNode> stack{{0, 1, 1, 0, Rational(0), Rational(1), {}}};
    while (!stack.empty()) {
      TreeNode n = std::move(stack.back());
      stack.pop_back();
      for (int sign : {1, -1}) {
        // Sibling diameters shrink with |k|; stop at the first one <= 1/T.
        for (std::int64_t k = 1;; ++k) {
          const std::int64_t a = sign * k * c;
          const std::int64_t b = a * n.b1 + n.b2;
          const std::int64_t d = a * n.d1 + n.d2;
          const Rational x = Frac(b, d);
          const Rational h = TangentDiameter(x, n.x, n.diameter);
          if (h <= cutoff) break;
          std::vector<std::int64_t> w = n.word;
          w.push_back(a);
          FordCircle fc;
          fc.p = d < 0 ? -b : b;
          fc.q = d < 0 ? -d : d;
          fc.word = w;
          fc.diameter = h;
          window.push_back(fc);
          if (window.size() > lim.cap_points) {
            throw ResourceError("circle enumeration exceeded the point cap");
          }
          stack.push_back({b, d, n.b1, n.d1, x, h, std::move(w)});
        }
      }
    }
  }
  std::vector<FordCircle> out;
  const BigInt k_lo = Floor((interval.lo - 1) / c);
  const BigInt k_hi = Ceil((interval.hi + 1) / c);
  if ((k_hi - k_lo + 1) * window.size() > 4 * BigInt(lim.cap_points)) {
    throw ResourceError("interval too long for the point cap");
  }
  for (std::int64_t k = k_lo.convert_to<std::int64_t>();
       k <= k_hi.convert_to<std::int64_t>(); ++k) {
    for (const FordCircle& w : window) {
      FordCircle fc = w;
      fc.a0 = k * c;
      fc.p = w.p + MulChecked(fc.a0, w.q);
      if (interval.Contains(fc.Tangency())) out.push_back(std::move(fc));
    }
  }
  std::sort(out.begin(), out.end(), [](const FordCircle& x, const FordCircle& y) {
    return static_cast<i128>(x.p) * y.q < static_cast<i128>(y.p) * x.q;
  });
  return out;
}

std::vector<FordCircle> Children(const FordCircle& parent, std::int64_t k_lo,
                                 std::int64_t k_hi, int c) {
  BigInt b1 = 0, d1 = 1, b2 = 1, d2 = 0;
  if (!parent.word.empty()) {
    const ConvergentTable t = Convergents(CFWord(parent.word, c));
    b1 = t.rows.back().b;
    d1 = t.rows.back().d;
    if (t.rows.size() >= 2) {
      b2 = t.rows[t.rows.size() - 2].b;
      d2 = t.rows[t.rows.size() - 2].d;
    } else {
      b2 = 0;
      d2 = 1;
    }
  }
  std::vector<FordCircle> out;
  const Rational px = parent.Tangency();
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    if (k == 0) continue;
    const std::int64_t a = k * c;
    BigInt b = a * b1 + b2, d = a * d1 + d2;
    if (d < 0) {
      b = -b;
      d = -d;
    }
    FordCircle fc;
    fc.a0 = parent.a0;
    fc.word = parent.word;
    fc.word.push_back(a);
    fc.q = d.convert_to<std::int64_t>();
    fc.p = (b + BigInt(parent.a0) * d).convert_to<std::int64_t>();
    fc.diameter = TangentDiameter(fc.Tangency(), px, parent.diameter);
    out.push_back(std::move(fc));
  }
  return out;
}

std::vector<AdjacentPair> PairsOf(const std::vector<FordCircle>& circles,
                                  const Rational& T, bool cyclic,
                                  const Rational& period) {
  std::vector<AdjacentPair> out;
  if (circles.size() < 2) return out;
  for (std::size_t i = 0; i + 1 < circles.size(); ++i) {
    AdjacentPair ap{circles[i], circles[i + 1], 0, 0};
    ap.gap = circles[i + 1].Tangency() - circles[i].Tangency();
    ap.scaled_gap = T * ap.gap;
    out.push_back(std::move(ap));
  }
  if (cyclic) {
    FordCircle wrap = circles.front();
    const std::int64_t shift = static_cast<std::int64_t>(period.convert_to<double>());
    if (Rational(shift) != period) {
      throw std::invalid_argument("cyclic pairs need an integer period");
    }
    wrap.a0 += shift;
    wrap.p += MulChecked(shift, wrap.q);
    AdjacentPair ap{circles.back(), wrap, 0, 0};
    ap.gap = wrap.Tangency() - circles.back().Tangency();
    ap.scaled_gap = T * ap.gap;
    out.push_back(std::move(ap));
  }
  return out;
}

std::vector<AdjacentPair> AdjacentPairs(const Rational& T,
                                        const Interval& interval, int c,
                                        bool cyclic) {
  const auto circles = TangenciesAtTime(T, interval, c);
  return PairsOf(circles, T, cyclic, interval.hi - interval.lo);
}

const char* PairKindName(PairKind k) {
  switch (k) {
    case PairKind::k12:
      return "12";
    case PairKind::k23:
      return "23";
    case PairKind::kNonRectangle:
      return "none";
  }
  return "?";
}

PairClass ClassifyPair(const AdjacentPair& pair, int c) {
  const BigInt p(pair.left.p), q(pair.left.q);
  const BigInt pp(pair.right.p), qq(pair.right.q);
  const BigInt D = p * qq - pp * q;
  const BigInt absD = D < 0 ? BigInt(-D) : D;
  PairClass out;
  if (absD == 1) {
    // gamma inf and gamma 0 are the two tangencies; one order for each
    // sign of D.
    const BigInt s = D < 0 ? BigInt(1) : BigInt(-1);
    if (InGroup(p, -s * pp, q, -s * qq, c)) {
      AddUnique(&out.gammas, GroupElement(p, -s * pp, q, -s * qq));
    }
    if (InGroup(pp, s * p, qq, s * q, c)) {
      AddUnique(&out.gammas, GroupElement(pp, s * p, qq, s * q));
    }
    if (!out.gammas.empty()) out.kind = PairKind::k12;
    return out;
  }
  if (absD == c) {
    // gamma 0 = u, gamma c = v: columns (b, f) = (pu, qu) and
    // (c a + b, c e + f) = e2 (pv, qv).
    const std::pair<BigInt, BigInt> pts[2] = {{p, q}, {pp, qq}};
    for (int order = 0; order < 2; ++order) {
      const auto& [pu, qu] = pts[order];
      const auto& [pv, qv] = pts[1 - order];
      for (int e2 : {1, -1}) {
        const BigInt na = e2 * pv - pu, ne = e2 * qv - qu;
        if (na % c != 0 || ne % c != 0) continue;
        const BigInt a = na / c, e = ne / c;
        if (InGroup(a, pu, e, qu, c)) {
          AddUnique(&out.gammas, GroupElement(a, pu, e, qu));
        }
      }
    }
    if (!out.gammas.empty()) out.kind = PairKind::k23;
    return out;
  }
  return out;
}

bool OmegaMembership(const Rational& c, const Rational& d,
                     const OmegaRegion& region, int gc) {
  const Rational& T = region.T;
  const Rational& s = region.s;
  const Rational ad = d < 0 ? Rational(-d) : d;
  if (region.convention == OmegaConvention::kT) {
    if (region.kind == PairKind::k12) {
      return c > 0 && d != 0 && c * c < T && d * d < T &&
             (gc * c + ad) * (gc * c + ad) >= T && c * ad * s >= T;
    }
    if (region.kind == PairKind::k23) {
      const Rational e = gc * c + d;
      const Rational prod = d * e;
      const Rational aprod = prod < 0 ? Rational(-prod) : prod;
      return d != 0 && e != 0 && d * d < T && e * e < T &&
             (prod >= 0 || c * c >= T) && aprod * s >= gc * T;
    }
    return false;
  }
  const Rational half = T / 2;
  if (region.kind == PairKind::k12) {
    return c * c <= half && d * d <= half &&
           (gc * c + ad) * (gc * c + ad) > half && c * ad >= T / s;
  }
  if (region.kind == PairKind::k23) {
    const Rational e = gc * c + d;
    const Rational prod = d * e;
    const Rational aprod = prod < 0 ? Rational(-prod) : prod;
    return d * d <= half && e * e <= half && (prod >= 0 || c * c > half) &&
           aprod >= gc * T / s;
  }
  return false;
}

PeriodicPair ReducePair(const Rational& x, const Rational& y, PairKind kind,
                        int c) {
  Rational lo = std::min(x, y), hi = std::max(x, y);
  const BigInt k = Floor(lo / c);
  lo -= Rational(k * c);
  hi -= Rational(k * c);
  return {lo, hi, kind};
}

std::vector<OmegaElement> OmegaElements(const Rational& T, const Rational& s,
                                        int c, OmegaConvention conv) {
  const std::int64_t R = IsqrtBelow(T) + 1;
  // Convergent matrices (b1 b2; d1 d2) of window words with |d1| <= R.
  struct Node {
    std::int64_t b1, d1, b2, d2;
  };
  std::vector<Node> mats{{0, 1, 1, 0}};
  std::vector<Node> stack{{0, 1, 1, 0}};
  while (!stack.empty()) {
    const Node n = stack.back();
    stack.pop_back();
    for (int sign : {1, -1}) {
      for (std::int64_t k = 1;; ++k) {
        const std::int64_t a = sign * k * c;
        const std::int64_t d = a * n.d1 + n.d2;
        if ((d < 0 ? -d : d) > R) break;
        const Node m{a * n.b1 + n.b2, d, n.b1, n.d1};
        mats.push_back(m);
        stack.push_back(m);
      }
    }
  }
  std::vector<OmegaElement> out;
  const OmegaRegion r12{PairKind::k12, T, s, conv};
  const OmegaRegion r23{PairKind::k23, T, s, conv};
  for (const Node& n : mats) {
    if (n.d1 == 0) continue;
    // (T^{cm} M)^{-1} has bottom row (-d1, b1 + c m d1); keep |b1'| <= R.
    const std::int64_t step = c * n.d1;
    std::int64_t m_lo = FloorDiv(-R - n.b1, step);
    std::int64_t m_hi = FloorDiv(R - n.b1, step);
    if (m_lo > m_hi) std::swap(m_lo, m_hi);
    for (std::int64_t m = m_lo - 1; m <= m_hi + 1; ++m) {
      std::int64_t b1 = n.b1 + c * m * n.d1, b2 = n.b2 + c * m * n.d2;
      std::int64_t d1 = n.d1, d2 = n.d2;
      if (b1 * d2 - b2 * d1 == -1) {
        b2 = -b2;
        d2 = -d2;
      }
      std::int64_t A = d2, B = -b2, C = -d1, D = b1;
      if (C < 0 || (C == 0 && D < 0)) {
        A = -A;
        B = -B;
        C = -C;
        D = -D;
      }
      if (OmegaMembership(C, D, r12, c)) {
        OmegaElement e{GroupElement(A, B, C, D), PairKind::k12,
                       ReducePair(Frac(A, C), Frac(B, D),
                                  PairKind::k12, c)};
        out.push_back(std::move(e));
      }
      if (OmegaMembership(C, D, r23, c)) {
        OmegaElement e{GroupElement(A, B, C, D), PairKind::k23,
                       ReducePair(Frac(B, D),
                                  Frac(c * A + B, c * C + D),
                                  PairKind::k23, c)};
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

GapBounds ScaledGapBounds(const Rational& T, const Interval& interval,
                          int c) {
  if (T < 16) throw std::invalid_argument("T must be >= 16");
  GapBounds gb;
  const auto pairs = AdjacentPairs(T, interval, c, false);
  gb.n_pairs = pairs.size();
  auto upd = [](std::optional<Rational>* m, const Rational& v) {
    if (!*m || v < **m) *m = v;
  };
  for (const auto& ap : pairs) {
    upd(&gb.min_all, ap.scaled_gap);
    const PairClass pc = ClassifyPair(ap, c);
    switch (pc.kind) {
      case PairKind::k12:
        upd(&gb.min_rect_tangent, ap.scaled_gap);
        break;
      case PairKind::k23:
        upd(&gb.min_rect_nontangent, ap.scaled_gap);
        break;
      case PairKind::kNonRectangle:
        ++gb.n_nonrect;
        upd(&gb.min_nonrect, ap.scaled_gap);
        break;
    }
  }
  return gb;
}

Rectangle MakeRectangle(const FordCircle& parent, std::int64_t k, int dk,
                        int c) {
  if (k == 0 || k + dk == 0 || (dk != 1 && dk != -1)) {
    throw std::invalid_argument("rectangle needs k, k + dk nonzero, dk = +-1");
  }
  Rectangle r;
  r.parent = parent;
  r.child = Children(parent, k, k, c).front();
  r.sibling = Children(parent, k + dk, k + dk, c).front();
  return r;
}

GroupElement RectangleGamma(const Rectangle& r, int c) {
  const GroupElement M = CuspToMatrix(Cusp(r.parent.p, r.parent.q), c);
  const BoundaryPoint u = MobiusApply(
      M.Inverse(), BoundaryPoint::FromRational(r.child.p, r.child.q));
  if (u.IsInfinity() || u.q() != 1) {
    throw std::logic_error("child is not a translate image under the parent");
  }
  const Circle want_parent = r.parent.AsCircle();
  const Circle want_child = r.child.AsCircle();
  const Circle want_sibling = r.sibling.AsCircle();
  for (const BigInt& shift : {BigInt(u.p()), BigInt(u.p() - c)}) {
    const GroupElement g = M * GroupElement::Translation(shift);
    if (!InHeckeGroup(g, c)) continue;
    const Circle i1 = CircleImage(g, InitialCircle(1, c));
    const Circle i2 = CircleImage(g, InitialCircle(2, c));
    const Circle i3 = CircleImage(g, InitialCircle(3, c));
    if (!(i1 == want_parent)) continue;
    if ((i2 == want_child && i3 == want_sibling) ||
        (i2 == want_sibling && i3 == want_child)) {
      return g.Canonical();
    }
  }
  throw std::logic_error("no group element maps the initial rectangle");
}

}  // namespace hecke
