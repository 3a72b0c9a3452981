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

#include "hecke/gaussdyn.h"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hecke {
namespace {

double Hz(double s, double q) {
  gsl_sf_result r;
  if (gsl_sf_hzeta_e(s, q, &r) != GSL_SUCCESS) {
    throw std::runtime_error("Hurwitz zeta evaluation failed");
  }
  return r.val;
}

// Chebyshev coefficients of f on [-h, h] from values at first-kind nodes.
std::vector<double> ChebFit(const std::vector<double>& vals) {
  const int n = static_cast<int>(vals.size());
  std::vector<double> c(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      s += vals[i] * std::cos(std::numbers::pi * j * (i + 0.5) / n);
    }
    c[j] = 2.0 * s / n;
  }
  c[0] /= 2.0;
  return c;
}

double SuffixValueTail(const std::vector<std::int64_t>& word) {
  // [0; word[1], ..., word[n-1]]
  double v = 0.0;
  for (std::size_t i = word.size(); i-- > 1;) v = 1.0 / (word[i] + v);
  return v;
}

}  // namespace

double GaussMeasure::Mass(double lo, double hi) const {
  if (hi < lo) return 0.0;
  auto it = std::lower_bound(
      atoms.begin(), atoms.end(), lo,
      [](const GaussAtom& a, double v) { return a.x < v; });
  double m = 0.0;
  for (; it != atoms.end() && it->x <= hi; ++it) m += it->mass;
  return m;
}

double GaussMeasure::CylinderMass(const CFWord& w) const {
  double m = 0.0;
  for (const auto& a : atoms) {
    if (a.word.size() >= w.size() &&
        std::equal(w.quotients.begin(), w.quotients.end(), a.word.begin())) {
      m += a.mass;
    }
  }
  return m;
}

GaussMeasure M0Approx(const DiscreteMeasure& nu, double delta) {
  if (nu.atoms.empty()) throw std::invalid_argument("empty support");
  GaussMeasure m;
  m.delta = delta;
  const double h = HullRadius();
  for (const Atom& a : nu.atoms) {
    if (a.a0 != 0 || std::abs(a.x) > h) {
      throw std::invalid_argument("m0 needs the window copy of the measure");
    }
    m.atoms.push_back({a.x, a.word, a.w, 0.0, 0.0});
    m.base_total += a.w;
  }
  const double e = -2.0 * delta;
  for (auto& y : m.atoms) {
    double r = 0.0;
    for (const auto& x : m.atoms) r += x.base * std::pow(std::abs(1.0 - x.x * y.x), e);
    y.rho = r;
    m.rho_norm += y.base * r;
  }
  for (auto& y : m.atoms) y.mass = y.base * y.rho / m.rho_norm;
  return m;
}

namespace {

// Conformal estimate of sum_{|k|>K} m0(psi_k E) from the atoms y in E:
// |ck + y|^{-2 delta} with rho(psi_k y) ~ rho(0) = total base mass.
double TailEstimate(const GaussMeasure& m, double base_y, double y, int K) {
  const double s2 = 2.0 * m.delta;
  const double c = m.c;
  return base_y * m.base_total * std::pow(c, -s2) *
         (Hz(s2, K + 1 + y / c) + Hz(s2, K + 1 - y / c)) / m.rho_norm;
}

}  // namespace

InvarianceResult InvarianceDefect(const GaussMeasure& m, const CFWord& E,
                                  int K) {
  InvarianceResult r;
  r.K = K;
  if (E.empty()) throw std::invalid_argument("cylinder of the empty word");
  const std::int64_t amax = static_cast<std::int64_t>(K) * m.c;
  for (const auto& a : m.atoms) {
    const bool inE = a.word.size() >= E.size() &&
                     std::equal(E.quotients.begin(), E.quotients.end(),
                                a.word.begin());
    if (inE) {
      r.m_E += a.mass;
      r.tail += TailEstimate(m, a.base, a.x, K);
    }
    if (a.word.size() >= E.size() + 1 && std::abs(a.word[0]) <= amax &&
        std::equal(E.quotients.begin(), E.quotients.end(), a.word.begin() + 1)) {
      r.m_pre_truncated += a.mass;
    }
  }
  r.defect_truncated = std::abs(r.m_pre_truncated - r.m_E);
  r.defect = std::abs(r.m_pre_truncated + r.tail - r.m_E);
  return r;
}

InvarianceResult InvarianceDefectInterval(const GaussMeasure& m, double lo,
                                          double hi, int K) {
  InvarianceResult r;
  r.K = K;
  if (hi < lo) return r;
  const std::int64_t amax = static_cast<std::int64_t>(K) * m.c;
  for (const auto& a : m.atoms) {
    if (a.x >= lo && a.x <= hi) {
      r.m_E += a.mass;
      r.tail += TailEstimate(m, a.base, a.x, K);
    }
    if (a.word.empty() || std::abs(a.word[0]) > amax) continue;
    const double tx = SuffixValueTail(a.word);
    if (tx >= lo && tx <= hi) r.m_pre_truncated += a.mass;
  }
  r.defect_truncated = std::abs(r.m_pre_truncated - r.m_E);
  r.defect = std::abs(r.m_pre_truncated + r.tail - r.m_E);
  return r;
}

GaussKuzminChain::GaussKuzminChain(const DiscreteMeasure& nu, double delta,
                                   int K, int degree)
    : delta_(delta), K_(K), c_(kDefaultC), h_(HullRadius()) {
  if (K < 1 || degree < 4) throw std::invalid_argument("bad chain parameters");
  double tot = 0.0;
  for (const Atom& a : nu.atoms) {
    if (a.a0 != 0) throw std::invalid_argument("chain needs the window copy");
    x_.push_back(a.x);
    w_.push_back(a.w);
    tot += a.w;
  }
  if (!(tot > 0.0)) throw std::invalid_argument("empty measure");
  for (double& w : w_) w /= tot;
  const double e = -2.0 * delta_;
  double z = 0.0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    for (std::size_t j = 0; j < x_.size(); ++j) {
      z += w_[i] * w_[j] * std::pow(std::abs(1.0 + x_[i] * x_[j]), e);
    }
  }
  C0_ = 1.0 / z;

  const int n = degree + 1;
  std::vector<double> ys(n);
  for (int i = 0; i < n; ++i) {
    ys[i] = h_ * std::cos(std::numbers::pi * (i + 0.5) / n);
  }
  std::vector<double> total(n, 0.0), vals(n);
  for (int k = 1; k <= K_; ++k) {
    for (int sign : {1, -1}) {
      const double a = static_cast<double>(sign * k * c_);
      for (int i = 0; i < n; ++i) {
        vals[i] = H(a + ys[i]);
        total[i] += vals[i];
      }
      digit_coef_.push_back(ChebFit(vals));
    }
  }
  std::vector<double> tp(n), tn(n);
  const double s2 = 2.0 * delta_;
  for (int i = 0; i < n; ++i) {
    double p = 0.0, m = 0.0;
    for (std::size_t j = 0; j < x_.size(); ++j) {
      const double u = (ys[i] + x_[j]) / c_;
      p += w_[j] * Hz(s2, K_ + 1 + u);
      m += w_[j] * Hz(s2, K_ + 1 - u);
    }
    tp[i] = std::pow(static_cast<double>(c_), -s2) * p;
    tn[i] = std::pow(static_cast<double>(c_), -s2) * m;
    total[i] += tp[i] + tn[i];
  }
  tail_pos_coef_ = ChebFit(tp);
  tail_neg_coef_ = ChebFit(tn);
  total_coef_ = ChebFit(total);
}

double GaussKuzminChain::H(double z) const {
  const double e = -2.0 * delta_;
  double s = 0.0;
  for (std::size_t j = 0; j < x_.size(); ++j) {
    s += w_[j] * std::pow(std::abs(z + x_[j]), e);
  }
  return s;
}

double GaussKuzminChain::ChebEval(const std::vector<double>& coef,
                                  double y) const {
  // Clenshaw on t = y / h.
  const double t = y / h_;
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t j = coef.size(); j-- > 1;) {
    const double b0 = 2.0 * t * b1 - b2 + coef[j];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + coef[0];
}

std::int64_t GaussKuzminChain::Step(double* y, std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  double u = U(rng) * ChebEval(total_coef_, *y);
  std::int64_t a = 0;
  for (std::size_t i = 0; i < digit_coef_.size(); ++i) {
    u -= ChebEval(digit_coef_[i], *y);
    if (u < 0.0) {
      const std::int64_t k = static_cast<std::int64_t>(i / 2 + 1);
      a = (i % 2 == 0 ? k : -k) * c_;
      break;
    }
  }
  if (a == 0) {
    // Tail digit |k| > K.  The x spread is ignored for the shape of the tail.
    const double tp = ChebEval(tail_pos_coef_, *y);
    const double tn = ChebEval(tail_neg_coef_, *y);
    const bool pos = U(rng) * (tp + tn) < tp;
    const double z = pos ? *y / c_ : -*y / c_;
    const double s2 = 2.0 * delta_;
    const double v = U(rng) * Hz(s2, K_ + 1 + z);
    // Largest m >= K + 1 with zeta(s2, m + z) >= v.
    double lo = K_ + 1, hi = 2.0 * (K_ + 1);
    const double cap = 1e15;
    while (hi < cap && Hz(s2, hi + z) >= v) {
      lo = hi;
      hi *= 2.0;
    }
    if (hi >= cap) {
      lo = cap;
    } else {
      while (hi - lo > 1.0) {
        const double mid = std::floor(0.5 * (lo + hi));
        if (Hz(s2, mid + z) >= v) lo = mid; else hi = mid;
      }
    }
    const auto k = static_cast<std::int64_t>(lo);
    a = (pos ? k : -k) * c_;
  }
  *y = 1.0 / (static_cast<double>(a) + *y);
  return a;
}

std::vector<std::int64_t> GaussKuzminChain::Sample(double y0, std::size_t n,
                                                   std::size_t burn_in,
                                                   std::mt19937_64& rng) const {
  double y = y0;
  for (std::size_t i = 0; i < burn_in; ++i) Step(&y, rng);
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = Step(&y, rng);
  return out;
}

double GaussKuzminChain::DigitTarget(std::int64_t a) const {
  const double e = -2.0 * delta_;
  double z = 0.0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    for (std::size_t j = 0; j < x_.size(); ++j) {
      z += w_[i] * w_[j] * std::pow(std::abs(a + x_[i] + x_[j]), e);
    }
  }
  return C0_ * z;
}

double GaussKuzminChain::Hurwitz2(double q) const {
  return Hz(2.0 * delta_, q);
}

double GkStatistic(const std::vector<std::int64_t>& digits, std::size_t n,
                   std::int64_t k) {
  if (n == 0 || n > digits.size()) {
    throw std::invalid_argument("n exceeds the word length");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) hits += digits[i] == k;
  return static_cast<double>(hits) / n;
}

double BirkhoffAverage(const std::vector<std::int64_t>& digits, double lo,
                       double hi, std::size_t n) {
  if (n == 0 || n > digits.size()) {
    throw std::invalid_argument("n exceeds the word length");
  }
  // T^s x = [0; a_{s+1}, ...], computed from the back.
  std::vector<double> orbit(digits.size() + 1, 0.0);
  for (std::size_t s = digits.size(); s-- > 0;) {
    orbit[s] = 1.0 / (digits[s] + orbit[s + 1]);
  }
  std::size_t hits = 0;
  for (std::size_t s = 0; s < n; ++s) hits += (orbit[s] >= lo && orbit[s] <= hi);
  return static_cast<double>(hits) / n;
}

}  // namespace hecke
