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

// hecke: command-line driver.  Every run writes CSV/JSON artifacts and a
// manifest.json into --out.  Exit codes: 0 ok, 2 invalid input, 3 cap hit.

#include <openssl/sha.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/version.hpp>
#include <gsl/gsl_version.h>

#include "CLI11.hpp"
#include "hecke/cf.h"
#include "hecke/coding.h"
#include "hecke/diophantine.h"
#include "hecke/ford.h"
#include "hecke/gapstats.h"
#include "hecke/gaussdyn.h"
#include "hecke/orbit.h"
#include "hecke/psmeasure.h"
#include "json.hpp"

namespace {

using namespace hecke;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  int c = kDefaultC;
  std::int64_t Q = 1000;
  std::string T = "100000";
  int L = 10;
  std::string interval = "0:4";
  std::string s_grid = "2:7.5:0.1";
  std::string delta = "transfer";
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  std::string out = "out";
  std::size_t cap_points = 50'000'000;
  double bin_width = 0.0;  // 0 picks a per-command default
  double A = 1.0;
  double theta = 0.5;
  bool kesten = false;
  std::size_t n = 10000;
  std::string word;

  json ToJson() const {
    return json{{"command", command},     {"c", c},
                {"Q", Q},                 {"T", T},
                {"L", L},                 {"interval", interval},
                {"s_grid", s_grid},       {"delta", delta},
                {"seed", seed},           {"samples", samples},
                {"out", out},             {"cap_points", cap_points},
                {"bin_width", bin_width}, {"A", A},
                {"theta", theta},         {"kesten", kesten},
                {"n", n},                 {"word", word}};
  }
};

// "3", "-1/2", "0.25" -> exact rational.
// Integers, fractions p/q and decimals with an optional exponent, exactly.
Rational ParseRational(const std::string& s) {
  try {
    const auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
      const std::string ex = s.substr(e + 1);
      if (ex.empty() || ex.size() > 4 ||
          ex.find_first_not_of("+-0123456789") != std::string::npos) {
        throw std::invalid_argument(s);
      }
      const int n = std::stoi(ex);
      BigInt p = 1;
      for (int i = 0; i < std::abs(n); ++i) p *= 10;
      const Rational m = ParseRational(s.substr(0, e));
      return n >= 0 ? Rational(m * p) : Rational(m / p);
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(s);
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    const bool neg = !ip.empty() && ip[0] == '-';
    if (neg) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    if (fp.find_first_not_of("0123456789") != std::string::npos ||
        ip.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument(s);
    }
    BigInt den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    const Rational r = Rational(BigInt(ip)) + Rational(BigInt(fp), den);
    return neg ? Rational(-r) : r;
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw ValidationError("cannot parse number '" + s + "'");
  }
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Interval ParseInterval(const std::string& s) {
  const auto parts = Split(s, ':');
  if (parts.size() != 2) throw ValidationError("--interval expects lo:hi");
  Interval iv{ParseRational(parts[0]), ParseRational(parts[1])};
  if (!(iv.lo < iv.hi)) throw ValidationError("--interval must have lo < hi");
  return iv;
}

std::vector<double> ParseGrid(const std::string& s) {
  const auto parts = Split(s, ':');
  if (parts.size() != 3) throw ValidationError("--s-grid expects lo:hi:step");
  const double lo = ToDouble(ParseRational(parts[0]));
  const double hi = ToDouble(ParseRational(parts[1]));
  const double step = ToDouble(ParseRational(parts[2]));
  if (!(step > 0.0) || hi < lo) throw ValidationError("bad --s-grid");
  return MakeGrid(lo, hi, step);
}

std::string Sha256Hex(const std::string& data) {
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), md);
  char hex[2 * SHA256_DIGEST_LENGTH + 1];
  for (int i = 0; i < SHA256_DIGEST_LENGTH; ++i) {
    std::snprintf(hex + 2 * i, 3, "%02x", md[i]);
  }
  return hex;
}

std::string Num(double v) { return FormatReal(v); }

class Run {
 public:
  explicit Run(RunConfig cfg) : cfg_(std::move(cfg)) {
    // The output directory does not enter the hash, so reruns elsewhere
    // produce byte-identical files.
    json j = cfg_.ToJson();
    j.erase("out");
    hash_ = Sha256Hex(j.dump());
    fs::create_directories(cfg_.out);
  }

  const RunConfig& cfg() const { return cfg_; }

  // CSV with a leading "# manifest <hash>" line, then the header row.
  void WriteCsv(const std::string& name, const std::string& header,
                const std::vector<std::string>& rows) {
    std::ofstream f(fs::path(cfg_.out) / name, std::ios::binary);
    f << "# manifest " << hash_ << "\n" << header << "\n";
    for (const auto& r : rows) f << r << "\n";
    if (!f) throw std::runtime_error("cannot write " + name);
    outputs_.push_back(name);
  }

  void WriteJson(const std::string& name, json j) {
    j["manifest"] = hash_;
    std::ofstream f(fs::path(cfg_.out) / name, std::ios::binary);
    f << j.dump(2) << "\n";
    if (!f) throw std::runtime_error("cannot write " + name);
    outputs_.push_back(name);
  }

  void WriteManifest(double wall) {
    json m;
    m["hash"] = hash_;
    m["config"] = cfg_.ToJson();
    m["seed"] = cfg_.seed;
    m["versions"] = {{"hecke", kVersion},
                     {"compiler", __VERSION__},
                     {"boost", BOOST_LIB_VERSION},
                     {"gsl", GSL_VERSION}};
    m["wall_time_s"] = wall;
    m["outputs"] = outputs_;
    std::ofstream f(fs::path(cfg_.out) / "manifest.json", std::ios::binary);
    f << m.dump(2) << "\n";
  }

  double Delta() {
    if (delta_) return *delta_;
    const std::string& d = cfg_.delta;
    if (d == "transfer" || d == "both") {
      delta_ = DeltaViaTransferOperator({}, cfg_.c).value;
    } else if (d == "fit") {
      delta_ = DeltaViaCounting(DyadicQs(), cfg_.c).value;
    } else {
      delta_ = ToDouble(ParseRational(d));
      if (!(*delta_ > 0.5 && *delta_ <= 1.0)) {
        throw ValidationError("--delta value must lie in (1/2, 1]");
      }
    }
    return *delta_;
  }

  std::vector<std::int64_t> DyadicQs() const {
    std::vector<std::int64_t> qs;
    for (std::int64_t q = 256; q <= std::max<std::int64_t>(cfg_.Q, 8192);
         q *= 2) {
      qs.push_back(q);
    }
    return qs;
  }

  Rational T() const {
    const Rational t = ParseRational(cfg_.T);
    if (t < 1) throw ValidationError("--T must be >= 1");
    return t;
  }

  EnumerationLimits Limits() const { return {cfg_.cap_points}; }

 private:
  RunConfig cfg_;
  std::string hash_;
  std::vector<std::string> outputs_;
  std::optional<double> delta_;
};

void RequireC4(const Run& run, const char* what) {
  if (run.cfg().c != kDefaultC) {
    throw ValidationError(std::string(what) + " is implemented for c = 4 only");
  }
}

std::string PointRow(std::int64_t p, std::int64_t q, const std::string& word) {
  return std::to_string(p) + "," + std::to_string(q) + "," +
         Num(static_cast<double>(p) / q) + "," + word;
}

std::string JoinWord(const std::vector<std::int64_t>& w, std::int64_t a0) {
  std::string s = a0 ? std::to_string(a0) + "|" : "";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(w[i]);
  }
  return s;
}

void CmdGen(Run& run) {
  const auto snap = EnumerateFarey(Rational(run.cfg().Q),
                                   ParseInterval(run.cfg().interval),
                                   run.cfg().c, run.Limits());
  std::vector<std::string> rows;
  for (const auto& pt : snap.points) {
    rows.push_back(PointRow(pt.p, pt.q, JoinWord(pt.word, pt.a0)));
  }
  run.WriteCsv("farey.csv", "p,q,value,word", rows);
}

void CmdWordgen(Run& run) {
  if (run.cfg().L < 0) throw ValidationError("--L must be >= 0");
  const Interval iv = ParseInterval(run.cfg().interval);
  const auto pts =
      EnumerateByWordLength(run.cfg().L, iv, run.cfg().c, run.Limits());
  std::vector<std::string> rows;
  std::vector<double> xs;
  for (const auto& pt : pts) {
    rows.push_back(PointRow(pt.p, pt.q, JoinWord(pt.word, pt.a0)));
    xs.push_back(pt.Value());
  }
  run.WriteCsv("words.csv", "p,q,value,word", rows);
  const double bw = run.cfg().bin_width > 0 ? run.cfg().bin_width : 1e-5;
  const Histogram h = PointHistogram(xs, ToDouble(iv.lo), ToDouble(iv.hi), bw);
  std::vector<std::string> hr;
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    if (h.counts[i]) hr.push_back(Num(h.bin_lo[i]) + "," + std::to_string(h.counts[i]));
  }
  run.WriteCsv("point_histogram.csv", "bin_lo,count", hr);
}

json EstimateJson(const DeltaEstimate& e) {
  json t = json::array();
  for (const auto& [k, v] : e.trace) t.push_back({k, v});
  return {{"value", e.value}, {"error_bar", e.error_bar}, {"trace", t}};
}

void CmdDelta(Run& run) {
  const std::string& m = run.cfg().delta;
  json j;
  if (m == "transfer" || m == "both") {
    j["transfer"] = EstimateJson(DeltaViaTransferOperator({}, run.cfg().c));
  }
  if (m == "fit" || m == "both") {
    j["fit"] = EstimateJson(DeltaViaCounting(run.DyadicQs(), run.cfg().c));
  }
  if (j.empty()) throw ValidationError("delta needs --delta transfer|fit|both");
  run.WriteJson("delta.json", j);
}

void CmdFord(Run& run) {
  const auto circles = TangenciesAtTime(
      run.T(), ParseInterval(run.cfg().interval), run.cfg().c, run.Limits());
  std::vector<std::string> rows;
  for (const auto& fc : circles) {
    rows.push_back(std::to_string(fc.p) + "," + std::to_string(fc.q) + "," +
                   Numer(fc.diameter).str() + "," + Denom(fc.diameter).str() +
                   "," + JoinWord(fc.word, fc.a0));
  }
  run.WriteCsv("circles.csv", "p,q,diameter_num,diameter_den,label", rows);
}

std::string FracStr(const Rational& r) { return r.str(); }

void WritePairs(Run& run, const std::vector<AdjacentPair>& pairs) {
  std::vector<std::string> rows;
  for (const auto& ap : pairs) {
    const PairClass pc = ClassifyPair(ap, run.cfg().c);
    std::string cg, dg;
    if (!pc.gammas.empty()) {
      cg = pc.gammas[0].c().str();
      dg = pc.gammas[0].d().str();
    }
    rows.push_back(FracStr(ap.left.Tangency()) + "," + FracStr(ap.right.Tangency()) +
                   "," + FracStr(ap.gap) + "," + Num(ToDouble(ap.scaled_gap)) +
                   "," + PairKindName(pc.kind) + "," + cg + "," + dg);
  }
  run.WriteCsv("pairs.csv", "left,right,gap,scaled_gap,class,c_gamma,d_gamma",
               rows);
}

void CmdClassify(Run& run) {
  WritePairs(run, AdjacentPairs(run.T(), ParseInterval(run.cfg().interval),
                                run.cfg().c));
}

void CmdGaps(Run& run) {
  const Rational T = run.T();
  const Interval iv = ParseInterval(run.cfg().interval);
  const auto grid = ParseGrid(run.cfg().s_grid);
  const GapCdf g = GapCdfEmpirical(T, iv, grid, run.Delta(), run.cfg().c);
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rows.push_back(Num(grid[i]) + "," + std::to_string(g.raw[i]) + "," +
                   Num(g.values[i]));
  }
  run.WriteCsv("gapcdf.csv", "s,raw_count,value", rows);
  const auto pairs = AdjacentPairs(T, iv, run.cfg().c);
  std::vector<double> pts;
  for (const auto& fc : TangenciesAtTime(T, iv, run.cfg().c, run.Limits())) {
    pts.push_back(fc.Value());
  }
  const double bw = run.cfg().bin_width > 0 ? run.cfg().bin_width : 0.1;
  const Histogram h = GapHistogram(pts, bw, ToDouble(T));
  std::vector<std::string> hr;
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    hr.push_back(Num(h.bin_lo[i]) + "," + std::to_string(h.counts[i]));
  }
  run.WriteCsv("gap_histogram.csv", "bin_lo,count", hr);
  WritePairs(run, pairs);
}

DiscreteMeasure CountingSurrogate(Run& run, const Interval& iv) {
  const std::int64_t Q = std::max<std::int64_t>(run.cfg().Q, 32);
  return PsMeasureApprox(Q, run.Delta(), iv, PsWeighting::kShell, run.cfg().c,
                         false);
}

void CmdExplicit(Run& run) {
  RequireC4(run, "explicit-cdf");
  auto grid = ParseGrid(run.cfg().s_grid);
  if (run.cfg().command == "all") {
    // The shared grid may run past the range of the explicit law.
    std::erase_if(grid, [](double s) { return s <= 0.0 || s >= 7.5; });
  }
  if (grid.empty() || grid.front() <= 0.0 || grid.back() >= 7.5) {
    throw ValidationError("explicit-cdf needs an s-grid inside (0, 7.5)");
  }
  const DiscreteMeasure nu = CountingSurrogate(run, Interval{0, 8});
  std::vector<std::string> rows;
  for (double s : grid) {
    const GapIntegrals g = ExplicitGapCdf(s, run.Delta(), nu);
    rows.push_back(Num(s) + "," + Num(g.F12) + "," + Num(g.F23) + "," +
                   Num(g.F23 + 2 * g.F12) + "," + Num(g.F23 + g.F12));
  }
  run.WriteCsv("explicit_cdf.csv", "s,F12,F23,F_literal,F_corrected", rows);
}

void CmdDio(Run& run) {
  const auto& cfg = run.cfg();
  const Interval iv = ParseInterval(cfg.interval);
  const double Q = static_cast<double>(cfg.Q);
  CountDistribution d;
  if (cfg.samples == 0) {
    d = ExactCountLaw(Q, cfg.A, cfg.theta, cfg.kesten, ToDouble(iv.lo),
                      ToDouble(iv.hi), run.Delta(), cfg.c);
  } else {
    const PrimitiveSet z(cfg.Q, ToDouble(iv.lo) - 1, ToDouble(iv.hi) + 1,
                         cfg.c);
    CountRegion region;
    region.kind =
        cfg.kesten ? CountRegion::Kind::kKesten : CountRegion::Kind::kEst;
    region.A = cfg.A;
    region.theta = cfg.theta;
    Sampler s;
    s.lo = ToDouble(iv.lo);
    s.hi = ToDouble(iv.hi);
    d = SampleCountDistribution(z, region, Q, s, cfg.samples, cfg.seed,
                                run.Delta());
  }
  const auto scaled = d.Scaled();
  std::vector<std::string> rows;
  for (const auto& [k, m] : d.mass) {
    rows.push_back(std::to_string(k) + "," + Num(m) + "," + Num(scaled.at(k)));
  }
  run.WriteCsv("dio.csv", "k,mass,scaled_mass", rows);
}

void CmdEquidist(Run& run) {
  const std::vector<EquidistSpec> bumps = {
      {{0.0, 0.3}, {-0.25, 0.25}, {1.2, 6.0}},
      {{3.7, 4.0}, {-0.3, 0.1}, {1.0, 3.0}},
      {{0.02, 0.2}, {0.0, 0.3}, {2.0, 12.0}},
  };
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < bumps.size(); ++i) {
    for (std::int64_t Q : {run.cfg().Q, 2 * run.cfg().Q}) {
      const EquidistResult r = EquidistSum(bumps[i], Q, 0.0, run.Delta(),
                                           run.cfg().c);
      rows.push_back(std::to_string(i + 1) + "," + std::to_string(Q) + "," +
                     Num(r.t) + "," + Num(r.value) + "," +
                     std::to_string(r.terms));
    }
  }
  run.WriteCsv("equidist.csv", "bump,Q,t,value,terms", rows);
}

const Interval kWindow{Rational(-1, 2), Rational(1, 2)};

void CmdGauss(Run& run) {
  RequireC4(run, "gauss");
  const DiscreteMeasure nu = CountingSurrogate(run, kWindow);
  const GaussMeasure m = M0Approx(nu, run.Delta());
  std::vector<std::string> ps, m0;
  for (const auto& a : nu.atoms) ps.push_back(Num(a.x) + "," + Num(a.w / nu.total));
  for (const auto& a : m.atoms) m0.push_back(Num(a.x) + "," + Num(a.mass));
  run.WriteCsv("ps_measure.csv", "point,weight", ps);
  run.WriteCsv("m0.csv", "point,weight", m0);
  std::vector<std::string> rows;
  for (int a : {4, -4, 8, -8, 12, -12}) {
    for (int b : {0, 4, -4}) {
      const CFWord E = b ? CFWord({a, b}) : CFWord({a});
      const InvarianceResult r = InvarianceDefect(m, E, 50);
      rows.push_back(E.Joined() + "," + Num(r.m_E) + "," +
                     Num(r.m_pre_truncated) + "," + Num(r.tail) + "," +
                     Num(r.defect));
    }
  }
  run.WriteCsv("invariance.csv", "word,m_E,m_pre_truncated,tail,defect", rows);
}

void CmdGk(Run& run) {
  RequireC4(run, "gk");
  const auto& cfg = run.cfg();
  const std::size_t orbits = cfg.samples ? cfg.samples : 100;
  if (orbits < 2 || cfg.n == 0) throw ValidationError("gk needs >= 2 orbits");
  const DiscreteMeasure nu = CountingSurrogate(run, kWindow);
  const GaussMeasure m = M0Approx(nu, run.Delta());
  const GaussKuzminChain chain(nu, run.Delta());
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, nu.atoms.size() - 1);
  const std::vector<int> ks = {4, 8, 12, 16, -4, -8};
  std::map<int, std::vector<double>> est;
  for (std::size_t i = 0; i < orbits; ++i) {
    const auto digits = chain.Sample(nu.atoms[pick(rng)].x, cfg.n, 100, rng);
    for (int k : ks) est[k].push_back(GkStatistic(digits, cfg.n, k));
  }
  std::vector<std::string> rows;
  for (int k : ks) {
    const auto& v = est[k];
    double mean = 0.0, var = 0.0;
    for (double x : v) mean += x;
    mean /= v.size();
    for (double x : v) var += (x - mean) * (x - mean);
    const double se = std::sqrt(var / (v.size() - 1) / v.size());
    const double lo = k > 0 ? 1.0 / (k + cfg.c) : 1.0 / k;
    const double hi = k > 0 ? 1.0 / k : 1.0 / (k - cfg.c);
    rows.push_back(std::to_string(k) + "," + Num(mean) + "," + Num(se) + "," +
                   Num(m.Mass(lo, hi)) + "," + Num(chain.DigitTarget(k)));
  }
  run.WriteCsv("gk.csv", "k,P_hat_mean,P_hat_se,target_interval,target_cylinder",
               rows);
}

std::string Positions(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(v[i]);
  }
  return s;
}

void CmdCode(Run& run) {
  std::vector<CFWord> words;
  if (!run.cfg().word.empty()) {
    std::vector<std::int64_t> q;
    for (const auto& t : Split(run.cfg().word, ',')) {
      try {
        q.push_back(std::stoll(t));
      } catch (const std::exception&) {
        throw ValidationError("bad --word entry '" + t + "'");
      }
    }
    words.emplace_back(q, run.cfg().c);
  } else {
    std::mt19937_64 rng(run.cfg().seed);
    std::uniform_int_distribution<int> len(1, 5), dig(1, 6), sgn(0, 1);
    const std::size_t n = run.cfg().samples ? run.cfg().samples : 20;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> q(len(rng));
      for (auto& a : q) a = (sgn(rng) ? 1 : -1) * run.cfg().c * dig(rng);
      words.emplace_back(q, run.cfg().c);
    }
  }
  std::vector<std::string> rows;
  const Rational left = -Rational(run.cfg().c, 2) - Rational(7, 3);
  for (const auto& w : words) {
    const CuttingSequence s = CfToCutting(w);
    const CuttingSequence t = TraceGeodesic(CfEval(w), left, 10000, w.c);
    std::string sym = s.ToString(), tr = t.ToString();
    std::replace(sym.begin(), sym.end(), ',', ' ');
    std::replace(tr.begin(), tr.end(), ',', ' ');
    rows.push_back(w.Joined() + "," + sym + "," + tr + "," +
                   Positions(ChangeTypePoints(s)) + "," +
                   (s.symbols == t.symbols ? "1" : "0"));
  }
  run.WriteCsv("coding.csv", "word,symbolic,traced,change_type_points,agree",
               rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hecke: generalized Farey sequences for Hecke groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sc) {
    sc->add_option("--c", cfg.c, "group parameter (translation length)");
    sc->add_option("--Q", cfg.Q, "height bound (denominators < Q)");
    sc->add_option("--T", cfg.T, "circle cutoff time, diameters > 1/T");
    sc->add_option("--L", cfg.L, "generator word length");
    sc->add_option("--interval", cfg.interval, "lo:hi");
    sc->add_option("--s-grid", cfg.s_grid, "lo:hi:step");
    sc->add_option("--delta,--method", cfg.delta,
                   "transfer | fit | both | numeric value");
    sc->add_option("--seed", cfg.seed);
    sc->add_option("--samples", cfg.samples);
    sc->add_option("--out", cfg.out, "output directory");
    sc->add_option("--cap-points", cfg.cap_points);
    sc->add_option("--bin-width", cfg.bin_width);
    sc->add_option("--A", cfg.A, "approximation constant");
    sc->add_option("--theta", cfg.theta);
    sc->add_flag("--kesten", cfg.kesten, "Kesten window instead of EST");
    sc->add_option("--n", cfg.n, "digits per orbit (gk)");
    sc->add_option("--word", cfg.word, "comma-separated digits (code)");
  };
  const std::vector<std::pair<std::string, void (*)(Run&)>> cmds = {
      {"gen", CmdGen},         {"wordgen", CmdWordgen},
      {"delta", CmdDelta},     {"ford", CmdFord},
      {"gaps", CmdGaps},       {"classify", CmdClassify},
      {"explicit-cdf", CmdExplicit}, {"dio", CmdDio},
      {"equidist", CmdEquidist}, {"gauss", CmdGauss},
      {"gk", CmdGk},           {"code", CmdCode},
  };
  for (const auto& [name, fn] : cmds) {
    add_common(app.add_subcommand(name));
  }
  add_common(app.add_subcommand("all", "every command with defaults"));
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (cfg.c < 3) throw ValidationError("--c must be >= 3");
    Run run(cfg);
    if (cfg.command == "all") {
      for (const auto& [name, fn] : cmds) {
        std::cerr << "hecke all: " << name << "\n";
        fn(run);
      }
    } else {
      for (const auto& [name, fn] : cmds) {
        if (name == cfg.command) fn(run);
      }
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    run.WriteManifest(wall);
  } catch (const ResourceError& e) {
    std::cerr << "hecke: resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hecke: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "hecke: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hecke: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
