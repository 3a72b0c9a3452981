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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hecke/cf.h"
#include "hecke/coding.h"
#include "hecke/diophantine.h"
#include "hecke/ford.h"
#include "hecke/gapstats.h"
#include "hecke/orbit.h"
#include "hecke/psmeasure.h"

namespace py = pybind11;

namespace {

using hecke::BigInt;
using hecke::Rational;

// Python ints travel through their decimal strings.
BigInt ToBig(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }
py::int_ FromBig(const BigInt& v) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(v.str().c_str(), nullptr, 10)));
}

py::object Fraction(const Rational& r) {
  static py::object frac = py::module_::import("fractions").attr("Fraction");
  return frac(FromBig(hecke::Numer(r)), FromBig(hecke::Denom(r)));
}

Rational FromFraction(const py::object& x) {
  if (py::isinstance<py::int_>(x)) return Rational(ToBig(x));
  return hecke::Frac(ToBig(x.attr("numerator")), ToBig(x.attr("denominator")));
}

hecke::Interval MakeInterval(const py::object& lo, const py::object& hi) {
  return hecke::Interval{FromFraction(lo), FromFraction(hi)};
}

hecke::Cusp MakeCusp(const py::object& x) {
  const Rational r = FromFraction(x);
  return hecke::Cusp(hecke::Numer(r), hecke::Denom(r));
}

}  // namespace

PYBIND11_MODULE(_hecke, m) {
  m.doc() = "Hecke group continued fractions, Farey sets and gap statistics";

  py::register_exception<hecke::NotInOrbit>(m, "NotInOrbit", PyExc_ValueError);
  py::register_exception<hecke::ResourceError>(m, "ResourceError",
                                               PyExc_RuntimeError);
  py::register_exception<hecke::GrammarError>(m, "GrammarError",
                                              PyExc_ValueError);

  m.def("hull_radius", &hecke::HullRadius, py::arg("c") = hecke::kDefaultC);
  m.def(
      "cf_eval",
      [](const std::vector<std::int64_t>& q, int c) {
        return Fraction(hecke::CfValue(hecke::CFWord(q, c)));
      },
      py::arg("quotients"), py::arg("c") = hecke::kDefaultC);
  m.def(
      "cf_expand",
      [](const py::object& x, int c) {
        return hecke::CfExpand(FromFraction(x), c).quotients;
      },
      py::arg("x"), py::arg("c") = hecke::kDefaultC);
  m.def(
      "gauss_map",
      [](double x, int c) {
        const hecke::GaussStep s = hecke::GaussMapReal(x, c);
        return py::make_tuple(s.a, s.tx);
      },
      py::arg("x"), py::arg("c") = hecke::kDefaultC);

  m.def(
      "enumerate_farey",
      [](const py::object& Q, const py::object& lo, const py::object& hi,
         int c) {
        const auto snap =
            hecke::EnumerateFarey(FromFraction(Q), MakeInterval(lo, hi), c);
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        out.reserve(snap.points.size());
        for (const auto& p : snap.points) out.emplace_back(p.p, p.q);
        return out;
      },
      py::arg("Q"), py::arg("lo") = 0, py::arg("hi") = 4,
      py::arg("c") = hecke::kDefaultC,
      "Orbit points p/q in [lo, hi) with q < Q, as (p, q) pairs.");

  m.def(
      "scaled_gaps",
      [](const py::object& T, const py::object& lo, const py::object& hi,
         int c) {
        std::vector<py::object> out;
        for (const auto& ap :
             hecke::AdjacentPairs(FromFraction(T), MakeInterval(lo, hi), c))
          out.push_back(Fraction(ap.scaled_gap));
        return out;
      },
      py::arg("T"), py::arg("lo") = 0, py::arg("hi") = 4,
      py::arg("c") = hecke::kDefaultC);

  m.def(
      "delta_transfer",
      [](int K, int nodes) {
        hecke::TransferOptions opt;
        opt.K = K;
        opt.nodes = nodes;
        const auto d = hecke::DeltaViaTransferOperator(opt);
        return py::make_tuple(d.value, d.error_bar);
      },
      py::arg("K") = 8, py::arg("nodes") = 24);
  m.def(
      "delta_counting",
      [](const std::vector<std::int64_t>& Qs) {
        const auto d = hecke::DeltaViaCounting(Qs);
        return py::make_tuple(d.value, d.error_bar);
      },
      py::arg("Q_list"));

  m.def(
      "gap_cdf",
      [](const py::object& T, const std::vector<double>& s_grid,
         double delta) {
        const auto g = hecke::GapCdfEmpirical(FromFraction(T),
                                              hecke::Interval{0, 4}, s_grid,
                                              delta);
        return py::make_tuple(g.raw, g.values);
      },
      py::arg("T"), py::arg("s_grid"), py::arg("delta"));

  m.def(
      "est_count",
      [](double x, double A, double theta, double Q) {
        const hecke::PrimitiveSet z(static_cast<std::int64_t>(Q), x - 1, x + 1);
        return hecke::EstCount(z, x, A, theta, Q);
      },
      py::arg("x"), py::arg("A"), py::arg("theta"), py::arg("Q"));

  m.def(
      "cutting_sequence",
      [](const std::vector<std::int64_t>& q) {
        return hecke::CfToCutting(hecke::CFWord(q)).ToString();
      },
      py::arg("quotients"));
  m.def(
      "trace_geodesic",
      [](const py::object& xi, const py::object& xi_left) {
        return hecke::TraceGeodesic(MakeCusp(xi), FromFraction(xi_left))
            .ToString();
      },
      py::arg("xi"), py::arg("xi_left"));
}
