// Copyright 2026 The qbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>

#include "qbm/bitvec.hpp"
#include "qbm/circuit.hpp"
#include "qbm/encoder.hpp"
#include "qbm/formats.hpp"
#include "qbm/multiplier.hpp"
#include "qbm/numeric.hpp"
#include "qbm/simulator.hpp"
#include "qbm/verify.hpp"

namespace py = pybind11;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

py::dict counts_dict(const qbm::GateCounts& counts) {
  py::dict d;
  for (const auto& [kind, n] : counts) d[py::str(std::string(qbm::kind_name(kind)))] = n;
  return d;
}

py::tuple gate_tuple(const qbm::Gate& g) {
  return std::visit(
      Overloaded{
          [](const qbm::gates::X& x) -> py::tuple { return py::make_tuple("x", x.target); },
          [](const qbm::gates::Cx& x) -> py::tuple { return py::make_tuple("cx", x.control, x.target); },
          [](const qbm::gates::Swap& x) -> py::tuple { return py::make_tuple("swap", x.a, x.b); },
          [](const qbm::gates::CSwap& x) -> py::tuple { return py::make_tuple("cswap", x.control, x.a, x.b); },
          [](const qbm::gates::Mcx& x) -> py::tuple {
            py::list controls;
            for (const auto& c : x.controls) {
              controls.append(py::make_tuple(c.qubit, c.polarity == qbm::Polarity::Closed));
            }
            return py::make_tuple("mcx", controls, x.target);
          },
      },
      g);
}

py::dict layout_dict(const qbm::EncoderLayout& l) {
  py::dict d;
  d["n"] = l.n;
  d["inputs"] = l.inputs;
  d["hi"] = l.hi;
  d["lo"] = l.lo;
  d["copies"] = l.copies;
  d["qm1"] = l.qm1;
  return d;
}

py::dict stats_dict(const qbm::StatsRow& r) {
  py::dict d;
  d["n"] = r.n;
  d["qubits"] = r.qubits;
  d["counts"] = counts_dict(r.counts);
  d["depth"] = r.depth;
  d["adders"] = r.adders;
  d["encoder_counts"] = counts_dict(r.encoder_counts);
  d["encoder_depth"] = r.encoder_depth;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Booth multiplier circuit synthesis, simulation and verification";

  py::register_exception<qbm::RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<qbm::CircuitError>(m, "CircuitError", PyExc_ValueError);
  py::register_exception<qbm::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<qbm::SimulationError>(m, "SimulationError", PyExc_RuntimeError);
  py::register_exception<qbm::InvalidCodeError>(m, "InvalidCodeError", PyExc_ValueError);

  py::class_<qbm::BitVec>(m, "BitVec")
      .def(py::init<std::size_t>(), py::arg("width"))
      .def_static("from_string", &qbm::BitVec::from_string, py::arg("msb_first"))
      .def_static("from_uint", &qbm::BitVec::from_uint, py::arg("value"), py::arg("width"))
      .def_property_readonly("width", &qbm::BitVec::width)
      .def("to_uint", &qbm::BitVec::to_uint)
      .def("slice", &qbm::BitVec::slice, py::arg("offset"), py::arg("length"))
      .def("__len__", &qbm::BitVec::width)
      .def("__getitem__", &qbm::BitVec::test)
      .def("__str__", &qbm::BitVec::to_string)
      .def("__repr__", [](const qbm::BitVec& v) { return "BitVec('" + v.to_string() + "')"; })
      .def("__eq__", [](const qbm::BitVec& a, const qbm::BitVec& b) { return a == b; })
      .def("__hash__", [](const qbm::BitVec& v) { return py::hash(py::str(v.to_string())); });

  m.def("to_twos_complement", &qbm::to_twos_complement, py::arg("value"), py::arg("width"));
  m.def("from_twos_complement", &qbm::from_twos_complement, py::arg("bits"));
  m.def("ones_complement", &qbm::ones_complement, py::arg("bits"));
  m.def(
      "arithmetic_shift_right",
      [](const qbm::BitVec& a, const qbm::BitVec& q, bool qm1) {
        auto r = qbm::arithmetic_shift_right(a, q, qm1);
        return py::make_tuple(r.a, r.q, r.qm1);
      },
      py::arg("a"), py::arg("q"), py::arg("qm1"));
  m.def(
      "booth_recode", [](const qbm::BitVec& v) { return qbm::booth_recode(v).digits(); },
      py::arg("bits"), "Booth digits, index i carries weight 2^i.");
  m.def(
      "recode_string",
      [](const std::string& bits) { return qbm::booth_recode(qbm::BitVec::from_string(bits)).to_string(); },
      py::arg("bits"), "MSB-first digit string over {0, 1, N}.");

  m.def(
      "classical_booth_multiply",
      [](std::int64_t x, std::int64_t y, std::size_t width) {
        const auto run = qbm::classical_booth_multiply(qbm::SignedWord(x, width),
                                                       qbm::SignedWord(y, width));
        py::list rows;
        for (const auto& s : run.trace) {
          py::dict row;
          row["A"] = s.a.to_string();
          row["Q"] = s.q.to_string();
          row["Qm1"] = s.qm1 ? 1 : 0;
          row["M"] = s.m.to_string();
          row["cycle"] = s.cycle;
          row["action"] = qbm::to_string(s.action);
          rows.append(row);
        }
        return py::make_tuple(run.product.value(), rows);
      },
      py::arg("x"), py::arg("y"), py::arg("width"));
  m.def(
      "render_trace",
      [](std::int64_t x, std::int64_t y, std::size_t width) {
        return qbm::render_trace(
            qbm::classical_booth_multiply(qbm::SignedWord(x, width), qbm::SignedWord(y, width)).trace);
      },
      py::arg("x"), py::arg("y"), py::arg("width"));

  py::class_<qbm::Circuit>(m, "Circuit")
      .def_property_readonly("width", &qbm::Circuit::width)
      .def_property_readonly("registers",
                             [](const qbm::Circuit& c) {
                               py::dict d;
                               for (const auto& r : c.registers()) {
                                 d[py::str(r.name)] = py::make_tuple(r.offset, r.length);
                               }
                               return d;
                             })
      .def_property_readonly("gates",
                             [](const qbm::Circuit& c) {
                               py::list gates;
                               for (const auto& g : c.gates()) gates.append(gate_tuple(g));
                               return gates;
                             })
      .def("__len__", &qbm::Circuit::size)
      .def("__eq__", [](const qbm::Circuit& a, const qbm::Circuit& b) { return a == b; })
      .def("to_qbc", [](const qbm::Circuit& c) { return qbm::to_qbc(c); })
      .def("to_qasm3", [](const qbm::Circuit& c) { return qbm::to_qasm3(c); })
      .def("depth", [](const qbm::Circuit& c) { return qbm::depth(c); })
      .def("gate_counts", [](const qbm::Circuit& c) { return counts_dict(qbm::gate_counts(c)); })
      .def("validate", [](const qbm::Circuit& c) -> py::object {
        auto issue = qbm::validate(c);
        if (!issue) return py::none();
        return py::str(std::string(qbm::to_string(issue->kind)) + ": " + issue->message);
      });

  m.def("parse_qbc", [](const std::string& text) { return qbm::parse_qbc(text); }, py::arg("text"));
  m.def("inverse", &qbm::inverse, py::arg("circuit"));
  m.def("compose", &qbm::compose, py::arg("a"), py::arg("b"));

  m.def("build_pair_encoder", &qbm::build_pair_encoder);
  m.def(
      "build_booth_encoder",
      [](std::size_t n) {
        auto be = qbm::build_booth_encoder(n);
        return py::make_tuple(be.circuit, layout_dict(be.layout));
      },
      py::arg("n"));
  m.def("build_ripple_adder", &qbm::build_ripple_adder, py::arg("w"));
  m.def("build_qbm", [](std::size_t n) { return qbm::cached_qbm(n)->circuit; }, py::arg("n"));
  m.def(
      "pp_reference_value",
      [](int digit, std::int64_t y, std::size_t width, std::size_t i) {
        return qbm::pp_reference_value(digit, qbm::SignedWord(y, width), i);
      },
      py::arg("digit"), py::arg("y"), py::arg("width"), py::arg("i"));

  m.def("run_basis", &qbm::run_basis, py::arg("circuit"), py::arg("input"));
  m.def(
      "run_state",
      [](const qbm::Circuit& c, const std::map<std::string, std::complex<double>>& terms) {
        qbm::QuantumState::Terms in;
        for (const auto& [bits, amp] : terms) in.emplace(qbm::BitVec::from_string(bits), amp);
        const auto out = qbm::run_state(c, qbm::QuantumState(c.width(), std::move(in)));
        std::map<std::string, std::complex<double>> result;
        for (const auto& [bits, amp] : out.terms()) result.emplace(bits.to_string(), amp);
        return result;
      },
      py::arg("circuit"), py::arg("terms"),
      "Terms map MSB-first bit strings to amplitudes.");
  m.def("as_permutation", &qbm::as_permutation, py::arg("circuit"),
        py::arg("limit") = qbm::kDefaultPermutationLimit, py::arg("workers") = 1);

  m.def(
      "qbm_multiply",
      [](std::int64_t x, std::int64_t y, std::size_t width) {
        const auto r = qbm::qbm_multiply(qbm::SignedWord(x, width), qbm::SignedWord(y, width));
        py::dict d;
        d["product"] = r.product.value();
        d["result_bits"] = r.result_bits();
        d["clean"] = r.cleanliness.ok();
        return d;
      },
      py::arg("x"), py::arg("y"), py::arg("width"));

  m.def(
      "verify_exhaustive",
      [](std::size_t n, std::size_t workers) {
        const auto r = qbm::verify_exhaustive(n, workers);
        return py::make_tuple(r.passed, r.total);
      },
      py::arg("n"), py::arg("workers") = 1);
  m.def(
      "verify_random",
      [](std::size_t n, std::size_t samples, std::uint64_t seed) {
        const auto r = qbm::verify_random(n, samples, seed);
        return py::make_tuple(r.passed, r.total);
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"));

  m.def(
      "circuit_stats",
      [](std::size_t lo, std::size_t hi) {
        py::list rows;
        for (const auto& r : qbm::circuit_stats(lo, hi)) rows.append(stats_dict(r));
        return rows;
      },
      py::arg("lo"), py::arg("hi"));
  m.def(
      "stats_csv", [](std::size_t lo, std::size_t hi) { return qbm::stats_csv(qbm::circuit_stats(lo, hi)); },
      py::arg("lo"), py::arg("hi"));
}
