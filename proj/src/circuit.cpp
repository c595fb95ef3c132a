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

#include "qbm/circuit.hpp"

#include <algorithm>
#include <numeric>

namespace qbm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string gate_label(std::size_t index) { return "gate #" + std::to_string(index); }

std::optional<ValidationIssue> check_gate(const Gate& gate, Qubit width,
                                          std::optional<std::size_t> index) {
  auto qubits = qubits_of(gate);
  const std::string where = index ? gate_label(*index) + ": " : std::string{};
  for (Qubit q : qubits) {
    if (q >= width) {
      return ValidationIssue{CircuitErrorKind::IndexOutOfRange, index,
                             where + "qubit " + std::to_string(q) + " outside width " +
                                 std::to_string(width)};
    }
  }
  std::sort(qubits.begin(), qubits.end());
  auto dup = std::adjacent_find(qubits.begin(), qubits.end());
  if (dup != qubits.end()) {
    return ValidationIssue{CircuitErrorKind::DuplicateQubit, index,
                           where + "qubit " + std::to_string(*dup) + " used twice"};
  }
  return std::nullopt;
}

std::optional<ValidationIssue> check_register(const Register& r,
                                              std::span<const Register> earlier, Qubit width) {
  if (r.offset > width || r.length > width - r.offset) {
    return ValidationIssue{CircuitErrorKind::IndexOutOfRange, std::nullopt,
                           "register '" + r.name + "' [" + std::to_string(r.offset) + ", " +
                               std::to_string(r.end()) + ") exceeds width " +
                               std::to_string(width)};
  }
  for (const auto& o : earlier) {
    if (o.name == r.name) {
      return ValidationIssue{CircuitErrorKind::RegisterCollision, std::nullopt,
                             "register '" + r.name + "' declared twice"};
    }
    const bool disjoint = r.end() <= o.offset || o.end() <= r.offset;
    if (!disjoint && !r.same_range(o)) {
      return ValidationIssue{CircuitErrorKind::OverlappingRegisters, std::nullopt,
                             "register '" + r.name + "' partially overlaps '" + o.name + "'"};
    }
  }
  return std::nullopt;
}

[[noreturn]] void raise(const ValidationIssue& issue) {
  throw CircuitError(issue.kind, issue.message);
}

}  // namespace

GateKind kind_of(const Gate& gate) noexcept {
  return static_cast<GateKind>(gate.index());
}

std::string_view kind_name(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::Cx: return "cx";
    case GateKind::Swap: return "swap";
    case GateKind::CSwap: return "cswap";
    case GateKind::Mcx: return "mcx";
  }
  return "?";
}

std::vector<Qubit> qubits_of(const Gate& gate) {
  return std::visit(
      Overloaded{
          [](const gates::X& g) { return std::vector<Qubit>{g.target}; },
          [](const gates::Cx& g) { return std::vector<Qubit>{g.control, g.target}; },
          [](const gates::Swap& g) { return std::vector<Qubit>{g.a, g.b}; },
          [](const gates::CSwap& g) { return std::vector<Qubit>{g.control, g.a, g.b}; },
          [](const gates::Mcx& g) {
            std::vector<Qubit> qs;
            qs.reserve(g.controls.size() + 1);
            for (const auto& c : g.controls) qs.push_back(c.qubit);
            qs.push_back(g.target);
            return qs;
          },
      },
      gate);
}

Qubit Register::operator[](Qubit i) const {
  if (i >= length) {
    throw CircuitError(CircuitErrorKind::IndexOutOfRange,
                       "index " + std::to_string(i) + " outside register '" + name +
                           "' of length " + std::to_string(length));
  }
  return offset + i;
}

std::string_view to_string(CircuitErrorKind kind) noexcept {
  switch (kind) {
    case CircuitErrorKind::IndexOutOfRange: return "index-out-of-range";
    case CircuitErrorKind::DuplicateQubit: return "duplicate-qubit-in-gate";
    case CircuitErrorKind::OverlappingRegisters: return "overlapping-registers";
    case CircuitErrorKind::WidthMismatch: return "width-mismatch";
    case CircuitErrorKind::RegisterCollision: return "register-collision";
    case CircuitErrorKind::UnknownRegister: return "unknown-register";
    case CircuitErrorKind::InvalidMap: return "invalid-map";
  }
  return "?";
}

Circuit Circuit::from_parts(Qubit width, std::vector<Register> registers,
                            std::vector<Gate> gates) {
  Circuit c(width);
  c.registers_ = std::move(registers);
  c.gates_ = std::move(gates);
  return c;
}

const Register* Circuit::find_register(std::string_view name) const noexcept {
  auto it = std::find_if(registers_.begin(), registers_.end(),
                         [&](const Register& r) { return r.name == name; });
  return it == registers_.end() ? nullptr : &*it;
}

const Register& Circuit::reg(std::string_view name) const {
  if (const auto* r = find_register(name)) return *r;
  throw CircuitError(CircuitErrorKind::UnknownRegister,
                     "no register named '" + std::string(name) + "'");
}

Circuit& Circuit::add_register(std::string name, Qubit offset, Qubit length) {
  Register r{std::move(name), offset, length};
  if (auto issue = check_register(r, registers_, width_)) raise(*issue);
  registers_.push_back(std::move(r));
  return *this;
}

Circuit& Circuit::append(Gate gate) {
  if (auto issue = check_gate(gate, width_, std::nullopt)) raise(*issue);
  gates_.push_back(std::move(gate));
  return *this;
}

std::optional<ValidationIssue> validate(const Circuit& c) {
  const auto& regs = c.registers();
  for (std::size_t i = 0; i < regs.size(); ++i) {
    if (auto issue = check_register(regs[i], std::span(regs).first(i), c.width())) return issue;
  }
  const auto& gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (auto issue = check_gate(gates[i], c.width(), i)) return issue;
  }
  return std::nullopt;
}

void require_valid(const Circuit& c) {
  if (auto issue = validate(c)) raise(*issue);
}

Circuit inverse(const Circuit& c) {
  std::vector<Gate> reversed(c.gates().rbegin(), c.gates().rend());
  return Circuit::from_parts(c.width(), c.registers(), std::move(reversed));
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.width() != b.width()) {
    throw CircuitError(CircuitErrorKind::WidthMismatch,
                       "compose: widths " + std::to_string(a.width()) + " and " +
                           std::to_string(b.width()) + " differ");
  }
  std::vector<Register> regs = a.registers();
  for (const auto& r : b.registers()) {
    if (const auto* existing = a.find_register(r.name)) {
      if (!existing->same_range(r)) {
        throw CircuitError(CircuitErrorKind::RegisterCollision,
                           "compose: register '" + r.name + "' has different ranges");
      }
      continue;
    }
    if (auto issue = check_register(r, regs, a.width())) raise(*issue);
    regs.push_back(r);
  }
  std::vector<Gate> gates = a.gates();
  gates.insert(gates.end(), b.gates().begin(), b.gates().end());
  return Circuit::from_parts(a.width(), std::move(regs), std::move(gates));
}

Circuit embed(const Circuit& sub, Qubit host_width, std::span<const Qubit> qubit_map) {
  if (qubit_map.size() != sub.width()) {
    throw CircuitError(CircuitErrorKind::InvalidMap,
                       "embed: map has " + std::to_string(qubit_map.size()) +
                           " entries for a circuit of width " + std::to_string(sub.width()));
  }
  std::vector<bool> used(host_width, false);
  for (Qubit q : qubit_map) {
    if (q >= host_width) {
      throw CircuitError(CircuitErrorKind::InvalidMap,
                         "embed: image " + std::to_string(q) + " outside host width " +
                             std::to_string(host_width));
    }
    if (used[q]) {
      throw CircuitError(CircuitErrorKind::InvalidMap,
                         "embed: map is not injective at " + std::to_string(q));
    }
    used[q] = true;
  }

  auto m = [&](Qubit q) { return qubit_map[q]; };
  std::vector<Gate> gates;
  gates.reserve(sub.size());
  for (const auto& g : sub.gates()) {
    gates.push_back(std::visit(
        Overloaded{
            [&](const gates::X& x) -> Gate { return gates::X{m(x.target)}; },
            [&](const gates::Cx& x) -> Gate { return gates::Cx{m(x.control), m(x.target)}; },
            [&](const gates::Swap& x) -> Gate { return gates::Swap{m(x.a), m(x.b)}; },
            [&](const gates::CSwap& x) -> Gate {
              return gates::CSwap{m(x.control), m(x.a), m(x.b)};
            },
            [&](const gates::Mcx& x) -> Gate {
              gates::Mcx out{x.controls, m(x.target)};
              for (auto& c : out.controls) c.qubit = m(c.qubit);
              return out;
            },
        },
        g));
  }

  std::vector<Register> regs;
  for (const auto& r : sub.registers()) {
    bool contiguous = true;
    for (Qubit i = 1; i < r.length && contiguous; ++i) {
      contiguous = m(r.offset + i) == m(r.offset) + i;
    }
    if (!contiguous) continue;
    regs.push_back({r.name, r.length == 0 ? 0 : m(r.offset), r.length});
  }
  return Circuit::from_parts(host_width, std::move(regs), std::move(gates));
}

Circuit strip_registers(const Circuit& c) { return Circuit::from_parts(c.width(), {}, c.gates()); }

std::size_t depth(const Circuit& c) {
  std::vector<std::size_t> frontier(c.width(), 0);
  std::size_t layers = 0;
  for (const auto& g : c.gates()) {
    const auto qubits = qubits_of(g);
    std::size_t layer = 0;
    for (Qubit q : qubits) layer = std::max(layer, frontier.at(q));
    ++layer;
    for (Qubit q : qubits) frontier[q] = layer;
    layers = std::max(layers, layer);
  }
  return layers;
}

GateCounts gate_counts(const Circuit& c) {
  GateCounts counts;
  for (const auto& g : c.gates()) ++counts[kind_of(g)];
  return counts;
}

std::size_t count_of(const GateCounts& counts, GateKind kind) noexcept {
  auto it = counts.find(kind);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace qbm
