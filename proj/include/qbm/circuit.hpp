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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qbm {

using Qubit = std::uint32_t;

enum class Polarity : std::uint8_t {
  Closed,  // satisfied by |1>
  Open,    // satisfied by |0>
};

struct Control {
  Qubit qubit;
  Polarity polarity = Polarity::Closed;

  friend bool operator==(const Control&, const Control&) = default;
};

inline Control closed(Qubit q) { return {q, Polarity::Closed}; }
inline Control open(Qubit q) { return {q, Polarity::Open}; }

namespace gates {

struct X {
  Qubit target;
  friend bool operator==(const X&, const X&) = default;
};

struct Cx {
  Qubit control;
  Qubit target;
  friend bool operator==(const Cx&, const Cx&) = default;
};

struct Swap {
  Qubit a;
  Qubit b;
  friend bool operator==(const Swap&, const Swap&) = default;
};

struct CSwap {
  Qubit control;
  Qubit a;
  Qubit b;
  friend bool operator==(const CSwap&, const CSwap&) = default;
};

/// Multi-controlled X with per-control polarity. No controls degenerates to X;
/// two closed controls is a Toffoli.
struct Mcx {
  std::vector<Control> controls;
  Qubit target;
  friend bool operator==(const Mcx&, const Mcx&) = default;
};

}  // namespace gates

using Gate = std::variant<gates::X, gates::Cx, gates::Swap, gates::CSwap, gates::Mcx>;

enum class GateKind { X, Cx, Swap, CSwap, Mcx };

inline constexpr GateKind kAllGateKinds[] = {GateKind::X, GateKind::Cx, GateKind::Swap,
                                             GateKind::CSwap, GateKind::Mcx};

GateKind kind_of(const Gate& gate) noexcept;
/// Lower-case mnemonic: x, cx, swap, cswap, mcx.
std::string_view kind_name(GateKind kind) noexcept;
/// Every qubit the gate touches, controls first, target(s) last.
std::vector<Qubit> qubits_of(const Gate& gate);

/// Named contiguous qubit range [offset, offset + length).
struct Register {
  std::string name;
  Qubit offset = 0;
  Qubit length = 0;

  Qubit operator[](Qubit i) const;
  Qubit end() const noexcept { return offset + length; }
  bool same_range(const Register& o) const noexcept {
    return offset == o.offset && length == o.length;
  }

  friend bool operator==(const Register&, const Register&) = default;
};

enum class CircuitErrorKind {
  IndexOutOfRange,
  DuplicateQubit,
  OverlappingRegisters,
  WidthMismatch,
  RegisterCollision,
  UnknownRegister,
  InvalidMap,
};

std::string_view to_string(CircuitErrorKind kind) noexcept;

class CircuitError : public std::runtime_error {
 public:
  CircuitError(CircuitErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  CircuitErrorKind kind() const noexcept { return kind_; }

 private:
  CircuitErrorKind kind_;
};

/// Ordered reversible gate list over `width` qubits with named registers.
///
/// Register ranges are pairwise disjoint or identical; a register whose range
/// equals an earlier one's is an alias for it (e.g. `result`). The mutating
/// members check every invariant and throw CircuitError; `from_parts` skips
/// the checks so externally produced data can be audited with `validate`.
class Circuit {
 public:
  explicit Circuit(Qubit width = 0) : width_(width) {}

  static Circuit from_parts(Qubit width, std::vector<Register> registers,
                            std::vector<Gate> gates);

  Qubit width() const noexcept { return width_; }
  const std::vector<Register>& registers() const noexcept { return registers_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  const Register& reg(std::string_view name) const;
  const Register* find_register(std::string_view name) const noexcept;

  Circuit& add_register(std::string name, Qubit offset, Qubit length);
  Circuit& append(Gate gate);

  Circuit& x(Qubit target) { return append(gates::X{target}); }
  Circuit& cx(Qubit control, Qubit target) { return append(gates::Cx{control, target}); }
  Circuit& swap(Qubit a, Qubit b) { return append(gates::Swap{a, b}); }
  Circuit& cswap(Qubit control, Qubit a, Qubit b) { return append(gates::CSwap{control, a, b}); }
  Circuit& ccx(Qubit c0, Qubit c1, Qubit target) {
    return append(gates::Mcx{{closed(c0), closed(c1)}, target});
  }
  Circuit& mcx(std::vector<Control> controls, Qubit target) {
    return append(gates::Mcx{std::move(controls), target});
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  Qubit width_ = 0;
  std::vector<Register> registers_;
  std::vector<Gate> gates_;
};

struct ValidationIssue {
  CircuitErrorKind kind;
  /// Offending gate, absent for register problems.
  std::optional<std::size_t> gate_index;
  std::string message;
};

/// First violated invariant, or nullopt when the circuit is well formed.
std::optional<ValidationIssue> validate(const Circuit& c);
/// Throws CircuitError describing the first violation.
void require_valid(const Circuit& c);

/// Same width and registers, gates in reverse order. Every gate kind in the
/// IR is self-inverse.
Circuit inverse(const Circuit& c);

/// Gates of `a` followed by gates of `b`. Register maps are merged; a name
/// present in both must denote the same range.
Circuit compose(const Circuit& a, const Circuit& b);

/// Relabels `sub` into a circuit of `host_width` qubits; qubit i of `sub`
/// becomes qubit_map[i]. Registers whose image is still contiguous and
/// ascending are carried over, others are dropped.
Circuit embed(const Circuit& sub, Qubit host_width, std::span<const Qubit> qubit_map);

/// Same gates, no registers.
Circuit strip_registers(const Circuit& c);

/// ASAP layer count; every gate costs one step regardless of arity.
std::size_t depth(const Circuit& c);

using GateCounts = std::map<GateKind, std::size_t>;
/// Tally per gate kind; kinds with zero occurrences are omitted.
GateCounts gate_counts(const Circuit& c);
/// Count for one kind, zero when absent.
std::size_t count_of(const GateCounts& counts, GateKind kind) noexcept;

}  // namespace qbm
