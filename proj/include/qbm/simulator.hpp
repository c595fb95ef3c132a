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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qbm/bitvec.hpp"
#include "qbm/circuit.hpp"

namespace qbm {

using Amplitude = std::complex<double>;

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tolerance on |norm^2 - 1| accepted when building a state.
inline constexpr double kStateNormTolerance = 1e-9;
/// Terms below this magnitude are dropped on construction.
inline constexpr double kPruneThreshold = 1e-15;

/// Applies one gate in place. The state must cover every qubit of the gate.
void apply_gate(const Gate& gate, BitVec& state);

/// Runs `c` on a computational-basis input of width c.width().
BitVec run_basis(const Circuit& c, const BitVec& input);

/// Sparse superposition over computational-basis states of one width.
class QuantumState {
 public:
  using Terms = std::map<BitVec, Amplitude>;

  /// Throws SimulationError on mixed widths or a norm off by more than
  /// kStateNormTolerance. Near-zero terms are pruned.
  QuantumState(std::size_t width, Terms terms);

  static QuantumState basis(const BitVec& b);
  /// Equal-weight superposition of the given distinct basis states.
  static QuantumState uniform(const std::vector<BitVec>& states);

  std::size_t width() const noexcept { return width_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  double norm_squared() const noexcept;
  /// Zero when `b` is not present.
  Amplitude amplitude(const BitVec& b) const;

 private:
  std::size_t width_;
  Terms terms_;
};

/// Maps each term through run_basis; amplitudes are carried unchanged.
QuantumState run_state(const Circuit& c, const QuantumState& s);

inline constexpr std::size_t kDefaultPermutationLimit = 12;

/// table[i] = run_basis(c, i) with bit k of i on qubit k. Throws
/// SimulationError when width > limit or when the table is not a bijection.
/// `workers` > 1 splits the input range across threads.
std::vector<std::uint64_t> as_permutation(const Circuit& c,
                                          std::size_t limit = kDefaultPermutationLimit,
                                          std::size_t workers = 1);

bool is_identity(const std::vector<std::uint64_t>& table) noexcept;

}  // namespace qbm
