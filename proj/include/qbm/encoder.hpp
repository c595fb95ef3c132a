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
#include <stdexcept>
#include <vector>

#include "qbm/bitvec.hpp"
#include "qbm/circuit.hpp"
#include "qbm/numeric.hpp"

namespace qbm {

/// Two-qubit Gray code for one Booth digit: 00 -> 0, 01 -> +1, 10 -> -1.
/// `hi` is the x' qubit, `lo` the x'' qubit. 11 is not a valid code.
struct DigitCode {
  bool hi = false;
  bool lo = false;

  friend bool operator==(const DigitCode&, const DigitCode&) = default;
};

class InvalidCodeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

int decode_digit(DigitCode code);
DigitCode encode_digit(int digit);

/// Where the Booth encoder keeps its inputs and outputs.
///
/// Registers, in qubit order: `x` (n inputs, x_i at offset i), `code<i>`
/// (the x' qubit of digit i), `copy<i>` for i < n-1 (fan-out of x_i) and
/// `qm1` (the implicit Q_-1 = 0 line). After encoding, digit i's x'' sits on
/// the wire that carried x_{i-1}, or on `qm1` for digit 0.
struct EncoderLayout {
  std::size_t n = 0;
  std::vector<Qubit> inputs;  // x_0 .. x_{n-1}
  std::vector<Qubit> hi;      // x' of digit i
  std::vector<Qubit> lo;      // x'' of digit i
  std::vector<Qubit> copies;  // copy of x_i, i < n-1
  Qubit qm1 = 0;

  Qubit width() const noexcept { return static_cast<Qubit>(3 * n); }
  /// Every qubit that must start and end at |0>.
  std::vector<Qubit> ancillas() const;
  /// Reads digit i's code from a state of the encoder (or an enclosing
  /// circuit laid out with this layout at the same offsets).
  DigitCode code(const BitVec& state, std::size_t i) const;
};

/// Three qubits: 0 carries x_{i+1} (preserved), 1 is a |0> ancilla that
/// becomes x', 2 carries x_i and becomes x''. CNOT(0 -> 2) then CSWAP(0; 1, 2).
Circuit build_pair_encoder();

struct BoothEncoder {
  Circuit circuit;
  EncoderLayout layout;
};

/// Cascade of n pair encoders, most significant block first. Each block
/// fans x_{i-1} out into the next block's copy ancilla before consuming it.
BoothEncoder build_booth_encoder(std::size_t n);

/// Reads all n digit codes and decodes them.
BoothDigits decode_digits(const BitVec& state, const EncoderLayout& layout);

/// Closed-form gate counts of build_booth_encoder(n): (n-1) fan-out CNOTs
/// plus one CNOT and one CSWAP per block.
GateCounts expected_encoder_counts(std::size_t n);

}  // namespace qbm
