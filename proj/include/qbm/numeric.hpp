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
#include <stdexcept>
#include <string>
#include <vector>

#include "qbm/bitvec.hpp"

namespace qbm {

/// Raised when an integer does not fit the requested two's-complement width.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Largest width accepted for integer-valued words; products of two such
/// words still fit in int64.
inline constexpr std::size_t kMaxWordWidth = 32;

/// Signed integer tagged with its two's-complement width.
class SignedWord {
 public:
  /// Throws RangeError unless -2^(width-1) <= value <= 2^(width-1)-1.
  SignedWord(std::int64_t value, std::size_t width);

  static bool fits(std::int64_t value, std::size_t width) noexcept;
  static std::int64_t min_value(std::size_t width) noexcept;
  static std::int64_t max_value(std::size_t width) noexcept;

  std::int64_t value() const noexcept { return value_; }
  std::size_t width() const noexcept { return width_; }
  BitVec bits() const;

  friend bool operator==(const SignedWord&, const SignedWord&) = default;

 private:
  std::int64_t value_;
  std::size_t width_;
};

BitVec to_twos_complement(std::int64_t value, std::size_t width);
/// Width must be in [1, 64].
std::int64_t from_twos_complement(const BitVec& v);

BitVec ones_complement(const BitVec& v);
/// (a + b + carry_in) mod 2^width. Widths must match.
BitVec add_mod(const BitVec& a, const BitVec& b, bool carry_in = false);
/// (a - b) mod 2^width, computed as a + ~b + 1.
BitVec sub_mod(const BitVec& a, const BitVec& b);

struct ShiftedRegisters {
  BitVec a;
  BitVec q;
  bool qm1;

  friend bool operator==(const ShiftedRegisters&, const ShiftedRegisters&) = default;
};

/// Shifts the concatenation A:Q:Q_-1 right by one, replicating A's sign bit.
ShiftedRegisters arithmetic_shift_right(const BitVec& a, const BitVec& q, bool qm1);

/// Radix-2 Booth recoding of a multiplier. digits()[i] in {-1, 0, +1} carries
/// weight 2^i, with digit i = b[i-1] - b[i] and b[-1] = 0.
class BoothDigits {
 public:
  BoothDigits() = default;
  explicit BoothDigits(std::vector<int> digits);

  std::size_t width() const noexcept { return digits_.size(); }
  int operator[](std::size_t i) const { return digits_.at(i); }
  const std::vector<int>& digits() const noexcept { return digits_; }

  /// Sum of digit[i] * 2^i. Requires width() <= 63.
  std::int64_t value() const;
  /// MSB-first, '0', '1' and 'N' for -1.
  std::string to_string() const;

  friend bool operator==(const BoothDigits&, const BoothDigits&) = default;

 private:
  std::vector<int> digits_;
};

BoothDigits booth_recode(const BitVec& v);

enum class BoothAction { Initial, Subtract, Add, Shift };

const char* to_string(BoothAction action) noexcept;

/// Register snapshot of the sequential Booth multiplier.
struct BoothMachineState {
  BitVec a;
  BitVec q;
  bool qm1 = false;
  BitVec m;
  std::size_t cycle = 0;
  BoothAction action = BoothAction::Initial;

  friend bool operator==(const BoothMachineState&, const BoothMachineState&) = default;
};

struct BoothRun {
  SignedWord product;
  std::vector<BoothMachineState> trace;
};

/// Sequential Booth multiplication: `multiplier` goes into Q, `multiplicand`
/// into M, A starts at zero. The trace opens with the initial row (cycle 0),
/// then for each of the n cycles holds the optional add/subtract row followed
/// by the shift row.
BoothRun classical_booth_multiply(const SignedWord& multiplier, const SignedWord& multiplicand);

/// Fixed-width text table with columns A, Q, Q-1, M, Action.
std::string render_trace(const std::vector<BoothMachineState>& trace);

}  // namespace qbm
