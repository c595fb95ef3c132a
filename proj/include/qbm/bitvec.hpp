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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qbm {

/// Fixed-width ordered binary word. Index 0 is the least significant bit;
/// text conversions are MSB-first, the way registers are usually printed.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t width) : bits_(width, 0) {}

  /// Low `width` bits of `value`. Bits above 64 are zero.
  static BitVec from_uint(std::uint64_t value, std::size_t width);
  /// Parses a string of '0'/'1', most significant bit first.
  static BitVec from_string(std::string_view msb_first);

  std::size_t width() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { set(i, !test(i)); }
  /// Unchecked variants for the simulator's inner loop.
  void set_unchecked(std::size_t i, bool value) noexcept { bits_[i] = value ? 1 : 0; }
  void flip_unchecked(std::size_t i) noexcept { bits_[i] ^= 1; }
  void swap_bits(std::size_t a, std::size_t b) noexcept { std::swap(bits_[a], bits_[b]); }

  bool msb() const;
  std::size_t popcount() const noexcept;

  /// Unsigned value; requires width() <= 64.
  std::uint64_t to_uint() const;
  std::string to_string() const;

  BitVec slice(std::size_t offset, std::size_t length) const;
  void assign(std::size_t offset, const BitVec& part);

  friend auto operator<=>(const BitVec&, const BitVec&) = default;
  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace qbm
