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

#include "qbm/bitvec.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbm {

BitVec BitVec::from_uint(std::uint64_t value, std::size_t width) {
  BitVec v(width);
  for (std::size_t i = 0; i < width && i < 64; ++i) {
    v.bits_[i] = static_cast<std::uint8_t>((value >> i) & 1U);
  }
  return v;
}

BitVec BitVec::from_string(std::string_view msb_first) {
  BitVec v(msb_first.size());
  for (std::size_t k = 0; k < msb_first.size(); ++k) {
    const char c = msb_first[k];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may only contain '0' and '1': \"" +
                                  std::string(msb_first) + "\"");
    }
    v.bits_[msb_first.size() - 1 - k] = c == '1' ? 1 : 0;
  }
  return v;
}

bool BitVec::test(std::size_t i) const {
  if (i >= bits_.size()) {
    throw std::out_of_range("bit index " + std::to_string(i) + " outside width " +
                            std::to_string(bits_.size()));
  }
  return bits_[i] != 0;
}

void BitVec::set(std::size_t i, bool value) {
  if (i >= bits_.size()) {
    throw std::out_of_range("bit index " + std::to_string(i) + " outside width " +
                            std::to_string(bits_.size()));
  }
  bits_[i] = value ? 1 : 0;
}

bool BitVec::msb() const {
  if (bits_.empty()) throw std::out_of_range("msb of an empty BitVec");
  return bits_.back() != 0;
}

std::size_t BitVec::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t BitVec::to_uint() const {
  if (bits_.size() > 64) {
    throw std::out_of_range("BitVec of width " + std::to_string(bits_.size()) +
                            " does not fit in 64 bits");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    value |= static_cast<std::uint64_t>(bits_[i]) << i;
  }
  return value;
}

std::string BitVec::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[bits_.size() - 1 - i] = '1';
  }
  return s;
}

BitVec BitVec::slice(std::size_t offset, std::size_t length) const {
  if (offset > bits_.size() || length > bits_.size() - offset) {
    throw std::out_of_range("slice [" + std::to_string(offset) + ", +" + std::to_string(length) +
                            ") outside width " + std::to_string(bits_.size()));
  }
  BitVec out(length);
  std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(offset), length, out.bits_.begin());
  return out;
}

void BitVec::assign(std::size_t offset, const BitVec& part) {
  if (offset > bits_.size() || part.width() > bits_.size() - offset) {
    throw std::out_of_range("assign of width " + std::to_string(part.width()) + " at " +
                            std::to_string(offset) + " outside width " +
                            std::to_string(bits_.size()));
  }
  std::copy(part.bits_.begin(), part.bits_.end(),
            bits_.begin() + static_cast<std::ptrdiff_t>(offset));
}

}  // namespace qbm
