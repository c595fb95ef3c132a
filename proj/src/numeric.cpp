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

#include "qbm/numeric.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace qbm {

namespace {

void require_word_width(std::size_t width) {
  if (width == 0 || width > kMaxWordWidth) {
    throw RangeError("word width " + std::to_string(width) + " outside [1, " +
                     std::to_string(kMaxWordWidth) + "]");
  }
}

}  // namespace

SignedWord::SignedWord(std::int64_t value, std::size_t width) : value_(value), width_(width) {
  require_word_width(width);
  if (!fits(value, width)) {
    throw RangeError(std::to_string(value) + " does not fit in " + std::to_string(width) +
                     "-bit two's complement [" + std::to_string(min_value(width)) + ", " +
                     std::to_string(max_value(width)) + "]");
  }
}

std::int64_t SignedWord::min_value(std::size_t width) noexcept {
  return -(std::int64_t{1} << (width - 1));
}

std::int64_t SignedWord::max_value(std::size_t width) noexcept {
  return (std::int64_t{1} << (width - 1)) - 1;
}

bool SignedWord::fits(std::int64_t value, std::size_t width) noexcept {
  if (width == 0 || width > 64) return false;
  if (width == 64) return true;
  return value >= min_value(width) && value <= max_value(width);
}

BitVec SignedWord::bits() const { return to_twos_complement(value_, width_); }

BitVec to_twos_complement(std::int64_t value, std::size_t width) {
  if (!SignedWord::fits(value, width)) {
    throw RangeError(std::to_string(value) + " does not fit in " + std::to_string(width) +
                     "-bit two's complement");
  }
  return BitVec::from_uint(static_cast<std::uint64_t>(value), width);
}

std::int64_t from_twos_complement(const BitVec& v) {
  const std::size_t n = v.width();
  if (n == 0 || n > 64) {
    throw RangeError("two's-complement width " + std::to_string(n) + " outside [1, 64]");
  }
  const std::uint64_t raw = v.to_uint();
  if (n == 64 || !v.msb()) return static_cast<std::int64_t>(raw);
  // Modular wrap; the conversion back to signed is exact in C++20.
  return static_cast<std::int64_t>(raw - (std::uint64_t{1} << n));
}

BitVec ones_complement(const BitVec& v) {
  BitVec out(v.width());
  for (std::size_t i = 0; i < v.width(); ++i) out.set_unchecked(i, !v[i]);
  return out;
}

BitVec add_mod(const BitVec& a, const BitVec& b, bool carry_in) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("add_mod width mismatch: " + std::to_string(a.width()) + " vs " +
                                std::to_string(b.width()));
  }
  BitVec sum(a.width());
  bool carry = carry_in;
  for (std::size_t i = 0; i < a.width(); ++i) {
    const bool x = a[i];
    const bool y = b[i];
    sum.set_unchecked(i, x ^ y ^ carry);
    carry = (x && y) || (carry && (x ^ y));
  }
  return sum;
}

BitVec sub_mod(const BitVec& a, const BitVec& b) { return add_mod(a, ones_complement(b), true); }

ShiftedRegisters arithmetic_shift_right(const BitVec& a, const BitVec& q, bool qm1) {
  if (a.width() != q.width()) {
    throw std::invalid_argument("arithmetic_shift_right: A and Q widths differ");
  }
  const std::size_t n = a.width();
  if (n == 0) return {a, q, qm1};

  ShiftedRegisters out{BitVec(n), BitVec(n), q[0]};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out.q.set_unchecked(i, q[i + 1]);
    out.a.set_unchecked(i, a[i + 1]);
  }
  out.q.set_unchecked(n - 1, a[0]);
  out.a.set_unchecked(n - 1, a[n - 1]);
  return out;
}

BoothDigits::BoothDigits(std::vector<int> digits) : digits_(std::move(digits)) {
  for (int d : digits_) {
    if (d < -1 || d > 1) {
      throw std::invalid_argument("Booth digit " + std::to_string(d) + " outside {-1, 0, 1}");
    }
  }
}

std::int64_t BoothDigits::value() const {
  if (digits_.size() > 63) {
    throw RangeError("BoothDigits of width " + std::to_string(digits_.size()) +
                     " cannot be summed in int64");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    total += static_cast<std::int64_t>(digits_[i]) * (std::int64_t{1} << i);
  }
  return total;
}

std::string BoothDigits::to_string() const {
  std::string s;
  s.reserve(digits_.size());
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    s.push_back(*it == 0 ? '0' : (*it > 0 ? '1' : 'N'));
  }
  return s;
}

BoothDigits booth_recode(const BitVec& v) {
  std::vector<int> digits(v.width());
  bool prev = false;  // b[-1]
  for (std::size_t i = 0; i < v.width(); ++i) {
    digits[i] = static_cast<int>(prev) - static_cast<int>(v[i]);
    prev = v[i];
  }
  return BoothDigits(std::move(digits));
}

const char* to_string(BoothAction action) noexcept {
  switch (action) {
    case BoothAction::Initial: return "Initial Values";
    case BoothAction::Subtract: return "A <- A-M";
    case BoothAction::Add: return "A <- A+M";
    case BoothAction::Shift: return "Shift";
  }
  return "?";
}

BoothRun classical_booth_multiply(const SignedWord& multiplier, const SignedWord& multiplicand) {
  if (multiplier.width() != multiplicand.width()) {
    throw std::invalid_argument("operands must share one width");
  }
  const std::size_t n = multiplier.width();

  // A and M carry one guard bit above the n displayed bits, so A - M stays
  // exact for M = -2^(n-1).
  BitVec a(n + 1);
  const BitVec m = to_twos_complement(multiplicand.value(), n + 1);
  BitVec q = multiplier.bits();
  bool qm1 = false;

  std::vector<BoothMachineState> trace;
  trace.reserve(2 * n + 1);
  auto snapshot = [&](std::size_t cycle, BoothAction action) {
    trace.push_back({a.slice(0, n), q, qm1, multiplicand.bits(), cycle, action});
  };
  snapshot(0, BoothAction::Initial);

  for (std::size_t cycle = 1; cycle <= n; ++cycle) {
    const bool q0 = q[0];
    if (q0 && !qm1) {
      a = sub_mod(a, m);
      snapshot(cycle, BoothAction::Subtract);
    } else if (!q0 && qm1) {
      a = add_mod(a, m);
      snapshot(cycle, BoothAction::Add);
    }
    // Shift A:Q:Q_-1 with the guard bit acting as A's sign.
    qm1 = q[0];
    for (std::size_t i = 0; i + 1 < n; ++i) q.set_unchecked(i, q[i + 1]);
    q.set_unchecked(n - 1, a[0]);
    for (std::size_t i = 0; i < n; ++i) a.set_unchecked(i, a[i + 1]);
    snapshot(cycle, BoothAction::Shift);
  }

  BitVec aq(2 * n);
  aq.assign(0, q);
  aq.assign(n, a.slice(0, n));
  return {SignedWord(from_twos_complement(aq), 2 * n), std::move(trace)};
}

std::string render_trace(const std::vector<BoothMachineState>& trace) {
  std::size_t n = 1;
  if (!trace.empty()) n = std::max<std::size_t>(trace.front().a.width(), 1);
  const int reg = static_cast<int>(std::max<std::size_t>(n, 3)) + 2;

  std::ostringstream os;
  os << std::left << std::setw(reg) << "A" << std::setw(reg) << "Q" << std::setw(5) << "Q-1"
     << std::setw(reg) << "M" << "Action\n";
  for (const auto& row : trace) {
    os << std::setw(reg) << row.a.to_string() << std::setw(reg) << row.q.to_string()
       << std::setw(5) << (row.qm1 ? "1" : "0") << std::setw(reg) << row.m.to_string()
       << to_string(row.action);
    if (row.cycle > 0) os << "  (cycle " << row.cycle << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace qbm
