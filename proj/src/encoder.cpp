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

#include "qbm/encoder.hpp"

#include <string>

namespace qbm {

int decode_digit(DigitCode code) {
  if (code.hi && code.lo) throw InvalidCodeError("digit code 11 is not a Booth digit");
  if (code.hi) return -1;
  if (code.lo) return 1;
  return 0;
}

DigitCode encode_digit(int digit) {
  switch (digit) {
    case 0: return {false, false};
    case 1: return {false, true};
    case -1: return {true, false};
    default: throw std::invalid_argument("Booth digit " + std::to_string(digit) + " outside {-1, 0, 1}");
  }
}

std::vector<Qubit> EncoderLayout::ancillas() const {
  std::vector<Qubit> out(hi);
  out.insert(out.end(), copies.begin(), copies.end());
  out.push_back(qm1);
  return out;
}

DigitCode EncoderLayout::code(const BitVec& state, std::size_t i) const {
  return {state.test(hi.at(i)), state.test(lo.at(i))};
}

Circuit build_pair_encoder() {
  Circuit c(3);
  c.cx(0, 2);
  c.cswap(0, 1, 2);
  return c;
}

BoothEncoder build_booth_encoder(std::size_t n) {
  if (n < 1) throw std::invalid_argument("Booth encoder needs n >= 1");

  EncoderLayout layout;
  layout.n = n;
  const auto q = [](std::size_t v) { return static_cast<Qubit>(v); };
  for (std::size_t i = 0; i < n; ++i) layout.inputs.push_back(q(i));
  for (std::size_t i = 0; i < n; ++i) layout.hi.push_back(q(n + i));
  for (std::size_t i = 0; i + 1 < n; ++i) layout.copies.push_back(q(2 * n + i));
  layout.qm1 = q(3 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    layout.lo.push_back(i == 0 ? layout.qm1 : layout.inputs[i - 1]);
  }

  Circuit c(layout.width());
  c.add_register("x", 0, q(n));
  for (std::size_t i = 0; i < n; ++i) c.add_register("code" + std::to_string(i), layout.hi[i], 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    c.add_register("copy" + std::to_string(i), layout.copies[i], 1);
  }
  c.add_register("qm1", layout.qm1, 1);

  // Block i encodes the pair (x_i, x_{i-1}) into digit i. Its control line is
  // x_{n-1} itself for the top block and the fanned-out copy below that.
  for (std::size_t k = n; k-- > 0;) {
    const Qubit control = k == n - 1 ? layout.inputs[k] : layout.copies[k];
    if (k >= 1) c.cx(layout.inputs[k - 1], layout.copies[k - 1]);
    c.cx(control, layout.lo[k]);
    c.cswap(control, layout.hi[k], layout.lo[k]);
  }
  return {std::move(c), std::move(layout)};
}

BoothDigits decode_digits(const BitVec& state, const EncoderLayout& layout) {
  std::vector<int> digits(layout.n);
  for (std::size_t i = 0; i < layout.n; ++i) digits[i] = decode_digit(layout.code(state, i));
  return BoothDigits(std::move(digits));
}

GateCounts expected_encoder_counts(std::size_t n) {
  return {{GateKind::Cx, 2 * n - 1}, {GateKind::CSwap, n}};
}

}  // namespace qbm
