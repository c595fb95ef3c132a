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
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qbm {

/// First pair on which the circuit disagreed with the reference.
struct Counterexample {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t expected = 0;
  std::int64_t circuit = 0;
  std::int64_t classical = 0;
  bool clean = false;
};

struct VerifyReport {
  std::size_t n = 0;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::optional<Counterexample> first_failure;

  bool ok() const noexcept { return total == passed; }
  /// "<passed>/<total> pass".
  std::string summary() const;
};

/// A pair passes when the QBM product equals x*y and the sequential Booth
/// product, and the circuit left X, Y, encoder ancillas and carries clean.
/// Results and the reported counterexample do not depend on `workers`.
VerifyReport verify_pairs(std::size_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                          std::size_t workers = 1);

/// Every (x, y) in the n-bit signed range, x-major.
VerifyReport verify_exhaustive(std::size_t n, std::size_t workers = 1);

/// `samples` pairs drawn from a mt19937_64 seeded with `seed`.
VerifyReport verify_random(std::size_t n, std::size_t samples, std::uint64_t seed,
                           std::size_t workers = 1);

std::vector<std::pair<std::int64_t, std::int64_t>> random_pairs(std::size_t n, std::size_t samples,
                                                                std::uint64_t seed);

}  // namespace qbm
