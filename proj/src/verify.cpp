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

#include "qbm/verify.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "qbm/multiplier.hpp"
#include "qbm/numeric.hpp"

namespace qbm {

std::string VerifyReport::summary() const {
  return std::to_string(passed) + "/" + std::to_string(total) + " pass";
}

VerifyReport verify_pairs(std::size_t n,
                          const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                          std::size_t workers) {
  // Build before fan-out so workers only read the cache.
  (void)cached_qbm(n);

  std::vector<std::optional<Counterexample>> failures(pairs.size());
  auto check = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      const SignedWord x(pairs[k].first, n);
      const SignedWord y(pairs[k].second, n);
      const auto quantum = qbm_multiply(x, y);
      const auto classical = classical_booth_multiply(x, y).product.value();
      const std::int64_t expected = x.value() * y.value();
      const bool clean = quantum.cleanliness.ok();
      if (quantum.product.value() != expected || classical != expected || !clean) {
        failures[k] = Counterexample{x.value(), y.value(), expected, quantum.product.value(),
                                     classical, clean};
      }
    }
  };

  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(pairs.size(), 1));
  if (workers == 1) {
    check(0, pairs.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (pairs.size() + workers - 1) / workers;
    for (std::size_t lo = 0; lo < pairs.size(); lo += chunk) {
      pool.emplace_back(check, lo, std::min(pairs.size(), lo + chunk));
    }
  }

  VerifyReport report;
  report.n = n;
  report.total = pairs.size();
  for (const auto& f : failures) {
    if (!f) {
      ++report.passed;
    } else if (!report.first_failure) {
      report.first_failure = f;
    }
  }
  return report;
}

VerifyReport verify_exhaustive(std::size_t n, std::size_t workers) {
  if (n < 1 || n > 12) throw std::invalid_argument("exhaustive verification needs 1 <= n <= 12");
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  const auto lo = SignedWord::min_value(n);
  const auto hi = SignedWord::max_value(n);
  pairs.reserve(std::size_t{1} << (2 * n));
  for (auto x = lo; x <= hi; ++x) {
    for (auto y = lo; y <= hi; ++y) pairs.emplace_back(x, y);
  }
  return verify_pairs(n, pairs, workers);
}

std::vector<std::pair<std::int64_t, std::int64_t>> random_pairs(std::size_t n, std::size_t samples,
                                                                std::uint64_t seed) {
  if (n < 1 || n > kMaxWordWidth) throw std::invalid_argument("operand width out of range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(SignedWord::min_value(n),
                                                   SignedWord::max_value(n));
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs(samples);
  for (auto& p : pairs) {
    p.first = dist(rng);
    p.second = dist(rng);
  }
  return pairs;
}

VerifyReport verify_random(std::size_t n, std::size_t samples, std::uint64_t seed,
                           std::size_t workers) {
  return verify_pairs(n, random_pairs(n, samples, seed), workers);
}

}  // namespace qbm
