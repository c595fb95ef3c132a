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

#include "qbm/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace qbm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool controls_satisfied(const std::vector<Control>& controls, const BitVec& s) noexcept {
  for (const auto& c : controls) {
    if (s[c.qubit] != (c.polarity == Polarity::Closed)) return false;
  }
  return true;
}

Qubit highest_qubit(const Gate& gate) noexcept {
  return std::visit(Overloaded{
                        [](const gates::X& g) { return g.target; },
                        [](const gates::Cx& g) { return std::max(g.control, g.target); },
                        [](const gates::Swap& g) { return std::max(g.a, g.b); },
                        [](const gates::CSwap& g) { return std::max({g.control, g.a, g.b}); },
                        [](const gates::Mcx& g) {
                          Qubit top = g.target;
                          for (const auto& c : g.controls) top = std::max(top, c.qubit);
                          return top;
                        },
                    },
                    gate);
}

}  // namespace

void apply_gate(const Gate& gate, BitVec& s) {
  if (highest_qubit(gate) >= s.width()) {
    throw SimulationError("gate touches qubit " + std::to_string(highest_qubit(gate)) +
                          " of a " + std::to_string(s.width()) + "-qubit state");
  }
  std::visit(Overloaded{
                 [&](const gates::X& g) { s.flip_unchecked(g.target); },
                 [&](const gates::Cx& g) {
                   if (s[g.control]) s.flip_unchecked(g.target);
                 },
                 [&](const gates::Swap& g) { s.swap_bits(g.a, g.b); },
                 [&](const gates::CSwap& g) {
                   if (s[g.control]) s.swap_bits(g.a, g.b);
                 },
                 [&](const gates::Mcx& g) {
                   if (controls_satisfied(g.controls, s)) s.flip_unchecked(g.target);
                 },
             },
             gate);
}

BitVec run_basis(const Circuit& c, const BitVec& input) {
  if (input.width() != c.width()) {
    throw SimulationError("input width " + std::to_string(input.width()) +
                          " does not match circuit width " + std::to_string(c.width()));
  }
  BitVec s = input;
  for (const auto& g : c.gates()) apply_gate(g, s);
  return s;
}

QuantumState::QuantumState(std::size_t width, Terms terms) : width_(width) {
  for (auto& [key, amp] : terms) {
    if (key.width() != width) {
      throw SimulationError("basis state of width " + std::to_string(key.width()) +
                            " in a state of width " + std::to_string(width));
    }
    if (std::abs(amp) >= kPruneThreshold) terms_.emplace(key, amp);
  }
  const double deviation = std::abs(norm_squared() - 1.0);
  if (deviation > kStateNormTolerance) {
    throw SimulationError("state norm^2 deviates from 1 by " + std::to_string(deviation));
  }
}

QuantumState QuantumState::basis(const BitVec& b) { return QuantumState(b.width(), {{b, 1.0}}); }

QuantumState QuantumState::uniform(const std::vector<BitVec>& states) {
  if (states.empty()) throw SimulationError("uniform superposition of no states");
  const double amp = 1.0 / std::sqrt(static_cast<double>(states.size()));
  Terms terms;
  for (const auto& s : states) {
    if (!terms.emplace(s, amp).second) {
      throw SimulationError("duplicate basis state " + s.to_string() + " in superposition");
    }
  }
  return QuantumState(states.front().width(), std::move(terms));
}

double QuantumState::norm_squared() const noexcept {
  double total = 0.0;
  for (const auto& [_, amp] : terms_) total += std::norm(amp);
  return total;
}

Amplitude QuantumState::amplitude(const BitVec& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Amplitude{} : it->second;
}

QuantumState run_state(const Circuit& c, const QuantumState& s) {
  if (s.width() != c.width()) {
    throw SimulationError("state width " + std::to_string(s.width()) +
                          " does not match circuit width " + std::to_string(c.width()));
  }
  QuantumState::Terms out;
  for (const auto& [key, amp] : s.terms()) {
    auto [_, inserted] = out.emplace(run_basis(c, key), amp);
    if (!inserted) throw SimulationError("circuit mapped two basis states onto one");
  }
  return QuantumState(s.width(), std::move(out));
}

std::vector<std::uint64_t> as_permutation(const Circuit& c, std::size_t limit,
                                          std::size_t workers) {
  if (c.width() > limit || c.width() >= 63) {
    throw SimulationError("width " + std::to_string(c.width()) + " exceeds permutation limit " +
                          std::to_string(limit));
  }
  const std::uint64_t size = std::uint64_t{1} << c.width();
  std::vector<std::uint64_t> table(size);

  auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      table[i] = run_basis(c, BitVec::from_uint(i, c.width())).to_uint();
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, static_cast<std::size_t>(size));
  if (workers == 1) {
    fill(0, size);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (size + workers - 1) / workers;
    for (std::uint64_t lo = 0; lo < size; lo += chunk) {
      pool.emplace_back(fill, lo, std::min(size, lo + chunk));
    }
  }

  std::vector<bool> hit(size, false);
  for (std::uint64_t i = 0; i < size; ++i) {
    if (hit[table[i]]) {
      throw SimulationError("circuit is not a bijection: basis state " + std::to_string(i) +
                            " collides at " + std::to_string(table[i]));
    }
    hit[table[i]] = true;
  }
  return table;
}

bool is_identity(const std::vector<std::uint64_t>& table) noexcept {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] != i) return false;
  }
  return true;
}

}  // namespace qbm
