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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "qbm/encoder.hpp"
#include "qbm/multiplier.hpp"
#include "qbm/simulator.hpp"

using namespace qbm;
using qbm::oracle::eval;
using qbm::oracle::random_circuit;

TEST(RunBasis, PairEncoderTruthTable) {
  // Qubit 0 carries x_{i+1}, qubit 2 carries x_i; outputs are (x', x'') on (1, 2).
  struct Row {
    bool next, cur;
    bool hi, lo;
    int digit;
  };
  const Row rows[] = {
      {false, false, false, false, 0},
      {false, true, false, true, +1},
      {true, false, true, false, -1},
      {true, true, false, false, 0},
  };
  const Circuit pe = build_pair_encoder();
  for (const auto& r : rows) {
    BitVec in(3);
    in.set(0, r.next);
    in.set(2, r.cur);
    const BitVec out = run_basis(pe, in);
    EXPECT_EQ(out[0], r.next);
    EXPECT_EQ(out[1], r.hi);
    EXPECT_EQ(out[2], r.lo);
    EXPECT_EQ(decode_digit({out[1], out[2]}), r.digit);
    EXPECT_EQ(r.digit, static_cast<int>(r.cur) - static_cast<int>(r.next));
  }
}

TEST(RunBasis, MatchesReferenceEvaluator) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Qubit w = 4 + trial % 7;
    const Circuit c = random_circuit(rng, w, 20);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << w); s += 1 + trial % 3) {
      ASSERT_EQ(run_basis(c, BitVec::from_uint(s, w)).to_uint(), eval(c, s));
    }
  }
}

TEST(RunBasis, WidthMismatch) {
  EXPECT_THROW(run_basis(build_pair_encoder(), BitVec(4)), SimulationError);
  BitVec two(2);
  EXPECT_THROW(apply_gate(gates::X{2}, two), SimulationError);
}

TEST(Permutation, PairEncoderTable) {
  const auto table = as_permutation(build_pair_encoder());
  ASSERT_EQ(table.size(), 8u);
  for (std::uint64_t s = 0; s < 8; ++s) EXPECT_EQ(table[s], eval(build_pair_encoder(), s));
  EXPECT_FALSE(is_identity(table));
}

TEST(Permutation, IsABijection) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto table = as_permutation(random_circuit(rng, 8, 30));
    std::vector<bool> hit(table.size(), false);
    for (auto v : table) {
      ASSERT_LT(v, table.size());
      ASSERT_FALSE(hit[v]);
      hit[v] = true;
    }
  }
}

TEST(Permutation, WorkersAgree) {
  std::mt19937_64 rng(3);
  const Circuit c = random_circuit(rng, 10, 40);
  EXPECT_EQ(as_permutation(c, 12, 1), as_permutation(c, 12, 4));
}

TEST(Permutation, CircuitThenInverseIsIdentity) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = random_circuit(rng, 7, 25);
    EXPECT_TRUE(is_identity(as_permutation(compose(c, inverse(c)))));
  }
  EXPECT_TRUE(is_identity(as_permutation(Circuit(3))));
}

TEST(Permutation, WidthLimit) {
  EXPECT_THROW(as_permutation(Circuit(13)), SimulationError);
  EXPECT_NO_THROW(as_permutation(Circuit(13), 13));
  EXPECT_THROW(as_permutation(Circuit(4), 3), SimulationError);
}

TEST(QuantumState, NormIsChecked) {
  QuantumState::Terms bad{{BitVec::from_string("00"), 1.0}, {BitVec::from_string("01"), 1.0}};
  EXPECT_THROW(QuantumState(2, bad), SimulationError);
  QuantumState::Terms mixed{{BitVec::from_string("0"), 1.0}};
  EXPECT_THROW(QuantumState(2, mixed), SimulationError);
  EXPECT_THROW(QuantumState(2, {}), SimulationError);

  const double r = 1.0 / std::sqrt(2.0);
  QuantumState::Terms good{{BitVec::from_string("00"), r}, {BitVec::from_string("11"), {0.0, r}}};
  const QuantumState s(2, good);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  EXPECT_EQ(s.amplitude(BitVec::from_string("01")), Amplitude(0.0));
}

TEST(QuantumState, PrunesNegligibleTerms) {
  QuantumState::Terms t{{BitVec::from_string("0"), 1.0}, {BitVec::from_string("1"), 1e-17}};
  EXPECT_EQ(QuantumState(1, t).size(), 1u);
}

TEST(QuantumState, UniformAndBasis) {
  const auto s = QuantumState::uniform({BitVec::from_uint(1, 3), BitVec::from_uint(6, 3)});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_NEAR(std::abs(s.amplitude(BitVec::from_uint(6, 3))), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(QuantumState::basis(BitVec::from_uint(5, 3)).size(), 1u);
  EXPECT_THROW(QuantumState::uniform({}), SimulationError);
}

TEST(RunState, LinearOverBasisStates) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const Circuit c = random_circuit(rng, 6, 15);
    QuantumState::Terms terms;
    double norm = 0;
    for (std::uint64_t s = 0; s < 64; s += 1 + trial % 5) {
      const Amplitude a(u(rng), u(rng));
      terms[BitVec::from_uint(s, 6)] = a;
      norm += std::norm(a);
    }
    for (auto& [_, a] : terms) a /= std::sqrt(norm);
    const QuantumState in(6, terms);
    const QuantumState out = run_state(c, in);
    ASSERT_EQ(out.size(), in.size());
    ASSERT_NEAR(out.norm_squared(), 1.0, 1e-12);
    for (const auto& [b, a] : in.terms()) {
      ASSERT_EQ(out.amplitude(BitVec::from_uint(eval(c, b.to_uint()), 6)), a);
    }
  }
}

TEST(RunState, SuperpositionThroughFourBitMultiplier) {
  const auto qbm = cached_qbm(4);
  const auto& layout = qbm->layout;
  std::vector<std::pair<int, int>> pairs{{3, 7}, {-8, -8}, {-5, 6}, {0, -1}, {7, -8}};
  std::vector<BitVec> inputs;
  for (auto [x, y] : pairs) inputs.push_back(prepare_input(layout, SignedWord(x, 4), SignedWord(y, 4)));
  const QuantumState out = run_state(qbm->circuit, QuantumState::uniform(inputs));
  EXPECT_EQ(out.size(), pairs.size());
  EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
  for (const auto& [b, a] : out.terms()) {
    EXPECT_NEAR(std::norm(a), 1.0 / pairs.size(), 1e-12);
    const auto x = from_twos_complement(b.slice(layout.x.offset, 4));
    const auto y = from_twos_complement(b.slice(layout.y.offset, 4));
    EXPECT_EQ(from_twos_complement(b.slice(layout.result.offset, 8)), x * y);
  }
}
