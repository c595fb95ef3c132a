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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbm/bitvec.hpp"
#include "qbm/circuit.hpp"
#include "qbm/encoder.hpp"
#include "qbm/numeric.hpp"

namespace qbm {

/// Qubit map of the full multiplier for operand width n.
///
///   x        [0, n)                 multiplier, restored at the end
///   code/copy/qm1 [n, 3n)           encoder ancillas, restored to 0
///   y        [3n, 4n)               multiplicand, untouched
///   pp<i>    2n qubits each         partial products, i < n
///   corr     2n qubits              +1 corrections of the -1 digits
///   carry<k> 1 qubit each           carry ancilla of adder k, k < n
///   result   alias of pp0           final sum
struct MultiplierLayout {
  std::size_t n = 0;
  EncoderLayout encoder;
  Register x;
  Register y;
  std::vector<Register> pp;
  Register corr;
  std::vector<Qubit> carries;
  Register result;
  Qubit width = 0;

  static MultiplierLayout make(std::size_t n);
  /// Width of every partial-product register.
  std::size_t product_width() const noexcept { return 2 * n; }
};

/// Unsigned 2n-bit value digit d places in PP_i for multiplicand y:
/// 0 for d = 0, sign-extended y shifted left i for d = +1, and for d = -1 the
/// bitwise complement of sign-extended y shifted left i (low i bits zero).
std::uint64_t pp_reference_value(int digit, const SignedWord& y, std::size_t i);

/// Loads PP_i from digit i's code and y. Per output bit j in [i, 2n) there is
/// one +1 gate {open x', closed x'', closed y[k]} and one -1 gate
/// {closed x', open x'', open y[k]}, k = min(j - i, n - 1).
Circuit build_pp_loader(const MultiplierLayout& layout, std::size_t i);

/// Sets corr[i] for every digit i equal to -1.
Circuit build_correction_loader(const MultiplierLayout& layout);

/// In-place ripple-carry adder (Cuccaro MAJ/UMA chain without carry-out):
/// registers a [0, w), b [w, 2w), carry {2w}; maps (a, b, 0) to
/// (a, a + b mod 2^w, 0).
Circuit build_ripple_adder(std::size_t w);

/// One in-place addition of the tree: target += source.
struct AdderStep {
  std::string target;
  std::string source;
  std::size_t level = 0;

  friend bool operator==(const AdderStep&, const AdderStep&) = default;
};

/// Pairwise sums (pp<2k> += pp<2k+1>) level by level, an odd trailing operand
/// folded into the last sum of its level, then pp0 += corr. Always n steps.
std::vector<AdderStep> plan_adder_tree(std::size_t n);

Circuit build_adder_tree(const MultiplierLayout& layout);

struct Qbm {
  Circuit circuit;
  MultiplierLayout layout;
};

/// BE(n), every PP loader, the correction loader, the adder tree, BE^-1(n).
Qbm build_qbm(std::size_t n);

/// Process-wide cache of build_qbm; safe to call from several threads.
std::shared_ptr<const Qbm> cached_qbm(std::size_t n);

/// Basis input with x in X, y in Y and every other qubit 0.
BitVec prepare_input(const MultiplierLayout& layout, const SignedWord& x, const SignedWord& y);

struct Cleanliness {
  bool x_restored = false;
  bool y_restored = false;
  bool encoder_clear = false;
  bool carries_clear = false;

  bool ok() const noexcept { return x_restored && y_restored && encoder_clear && carries_clear; }
};

Cleanliness check_cleanliness(const MultiplierLayout& layout, const BitVec& final_state,
                              const SignedWord& x, const SignedWord& y);

struct ProductResult {
  SignedWord product;
  BitVec final_state;
  MultiplierLayout layout;
  Cleanliness cleanliness;

  /// The result register, MSB-first.
  std::string result_bits() const;
};

/// Multiplies two n-bit words by simulating the cached QBM(n).
ProductResult qbm_multiply(const SignedWord& x, const SignedWord& y);

struct StatsRow {
  std::size_t n = 0;
  std::size_t qubits = 0;
  GateCounts counts;
  std::size_t depth = 0;
  std::size_t adders = 0;
  GateCounts encoder_counts;
  std::size_t encoder_depth = 0;
};

/// Measured metrics of QBM(n) for n in [lo, hi].
std::vector<StatsRow> circuit_stats(std::size_t lo, std::size_t hi);

/// CSV with header n,qubits,x,cx,swap,cswap,mcx,depth.
std::string stats_csv(const std::vector<StatsRow>& rows);
std::string stats_text(const std::vector<StatsRow>& rows);

}  // namespace qbm
