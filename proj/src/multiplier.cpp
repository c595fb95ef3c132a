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

#include "qbm/multiplier.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qbm/simulator.hpp"

namespace qbm {

namespace {

std::uint64_t low_mask(std::size_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

Qubit as_qubit(std::size_t v) { return static_cast<Qubit>(v); }

void require_width(std::size_t n) {
  if (n < 1 || n > kMaxWordWidth) {
    throw std::invalid_argument("multiplier width " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxWordWidth) + "]");
  }
}

}  // namespace

MultiplierLayout MultiplierLayout::make(std::size_t n) {
  require_width(n);
  MultiplierLayout l;
  l.n = n;
  l.encoder = build_booth_encoder(n).layout;
  const std::size_t w = 2 * n;
  std::size_t next = 3 * n;
  l.x = {"x", 0, as_qubit(n)};
  l.y = {"y", as_qubit(next), as_qubit(n)};
  next += n;
  for (std::size_t i = 0; i < n; ++i) {
    l.pp.push_back({"pp" + std::to_string(i), as_qubit(next), as_qubit(w)});
    next += w;
  }
  l.corr = {"corr", as_qubit(next), as_qubit(w)};
  next += w;
  for (std::size_t k = 0; k < n; ++k) l.carries.push_back(as_qubit(next++));
  l.result = {"result", l.pp[0].offset, l.pp[0].length};
  l.width = as_qubit(next);
  return l;
}

std::uint64_t pp_reference_value(int digit, const SignedWord& y, std::size_t i) {
  const std::size_t n = y.width();
  if (i >= n) throw std::out_of_range("partial product index outside [0, n)");
  if (digit == 0) return 0;
  if (digit != 1 && digit != -1) {
    throw std::invalid_argument("Booth digit " + std::to_string(digit) + " outside {-1, 0, 1}");
  }
  const std::size_t span = 2 * n - i;
  std::uint64_t extended = static_cast<std::uint64_t>(y.value()) & low_mask(span);
  if (digit == -1) extended = ~extended & low_mask(span);
  return (extended << i) & low_mask(2 * n);
}

Circuit build_pp_loader(const MultiplierLayout& layout, std::size_t i) {
  const std::size_t n = layout.n;
  if (i >= n) throw std::out_of_range("partial product index outside [0, n)");
  const Qubit hi = layout.encoder.hi[i];
  const Qubit lo = layout.encoder.lo[i];
  const Register& pp = layout.pp[i];

  Circuit c(layout.width);
  for (std::size_t j = i; j < 2 * n; ++j) {
    // Positions past the operand reuse y's sign bit.
    const Qubit yk = layout.y[as_qubit(std::min(j - i, n - 1))];
    const Qubit target = pp[as_qubit(j)];
    c.mcx({open(hi), closed(lo), closed(yk)}, target);
    c.mcx({closed(hi), open(lo), open(yk)}, target);
  }
  return c;
}

Circuit build_correction_loader(const MultiplierLayout& layout) {
  Circuit c(layout.width);
  for (std::size_t i = 0; i < layout.n; ++i) {
    c.mcx({closed(layout.encoder.hi[i]), open(layout.encoder.lo[i])}, layout.corr[as_qubit(i)]);
  }
  return c;
}

Circuit build_ripple_adder(std::size_t w) {
  if (w < 1) throw std::invalid_argument("ripple adder needs w >= 1");
  const auto a = [](std::size_t i) { return as_qubit(i); };
  const auto b = [w](std::size_t i) { return as_qubit(w + i); };
  const Qubit carry = as_qubit(2 * w);

  Circuit c(as_qubit(2 * w + 1));
  c.add_register("a", 0, as_qubit(w));
  c.add_register("b", as_qubit(w), as_qubit(w));
  c.add_register("carry", carry, 1);

  auto maj = [&c](Qubit x, Qubit y, Qubit z) {
    c.cx(z, y);
    c.cx(z, x);
    c.ccx(x, y, z);
  };
  auto uma = [&c](Qubit x, Qubit y, Qubit z) {
    c.ccx(x, y, z);
    c.cx(z, x);
    c.cx(x, y);
  };

  // After MAJ step i, a[i] holds the carry into bit i + 1.
  maj(carry, b(0), a(0));
  for (std::size_t i = 1; i < w; ++i) maj(a(i - 1), b(i), a(i));
  for (std::size_t i = w; i-- > 1;) uma(a(i - 1), b(i), a(i));
  uma(carry, b(0), a(0));
  return c;
}

std::vector<AdderStep> plan_adder_tree(std::size_t n) {
  require_width(n);
  std::vector<std::size_t> operands(n);
  std::iota(operands.begin(), operands.end(), std::size_t{0});
  const auto name = [](std::size_t i) { return "pp" + std::to_string(i); };

  std::vector<AdderStep> steps;
  std::size_t level = 0;
  while (operands.size() > 1) {
    ++level;
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < operands.size(); k += 2) {
      if (k + 1 < operands.size()) {
        steps.push_back({name(operands[k]), name(operands[k + 1]), level});
        next.push_back(operands[k]);
      } else {
        steps.push_back({name(next.back()), name(operands[k]), level});
      }
    }
    operands = std::move(next);
  }
  steps.push_back({name(operands.front()), "corr", level + 1});
  return steps;
}

Circuit build_adder_tree(const MultiplierLayout& layout) {
  const std::size_t w = layout.product_width();
  const Circuit adder = strip_registers(build_ripple_adder(w));
  const auto lookup = [&](const std::string& name) -> const Register& {
    if (name == layout.corr.name) return layout.corr;
    for (const auto& r : layout.pp) {
      if (r.name == name) return r;
    }
    throw CircuitError(CircuitErrorKind::UnknownRegister, "no register named '" + name + "'");
  };

  Circuit tree(layout.width);
  const auto steps = plan_adder_tree(layout.n);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Register& source = lookup(steps[k].source);
    const Register& target = lookup(steps[k].target);
    std::vector<Qubit> map(2 * w + 1);
    for (std::size_t i = 0; i < w; ++i) {
      map[i] = source[as_qubit(i)];
      map[w + i] = target[as_qubit(i)];
    }
    map[2 * w] = layout.carries.at(k);
    tree = compose(tree, embed(adder, layout.width, map));
  }
  return tree;
}

Qbm build_qbm(std::size_t n) {
  MultiplierLayout layout = MultiplierLayout::make(n);

  // The encoder occupies the first 3n host qubits unchanged.
  const Circuit encoder = build_booth_encoder(n).circuit;

  Circuit c(layout.width);
  for (const auto& r : encoder.registers()) c.add_register(r.name, r.offset, r.length);
  c.add_register(layout.y.name, layout.y.offset, layout.y.length);
  for (const auto& r : layout.pp) c.add_register(r.name, r.offset, r.length);
  c.add_register(layout.corr.name, layout.corr.offset, layout.corr.length);
  for (std::size_t k = 0; k < layout.carries.size(); ++k) {
    c.add_register("carry" + std::to_string(k), layout.carries[k], 1);
  }
  c.add_register(layout.result.name, layout.result.offset, layout.result.length);

  std::vector<Qubit> identity(encoder.width());
  std::iota(identity.begin(), identity.end(), Qubit{0});
  const Circuit be = embed(encoder, layout.width, identity);

  c = compose(c, be);
  for (std::size_t i = 0; i < n; ++i) c = compose(c, build_pp_loader(layout, i));
  c = compose(c, build_correction_loader(layout));
  c = compose(c, build_adder_tree(layout));
  c = compose(c, inverse(be));
  return {std::move(c), std::move(layout)};
}

std::shared_ptr<const Qbm> cached_qbm(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const Qbm>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const Qbm>(build_qbm(n));
  return slot;
}

BitVec prepare_input(const MultiplierLayout& layout, const SignedWord& x, const SignedWord& y) {
  if (x.width() != layout.n || y.width() != layout.n) {
    throw RangeError("operands must be " + std::to_string(layout.n) + "-bit words");
  }
  BitVec state(layout.width);
  state.assign(layout.x.offset, x.bits());
  state.assign(layout.y.offset, y.bits());
  return state;
}

Cleanliness check_cleanliness(const MultiplierLayout& layout, const BitVec& s,
                              const SignedWord& x, const SignedWord& y) {
  Cleanliness c;
  c.x_restored = s.slice(layout.x.offset, layout.x.length) == x.bits();
  c.y_restored = s.slice(layout.y.offset, layout.y.length) == y.bits();
  const auto ancillas = layout.encoder.ancillas();
  c.encoder_clear = std::none_of(ancillas.begin(), ancillas.end(), [&](Qubit q) { return s[q]; });
  c.carries_clear =
      std::none_of(layout.carries.begin(), layout.carries.end(), [&](Qubit q) { return s[q]; });
  return c;
}

std::string ProductResult::result_bits() const {
  return final_state.slice(layout.result.offset, layout.result.length).to_string();
}

ProductResult qbm_multiply(const SignedWord& x, const SignedWord& y) {
  if (x.width() != y.width()) throw RangeError("operands must share one width");
  const auto qbm = cached_qbm(x.width());
  const auto& layout = qbm->layout;
  BitVec out = run_basis(qbm->circuit, prepare_input(layout, x, y));
  const auto value =
      from_twos_complement(out.slice(layout.result.offset, layout.result.length));
  Cleanliness clean = check_cleanliness(layout, out, x, y);
  return {SignedWord(value, 2 * layout.n), std::move(out), layout, clean};
}

std::vector<StatsRow> circuit_stats(std::size_t lo, std::size_t hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("stats range must satisfy 1 <= lo <= hi");
  std::vector<StatsRow> rows;
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto qbm = cached_qbm(n);
    const auto be = build_booth_encoder(n);
    rows.push_back({n, qbm->circuit.width(), gate_counts(qbm->circuit), depth(qbm->circuit),
                    plan_adder_tree(n).size(), gate_counts(be.circuit), depth(be.circuit)});
  }
  return rows;
}

std::string stats_csv(const std::vector<StatsRow>& rows) {
  std::ostringstream os;
  os << "n,qubits,x,cx,swap,cswap,mcx,depth\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.qubits;
    for (GateKind k : kAllGateKinds) os << ',' << count_of(r.counts, k);
    os << ',' << r.depth << '\n';
  }
  return os.str();
}

std::string stats_text(const std::vector<StatsRow>& rows) {
  std::ostringstream os;
  os << std::right << std::setw(4) << "n" << std::setw(8) << "qubits";
  for (GateKind k : kAllGateKinds) os << std::setw(8) << kind_name(k);
  os << std::setw(8) << "depth" << std::setw(8) << "adders" << std::setw(10) << "enc.gates"
     << std::setw(10) << "enc.depth" << '\n';
  for (const auto& r : rows) {
    std::size_t enc_gates = 0;
    for (const auto& [_, count] : r.encoder_counts) enc_gates += count;
    os << std::setw(4) << r.n << std::setw(8) << r.qubits;
    for (GateKind k : kAllGateKinds) os << std::setw(8) << count_of(r.counts, k);
    os << std::setw(8) << r.depth << std::setw(8) << r.adders << std::setw(10) << enc_gates
       << std::setw(10) << r.encoder_depth << '\n';
  }
  return os.str();
}

}  // namespace qbm
