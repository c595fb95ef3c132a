# Copyright 2026 The qbm Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Booth multiplier circuits: synthesis, simulation and verification."""

from ._core import (
    BitVec,
    Circuit,
    CircuitError,
    InvalidCodeError,
    ParseError,
    RangeError,
    SimulationError,
    arithmetic_shift_right,
    as_permutation,
    booth_recode,
    build_booth_encoder,
    build_pair_encoder,
    build_qbm,
    build_ripple_adder,
    circuit_stats,
    classical_booth_multiply,
    compose,
    from_twos_complement,
    inverse,
    ones_complement,
    parse_qbc,
    pp_reference_value,
    qbm_multiply,
    recode_string,
    render_trace,
    run_basis,
    run_state,
    stats_csv,
    to_twos_complement,
    verify_exhaustive,
    verify_random,
)

__all__ = [
    "BitVec",
    "Circuit",
    "CircuitError",
    "InvalidCodeError",
    "ParseError",
    "RangeError",
    "SimulationError",
    "arithmetic_shift_right",
    "as_permutation",
    "booth_recode",
    "build_booth_encoder",
    "build_pair_encoder",
    "build_qbm",
    "build_ripple_adder",
    "circuit_stats",
    "classical_booth_multiply",
    "compose",
    "from_twos_complement",
    "inverse",
    "ones_complement",
    "parse_qbc",
    "pp_reference_value",
    "qbm_multiply",
    "recode_string",
    "render_trace",
    "run_basis",
    "run_state",
    "stats_csv",
    "to_twos_complement",
    "verify_exhaustive",
    "verify_random",
]
