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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qbm/circuit.hpp"

namespace qbm {

/// Malformed `.qbc` text. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The circuit cannot be expressed in the requested export format.
class ExportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `.qbc`, one statement per line, `#` starts a comment:
//
//   qbc 1
//   qubits <N>
//   reg <name> <offset> <length>
//   x <t> | cx <c> <t> | swap <a> <b> | cswap <c> <a> <b> | mcx <+q|-q>... <t>
//
// `+q` is a closed control, `-q` an open one; the last mcx token is the target.

void write_qbc(const Circuit& c, std::ostream& out);
std::string to_qbc(const Circuit& c);
/// Parses and validates; throws ParseError on syntax or invariant violations.
Circuit parse_qbc(std::string_view text);

/// OpenQASM 3 over stdgates.inc: x, cx, ccx, swap, cswap. Open controls are
/// conjugated with x; three controls are written `ctrl @ ccx`. More than
/// three controls throws ExportError.
void write_qasm3(const Circuit& c, std::ostream& out);
std::string to_qasm3(const Circuit& c);

}  // namespace qbm
