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

#include "qbm/formats.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace qbm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

Qubit parse_index(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || token.empty() ||
      value > std::numeric_limits<Qubit>::max()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return static_cast<Qubit>(value);
}

void expect_arity(const std::vector<std::string_view>& tokens, std::size_t n, std::size_t line) {
  if (tokens.size() != n + 1) {
    throw ParseError(line, "'" + std::string(tokens[0]) + "' takes " + std::to_string(n) +
                               " operand(s), got " + std::to_string(tokens.size() - 1));
  }
}

void write_qasm_gate(std::ostream& out, std::string_view name, std::initializer_list<Qubit> qs) {
  out << name << ' ';
  bool first = true;
  for (Qubit q : qs) {
    if (!first) out << ", ";
    out << "q[" << q << ']';
    first = false;
  }
  out << ";\n";
}

}  // namespace

void write_qbc(const Circuit& c, std::ostream& out) {
  out << "qbc 1\n";
  out << "qubits " << c.width() << '\n';
  for (const auto& r : c.registers()) {
    out << "reg " << r.name << ' ' << r.offset << ' ' << r.length << '\n';
  }
  for (const auto& g : c.gates()) {
    std::visit(Overloaded{
                   [&](const gates::X& x) { out << "x " << x.target << '\n'; },
                   [&](const gates::Cx& x) { out << "cx " << x.control << ' ' << x.target << '\n'; },
                   [&](const gates::Swap& x) { out << "swap " << x.a << ' ' << x.b << '\n'; },
                   [&](const gates::CSwap& x) {
                     out << "cswap " << x.control << ' ' << x.a << ' ' << x.b << '\n';
                   },
                   [&](const gates::Mcx& x) {
                     out << "mcx";
                     for (const auto& ctl : x.controls) {
                       out << ' ' << (ctl.polarity == Polarity::Closed ? '+' : '-') << ctl.qubit;
                     }
                     out << ' ' << x.target << '\n';
                   },
               },
               g);
  }
}

std::string to_qbc(const Circuit& c) {
  std::ostringstream os;
  write_qbc(c, os);
  return os.str();
}

Circuit parse_qbc(std::string_view text) {
  std::optional<Qubit> width;
  std::vector<Register> registers;
  std::vector<Gate> gates;
  std::vector<std::size_t> gate_lines;
  std::vector<std::size_t> register_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);

    if (line_no == 1) {
      if (line != "qbc 1") throw ParseError(1, "expected header 'qbc 1'");
      saw_header = true;
      continue;
    }
    if (line.empty()) continue;

    const auto tokens = split_ws(line);
    const std::string_view op = tokens[0];

    if (op == "qubits") {
      expect_arity(tokens, 1, line_no);
      if (width) throw ParseError(line_no, "duplicate 'qubits' statement");
      width = parse_index(tokens[1], line_no);
      continue;
    }
    if (!width) throw ParseError(line_no, "'qubits' must precede '" + std::string(op) + "'");

    if (op == "reg") {
      expect_arity(tokens, 3, line_no);
      registers.push_back({std::string(tokens[1]), parse_index(tokens[2], line_no),
                           parse_index(tokens[3], line_no)});
      register_lines.push_back(line_no);
    } else if (op == "x") {
      expect_arity(tokens, 1, line_no);
      gates.emplace_back(gates::X{parse_index(tokens[1], line_no)});
      gate_lines.push_back(line_no);
    } else if (op == "cx") {
      expect_arity(tokens, 2, line_no);
      gates.emplace_back(gates::Cx{parse_index(tokens[1], line_no), parse_index(tokens[2], line_no)});
      gate_lines.push_back(line_no);
    } else if (op == "swap") {
      expect_arity(tokens, 2, line_no);
      gates.emplace_back(
          gates::Swap{parse_index(tokens[1], line_no), parse_index(tokens[2], line_no)});
      gate_lines.push_back(line_no);
    } else if (op == "cswap") {
      expect_arity(tokens, 3, line_no);
      gates.emplace_back(gates::CSwap{parse_index(tokens[1], line_no),
                                      parse_index(tokens[2], line_no),
                                      parse_index(tokens[3], line_no)});
      gate_lines.push_back(line_no);
    } else if (op == "mcx") {
      if (tokens.size() < 2) throw ParseError(line_no, "'mcx' needs a target");
      gates::Mcx g{{}, parse_index(tokens.back(), line_no)};
      for (std::size_t k = 1; k + 1 < tokens.size(); ++k) {
        const auto tok = tokens[k];
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
          throw ParseError(line_no, "mcx control must be +q or -q, got '" + std::string(tok) + "'");
        }
        g.controls.push_back({parse_index(tok.substr(1), line_no),
                              tok[0] == '+' ? Polarity::Closed : Polarity::Open});
      }
      gates.emplace_back(std::move(g));
      gate_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, "unknown statement '" + std::string(op) + "'");
    }
  }
  if (!saw_header) throw ParseError(1, "expected header 'qbc 1'");
  if (!width) throw ParseError(line_no, "missing 'qubits' statement");

  Circuit c = Circuit::from_parts(*width, std::move(registers), std::move(gates));
  if (auto issue = validate(c)) {
    std::size_t where = line_no;
    if (issue->gate_index) {
      where = gate_lines[*issue->gate_index];
    } else if (!register_lines.empty()) {
      // Register issues are reported against the first declaration that fails.
      for (std::size_t i = 0; i < c.registers().size(); ++i) {
        auto prefix = Circuit::from_parts(c.width(),
                                          std::vector<Register>(c.registers().begin(),
                                                                c.registers().begin() +
                                                                    static_cast<std::ptrdiff_t>(i + 1)),
                                          {});
        if (validate(prefix)) {
          where = register_lines[i];
          break;
        }
      }
    }
    throw ParseError(where, std::string(to_string(issue->kind)) + ": " + issue->message);
  }
  return c;
}

void write_qasm3(const Circuit& c, std::ostream& out) {
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n";
  for (const auto& r : c.registers()) {
    out << "// reg " << r.name << " = q[" << r.offset << ':' << (r.length ? r.end() - 1 : r.offset)
        << "]\n";
  }
  out << "qubit[" << c.width() << "] q;\n";

  for (const auto& g : c.gates()) {
    std::visit(Overloaded{
                   [&](const gates::X& x) { write_qasm_gate(out, "x", {x.target}); },
                   [&](const gates::Cx& x) { write_qasm_gate(out, "cx", {x.control, x.target}); },
                   [&](const gates::Swap& x) { write_qasm_gate(out, "swap", {x.a, x.b}); },
                   [&](const gates::CSwap& x) {
                     write_qasm_gate(out, "cswap", {x.control, x.a, x.b});
                   },
                   [&](const gates::Mcx& x) {
                     const auto& ctl = x.controls;
                     if (ctl.size() > 3) {
                       throw ExportError("mcx with " + std::to_string(ctl.size()) +
                                         " controls has no QASM lowering here (max 3)");
                     }
                     for (const auto& cc : ctl) {
                       if (cc.polarity == Polarity::Open) write_qasm_gate(out, "x", {cc.qubit});
                     }
                     switch (ctl.size()) {
                       case 0: write_qasm_gate(out, "x", {x.target}); break;
                       case 1: write_qasm_gate(out, "cx", {ctl[0].qubit, x.target}); break;
                       case 2:
                         write_qasm_gate(out, "ccx", {ctl[0].qubit, ctl[1].qubit, x.target});
                         break;
                       default:
                         write_qasm_gate(out, "ctrl @ ccx",
                                         {ctl[0].qubit, ctl[1].qubit, ctl[2].qubit, x.target});
                         break;
                     }
                     for (const auto& cc : ctl) {
                       if (cc.polarity == Polarity::Open) write_qasm_gate(out, "x", {cc.qubit});
                     }
                   },
               },
               g);
  }
}

std::string to_qasm3(const Circuit& c) {
  std::ostringstream os;
  write_qasm3(c, os);
  return os.str();
}

}  // namespace qbm
