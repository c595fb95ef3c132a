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

#include "qbm/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

#include "qbm/encoder.hpp"
#include "qbm/formats.hpp"
#include "qbm/multiplier.hpp"
#include "qbm/numeric.hpp"
#include "qbm/verify.hpp"

namespace qbm::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Operands {
  std::size_t width = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
};

void add_operand_options(CLI::App* cmd, Operands& ops) {
  cmd->add_option("--width,-n", ops.width, "Operand width in bits")->required();
  cmd->add_option("--x", ops.x, "Multiplier (decimal)")->required();
  cmd->add_option("--y", ops.y, "Multiplicand (decimal)")->required();
}

void require_width(std::size_t n) {
  if (n < 1 || n > kMaxWordWidth) {
    throw UsageError("--width must be in [1, " + std::to_string(kMaxWordWidth) + "]");
  }
}

std::pair<SignedWord, SignedWord> make_operands(const Operands& ops) {
  require_width(ops.width);
  return {SignedWord(ops.x, ops.width), SignedWord(ops.y, ops.width)};
}

std::size_t parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("expected a width, got '" + std::string(s) + "'");
  }
  return v;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_size(text);
    return {n, n};
  }
  const auto lo = parse_size(std::string_view(text).substr(0, dots));
  const auto hi = parse_size(std::string_view(text).substr(dots + 2));
  if (lo < 1 || hi < lo) throw UsageError("--widths must be A..B with 1 <= A <= B");
  return {lo, hi};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Booth multiplier circuit synthesis and verification", "qbm"};
  app.require_subcommand(1);

  Operands mul_ops;
  auto* multiply = app.add_subcommand("multiply", "Multiply two signed words on the circuit");
  add_operand_options(multiply, mul_ops);

  Operands trace_ops;
  auto* trace = app.add_subcommand("trace", "Print the sequential Booth register trace");
  add_operand_options(trace, trace_ops);

  std::string bits;
  auto* recode = app.add_subcommand("recode", "Booth-recode a bit chain (MSB first)");
  recode->add_option("--bits", bits, "Bit chain, MSB first")->required();

  std::size_t build_width = 0;
  std::string build_out;
  std::string build_format = "qbc";
  std::string build_stage = "full";
  auto* build = app.add_subcommand("build", "Write the encoder or full multiplier circuit");
  build->add_option("--width,-n", build_width, "Operand width")->required();
  build->add_option("--out,-o", build_out, "Output path (stdout when omitted)");
  build->add_option("--format", build_format, "qbc or qasm3")
      ->check(CLI::IsMember({"qbc", "qasm3"}));
  build->add_option("--stage", build_stage, "encoder or full")
      ->check(CLI::IsMember({"encoder", "full"}));

  std::size_t verify_width = 0;
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  auto* verify = app.add_subcommand("verify", "Check the circuit against x*y");
  verify->add_option("--width,-n", verify_width, "Operand width")->required();
  auto* exhaustive_flag = verify->add_flag("--exhaustive", exhaustive, "All 2^(2n) pairs");
  auto* random_opt = verify->add_option("--random", samples, "Number of seeded random pairs");
  verify->add_option("--seed", seed, "Seed for --random");
  verify->add_option("--workers", workers, "Worker threads");
  exhaustive_flag->excludes(random_opt);

  std::string widths;
  std::string stats_format = "text";
  auto* stats = app.add_subcommand("stats", "Gate counts and depth per width");
  stats->add_option("--widths", widths, "Inclusive range A..B")->required();
  stats->add_option("--format", stats_format, "csv or text")->check(CLI::IsMember({"csv", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*multiply) {
      const auto [x, y] = make_operands(mul_ops);
      const auto r = qbm_multiply(x, y);
      const auto& c = r.cleanliness;
      out << r.product.value() << " (" << r.result_bits() << ")\n";
      out << "clean: " << (c.ok() ? "yes" : "NO") << " (x restored: " << (c.x_restored ? "yes" : "no")
          << ", y restored: " << (c.y_restored ? "yes" : "no")
          << ", encoder ancillas zero: " << (c.encoder_clear ? "yes" : "no")
          << ", carries zero: " << (c.carries_clear ? "yes" : "no") << ")\n";
      return kOk;
    }
    if (*trace) {
      const auto [x, y] = make_operands(trace_ops);
      const auto run = classical_booth_multiply(x, y);
      out << render_trace(run.trace);
      const BitVec aq = run.product.bits();
      out << "product: " << run.product.value() << " (" << aq.to_string() << ")\n";
      return kOk;
    }
    if (*recode) {
      BitVec chain;
      try {
        chain = BitVec::from_string(bits);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (chain.empty()) throw UsageError("--bits must not be empty");
      const auto digits = booth_recode(chain);
      out << digits.to_string() << '\n';
      if (chain.width() <= 63) {
        const auto value = digits.value();
        const auto expected = from_twos_complement(chain);
        out << "value: " << value << " (two's complement " << expected << ", "
            << (value == expected ? "match" : "MISMATCH") << ")\n";
      }
      return kOk;
    }
    if (*build) {
      require_width(build_width);
      const Circuit c = build_stage == "encoder" ? build_booth_encoder(build_width).circuit
                                                 : cached_qbm(build_width)->circuit;
      emit(build_format == "qasm3" ? to_qasm3(c) : to_qbc(c), build_out, out);
      return kOk;
    }
    if (*verify) {
      if (verify_width < 1 || verify_width > kMaxWordWidth) {
        throw UsageError("--width must be in [1, " + std::to_string(kMaxWordWidth) + "]");
      }
      VerifyReport report;
      if (random_opt->count() > 0) {
        if (samples == 0) throw UsageError("--random needs a positive sample count");
        report = verify_random(verify_width, samples, seed, workers);
        out << "width " << verify_width << ", " << samples << " random pairs, seed " << seed
            << '\n';
      } else {
        if (verify_width > 8) throw UsageError("--exhaustive supports widths up to 8");
        report = verify_exhaustive(verify_width, workers);
        out << "width " << verify_width << ", exhaustive\n";
      }
      out << report.summary() << '\n';
      if (const auto& f = report.first_failure) {
        out << "first counterexample: x=" << f->x << " y=" << f->y << " expected " << f->expected
            << " circuit " << f->circuit << " classical " << f->classical
            << " clean " << (f->clean ? "yes" : "no") << '\n';
        return kVerifyFailed;
      }
      return kOk;
    }
    if (*stats) {
      const auto [lo, hi] = parse_range(widths);
      if (hi > kMaxWordWidth) throw UsageError("--widths upper bound too large");
      const auto rows = circuit_stats(lo, hi);
      out << (stats_format == "csv" ? stats_csv(rows) : stats_text(rows));
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return kRange;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace qbm::cli
