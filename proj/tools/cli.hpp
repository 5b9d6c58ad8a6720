// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

// Subcommands of the reltrs tool. Each returns a process exit code and writes
// only to the streams it is given, so tests can drive them in-process.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reltrs/laws.hpp"
#include "reltrs/rewrite.hpp"

namespace reltrs::cli {

enum ExitCode : int {
  kOk = 0,
  kFails = 1,
  kUnconfirmed = 2,
  kInputError = 3,
};

enum class Format { Text, Json, Dot };

struct ReduceOptions {
  std::string file;
  std::string term;
  StepKind kind = StepKind::Seq;
  std::optional<std::size_t> bound;
  Format format = Format::Text;
  std::string out;
};

int cmd_reduce(const ReduceOptions& opt, std::ostream& out, std::ostream& err);

struct CheckLawsOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<double> density;
  std::optional<unsigned> support_depth;
  std::optional<unsigned> depth;
  std::optional<unsigned> threads;
  std::vector<std::string> laws;
  Format format = Format::Text;
  std::string out;
};

/// Builds the sample configuration: config file first, then flag overrides.
SampleConfig resolve_config(const CheckLawsOptions& opt);

int cmd_check_laws(const CheckLawsOptions& opt, std::ostream& out,
                   std::ostream& err);

struct AnalyzeOptions {
  std::string file;
  std::string property;  // confluence, weak, cr, cp or spectrum
  unsigned depth = 2;
  bool open_seeds = false;
  std::optional<std::size_t> bound;
  unsigned join_depth = 12;
  Format format = Format::Text;
  std::string out;
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out,
                std::ostream& err);

std::optional<Format> parse_format(const std::string& s);

}  // namespace reltrs::cli
