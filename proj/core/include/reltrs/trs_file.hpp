// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "reltrs/rewrite.hpp"

namespace reltrs {

/// Error in a rule file, with 1-based line and column (column 0 when the
/// whole line is at fault).
class TrsFileError : public SyntaxError {
 public:
  TrsFileError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct TrsFile {
  Trs trs;
  /// Source line of each rule.
  std::vector<std::size_t> rule_lines;
};

// Line-oriented format, `#` starts a comment:
//
//   sig 0/0 S/1 A/2 M/2
//   var x y
//   rule A(0,x) -> x
//
// Declarations may appear anywhere; rules are parsed after all of them.
TrsFile parse_trs(std::string_view text);
TrsFile load_trs(const std::string& path);
std::string format_trs(const Trs& trs);

/// Parses a term against the signature and variables of a rule set.
Term parse_term(std::string_view text, const Trs& trs);

}  // namespace reltrs
