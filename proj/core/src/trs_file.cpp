// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reltrs/trs_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace reltrs {

TrsFileError::TrsFileError(const std::string& msg, std::size_t line,
                           std::size_t column)
    : SyntaxError("line " + std::to_string(line) +
                  (column ? ", column " + std::to_string(column) : "") + ": " +
                  msg),
      line_(line),
      column_(column) {}

namespace {

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits off the first whitespace-delimited word; `offset` tracks the
// 0-based position of `rest` within the line.
std::string_view next_word(std::string_view& rest, std::size_t& offset) {
  while (!rest.empty() && is_space(rest.front())) {
    rest.remove_prefix(1);
    ++offset;
  }
  std::size_t n = 0;
  while (n < rest.size() && !is_space(rest[n])) ++n;
  std::string_view w = rest.substr(0, n);
  rest.remove_prefix(n);
  offset += n;
  return w;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  while (!text.empty() || number == 1) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    out.push_back({number, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
    ++number;
  }
  return out;
}

}  // namespace

TrsFile parse_trs(std::string_view text) {
  TrsFile out;
  Trs& trs = out.trs;
  auto lines = split_lines(text);
  bool have_sig = false;

  for (const Line& ln : lines) {
    std::string_view rest = ln.text;
    std::size_t off = 0;
    std::string_view kw = next_word(rest, off);
    if (kw.empty() || kw == "rule") continue;
    if (kw == "sig") {
      have_sig = true;
      for (;;) {
        std::string_view w = next_word(rest, off);
        if (w.empty()) break;
        std::size_t col = off - w.size() + 1;
        std::size_t slash = w.rfind('/');
        if (slash == std::string_view::npos || slash == 0) {
          throw TrsFileError("expected NAME/ARITY, got '" + std::string(w) + "'",
                             ln.number, col);
        }
        unsigned arity = 0;
        auto digits = w.substr(slash + 1);
        auto [p, ec] =
            std::from_chars(digits.data(), digits.data() + digits.size(), arity);
        if (ec != std::errc() || p != digits.data() + digits.size() ||
            digits.empty()) {
          throw TrsFileError("bad arity in '" + std::string(w) + "'", ln.number,
                             col + slash + 1);
        }
        try {
          trs.signature.add(std::string(w.substr(0, slash)), arity);
        } catch (const SyntaxError& e) {
          throw TrsFileError(e.what(), ln.number, col);
        }
      }
    } else if (kw == "var") {
      for (;;) {
        std::string_view w = next_word(rest, off);
        if (w.empty()) break;
        trs.variables.emplace_back(w);
      }
    } else {
      throw TrsFileError("unknown declaration '" + std::string(kw) + "'",
                         ln.number, off - kw.size() + 1);
    }
  }
  if (!have_sig) throw TrsFileError("missing sig declaration", 1, 0);
  for (const auto& v : trs.variables) {
    if (trs.signature.contains(v)) {
      throw TrsFileError("variable '" + v + "' clashes with an operator", 1, 0);
    }
  }

  for (const Line& ln : lines) {
    std::string_view rest = ln.text;
    std::size_t off = 0;
    if (next_word(rest, off) != "rule") continue;
    std::size_t arrow = rest.find("->");
    if (arrow == std::string_view::npos) {
      throw TrsFileError("expected 'LHS -> RHS'", ln.number, 0);
    }
    auto side = [&](std::string_view s, std::size_t base) {
      try {
        return parse_term(s, trs.signature, trs.variables);
      } catch (const ParseError& e) {
        throw TrsFileError(e.what(), ln.number, base + e.column());
      } catch (const SyntaxError& e) {
        throw TrsFileError(e.what(), ln.number, base + 1);
      }
    };
    Term lhs = side(rest.substr(0, arrow), off);
    Term rhs = side(rest.substr(arrow + 2), off + arrow + 2);
    trs.rules.push_back({lhs, rhs});
    out.rule_lines.push_back(ln.number);
  }

  try {
    trs.validate();
  } catch (const TrsError& e) {
    // validate() numbers rules from 1; map back to the source line.
    std::string msg = e.what();
    std::size_t line = 0;
    if (msg.rfind("rule ", 0) == 0) {
      std::size_t k = std::stoul(msg.substr(5));
      if (k >= 1 && k <= out.rule_lines.size()) line = out.rule_lines[k - 1];
    }
    throw TrsFileError(msg, line, 0);
  }
  return out;
}

TrsFile load_trs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_trs(ss.str());
}

std::string format_trs(const Trs& trs) {
  std::ostringstream os;
  os << "sig";
  for (const auto& [name, arity] : trs.signature.operators()) {
    os << ' ' << name << '/' << arity;
  }
  os << '\n';
  if (!trs.variables.empty()) {
    os << "var";
    for (const auto& v : trs.variables) os << ' ' << v;
    os << '\n';
  }
  for (const Rule& r : trs.rules) {
    os << "rule " << r.lhs.to_string() << " -> " << r.rhs.to_string() << '\n';
  }
  return os.str();
}

Term parse_term(std::string_view text, const Trs& trs) {
  return parse_term(text, trs.signature, trs.variables);
}

}  // namespace reltrs
