// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>

#include "reltrs/trs_file.hpp"

using namespace reltrs;

namespace {

const char* kArithmetic = R"(# Peano arithmetic
sig 0/0 S/1
sig A/2 M/2
var x y

rule A(0, x) -> x
rule A(S(x), y) -> S(A(x, y))   # trailing comment
rule M(0, x) -> 0
rule M(S(x), y) -> A(M(x, y), y)
)";

// Line and column of the error raised by parsing text.
std::pair<std::size_t, std::size_t> where(const std::string& text) {
  try {
    parse_trs(text);
  } catch (const TrsFileError& e) {
    return {e.line(), e.column()};
  }
  FAIL("expected a TrsFileError");
  return {0, 0};
}

std::string message(const std::string& text) {
  try {
    parse_trs(text);
  } catch (const TrsFileError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("trs_file") {
  TEST_CASE("arithmetic file") {
    TrsFile f = parse_trs(kArithmetic);
    CHECK(f.trs.rules.size() == 4);
    CHECK(f.trs.signature.size() == 4);
    CHECK(f.trs.signature == arithmetic_signature());
    CHECK(f.trs.variables == std::vector<std::string>{"x", "y"});
    CHECK(f.rule_lines == std::vector<std::size_t>{6, 7, 8, 9});
    Trs ref = arithmetic_trs();
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(f.trs.rules[i].lhs == ref.rules[i].lhs);
      CHECK(f.trs.rules[i].rhs == ref.rules[i].rhs);
    }
  }

  TEST_CASE("format round-trips") {
    TrsFile f = parse_trs(kArithmetic);
    std::string text = format_trs(f.trs);
    TrsFile g = parse_trs(text);
    CHECK(g.trs.signature == f.trs.signature);
    CHECK(g.trs.variables == f.trs.variables);
    REQUIRE(g.trs.rules.size() == f.trs.rules.size());
    for (std::size_t i = 0; i < f.trs.rules.size(); ++i) {
      CHECK(g.trs.rules[i].lhs == f.trs.rules[i].lhs);
      CHECK(g.trs.rules[i].rhs == f.trs.rules[i].rhs);
    }
    CHECK(format_trs(g.trs) == text);
  }

  TEST_CASE("rules may precede declarations") {
    TrsFile f = parse_trs("rule A(0,x) -> x\nsig 0/0 A/2\nvar x\n");
    CHECK(f.trs.rules.size() == 1);
  }

  TEST_CASE("variable lhs is rejected with its line") {
    std::string text = "sig 0/0\nvar x\n\nrule x -> 0\n";
    CHECK(message(text).find("variable as lhs") != std::string::npos);
    CHECK(where(text).first == 4);
  }

  TEST_CASE("fresh rhs variable is rejected") {
    std::string text = "sig 0/0 S/1 A/2\nvar x y\nrule A(0,x) -> y\n";
    CHECK(message(text).find("fresh variable") != std::string::npos);
    CHECK(where(text).first == 3);
  }

  TEST_CASE("syntax errors carry line and column") {
    CHECK(where("sig 0/0 S/1\nrule S(0 -> 0\n") ==
          std::pair<std::size_t, std::size_t>{2, 10});
    CHECK(where("sig 0/0 S/1\nrule S(0,0) -> 0\n").first == 2);
    CHECK(where("sig 0/0 S/x\n") == std::pair<std::size_t, std::size_t>{1, 11});
    CHECK(where("sig 0/0 Sx\n") == std::pair<std::size_t, std::size_t>{1, 9});
    CHECK(where("sig 0/0\nfrobnicate\n") ==
          std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(where("sig 0/0\nrule 0 0\n").first == 2);
  }

  TEST_CASE("declaration errors") {
    CHECK(message("var x\n").find("missing sig") != std::string::npos);
    CHECK(message("sig 0/0 x/0\nvar x\n").find("clashes") != std::string::npos);
    CHECK(message("sig 0/0 0/1\n").find("line 1") != std::string::npos);
    CHECK(message("sig 0/0 S/1\nrule B(0) -> 0\n").find("line 2") !=
          std::string::npos);
  }

  TEST_CASE("terms parse over the file's signature") {
    TrsFile f = parse_trs(kArithmetic);
    CHECK(parse_term("A(S(x), y)", f.trs).to_string() == "A(S(x),y)");
    CHECK_THROWS_AS(parse_term("B(0)", f.trs), SyntaxError);
  }

  TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_trs("/nonexistent/file.trs"), std::runtime_error);
  }
}
