// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "reltrs/analysis.hpp"
#include "reltrs/laws.hpp"

using namespace reltrs;
using namespace reltrs::test;

namespace {

// Confluence from the definition: any two reducts of a common source have
// a common reduct.
bool oracle_confluent(const Rel& a) {
  Rel s = warshall_star(a);
  for (std::size_t k = 0; k < a.n(); ++k) {
    for (std::size_t i = 0; i < a.n(); ++i) {
      if (!s.test(k, i)) continue;
      for (std::size_t j = 0; j < a.n(); ++j) {
        if (!s.test(k, j)) continue;
        bool joined = false;
        for (std::size_t m = 0; m < a.n() && !joined; ++m) {
          joined = s.test(i, m) && s.test(j, m);
        }
        if (!joined) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("diamond") {
    auto c = numbered(3);
    CHECK(has_diamond(bot(c)).verdict == Verdict::Holds);
    CHECK(has_diamond(id(c)).verdict == Verdict::Holds);
    Rel a = rel_of(c, {{"1", "2"}, {"1", "3"}});
    auto r = has_diamond(a);
    CHECK(r.verdict == Verdict::Fails);
    REQUIRE(r.witness);
    CHECK(r.witness_labels(a) == std::vector<std::string>{"1", "2", "3"});
  }

  TEST_CASE("confluence") {
    auto c3 = numbered(3);
    CHECK(is_confluent(rel_of(c3, {{"1", "2"}, {"1", "3"}})).verdict ==
          Verdict::Fails);
    auto c4 = numbered(4);
    CHECK(is_confluent(rel_of(c4, {{"1", "2"}, {"1", "3"}, {"2", "4"},
                                   {"3", "4"}}))
              .verdict == Verdict::Holds);
    CHECK(is_confluent(rel_of(c3, {{"1", "1"}, {"2", "2"}})).verdict ==
          Verdict::Holds);
  }

  TEST_CASE("weak confluence and Church-Rosser") {
    auto c = numbered(3);
    Rel fork = rel_of(c, {{"1", "2"}, {"1", "3"}});
    CHECK(is_weakly_confluent(fork).verdict == Verdict::Fails);
    CHECK(is_weakly_confluent(bot(c)).verdict == Verdict::Holds);
    CHECK(is_church_rosser(fork).verdict == Verdict::Fails);
    CHECK(is_church_rosser(bot(c)).verdict == Verdict::Holds);
    // Weakly confluent but not confluent: 1 <- 2 <-> 3 -> 4.
    auto c4 = numbered(4);
    Rel cyc = rel_of(c4, {{"2", "1"}, {"2", "3"}, {"3", "2"}, {"3", "4"}});
    CHECK(is_weakly_confluent(cyc).verdict == Verdict::Holds);
    CHECK(is_confluent(cyc).verdict == Verdict::Fails);
  }

  TEST_CASE("diamond implies weak confluence; CR agrees with confluence") {
    std::mt19937_64 rng(5);
    std::size_t disagree = 0, diamond_not_weak = 0, oracle_bad = 0;
    for (int s = 0; s < 400; ++s) {
      auto c = Carrier::range(1 + rng() % 6);
      Rel a = random_relation(c, 0.25, rng);
      auto conf = is_confluent(a).verdict;
      disagree += conf != is_church_rosser(a).verdict;
      oracle_bad += (conf == Verdict::Holds) != oracle_confluent(a);
      diamond_not_weak += has_diamond(a).verdict == Verdict::Holds &&
                          is_weakly_confluent(a).verdict != Verdict::Holds;
    }
    CHECK(disagree == 0);
    CHECK(oracle_bad == 0);
    CHECK(diamond_not_weak == 0);
  }

  TEST_CASE("CP conditions on the arithmetic system") {
    Trs trs = arithmetic_trs();
    auto c = make_term_carrier({trs.signature, {}, 2, 2});
    CpReport r = check_cp(trs, c);
    CHECK(r.get("CP-1'").verdict == Verdict::Holds);
    CHECK(r.get("CP-1").verdict == Verdict::Holds);
    CHECK(r.universe_size == c->size());
    CHECK_THROWS_AS(r.get("CP-3"), std::out_of_range);
  }

  TEST_CASE("CP-1' detects overlapping rules") {
    Trs trs = arithmetic_trs();
    trs.rules.push_back({T("A(0,x)"), T("S(0)")});
    auto c = make_term_carrier({trs.signature, {}, 1, 1});
    CHECK(check_cp(trs, c).get("CP-1'").verdict == Verdict::Fails);
  }

  TEST_CASE("weak-confluence technique") {
    auto c = make_term_carrier({arithmetic_signature(), {}, 1, 1});
    auto r = check_weak_confluence_technique(bot(c));
    CHECK(r.premises_hold());
    CHECK(r.conclusion.verdict == Verdict::Holds);
  }

  TEST_CASE("peak enumeration") {
    Trs trs = arithmetic_trs();
    auto seeds = terms_up_to_depth(trs.signature, {}, 2);
    auto g = reachable(trs, seeds, StepKind::Seq);
    auto r = weak_confluence_by_peaks(g);
    CHECK(r.verdict == Verdict::Holds);
    CHECK(r.peaks > 0);
    CHECK(is_weakly_confluent(g.relation()).verdict == Verdict::Holds);

    Trs bad = arithmetic_trs();
    bad.rules.push_back({T("A(x,0)"), T("S(0)")});
    auto gb = reachable(bad, {T("A(0,0)")}, StepKind::Seq);
    auto rb = weak_confluence_by_peaks(gb);
    CHECK(rb.verdict == Verdict::Fails);
    REQUIRE(rb.witness);
    CHECK(gb.nodes()[*rb.witness->source] == T("A(0,0)"));

    auto partial = reachable(trs, {T("M(S(S(0)),S(0))")}, StepKind::Seq, 1);
    CHECK_THROWS_AS(weak_confluence_by_peaks(partial), NotExhaustive);
  }

  TEST_CASE("spectrum and closure semantics on depth-2 seeds") {
    Trs trs = arithmetic_trs();
    auto seeds = terms_up_to_depth(trs.signature, {}, 2);
    SpectrumReport s = check_spectrum(trs, seeds);
    CHECK(s.verdict() == Verdict::Holds);
    CHECK(s.seq_not_in_par == 0);
    CHECK(s.par_star_equal);

    ClosureAgreement a = check_closure_semantics(trs, seeds);
    CHECK(a.closed);
    CHECK(a.par_mismatches == 0);
    CHECK(a.full_mismatches == 0);
    CHECK(a.bare_full_mismatches > 0);
  }
}
