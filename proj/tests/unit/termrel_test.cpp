// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "fixtures.hpp"
#include "reltrs/rewrite.hpp"
#include "reltrs/termrel.hpp"

using namespace reltrs;
using namespace reltrs::test;

namespace {

CarrierPtr work_carrier() {
  static const CarrierPtr c =
      make_term_carrier({arithmetic_signature(), {"x", "y"}, 1, 2});
  return c;
}

CarrierPtr ground_carrier(unsigned depth) {
  return make_term_carrier({arithmetic_signature(), {}, depth, depth});
}

// Closure universe of everything reachable from the seeds, in any number of
// full steps.
CarrierPtr reach_carrier(const std::vector<Term>& seeds) {
  Trs trs = arithmetic_trs();
  ReductionGraph g = reachable(trs, seeds, StepKind::Full);
  return Carrier::of(
      Universe::closure(trs.signature, trs.variables, g.nodes()));
}

Rel R(const CarrierPtr& c, const Pairs& ps) {
  Rel r(c);
  const Universe& u = universe_of(c);
  for (const auto& [l, rr] : ps) r.set(u.id_of(T(l)), u.id_of(T(rr)));
  return r;
}

bool has(const Rel& r, const std::string& l, const std::string& rr) {
  const Universe& u = universe_of(r);
  auto i = u.find(T(l));
  auto j = u.find(T(rr));
  return i && j && r.test(*i, *j);
}

}  // namespace

TEST_SUITE("termrel") {
  TEST_CASE("working carrier sizes") {
    CHECK(work_carrier()->size() == 1179);
    CHECK(ground_carrier(3)->size() == 2776);
    CHECK_THROWS_AS(make_term_carrier({arithmetic_signature(), {"x"}, 2, 1}),
                    std::invalid_argument);
  }

  TEST_CASE("I_eta and I_Sigma0") {
    auto c = work_carrier();
    CHECK(pairs_of(i_eta(c)) == Pairs{{"x", "x"}, {"y", "y"}});
    CHECK(i_eta(ground_carrier(1)).empty());
    CHECK(pairs_of(i_sigma0(c)) == Pairs{{"0", "0"}});
    CHECK(leq(i_sigma0(c), id(c)));
    auto no_consts = make_term_carrier({Signature{{"S", 1}}, {"x"}, 1, 2});
    CHECK(i_sigma0(no_consts).empty());
    CHECK(meet(i_eta(c), tilde(top(c))).empty());
  }

  TEST_CASE("tilde") {
    auto c = work_carrier();
    CHECK(tilde(bot(c)) == i_sigma0(c));
    Rel a = R(c, {{"0", "S(0)"}});
    Rel t = tilde(a);
    CHECK(has(t, "S(0)", "S(S(0))"));
    CHECK(has(t, "0", "0"));
    CHECK_FALSE(has(t, "0", "S(0)"));
    CHECK(meet(i_eta(c), tilde(top(c))).empty());
    std::size_t var_pairs = 0;
    const Universe& u = universe_of(c);
    tilde(top(c)).for_each_pair([&](std::size_t i, std::size_t j) {
      var_pairs += u.is_var(static_cast<TermId>(i)) ||
                   u.is_var(static_cast<TermId>(j));
    });
    CHECK(var_pairs == 0);
  }

  TEST_CASE("hat") {
    auto c = work_carrier();
    CHECK(hat(bot(c)) == join(i_eta(c), i_sigma0(c)));
    CHECK(lfp([](const Rel& x) { return hat(x); }, c) == id(c));
    Rel a = R(c, {{"0", "S(0)"}});
    CHECK(has(hat(a), "x", "x"));
    CHECK(has(hat(a), "y", "y"));
  }

  TEST_CASE("relational substitution") {
    auto c = work_carrier();
    Trs trs = arithmetic_trs();
    Rel rules = rules_relation(trs, c);
    CHECK(has(subst_rel(rules, id(c)), "A(0,S(0))", "S(0)"));
    CHECK(subst_rel(id(c), id(c)) == id(c));
    Rel b = R(c, {{"0", "S(0)"}, {"x", "S(x)"}});
    CHECK(leq(subst_rel(i_eta(c), b), b));
    // Ground pairs survive an empty b only under the occurring reading.
    Rel g = R(c, {{"0", "S(0)"}});
    CHECK(subst_rel(g, bot(c), SubstReading::Occurring) == g);
    CHECK(subst_rel(g, bot(c), SubstReading::Strict).empty());
  }

  TEST_CASE("substitution is not associative") {
    // b only relates x, so a[b] has to send both x and y to x. b[c] is
    // ground, and a[b[c]] may instantiate x and y independently.
    auto c = work_carrier();
    Rel a = R(c, {{"A(x,y)", "A(x,y)"}});
    Rel b = R(c, {{"x", "x"}});
    Rel cc = R(c, {{"0", "0"}, {"S(0)", "S(0)"}});
    for (auto reading : {SubstReading::Occurring, SubstReading::Strict}) {
      Rel left = subst_rel(subst_rel(a, b, reading), cc, reading);
      Rel right = subst_rel(a, subst_rel(b, cc, reading), reading);
      CHECK(pairs_of(subst_rel(a, b, reading)) ==
            Pairs{{"A(x,x)", "A(x,x)"}});
      CHECK(has(right, "A(0,S(0))", "A(0,S(0))"));
      CHECK_FALSE(has(left, "A(0,S(0))", "A(0,S(0))"));
      CHECK(leq(left, right));
    }
  }

  TEST_CASE("check") {
    auto c = work_carrier();
    Rel a = R(c, {{"0", "S(0)"}});
    CHECK(has(check(a), "S(0)", "S(S(0))"));
    CHECK(has(check(a), "A(0,x)", "A(S(0),x)"));
    CHECK_FALSE(has(check(a), "0", "S(0)"));
    CHECK(leq(check(id(c)), id(c)));
    CHECK(check(bot(c)).empty());
    const Universe& u = universe_of(c);
    std::size_t leaf_pairs = 0;
    check(top(c)).for_each_pair([&](std::size_t i, std::size_t j) {
      leaf_pairs += u.arity(static_cast<TermId>(i)) == 0 ||
                    u.arity(static_cast<TermId>(j)) == 0;
    });
    CHECK(leaf_pairs == 0);
  }

  TEST_CASE("derivative") {
    auto c = work_carrier();
    Rel b = R(c, {{"0", "S(0)"}, {"x", "0"}});
    CHECK(derivative(id(c), b) == check(b));
    Rel a = R(c, {{"0", "S(0)"}});
    Rel d = derivative(bot(c), a);
    CHECK(has(d, "S(0)", "S(S(0))"));
    CHECK_FALSE(has(d, "A(0,0)", "A(S(0),0)"));
    CHECK(tilde(a) == join(derivative(a, a), i_sigma0(c)));
  }

  TEST_CASE("taylor") {
    auto c = work_carrier();
    Rel a = R(c, {{"0", "S(0)"}});
    CHECK(taylor(0, a) == i_sigma0(c));
    CHECK(pairs_of(taylor(1, a)) == Pairs{{"S(0)", "S(S(0))"}});
    Rel sum = bot(c);
    for (unsigned n = 0; n <= 2; ++n) sum = join(sum, taylor(n, a));
    CHECK(sum == tilde(a));
  }

  TEST_CASE("closures of the empty relation") {
    auto c = work_carrier();
    CHECK(parallel_closure(bot(c)) == id(c));
    CHECK(sequential_closure(bot(c)).empty());
    CHECK(full_closure(bot(c)) == id(c));
  }

  TEST_CASE("closures of the arithmetic rules") {
    Trs trs = arithmetic_trs();
    Term t = T("M(M(0,0),A(S(x),y))");
    auto c = reach_carrier({t});
    Rel rt = ground_instances(trs, c);
    Rel p = parallel_closure(rt);
    Rel s = sequential_closure(rt);
    Rel f = full_closure(rt);
    CHECK(has(p, "M(M(0,0),A(S(x),y))", "M(0,S(A(x,y)))"));
    CHECK(has(s, "M(M(0,0),A(S(x),y))", "M(0,A(S(x),y))"));
    CHECK_FALSE(has(s, "M(M(0,0),A(S(x),y))", "M(0,S(A(x,y)))"));
    CHECK(has(f, "M(M(0,0),A(S(x),y))", "0"));
    CHECK_FALSE(has(p, "M(M(0,0),A(S(x),y))", "0"));
    CHECK(leq(id(c), p));
    CHECK(leq(rt, s));
    CHECK(leq(s, p));
    CHECK(leq(p, f));
    auto c2 = reach_carrier({T("M(0,A(0,0))")});
    CHECK(has(sequential_closure(ground_instances(trs, c2)), "M(0,A(0,0))",
              "M(0,0)"));
  }

  TEST_CASE("ground instances") {
    Trs trs = arithmetic_trs();
    auto c = work_carrier();
    Rel rt = ground_instances(trs, c);
    CHECK(has(rt, "A(0,0)", "0"));
    CHECK(compose(i_eta(c), rt).empty());
    CHECK(rt == subst_rel(rules_relation(trs, c), id(c)));
  }

  TEST_CASE("full closure is not the star of parallel closure") {
    // A(S(0),S(0)) needs two rule applications at nested positions, the
    // second one at a position created by the first.
    Trs trs = arithmetic_trs();
    Term t = T("A(S(0),S(0))");
    CHECK(strings(full_step(trs, t)) ==
          std::set<std::string>{"A(S(0),S(0))", "S(A(0,S(0)))"});
    CHECK(bfs_reducts(trs, t).count(T("S(S(0))")) == 1);
    auto c = reach_carrier({t});
    Rel rt = ground_instances(trs, c);
    CHECK_FALSE(has(full_closure(rt), "A(S(0),S(0))", "S(S(0))"));
    CHECK(has(kleene_star(parallel_closure(rt)), "A(S(0),S(0))", "S(S(0))"));
  }

  TEST_CASE("parallel closure does not compose through reflexive steps") {
    auto c = work_carrier();
    Rel a = R(c, {{"0", "S(0)"}});
    Rel lhs = compose(parallel_closure(a), parallel_closure(a));
    Rel ad = join(a, id(c));
    Rel rhs = parallel_closure(compose(ad, ad));
    CHECK(has(lhs, "0", "S(S(0))"));
    CHECK_FALSE(has(rhs, "0", "S(S(0))"));
  }

  TEST_CASE("bare full closure misses reflexive congruence") {
    Trs trs = arithmetic_trs();
    auto c = reach_carrier({T("A(0,A(0,0))")});
    Rel rt = ground_instances(trs, c);
    Rel refl = full_closure(rt, FullClosureVariant::Reflexive);
    Rel bare = full_closure(rt, FullClosureVariant::Bare);
    CHECK(leq(bare, refl));
    CHECK(has(refl, "A(0,A(0,0))", "A(0,0)"));
    CHECK(has(refl, "0", "0"));
    CHECK_FALSE(has(bare, "0", "0"));
  }

  TEST_CASE("overflow is counted") {
    auto c = work_carrier();
    OverflowStats st;
    // S(0) lies in the universe but S(S(S(0))) does not.
    Rel a = R(c, {{"0", "S(S(0))"}});
    Rel t = tilde(a, &st);
    CHECK(st.dropped > 0);
    CHECK_FALSE(has(t, "S(0)", "S(S(0))"));
    OverflowStats none;
    tilde(R(c, {{"A(0,0)", "A(0,0)"}}), &none);
    CHECK(none.dropped == 0);
    CHECK(restrict_depth(top(c), 0).count() == 9);
  }
}
