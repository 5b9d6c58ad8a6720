// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "reltrs/laws.hpp"
#include "reltrs/relalg.hpp"

using namespace reltrs;
using namespace reltrs::test;

namespace {

// Every relation on a carrier of size n, as a bit pattern over n*n pairs.
Rel from_bits(const CarrierPtr& c, unsigned bits) {
  Rel r(c);
  std::size_t n = c->size();
  for (std::size_t k = 0; k < n * n; ++k) {
    if (bits >> k & 1u) r.set(k / n, k % n);
  }
  return r;
}

// Brute-force composition straight from the definition.
Rel naive_compose(const Rel& a, const Rel& b) {
  Rel out(a.carrier());
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      for (std::size_t k = 0; k < a.n(); ++k) {
        if (a.test(i, k) && b.test(k, j)) out.set(i, j);
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("relalg") {
  TEST_CASE("constants") {
    auto c = numbered(2);
    CHECK(pairs_of(id(c)) == Pairs{{"1", "1"}, {"2", "2"}});
    CHECK(bot(c).empty());
    CHECK(top(c).count() == 4);
  }

  TEST_CASE("lattice") {
    auto c = numbered(3);
    Rel a = rel_of(c, {{"1", "2"}});
    Rel b = rel_of(c, {{"2", "3"}});
    CHECK(pairs_of(join(a, b)) == Pairs{{"1", "2"}, {"2", "3"}});
    CHECK(meet(a, top(c)) == a);
    CHECK(leq(bot(c), a));
    CHECK_FALSE(leq(b, a));
  }

  TEST_CASE("composition and converse") {
    auto c = numbered(3);
    Rel a = rel_of(c, {{"1", "2"}});
    Rel b = rel_of(c, {{"2", "3"}});
    CHECK(pairs_of(compose(a, b)) == Pairs{{"1", "3"}});
    CHECK(compose(a, id(c)) == a);
    CHECK(compose(bot(c), a).empty());
    CHECK(pairs_of(converse(a)) == Pairs{{"2", "1"}});
    CHECK(converse(id(c)) == id(c));
    CHECK(converse(converse(b)) == b);
  }

  TEST_CASE("carrier mismatch is rejected") {
    CHECK_THROWS_AS(join(id(numbered(2)), id(numbered(3))), CarrierMismatch);
    CHECK_THROWS_AS(join(id(numbered(2)), id(Carrier::range(2))), CarrierMismatch);
    CHECK_NOTHROW(join(id(numbered(2)), id(numbered(2))));
    auto c = numbered(2);
    CHECK_NOTHROW(join(id(c), bot(c)));
  }

  TEST_CASE("compose agrees with the definition on random relations") {
    std::mt19937_64 rng(7);
    for (int s = 0; s < 200; ++s) {
      auto c = Carrier::range(1 + rng() % 70);
      Rel a = random_relation(c, 0.1, rng);
      Rel b = random_relation(c, 0.1, rng);
      REQUIRE(compose(a, b) == naive_compose(a, b));
    }
  }

  TEST_CASE("residuals") {
    auto c = numbered(2);
    CHECK(residual_right(id(c), bot(c)) == top(c));
    CHECK(leq(id(c), residual_right(id(c), id(c))));
  }

  TEST_CASE("residual is the largest solution, by brute force") {
    auto c = numbered(3);
    Rel cc = rel_of(c, {{"1", "3"}});
    Rel b = rel_of(c, {{"2", "3"}});
    Rel expect(c);
    for (unsigned bits = 0; bits < 512; ++bits) {
      Rel x = from_bits(c, bits);
      if (leq(naive_compose(x, b), cc)) expect = join(expect, x);
    }
    Rel got = residual_right(cc, b);
    CHECK(got == expect);
    // x;b <= c only constrains column 2, and only 1 may reach 2.
    CHECK(got.test(0, 1));
    CHECK_FALSE(got.test(1, 1));
    CHECK_FALSE(got.test(2, 1));
    CHECK(got.count() == 7);

    Rel a = rel_of(c, {{"1", "2"}});
    Rel left(c);
    for (unsigned bits = 0; bits < 512; ++bits) {
      Rel x = from_bits(c, bits);
      if (leq(naive_compose(a, x), cc)) left = join(left, x);
    }
    CHECK(residual_left(a, cc) == left);
  }

  TEST_CASE("closures") {
    auto c = numbered(3);
    CHECK(kleene_star(bot(c)) == id(c));
    Rel a = rel_of(c, {{"1", "2"}, {"2", "3"}});
    CHECK(pairs_of(kleene_star(a)) ==
          Pairs{{"1", "1"}, {"2", "2"}, {"3", "3"}, {"1", "2"}, {"2", "3"},
                {"1", "3"}});
    CHECK(kleene_star(a) == warshall_star(a));
    CHECK(pairs_of(trans_closure(a)) == Pairs{{"1", "2"}, {"2", "3"}, {"1", "3"}});
    CHECK(pairs_of(sym_closure(rel_of(c, {{"1", "2"}}))) ==
          Pairs{{"1", "2"}, {"2", "1"}});
    CHECK(refl_closure(a) == join(a, id(c)));
    CHECK(power(a, 0) == id(c));
    CHECK(power(a, 2) == rel_of(c, {{"1", "3"}}));
  }

  TEST_CASE("kleene_star matches Warshall on random relations") {
    std::mt19937_64 rng(11);
    for (int s = 0; s < 300; ++s) {
      auto c = Carrier::range(1 + rng() % 80);
      double density = 0.5 * static_cast<double>(rng() % 100) / 100.0 / 4;
      Rel a = random_relation(c, density, rng);
      REQUIRE(kleene_star(a) == warshall_star(a));
    }
  }

  TEST_CASE("lfp") {
    auto c = numbered(3);
    Rel k = rel_of(c, {{"1", "3"}});
    CHECK(lfp([&](const Rel&) { return k; }, c) == k);
    CHECK(lfp([](const Rel& x) { return x; }, c).empty());
    Rel a = rel_of(c, {{"1", "2"}, {"2", "3"}, {"3", "1"}});
    Rel mu = lfp([&](const Rel& x) { return join(id(c), compose(a, x)); }, c);
    CHECK(mu == warshall_star(a));
    // A non-monotone map that flips between two values never stabilises.
    CHECK_THROWS_AS(
        lfp([&](const Rel& x) { return x.empty() ? top(c) : bot(c); }, c),
        LfpDiverged);
  }

  TEST_CASE("coreflexive") {
    auto c = numbered(2);
    CHECK(is_coreflexive(id(c)));
    CHECK(is_coreflexive(bot(c)));
    CHECK_FALSE(is_coreflexive(rel_of(c, {{"1", "2"}})));
  }

  TEST_CASE("random_relation") {
    auto c = Carrier::range(6);
    std::mt19937_64 rng(3);
    CHECK(random_relation(c, 0.0, rng).empty());
    CHECK(random_relation(c, 1.0, rng) == top(c));
    std::mt19937_64 r1(42), r2(42);
    CHECK(random_relation(c, 0.3, r1) == random_relation(c, 0.3, r2));
  }

  TEST_CASE("labelled pairs are sorted by label") {
    auto c = Carrier::make({"b", "a"});
    Rel r(c);
    r.set(0, 1);
    r.set(1, 0);
    auto v = r.labelled_pairs();
    REQUIRE(v.size() == 2);
    CHECK(v[0].first == "a");
  }
}
