// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

// Laws of the relation algebra, sampled over small plain carriers.

#include <cstdint>

#include "laws_internal.hpp"

namespace reltrs::detail {

namespace {

using K = LawKind;

void add(std::vector<LawDef>& out, std::string id, std::string anchor, K kind,
         std::function<void(SampleCtx&)> body) {
  out.push_back(law(std::move(id), std::move(anchor), kind, LawSuite::Relation,
                    std::move(body)));
}

// A relation that is above `a` half of the time and random otherwise, so
// that both sides of an equivalence get exercised.
Rel maybe_above(SampleCtx& s, const std::string& name, const Rel& a,
                const Rel& b) {
  Rel r = s.rel(name, a.carrier());
  if (s.coin(0.5)) r = join(join(a, b), r);
  s.record(name, r);
  return r;
}

// All relations over a carrier with at most 9 pairs, by bit pattern.
Rel rel_from_bits(const CarrierPtr& c, std::uint32_t bits) {
  Rel r(c);
  std::size_t n = c->size();
  for (std::size_t k = 0; k < n * n; ++k) {
    if (bits >> k & 1u) r.set(k / n, k % n);
  }
  return r;
}

}  // namespace

void register_relation_laws(std::vector<LawDef>& out) {
  add(out, "rel.bot-least", "bot <= a", K::Inequality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    Rel a = s.rel("a", c);
    s.leq(bot(c), a, "bot <= a");
  });
  add(out, "rel.top-greatest", "a <= top", K::Inequality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    Rel a = s.rel("a", c);
    s.leq(a, top(c), "a <= top");
  });
  add(out, "rel.join-universal", "a v b <= c <=> a <= c and b <= c",
      K::Equality, [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c);
        Rel b = s.rel("b", c);
        Rel x = maybe_above(s, "c", a, bot(c));
        s.expect(leq(join(a, b), x) == (leq(a, x) && leq(b, x)),
                 "join universal property");
        s.leq(a, join(a, b), "a <= a v b");
        s.leq(b, join(a, b), "b <= a v b");
      });
  add(out, "rel.meet-universal", "c <= a ^ b <=> c <= a and c <= b",
      K::Equality, [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c);
        Rel b = s.rel("b", c);
        Rel x = s.rel("c", c);
        if (s.coin(0.5)) {
          x = meet(meet(a, b), x);
          s.record("c", x);
        }
        s.expect(leq(x, meet(a, b)) == (leq(x, a) && leq(x, b)),
                 "meet universal property");
      });
  add(out, "rel.unit-right", "a;id = a", K::Equality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    Rel a = s.rel("a", c);
    s.eq(compose(a, id(c)), a, "a;id = a");
  });
  add(out, "rel.unit-left", "id;a = a", K::Equality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    Rel a = s.rel("a", c);
    s.eq(compose(id(c), a), a, "id;a = a");
  });
  add(out, "rel.compose-assoc", "a;(b;c) = (a;b);c", K::Equality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c, 0.3);
        Rel b = s.rel("b", c, 0.3);
        Rel d = s.rel("c", c, 0.3);
        s.eq(compose(a, compose(b, d)), compose(compose(a, b), d),
             "a;(b;c) = (a;b);c");
      });
  add(out, "rel.zero-right", "a;bot = bot", K::Equality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    Rel a = s.rel("a", c);
    s.eq(compose(a, bot(c)), bot(c), "a;bot = bot");
  });
  add(out, "rel.zero-left", "bot;a = bot", K::Equality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    Rel a = s.rel("a", c);
    s.eq(compose(bot(c), a), bot(c), "bot;a = bot");
  });
  add(out, "rel.distrib-left", "a;(b v c) = a;b v a;c", K::Equality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c, 0.3);
        Rel b = s.rel("b", c);
        Rel d = s.rel("c", c);
        s.eq(compose(a, join(b, d)), join(compose(a, b), compose(a, d)),
             "a;(b v c) = a;b v a;c");
      });
  add(out, "rel.distrib-right", "(a v b);c = a;c v b;c", K::Equality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c);
        Rel b = s.rel("b", c);
        Rel d = s.rel("c", c, 0.3);
        s.eq(compose(join(a, b), d), join(compose(a, d), compose(b, d)),
             "(a v b);c = a;c v b;c");
      });
  add(out, "rel.compose-monotone", "a <= a', b <= b' => a;b <= a';b'",
      K::Implication, [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c);
        Rel b = s.rel("b", c);
        Rel a2 = join(a, s.rel("a_extra", c));
        Rel b2 = join(b, s.rel("b_extra", c));
        s.leq(compose(a, b), compose(a2, b2), "a;b <= a';b'");
      });
  add(out, "rel.converse-galois", "a° <= b <=> a <= b°", K::Equality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c);
        Rel b = s.rel("b", c);
        if (s.coin(0.5)) {
          b = join(b, converse(a));
          s.record("b", b);
        }
        s.expect(leq(converse(a), b) == leq(a, converse(b)),
                 "a° <= b <=> a <= b°");
      });
  add(out, "rel.converse-id", "id° = id", K::Equality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    s.eq(converse(id(c)), id(c), "id° = id");
  });
  add(out, "rel.converse-bot", "bot° = bot", K::Equality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    s.eq(converse(bot(c)), bot(c), "bot° = bot");
  });
  add(out, "rel.converse-top", "top° = top", K::Equality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    s.eq(converse(top(c)), top(c), "top° = top");
  });
  add(out, "rel.converse-involution", "a°° = a", K::Equality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    Rel a = s.rel("a", c);
    s.eq(converse(converse(a)), a, "a°° = a");
  });
  add(out, "rel.converse-compose", "(a;b)° = b°;a°", K::Equality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c, 0.3);
        Rel b = s.rel("b", c, 0.3);
        s.eq(converse(compose(a, b)), compose(converse(b), converse(a)),
             "(a;b)° = b°;a°");
      });
  add(out, "rel.converse-join", "(a v b)° = a° v b°", K::Equality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c);
        Rel b = s.rel("b", c);
        s.eq(converse(join(a, b)), join(converse(a), converse(b)),
             "(a v b)° = a° v b°");
      });
  add(out, "rel.residual-right", "a;b <= c <=> a <= c/b", K::Equality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c);
        Rel b = s.rel("b", c, 0.3);
        Rel x = maybe_above(s, "c", compose(a, b), bot(c));
        s.expect(leq(compose(a, b), x) == leq(a, residual_right(x, b)),
                 "a;b <= c <=> a <= c/b");
      });
  add(out, "rel.residual-left", "a;b <= c <=> b <= a\\c", K::Equality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c, 0.3);
        Rel b = s.rel("b", c);
        Rel x = maybe_above(s, "c", compose(a, b), bot(c));
        s.expect(leq(compose(a, b), x) == leq(b, residual_left(a, x)),
                 "a;b <= c <=> b <= a\\c");
      });
  add(out, "rel.residual-right-cancel", "(a/b);b <= a", K::Inequality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c, 0.4);
        Rel b = s.rel("b", c, 0.3);
        s.leq(compose(residual_right(a, b), b), a, "(a/b);b <= a");
      });
  add(out, "rel.residual-left-cancel", "a;(a\\b) <= b", K::Inequality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c, 0.3);
        Rel b = s.rel("b", c, 0.4);
        s.leq(compose(a, residual_left(a, b)), b, "a;(a\\b) <= b");
      });
  add(out, "rel.galois-cancellation", "F(G(c)) <= c and a <= G(F(a))",
      K::Inequality, [](SampleCtx& s) {
        // F = (-;b) with upper adjoint G = (-/b).
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c);
        Rel b = s.rel("b", c, 0.3);
        Rel x = s.rel("c", c, 0.4);
        s.leq(compose(residual_right(x, b), b), x, "F(G(c)) <= c");
        s.leq(a, residual_right(compose(a, b), b), "a <= G(F(a))");
      });
  add(out, "rel.continuous-adjoint", "g(y) = join {x | f(x) <= y}",
      K::Equality, [](SampleCtx& s) {
        // f = (-;b) preserves joins; its adjoint computed as the join of all
        // x with f(x) <= y must be an upper adjoint and match c/b.
        auto c = s.plain_carrier(3);
        Rel b = s.rel("b", c, 0.3);
        Rel y = s.rel("y", c, 0.4);
        Rel x0 = s.rel("x", c);
        std::size_t n = c->size();
        Rel g = bot(c);
        for (std::uint32_t bits = 0; bits < (1u << (n * n)); ++bits) {
          Rel x = rel_from_bits(c, bits);
          if (leq(compose(x, b), y)) g = join(g, x);
        }
        s.expect(leq(compose(x0, b), y) == leq(x0, g), "f(x) <= y <=> x <= g(y)");
        s.eq(g, residual_right(y, b), "g(y) = y/b");
      });
  add(out, "rel.modular", "(a;b) ^ c <= (a ^ c;b°);b", K::Inequality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c, 0.3);
        Rel b = s.rel("b", c, 0.3);
        Rel x = s.rel("c", c, 0.4);
        s.leq(meet(compose(a, b), x), compose(meet(a, compose(x, converse(b))), b),
              "(a;b) ^ c <= (a ^ c;b°);b");
      });
  add(out, "rel.star-monotone", "a <= b => a* <= b*", K::Implication,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c);
        Rel b = join(a, s.rel("b_extra", c));
        s.leq(kleene_star(a), kleene_star(b), "a* <= b*");
      });
  add(out, "rel.star-idempotent", "a** = a*", K::Equality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    Rel a = s.rel("a", c);
    s.eq(kleene_star(kleene_star(a)), kleene_star(a), "a** = a*");
  });
  add(out, "rel.star-extensive", "a <= a*", K::Inequality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    Rel a = s.rel("a", c);
    s.leq(a, kleene_star(a), "a <= a*");
  });
  add(out, "rel.star-converse", "a*° = a°*", K::Equality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    Rel a = s.rel("a", c);
    s.eq(converse(kleene_star(a)), kleene_star(converse(a)), "a*° = a°*");
  });
  add(out, "rel.star-powers", "a^(n) <= a*", K::Inequality, [](SampleCtx& s) {
    auto c = s.plain_carrier();
    Rel a = s.rel("a", c, 0.3);
    Rel st = kleene_star(a);
    for (unsigned n = 0; n <= 5; ++n) {
      s.leq(power(a, n), st, "a^(" + std::to_string(n) + ") <= a*");
    }
  });
  add(out, "rel.star-fixpoint", "a* = mu x. id v a;x", K::Equality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c, 0.3);
        Rel e = id(c);
        Rel mu = lfp([&](const Rel& x) { return join(e, compose(a, x)); }, c);
        s.eq(kleene_star(a), mu, "a* = mu x. id v a;x");
      });
  add(out, "rel.plus-fixpoint", "a+ = mu x. a v a;x", K::Equality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c, 0.3);
        Rel mu = lfp([&](const Rel& x) { return join(a, compose(a, x)); }, c);
        Rel plus = trans_closure(a);
        s.eq(plus, mu, "a+ = mu x. a v a;x");
        s.leq(compose(plus, plus), plus, "a+;a+ <= a+");
        s.eq(compose(a, kleene_star(a)), plus, "a;a* = a+");
      });
  add(out, "rel.refl-closure", "id <= a^r and a <= a^r", K::Inequality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c);
        Rel r = refl_closure(a);
        s.leq(id(c), r, "id <= a^r");
        s.leq(a, r, "a <= a^r");
        s.eq(r, join(a, id(c)), "a^r = a v id");
      });
  add(out, "rel.sym-closure", "a <= a^s and a^s° = a^s", K::Equality,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = s.rel("a", c);
        Rel r = sym_closure(a);
        s.leq(a, r, "a <= a^s");
        s.eq(converse(r), r, "(a^s)° = a^s");
      });
  add(out, "rel.coreflexive-compose", "a, b <= id => a;b = a ^ b",
      K::Implication, [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = meet(s.rel("a", c, 0.5), id(c));
        Rel b = meet(s.rel("b", c, 0.5), id(c));
        s.expect(is_coreflexive(a) && is_coreflexive(b), "coreflexive inputs");
        s.eq(compose(a, b), meet(a, b), "a;b = a ^ b");
      });
  add(out, "rel.coreflexive-converse", "a <= id => a° = a", K::Implication,
      [](SampleCtx& s) {
        auto c = s.plain_carrier();
        Rel a = meet(s.rel("a", c, 0.5), id(c));
        s.eq(converse(a), a, "a° = a");
      });
}

}  // namespace reltrs::detail
