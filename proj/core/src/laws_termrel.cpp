// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

// Laws of the term-relation operators, sampled over a finite universe.

#include "reltrs/analysis.hpp"
#include "laws_internal.hpp"

namespace reltrs::detail {

namespace {

using K = LawKind;
using S = LawScope;

struct Spec {
  std::string id;
  std::string anchor;
  K kind = K::Equality;
  LawStrength strength = LawStrength::Hard;
  S scope = S::Work;
  TermCarrier carrier = TermCarrier::Working;
  bool subst = false;
};

void add(std::vector<LawDef>& out, Spec spec,
         std::function<void(SampleCtx&)> body) {
  LawDef d = law(std::move(spec.id), std::move(spec.anchor), spec.kind,
                 LawSuite::Termrel, std::move(body));
  d.meta.strength = spec.strength;
  d.meta.scope = spec.scope;
  d.carrier = spec.carrier;
  d.uses_subst = spec.subst;
  out.push_back(std::move(d));
}

Rel above(SampleCtx& s, const Rel& a, const std::string& extra) {
  return join(a, s.term_rel(extra));
}

Rel delta(SampleCtx& s) { return id(s.carrier()); }

Rel par(SampleCtx& s, const Rel& a) { return parallel_closure(a, s.stats()); }
Rel seq(SampleCtx& s, const Rel& a) { return sequential_closure(a, s.stats()); }
Rel full(SampleCtx& s, const Rel& a) {
  return full_closure(a, s.cfg().full_variant, s.stats());
}

unsigned random_arity(SampleCtx& s) {
  unsigned n = static_cast<unsigned>(s.below(s.cfg().signature.max_arity() + 1));
  s.record("n", n);
  return n;
}

// a <= b => f(a) <= f(b) for a unary operator.
template <class F>
void monotone_law(SampleCtx& s, F f, std::string_view what) {
  Rel a = s.term_rel("a");
  Rel b = above(s, a, "b_extra");
  s.leq(f(a), f(b), what);
}

// f(join of an increasing chain) = join of the images.
template <class F>
void chain_law(SampleCtx& s, F f, std::string_view what) {
  Rel a0 = s.term_rel("a0");
  Rel a1 = above(s, a0, "a1_extra");
  Rel a2 = above(s, a1, "a2_extra");
  s.eq(f(join(join(a0, a1), a2)), join(join(f(a0), f(a1)), f(a2)), what);
}

void register_subst(std::vector<LawDef>& out) {
  add(out, {.id = "subst.id", .anchor = "id[id] = id", .subst = true},
      [](SampleCtx& s) {
        Rel d = delta(s);
        s.eq(s.subst(d, d), d, "id[id] = id");
      });
  add(out,
      {.id = "subst.compose",
       .anchor = "(a;b)[a';b'] <= a[a'];b[b']",
       .kind = K::Inequality,
       .subst = true},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        Rel a2 = s.term_rel("a'"), b2 = s.term_rel("b'");
        s.leq(s.subst(compose(a, b), compose(a2, b2)),
              compose(s.subst(a, a2), s.subst(b, b2)),
              "(a;b)[a';b'] <= a[a'];b[b']");
      });
  add(out, {.id = "subst.converse", .anchor = "(a[b])° = a°[b°]", .subst = true},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        s.eq(converse(s.subst(a, b)), s.subst(converse(a), converse(b)),
             "(a[b])° = a°[b°]");
      });
  add(out,
      {.id = "subst.monotone",
       .anchor = "a <= a', b <= b' => a[b] <= a'[b']",
       .kind = K::Implication,
       .subst = true},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        Rel a2 = above(s, a, "a_extra"), b2 = above(s, b, "b_extra");
        s.leq(s.subst(a, b), s.subst(a2, b2), "a[b] <= a'[b']");
      });
  add(out, {.id = "subst.join", .anchor = "(a v a')[b] = a[b] v a'[b]", .subst = true},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), a2 = s.term_rel("a'"), b = s.term_rel("b");
        s.eq(s.subst(join(a, a2), b), join(s.subst(a, b), s.subst(a2, b)),
             "(a v a')[b] = a[b] v a'[b]");
      });
  add(out, {.id = "subst.assoc", .anchor = "a[b][c] = a[b[c]]", .subst = true},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b"), c = s.term_rel("c");
        s.eq(s.subst(s.subst(a, b), c), s.subst(a, s.subst(b, c)),
             "a[b][c] = a[b[c]]");
      });
}

void register_congruence(std::vector<LawDef>& out) {
  add(out, {.id = "tilde.id", .anchor = "~id <= id", .kind = K::Inequality},
      [](SampleCtx& s) { s.leq(tilde(delta(s), s.stats()), delta(s), "~id <= id"); });
  add(out, {.id = "tilde.compose", .anchor = "~(a;b) = ~a;~b"}, [](SampleCtx& s) {
    Rel a = s.term_rel("a"), b = s.term_rel("b");
    s.eq(tilde(compose(a, b), s.stats()),
         compose(tilde(a, s.stats()), tilde(b, s.stats())), "~(a;b) = ~a;~b");
  });
  add(out, {.id = "tilde.converse", .anchor = "~(a°) = (~a)°"}, [](SampleCtx& s) {
    Rel a = s.term_rel("a");
    s.eq(tilde(converse(a), s.stats()), converse(tilde(a, s.stats())),
         "~(a°) = (~a)°");
  });
  add(out,
      {.id = "tilde.monotone", .anchor = "a <= b => ~a <= ~b", .kind = K::Implication},
      [](SampleCtx& s) {
        monotone_law(s, [&](const Rel& x) { return tilde(x, s.stats()); },
                     "~a <= ~b");
      });
  add(out, {.id = "tilde.continuous", .anchor = "~(join chain) = join ~chain"},
      [](SampleCtx& s) {
        chain_law(s, [&](const Rel& x) { return tilde(x, s.stats()); },
                  "~ on an increasing chain");
      });
  add(out,
      {.id = "tilde.subst",
       .anchor = "(~a)[b] <= ~(a[b])",
       .kind = K::Inequality,
       .subst = true},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        s.leq(s.subst(tilde(a, s.stats()), b), tilde(s.subst(a, b), s.stats()),
              "(~a)[b] <= ~(a[b])");
      });
  add(out, {.id = "tilde.eta-disjoint", .anchor = "I_eta ^ ~a = bot"},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.eq(meet(i_eta(s.carrier()), tilde(a, s.stats())), bot(s.carrier()),
             "I_eta ^ ~a = bot");
      });
  add(out, {.id = "hat.def", .anchor = "^a = I_eta v ~a"}, [](SampleCtx& s) {
    Rel a = s.term_rel("a");
    s.eq(hat(a, s.stats()), join(i_eta(s.carrier()), tilde(a, s.stats())),
         "^a = I_eta v ~a");
  });
  add(out, {.id = "hat.id", .anchor = "^id = id"},
      [](SampleCtx& s) { s.eq(hat(delta(s), s.stats()), delta(s), "^id = id"); });
  add(out, {.id = "hat.compose", .anchor = "^(a;b) = ^a;^b"}, [](SampleCtx& s) {
    Rel a = s.term_rel("a"), b = s.term_rel("b");
    s.eq(hat(compose(a, b), s.stats()),
         compose(hat(a, s.stats()), hat(b, s.stats())), "^(a;b) = ^a;^b");
  });
  add(out, {.id = "hat.converse", .anchor = "^(a°) = (^a)°"}, [](SampleCtx& s) {
    Rel a = s.term_rel("a");
    s.eq(hat(converse(a), s.stats()), converse(hat(a, s.stats())),
         "^(a°) = (^a)°");
  });
  add(out,
      {.id = "hat.monotone", .anchor = "a <= b => ^a <= ^b", .kind = K::Implication},
      [](SampleCtx& s) {
        monotone_law(s, [&](const Rel& x) { return hat(x, s.stats()); },
                     "^a <= ^b");
      });
  add(out, {.id = "hat.continuous", .anchor = "^(join chain) = join ^chain"},
      [](SampleCtx& s) {
        chain_law(s, [&](const Rel& x) { return hat(x, s.stats()); },
                  "^ on an increasing chain");
      });
  add(out,
      {.id = "hat.subst",
       .anchor = "(^a)[b] <= ^(a[b]) v b",
       .kind = K::Inequality,
       .subst = true},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        s.leq(s.subst(hat(a, s.stats()), b),
              join(hat(s.subst(a, b), s.stats()), b), "(^a)[b] <= ^(a[b]) v b");
      });
  add(out,
      {.id = "hat.eta-subst",
       .anchor = "I_eta[b] <= b",
       .kind = K::Inequality,
       .subst = true},
      [](SampleCtx& s) {
        Rel b = s.term_rel("b");
        s.leq(s.subst(i_eta(s.carrier()), b), b, "I_eta[b] <= b");
      });
  add(out, {.id = "hat.id-lfp", .anchor = "id = mu x. ^x"}, [](SampleCtx& s) {
    Rel mu = lfp([&](const Rel& x) { return hat(x, s.stats()); }, s.carrier());
    s.eq(mu, delta(s), "id = mu x. ^x");
  });
}

void register_check(std::vector<LawDef>& out) {
  add(out, {.id = "check.id", .anchor = "check(id) <= id", .kind = K::Inequality},
      [](SampleCtx& s) {
        s.leq(check(delta(s), s.stats()), delta(s), "check(id) <= id");
      });
  add(out,
      {.id = "check.compose",
       .anchor = "check(a;b) <= check(a);check(b)",
       .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        s.leq(check(compose(a, b), s.stats()),
              compose(check(a, s.stats()), check(b, s.stats())),
              "check(a;b) <= check(a);check(b)");
      });
  add(out,
      {.id = "check.interchange",
       .anchor = "check(a);check(b) <= check(a;b) v check(b);check(a)",
       .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        Rel ca = check(a, s.stats()), cb = check(b, s.stats());
        s.leq(compose(ca, cb), join(check(compose(a, b), s.stats()), compose(cb, ca)),
              "check(a);check(b) <= check(a;b) v check(b);check(a)");
      });
  add(out, {.id = "check.converse", .anchor = "check(a°) = check(a)°"},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.eq(check(converse(a), s.stats()), converse(check(a, s.stats())),
             "check(a°) = check(a)°");
      });
  add(out,
      {.id = "check.monotone",
       .anchor = "a <= b => check(a) <= check(b)",
       .kind = K::Implication},
      [](SampleCtx& s) {
        monotone_law(s, [&](const Rel& x) { return check(x, s.stats()); },
                     "check(a) <= check(b)");
      });
  add(out, {.id = "check.join", .anchor = "check(a v b) = check(a) v check(b)"},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        s.eq(check(join(a, b), s.stats()),
             join(check(a, s.stats()), check(b, s.stats())),
             "check(a v b) = check(a) v check(b)");
      });
  add(out, {.id = "check.derivative", .anchor = "check(a) = d_id(a)"},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.eq(check(a, s.stats()), derivative(delta(s), a, s.stats()),
             "check(a) = d_id(a)");
      });
}

void register_derivative(std::vector<LawDef>& out) {
  add(out,
      {.id = "deriv.monotone",
       .anchor = "a <= a', b <= b' => d_a(b) <= d_a'(b')",
       .kind = K::Implication},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        Rel a2 = above(s, a, "a_extra"), b2 = above(s, b, "b_extra");
        s.leq(derivative(a, b, s.stats()), derivative(a2, b2, s.stats()),
              "d_a(b) <= d_a'(b')");
      });
  add(out, {.id = "deriv.id", .anchor = "d_id(id) <= id", .kind = K::Inequality},
      [](SampleCtx& s) {
        s.leq(derivative(delta(s), delta(s), s.stats()), delta(s), "d_id(id) <= id");
      });
  add(out,
      {.id = "deriv.compose",
       .anchor = "d_{a;a'}(b;b') <= d_a(b);d_a'(b')",
       .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), a2 = s.term_rel("a'");
        Rel b = s.term_rel("b"), b2 = s.term_rel("b'");
        s.leq(derivative(compose(a, a2), compose(b, b2), s.stats()),
              compose(derivative(a, b, s.stats()), derivative(a2, b2, s.stats())),
              "d_{a;a'}(b;b') <= d_a(b);d_a'(b')");
      });
  add(out, {.id = "deriv.converse", .anchor = "(d_a(b))° = d_a°(b°)"},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        s.eq(converse(derivative(a, b, s.stats())),
             derivative(converse(a), converse(b), s.stats()),
             "(d_a(b))° = d_a°(b°)");
      });
  add(out,
      {.id = "deriv.interchange",
       .anchor = "d_id(a);d_id(b) <= d_id(a;b) v d_id(b);d_id(a)",
       .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        Rel d = delta(s);
        Rel da = derivative(d, a, s.stats()), db = derivative(d, b, s.stats());
        s.leq(compose(da, db),
              join(derivative(d, compose(a, b), s.stats()), compose(db, da)),
              "d_id(a);d_id(b) <= d_id(a;b) v d_id(b);d_id(a)");
      });
  add(out, {.id = "deriv.tilde", .anchor = "~a = d_a(a) v I_Sigma0"},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.eq(tilde(a, s.stats()),
             join(derivative(a, a, s.stats()), i_sigma0(s.carrier())),
             "~a = d_a(a) v I_Sigma0");
      });
  add(out, {.id = "deriv.join", .anchor = "d_id(a v b) = d_id(a) v d_id(b)"},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        Rel d = delta(s);
        s.eq(derivative(d, join(a, b), s.stats()),
             join(derivative(d, a, s.stats()), derivative(d, b, s.stats())),
             "d_id(a v b) = d_id(a) v d_id(b)");
      });
}

void register_taylor(std::vector<LawDef>& out) {
  add(out, {.id = "taylor.id", .anchor = "t_n(id) <= id", .kind = K::Inequality},
      [](SampleCtx& s) {
        unsigned n = random_arity(s);
        s.leq(taylor(n, delta(s), s.stats()), delta(s), "t_n(id) <= id");
      });
  add(out, {.id = "taylor.compose", .anchor = "t_n(a;b) = t_n(a);t_n(b)"},
      [](SampleCtx& s) {
        unsigned n = random_arity(s);
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        s.eq(taylor(n, compose(a, b), s.stats()),
             compose(taylor(n, a, s.stats()), taylor(n, b, s.stats())),
             "t_n(a;b) = t_n(a);t_n(b)");
      });
  add(out, {.id = "taylor.converse", .anchor = "(t_n a)° = t_n(a°)"},
      [](SampleCtx& s) {
        unsigned n = random_arity(s);
        Rel a = s.term_rel("a");
        s.eq(converse(taylor(n, a, s.stats())), taylor(n, converse(a), s.stats()),
             "(t_n a)° = t_n(a°)");
      });
  add(out,
      {.id = "taylor.monotone",
       .anchor = "a <= b => t_n(a) <= t_n(b)",
       .kind = K::Implication},
      [](SampleCtx& s) {
        unsigned n = random_arity(s);
        monotone_law(s, [&](const Rel& x) { return taylor(n, x, s.stats()); },
                     "t_n(a) <= t_n(b)");
      });
  add(out, {.id = "taylor.zero", .anchor = "t_0(a) = I_Sigma0"}, [](SampleCtx& s) {
    Rel a = s.term_rel("a");
    s.eq(taylor(0, a, s.stats()), i_sigma0(s.carrier()), "t_0(a) = I_Sigma0");
  });
  add(out,
      {.id = "taylor.subst",
       .anchor = "(t_n a)[b] <= t_n(a[b])",
       .kind = K::Inequality,
       .subst = true},
      [](SampleCtx& s) {
        unsigned n = random_arity(s);
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        s.leq(s.subst(taylor(n, a, s.stats()), b),
              taylor(n, s.subst(a, b), s.stats()), "(t_n a)[b] <= t_n(a[b])");
      });
  add(out,
      {.id = "taylor.derivative",
       .anchor = "t_n(a) <= (d_id a)^(n)",
       .kind = K::Inequality},
      [](SampleCtx& s) {
        unsigned n = random_arity(s);
        Rel a = s.term_rel("a");
        s.leq(taylor(n, a, s.stats()),
              power(derivative(delta(s), a, s.stats()), n),
              "t_n(a) <= (d_id a)^(n)");
      });
  add(out, {.id = "taylor.expansion", .anchor = "~a = join_n t_n(a)"},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        Rel sum = bot(s.carrier());
        for (unsigned n = 0; n <= s.cfg().signature.max_arity(); ++n) {
          sum = join(sum, taylor(n, a, s.stats()));
        }
        s.eq(tilde(a, s.stats()), sum, "~a = join_n t_n(a)");
      });
}

void register_sequential(std::vector<LawDef>& out) {
  add(out, {.id = "seq.extensive", .anchor = "a <= a^s", .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.leq(a, seq(s, a), "a <= a^s");
      });
  add(out,
      {.id = "seq.check-closed", .anchor = "check(a^s) <= a^s", .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel as = seq(s, s.term_rel("a"));
        s.leq(check(as, s.stats()), as, "check(a^s) <= a^s");
      });
  add(out,
      {.id = "seq.idempotent", .anchor = "(a^s)^s <= a^s", .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel as = seq(s, s.term_rel("a"));
        s.leq(seq(s, as), as, "(a^s)^s <= a^s");
      });
  add(out,
      {.id = "seq.monotone", .anchor = "a <= b => a^s <= b^s", .kind = K::Implication},
      [](SampleCtx& s) {
        monotone_law(s, [&](const Rel& x) { return seq(s, x); }, "a^s <= b^s");
      });
  add(out, {.id = "seq.converse", .anchor = "(a^s)° = (a°)^s"}, [](SampleCtx& s) {
    Rel a = s.term_rel("a");
    s.eq(converse(seq(s, a)), seq(s, converse(a)), "(a^s)° = (a°)^s");
  });
  add(out,
      {.id = "seq.compose",
       .anchor = "(a;b)^s <= a^s;b^s",
       .kind = K::Inequality,
       .scope = S::Support},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        s.leq(seq(s, compose(a, b)), compose(seq(s, a), seq(s, b)),
              "(a;b)^s <= a^s;b^s");
      });
  add(out,
      {.id = "seq.star",
       .anchor = "(a*)^s <= (a^s)*",
       .kind = K::Inequality,
       .scope = S::Support},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.leq(seq(s, kleene_star(a)), kleene_star(seq(s, a)), "(a*)^s <= (a^s)*");
      });
  add(out,
      {.id = "seq.check-star",
       .anchor = "check(a*) <= (check a)*",
       .kind = K::Inequality,
       .scope = S::Support},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.leq(check(kleene_star(a), s.stats()), kleene_star(check(a, s.stats())),
              "check(a*) <= (check a)*");
      });
  add(out,
      {.id = "seq.compose-split",
       .anchor = "a^s;b^s <= a;b v a;check(b^s) v check(a^s);b v "
                 "check(a^s;b^s) v check(b^s);check(a^s)",
       .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        Rel as = seq(s, a), bs = seq(s, b);
        Rel cas = check(as, s.stats()), cbs = check(bs, s.stats());
        Rel rhs = compose(a, b);
        rhs = join(rhs, compose(a, cbs));
        rhs = join(rhs, compose(cas, b));
        rhs = join(rhs, check(compose(as, bs), s.stats()));
        rhs = join(rhs, compose(cbs, cas));
        s.leq(compose(as, bs), rhs, "a^s;b^s <= five-way split");
      });
}

void register_parallel(std::vector<LawDef>& out) {
  add(out, {.id = "par.extensive", .anchor = "a <= a^p", .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.leq(a, par(s, a), "a <= a^p");
      });
  add(out,
      {.id = "par.check-closed", .anchor = "check(a^p) <= a^p", .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel ap = par(s, s.term_rel("a"));
        s.leq(check(ap, s.stats()), ap, "check(a^p) <= a^p");
      });
  add(out,
      {.id = "par.hat-closed", .anchor = "^(a^p) <= a^p", .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel ap = par(s, s.term_rel("a"));
        s.leq(hat(ap, s.stats()), ap, "^(a^p) <= a^p");
      });
  add(out, {.id = "par.idempotent", .anchor = "(a^p)^p = a^p"}, [](SampleCtx& s) {
    Rel ap = par(s, s.term_rel("a"));
    s.eq(par(s, ap), ap, "(a^p)^p = a^p");
  });
  add(out,
      {.id = "par.monotone", .anchor = "a <= b => a^p <= b^p", .kind = K::Implication},
      [](SampleCtx& s) {
        monotone_law(s, [&](const Rel& x) { return par(s, x); }, "a^p <= b^p");
      });
  add(out, {.id = "par.reflexive", .anchor = "id <= a^p", .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.leq(delta(s), par(s, a), "id <= a^p");
      });
  add(out,
      {.id = "par.compose",
       .anchor = "(a;b)^p <= a^p;b^p",
       .kind = K::Inequality,
       .scope = S::Support},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        s.leq(par(s, compose(a, b)), compose(par(s, a), par(s, b)),
              "(a;b)^p <= a^p;b^p");
      });
  add(out,
      {.id = "par.compose-refl",
       .anchor = "a^p;b^p <= ((a v id);(b v id))^p",
       .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a"), b = s.term_rel("b");
        Rel d = delta(s);
        s.leq(compose(par(s, a), par(s, b)),
              par(s, compose(join(a, d), join(b, d))),
              "a^p;b^p <= ((a v id);(b v id))^p");
      });
}

void register_spectrum(std::vector<LawDef>& out) {
  add(out, {.id = "spectrum.seq-par", .anchor = "a^s <= a^p", .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.leq(seq(s, a), par(s, a), "a^s <= a^p");
      });
  add(out,
      {.id = "spectrum.par-seqstar", .anchor = "a^p <= (a^s)*", .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.leq(par(s, a), kleene_star(seq(s, a)), "a^p <= (a^s)*");
      });
  add(out, {.id = "spectrum.stars", .anchor = "(a^s)* = (a^p)*"}, [](SampleCtx& s) {
    Rel a = s.term_rel("a");
    s.eq(kleene_star(seq(s, a)), kleene_star(par(s, a)), "(a^s)* = (a^p)*");
  });
  add(out, {.id = "spectrum.par-full", .anchor = "a^p <= a^h", .kind = K::Inequality},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.leq(par(s, a), full(s, a), "a^p <= a^h");
      });
  add(out,
      {.id = "spectrum.full-seqstar",
       .anchor = "a^h <= (a^s)*",
       .kind = K::Inequality,
       .strength = LawStrength::Soft},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.leq(full(s, a), kleene_star(seq(s, a)), "a^h <= (a^s)*");
      });
  add(out,
      {.id = "spectrum.parstar-full",
       .anchor = "(a^p)* <= a^h",
       .kind = K::Inequality,
       .strength = LawStrength::Soft},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.leq(kleene_star(par(s, a)), full(s, a), "(a^p)* <= a^h");
      });
  add(out,
      {.id = "spectrum.full-star",
       .anchor = "(a^h)* = (a^p)*",
       .strength = LawStrength::Soft},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.eq(kleene_star(full(s, a)), kleene_star(par(s, a)), "(a^h)* = (a^p)*");
      });
  add(out,
      {.id = "spectrum.instances",
       .anchor = "a <= a[id]",
       .kind = K::Inequality,
       .subst = true},
      [](SampleCtx& s) {
        Rel a = s.term_rel("a");
        s.leq(a, s.subst(a, delta(s)), "a <= a[id]");
      });
  add(out,
      {.id = "spectrum.instance-chain",
       .anchor = "a[id] <= a[id]^s <= a[id]^p <= a[id]^h",
       .kind = K::Inequality,
       .subst = true},
      [](SampleCtx& s) {
        Rel ai = s.subst(s.term_rel("a"), delta(s));
        Rel ais = seq(s, ai), aip = par(s, ai);
        s.leq(ai, ais, "a[id] <= a[id]^s");
        s.leq(ais, aip, "a[id]^s <= a[id]^p");
        s.leq(aip, full(s, ai), "a[id]^p <= a[id]^h");
      });
}

void register_critical_pairs(std::vector<LawDef>& out) {
  add(out,
      {.id = "cp.subst-par",
       .anchor = "id[a[id]^p] <= a[id]^p",
       .kind = K::Inequality,
       .subst = true},
      [](SampleCtx& s) {
        Rel aip = par(s, s.subst(s.term_rel("a"), delta(s)));
        s.leq(s.subst(delta(s), aip), aip, "id[a[id]^p] <= a[id]^p");
      });
  add(out,
      {.id = "cp.weak-confluence",
       .anchor = "CP-1 and CP-2 => a[id]^s weakly confluent",
       .kind = K::Implication,
       .carrier = TermCarrier::Ground,
       .subst = true},
      [](SampleCtx& s) {
        Rel ai = s.subst(s.ground_rel("a"), delta(s));
        CpReport cp = check_cp_relation(ai);
        if (cp.overflow_dropped > 0 || s.dropped() > 0) {
          s.skip("pairs lost to truncation");
          return;
        }
        if (cp.get("CP-1").verdict != Verdict::Holds ||
            cp.get("CP-2").verdict != Verdict::Holds) {
          s.skip("critical-pair conditions do not hold");
          return;
        }
        Rel ais = seq(s, ai);
        s.expect(is_weakly_confluent(ais).verdict == Verdict::Holds,
                 "a[id]^s is weakly confluent");
      });
  add(out,
      {.id = "cp.technique",
       .anchor = "a°;a <= as*;as*° and a°;d_id(as) <= as*;as*° => "
                 "as°;as <= as*;as*°",
       .kind = K::Implication,
       .carrier = TermCarrier::Ground},
      [](SampleCtx& s) {
        Rel a = s.ground_rel("a");
        TechniqueReport t = check_weak_confluence_technique(a);
        if (t.overflow_dropped > 0) {
          s.skip("pairs lost to truncation");
          return;
        }
        if (!t.premises_hold()) {
          s.skip("premises do not hold");
          return;
        }
        s.expect(t.conclusion.verdict == Verdict::Holds, "as°;as <= as*;as*°");
      });
}

}  // namespace

void register_termrel_laws(std::vector<LawDef>& out) {
  register_subst(out);
  register_congruence(out);
  register_check(out);
  register_derivative(out);
  register_taylor(out);
  register_sequential(out);
  register_parallel(out);
  register_spectrum(out);
  register_critical_pairs(out);
}

}  // namespace reltrs::detail
