// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

// Fixed-point calculus, sampled over powerset lattices of at most 16
// elements and over relations on small carriers.

#include <cstdint>
#include <vector>

#include "laws_internal.hpp"

namespace reltrs::detail {

namespace {

using K = LawKind;
using Mask = std::uint32_t;
/// A function on the powerset of {0..m-1}, tabulated by argument.
using Fn = std::vector<Mask>;

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

struct Lattice {
  unsigned m;
  Mask size() const { return Mask{1} << m; }
  Mask full() const { return size() - 1; }
};

Lattice random_lattice(SampleCtx& s) {
  Lattice l{static_cast<unsigned>(1 + s.below(4))};
  s.record("ground_set_size", l.m);
  return l;
}

Mask random_mask(SampleCtx& s, const Lattice& l, double p = 0.5) {
  Mask x = 0;
  for (unsigned i = 0; i < l.m; ++i) {
    if (s.coin(p)) x |= Mask{1} << i;
  }
  return x;
}

// Step function: q when p is below the argument, else bottom.
struct Step {
  Mask p, q;
};

Fn from_steps(const Lattice& l, const std::vector<Step>& steps) {
  Fn f(l.size(), 0);
  for (Mask x = 0; x < l.size(); ++x) {
    for (const Step& st : steps) {
      if (subset(st.p, x)) f[x] |= st.q;
    }
  }
  return f;
}

std::vector<Step> random_steps(SampleCtx& s, const Lattice& l) {
  std::vector<Step> steps(1 + s.below(4));
  for (Step& st : steps) st = {random_mask(s, l), random_mask(s, l, 0.4)};
  return steps;
}

// Every monotone function on a finite powerset is a join of step functions.
Fn random_monotone(SampleCtx& s, const Lattice& l, const std::string& name) {
  Fn f = from_steps(l, random_steps(s, l));
  s.record(name, f);
  return f;
}

// Join-preserving: the union of the images of the elements.
Fn random_continuous(SampleCtx& s, const Lattice& l, const std::string& name) {
  std::vector<Mask> img(l.m);
  for (Mask& i : img) i = random_mask(s, l, 0.4);
  Fn f(l.size(), 0);
  for (Mask x = 0; x < l.size(); ++x) {
    for (unsigned e = 0; e < l.m; ++e) {
      if (x >> e & 1u) f[x] |= img[e];
    }
  }
  s.record(name, f);
  return f;
}

Fn compose_fn(const Fn& f, const Fn& g) {
  Fn h(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

Fn join_fn(const Fn& f, const Fn& g) {
  Fn h(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) h[x] = f[x] | g[x];
  return h;
}

bool leq_fn(const Fn& f, const Fn& g) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!subset(f[x], g[x])) return false;
  }
  return true;
}

bool monotone(const Fn& f) {
  for (Mask x = 0; x < f.size(); ++x) {
    for (Mask y = 0; y < f.size(); ++y) {
      if (subset(x, y) && !subset(f[x], f[y])) return false;
    }
  }
  return true;
}

// Kleene iteration from bottom; the chain is increasing for monotone f.
Mask mu(const Fn& f) {
  Mask x = 0;
  for (;;) {
    Mask y = f[x];
    if (y == x) return x;
    x = y;
  }
}

Rel rel_from_bits(const CarrierPtr& c, std::uint32_t bits) {
  Rel r(c);
  std::size_t n = c->size();
  for (std::size_t k = 0; k < n * n; ++k) {
    if (bits >> k & 1u) r.set(k / n, k % n);
  }
  return r;
}

void add(std::vector<LawDef>& out, std::string id, std::string anchor, K kind,
         std::function<void(SampleCtx&)> body) {
  out.push_back(law(std::move(id), std::move(anchor), kind, LawSuite::Fixpoint,
                    std::move(body)));
}

}  // namespace

void register_fixpoint_laws(std::vector<LawDef>& out) {
  add(out, "fix.kleene", "mu F = join_n F^n(bot)", K::Equality,
      [](SampleCtx& s) {
        Lattice l = random_lattice(s);
        Fn f = random_monotone(s, l, "F");
        s.expect(monotone(f), "F monotone");
        Mask chain = 0, x = 0;
        for (Mask n = 0; n <= l.size(); ++n) {
          chain |= x;
          x = f[x];
        }
        Mask m = mu(f);
        s.expect(f[m] == m, "mu F is a fixed point");
        s.expect(chain == m, "mu F = join of the Kleene chain");
      });
  add(out, "fix.knaster-tarski", "mu F = meet {x | F(x) <= x}", K::Equality,
      [](SampleCtx& s) {
        Lattice l = random_lattice(s);
        Fn f = random_monotone(s, l, "F");
        Mask meet_pre = l.full();
        for (Mask x = 0; x < l.size(); ++x) {
          if (subset(f[x], x)) meet_pre &= x;
        }
        s.expect(mu(f) == meet_pre, "mu F = meet of prefixed points");
      });
  add(out, "fix.kt-induction", "F(x) <= x => mu F <= x", K::Implication,
      [](SampleCtx& s) {
        Lattice l = random_lattice(s);
        Fn f = random_monotone(s, l, "F");
        Mask x = random_mask(s, l);
        // Grow x until it is a prefixed point.
        while (!subset(f[x], x)) x |= f[x];
        s.record("x", x);
        if (!subset(f[x], x)) {
          s.skip("x is not a prefixed point");
          return;
        }
        s.expect(subset(mu(f), x), "mu F <= x");
      });
  add(out, "fix.mu-monotone", "F <= G => mu F <= mu G", K::Implication,
      [](SampleCtx& s) {
        Lattice l = random_lattice(s);
        Fn f = random_monotone(s, l, "F");
        Fn g = join_fn(f, random_monotone(s, l, "G_extra"));
        s.expect(leq_fn(f, g), "F <= G");
        s.expect(subset(mu(f), mu(g)), "mu F <= mu G");
      });
  add(out, "fix.rolling", "mu (F . G) = F(mu (G . F))", K::Equality,
      [](SampleCtx& s) {
        Lattice l = random_lattice(s);
        Fn f = random_monotone(s, l, "F");
        Fn g = random_monotone(s, l, "G");
        s.expect(mu(compose_fn(f, g)) == f[mu(compose_fn(g, f))],
                 "mu (F . G) = F(mu (G . F))");
      });
  add(out, "fix.diagonal", "mu x. x (+) x = mu x. mu y. x (+) y", K::Equality,
      [](SampleCtx& s) {
        Lattice l = random_lattice(s);
        // Monotone binary operator as a join of two-argument step functions.
        std::size_t k = 1 + s.below(4);
        std::vector<Step> px(k), py(k);
        nlohmann::json rec = nlohmann::json::array();
        for (std::size_t i = 0; i < k; ++i) {
          px[i] = {random_mask(s, l), random_mask(s, l, 0.4)};
          py[i] = {random_mask(s, l), 0};
          rec.push_back({px[i].p, py[i].p, px[i].q});
        }
        s.record("op_steps", rec);
        auto op = [&](Mask x, Mask y) {
          Mask r = 0;
          for (std::size_t i = 0; i < k; ++i) {
            if (subset(px[i].p, x) && subset(py[i].p, y)) r |= px[i].q;
          }
          return r;
        };
        Fn diag(l.size()), outer(l.size());
        for (Mask x = 0; x < l.size(); ++x) {
          diag[x] = op(x, x);
          Fn inner(l.size());
          for (Mask y = 0; y < l.size(); ++y) inner[y] = op(x, y);
          outer[x] = mu(inner);
        }
        s.expect(mu(diag) == mu(outer), "mu x. x(+)x = mu x. mu y. x(+)y");
      });
  add(out, "fix.simple-fusion", "F . G <= G . H => mu F <= G(mu H)",
      K::Implication, [](SampleCtx& s) {
        Lattice l = random_lattice(s);
        Fn g = random_monotone(s, l, "G");
        Fn h = random_monotone(s, l, "H");
        // Keep the steps of F that respect the side condition.
        std::vector<Step> kept;
        for (const Step& st : random_steps(s, l)) {
          bool ok = true;
          for (Mask x = 0; x < l.size() && ok; ++x) {
            if (subset(st.p, g[x]) && !subset(st.q, g[h[x]])) ok = false;
          }
          if (ok) kept.push_back(st);
        }
        Fn f = from_steps(l, kept);
        s.record("F", f);
        if (!leq_fn(compose_fn(f, g), compose_fn(g, h))) {
          s.skip("F . G <= G . H does not hold");
          return;
        }
        s.expect(subset(mu(f), g[mu(h)]), "mu F <= G(mu H)");
      });
  add(out, "fix.fusion", "F continuous, F . G <= H . F => F(mu G) <= mu H",
      K::Implication, [](SampleCtx& s) {
        Lattice l = random_lattice(s);
        Fn f = random_continuous(s, l, "F");
        Fn g = random_monotone(s, l, "G");
        Fn r = random_monotone(s, l, "R");
        // H(y) = R(y) v join {F(G(x)) | F(x) <= y} is monotone and lies above
        // F . G on the image of F.
        Fn h(l.size());
        for (Mask y = 0; y < l.size(); ++y) {
          h[y] = r[y];
          for (Mask x = 0; x < l.size(); ++x) {
            if (subset(f[x], y)) h[y] |= f[g[x]];
          }
        }
        s.record("H", h);
        if (!leq_fn(compose_fn(f, g), compose_fn(h, f))) {
          s.skip("F . G <= H . F does not hold");
          return;
        }
        s.expect(subset(f[mu(g)], mu(h)), "F(mu G) <= mu H");
      });
  add(out, "fix.fusion-eq", "F continuous, F . G = H . F => F(mu G) = mu H",
      K::Implication, [](SampleCtx& s) {
        // F = k;-, G = c v k;-, H = k;c v k;- commute as required.
        auto car = s.plain_carrier();
        Rel k = s.rel("k", car, 0.3);
        Rel c = s.rel("c", car, 0.3);
        auto F = [&](const Rel& x) { return compose(k, x); };
        auto G = [&](const Rel& x) { return join(c, compose(k, x)); };
        Rel kc = compose(k, c);
        auto H = [&](const Rel& y) { return join(kc, compose(k, y)); };
        for (int i = 0; i < 4; ++i) {
          Rel x = s.rel("probe" + std::to_string(i), car, 0.3);
          if (!(F(G(x)) == H(F(x)))) {
            s.skip("F . G = H . F does not hold");
            return;
          }
        }
        s.eq(F(lfp(G, car)), lfp(H, car), "F(mu G) = mu H");
      });
  add(out, "fix.bonk", "f . h <= h . f => G(h(a)) <= h(G(a))",
      K::Implication, [](SampleCtx& s) {
        // G(a) = mu x. a v f(x)
        Lattice l = random_lattice(s);
        Fn h = random_monotone(s, l, "h");
        std::vector<Step> kept;
        for (const Step& st : random_steps(s, l)) {
          Fn sf = from_steps(l, {st});
          if (leq_fn(compose_fn(sf, h), compose_fn(h, sf))) kept.push_back(st);
        }
        Fn f = from_steps(l, kept);
        s.record("f", f);
        if (!leq_fn(compose_fn(f, h), compose_fn(h, f))) {
          s.skip("f . h <= h . f does not hold");
          return;
        }
        auto G = [&](Mask a) {
          Fn step(l.size());
          for (Mask x = 0; x < l.size(); ++x) step[x] = a | f[x];
          return mu(step);
        };
        for (Mask a = 0; a < l.size(); ++a) {
          if (!s.expect(subset(G(h[a]), h[G(a)]), "G(h(a)) <= h(G(a))")) return;
        }
      });
  add(out, "fix.knaster-tarski-rel", "a* = meet {x | id v a;x <= x}",
      K::Equality, [](SampleCtx& s) {
        auto c = s.plain_carrier(3);
        Rel a = s.rel("a", c, 0.3);
        Rel e = id(c);
        std::size_t n = c->size();
        Rel meet_pre = top(c);
        for (std::uint32_t bits = 0; bits < (1u << (n * n)); ++bits) {
          Rel x = rel_from_bits(c, bits);
          if (leq(join(e, compose(a, x)), x)) meet_pre = meet(meet_pre, x);
        }
        s.eq(kleene_star(a), meet_pre, "a* = meet of prefixed points");
      });
}

}  // namespace reltrs::detail
