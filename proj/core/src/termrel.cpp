// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reltrs/termrel.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <limits>

namespace reltrs {

namespace {

constexpr TermId kNone = std::numeric_limits<TermId>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t sat_sub(std::uint64_t a, std::uint64_t b) {
  return a > b ? a - b : 0;
}

void count(OverflowStats* stats, std::uint64_t total, std::uint64_t kept) {
  if (stats) stats->dropped += sat_sub(total, kept);
}

std::uint64_t row_count(const Rel& a, TermId t) {
  std::uint64_t k = 0;
  for (std::uint64_t w : a.row(t)) k += static_cast<std::uint64_t>(std::popcount(w));
  return k;
}

std::vector<TermId> masked_succ(const Rel& a, TermId t,
                                std::span<const std::uint64_t> mask) {
  std::vector<TermId> out;
  auto r = a.row(t);
  for (std::size_t k = 0; k < r.size(); ++k) {
    std::uint64_t w = r[k] & mask[k];
    while (w) {
      out.push_back(static_cast<TermId>(k * 64 + static_cast<std::size_t>(
                                                     std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

/// Calls f(choice) for every element of opts[0] x ... x opts[n-1].
template <class F>
void for_each_product(const std::vector<std::vector<TermId>>& opts, F&& f) {
  for (const auto& o : opts) {
    if (o.empty()) return;
  }
  std::vector<std::size_t> idx(opts.size(), 0);
  std::vector<TermId> choice(opts.size());
  for (;;) {
    for (std::size_t i = 0; i < opts.size(); ++i) choice[i] = opts[i][idx[i]];
    f(std::span<const TermId>(choice));
    std::size_t k = opts.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++idx[k] < opts[k].size()) {
        done = false;
        break;
      }
      idx[k] = 0;
    }
    if (done) return;
  }
}

// Pairs (o(t...), o(s...)) with t_i a s_i for operators of the given arity
// (any arity when `only_arity` is negative).
Rel congruence(const Rel& a, int only_arity, OverflowStats* stats) {
  const Universe& u = universe_of(a);
  Rel r(a.carrier());
  std::uint64_t total = 0, kept = 0;
  std::vector<std::vector<TermId>> opts;
  for (TermId t = 0; t < u.size(); ++t) {
    if (u.is_var(t)) continue;
    auto ch = u.children(t);
    if (only_arity >= 0 && ch.size() != static_cast<std::size_t>(only_arity)) {
      continue;
    }
    if (ch.empty()) {
      r.set(t, t);
      continue;
    }
    std::size_t op = u.op(t);
    opts.assign(ch.size(), {});
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      combos = sat_mul(combos, row_count(a, ch[i]));
      opts[i] = masked_succ(a, ch[i], u.child_mask(op, i));
    }
    total += combos;
    for_each_product(opts, [&](std::span<const TermId> s) {
      if (auto target = u.lookup_app(op, s)) {
        r.set(t, *target);
        ++kept;
      }
    });
  }
  count(stats, total, kept);
  return r;
}

// Records, for every variable, the largest depth of one of its positions.
void var_positions(const Universe& u, TermId t, unsigned at,
                   std::array<int, 64>& deepest) {
  if (u.var_mask(t) == 0) return;
  if (u.is_var(t)) {
    int& d = deepest[u.var_index(t)];
    d = std::max(d, static_cast<int>(at));
    return;
  }
  for (TermId c : u.children(t)) var_positions(u, c, at + 1, deepest);
}

std::optional<TermId> apply_ids(const Universe& u, TermId t,
                                const std::vector<TermId>& sigma) {
  if (u.var_mask(t) == 0) return t;
  if (u.is_var(t)) return sigma[u.var_index(t)];
  auto ch = u.children(t);
  std::array<TermId, 16> small{};
  std::vector<TermId> big;
  TermId* out = small.data();
  if (ch.size() > small.size()) {
    big.resize(ch.size());
    out = big.data();
  }
  for (std::size_t i = 0; i < ch.size(); ++i) {
    auto c = apply_ids(u, ch[i], sigma);
    if (!c) return std::nullopt;
    out[i] = *c;
  }
  return u.lookup_app(u.op(t), std::span<const TermId>(out, ch.size()));
}

}  // namespace

CarrierPtr make_term_carrier(const WorkingContext& ctx, std::size_t cap) {
  if (ctx.working_depth < ctx.support_depth) {
    throw std::invalid_argument("working depth below support depth");
  }
  return Carrier::of(Universe::enumerate(ctx.signature, ctx.variables,
                                         ctx.working_depth, cap));
}

const Universe& universe_of(const CarrierPtr& c) {
  if (!c->universe()) {
    throw std::invalid_argument("relation is not over a term universe");
  }
  return *c->universe();
}

const Universe& universe_of(const Rel& a) { return universe_of(a.carrier()); }

Rel restrict_depth(const Rel& a, unsigned d) {
  const Universe& u = universe_of(a);
  Rel r(a.carrier());
  a.for_each_pair([&](std::size_t i, std::size_t j) {
    if (u.depth(static_cast<TermId>(i)) <= d &&
        u.depth(static_cast<TermId>(j)) <= d) {
      r.set(i, j);
    }
  });
  return r;
}

TermRel i_eta(const CarrierPtr& c) {
  const Universe& u = universe_of(c);
  Rel r(c);
  for (TermId t = 0; t < u.size(); ++t) {
    if (u.is_var(t)) r.set(t, t);
  }
  return r;
}

TermRel i_sigma0(const CarrierPtr& c) {
  const Universe& u = universe_of(c);
  Rel r(c);
  for (TermId t = 0; t < u.size(); ++t) {
    if (!u.is_var(t) && u.arity(t) == 0) r.set(t, t);
  }
  return r;
}

TermRel tilde(const TermRel& a, OverflowStats* stats) {
  return congruence(a, -1, stats);
}

TermRel taylor(unsigned n, const TermRel& a, OverflowStats* stats) {
  return congruence(a, static_cast<int>(n), stats);
}

TermRel hat(const TermRel& a, OverflowStats* stats) {
  return join(i_eta(a.carrier()), tilde(a, stats));
}

TermRel check(const TermRel& a, OverflowStats* stats) {
  const Universe& u = universe_of(a);
  Rel r(a.carrier());
  std::uint64_t total = 0, kept = 0;
  std::vector<TermId> args;
  for (TermId t = 0; t < u.size(); ++t) {
    if (u.is_var(t) || u.arity(t) == 0) continue;
    auto ch = u.children(t);
    std::size_t op = u.op(t);
    for (std::size_t p = 0; p < ch.size(); ++p) {
      total += row_count(a, ch[p]);
      args.assign(ch.begin(), ch.end());
      for (TermId s : masked_succ(a, ch[p], u.child_mask(op, p))) {
        args[p] = s;
        if (auto target = u.lookup_app(op, args)) {
          r.set(t, *target);
          ++kept;
        }
      }
    }
  }
  count(stats, total, kept);
  return r;
}

TermRel derivative(const TermRel& a, const TermRel& b, OverflowStats* stats) {
  require_same_carrier(a, b);
  const Universe& u = universe_of(a);
  Rel r(a.carrier());
  std::uint64_t total = 0, kept = 0;
  std::vector<std::vector<TermId>> opts;
  for (TermId t = 0; t < u.size(); ++t) {
    if (u.is_var(t) || u.arity(t) == 0) continue;
    auto ch = u.children(t);
    std::size_t op = u.op(t);
    for (std::size_t p = 0; p < ch.size(); ++p) {
      opts.assign(ch.size(), {});
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        const Rel& rel = i == p ? b : a;
        combos = sat_mul(combos, row_count(rel, ch[i]));
        opts[i] = masked_succ(rel, ch[i], u.child_mask(op, i));
      }
      total += combos;
      for_each_product(opts, [&](std::span<const TermId> s) {
        if (auto target = u.lookup_app(op, s)) {
          r.set(t, *target);
          ++kept;
        }
      });
    }
  }
  count(stats, total, kept);
  return r;
}

TermRel subst_rel(const TermRel& a, const TermRel& b, SubstReading reading,
                  OverflowStats* stats) {
  require_same_carrier(a, b);
  const Universe& u = universe_of(a);
  const std::size_t nvars = u.variables().size();
  const std::uint64_t all_vars =
      nvars == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nvars) - 1;
  const auto max_depth = static_cast<int>(u.max_depth());

  std::vector<TermId> dom, cod;
  {
    Rel bc = converse(b);
    for (TermId t = 0; t < u.size(); ++t) {
      if (row_count(b, t)) dom.push_back(t);
      if (row_count(bc, t)) cod.push_back(t);
    }
  }
  const std::uint64_t n_pairs = b.count();

  // Choices for one variable, grouped by the image on the left so that the
  // left instance is built once per group. A side without the variable uses
  // kNone as its image.
  struct Group {
    TermId v;
    std::vector<TermId> ws;
  };
  using Options = std::vector<Group>;
  // Option lists depend only on the depth budgets of the two sides.
  const int kNoBudget = max_depth + 1;
  std::map<std::pair<int, int>, Options> option_cache;
  auto options = [&](int bt, int bs) -> const Options& {
    auto [it, fresh] = option_cache.try_emplace({bt, bs});
    if (!fresh) return it->second;
    Options& o = it->second;
    auto fits = [&](TermId t, int budget) {
      return static_cast<int>(u.depth(t)) <= budget;
    };
    if (bt != kNoBudget && bs != kNoBudget) {
      for (TermId v : dom) {
        if (!fits(v, bt)) continue;
        Group g{v, {}};
        b.for_each_succ(v, [&](std::size_t w) {
          if (fits(static_cast<TermId>(w), bs)) g.ws.push_back(static_cast<TermId>(w));
        });
        if (!g.ws.empty()) o.push_back(std::move(g));
      }
    } else if (bt != kNoBudget) {
      for (TermId v : dom) {
        if (fits(v, bt)) o.push_back({v, {kNone}});
      }
    } else {
      Group g{kNone, {}};
      for (TermId w : cod) {
        if (fits(w, bs)) g.ws.push_back(w);
      }
      if (!g.ws.empty()) o.push_back(std::move(g));
    }
    return o;
  };

  Rel r(a.carrier());
  std::uint64_t total = 0, kept = 0;
  std::vector<const Options*> opts;
  std::vector<std::size_t> vars;
  std::vector<TermId> sigma(nvars, kNone), rho(nvars, kNone);

  a.for_each_pair([&](std::size_t i, std::size_t j) {
    auto t0 = static_cast<TermId>(i);
    auto s0 = static_cast<TermId>(j);
    std::uint64_t mt = u.var_mask(t0), ms = u.var_mask(s0);
    std::uint64_t occ = mt | ms;
    if (reading == SubstReading::Strict && occ != all_vars && n_pairs == 0) {
      return;
    }
    std::array<int, 64> dt, ds;
    dt.fill(-1);
    ds.fill(-1);
    var_positions(u, t0, 0, dt);
    var_positions(u, s0, 0, ds);

    vars.clear();
    opts.clear();
    std::uint64_t combos = 1;
    for (std::size_t x = 0; x < nvars; ++x) {
      if (!((occ >> x) & 1u)) continue;
      vars.push_back(x);
      bool in_t = (mt >> x) & 1u, in_s = (ms >> x) & 1u;
      combos = sat_mul(combos, in_t && in_s ? n_pairs : in_t ? dom.size() : cod.size());
      opts.push_back(&options(in_t ? max_depth - dt[x] : kNoBudget,
                              in_s ? max_depth - ds[x] : kNoBudget));
    }
    total += combos;
    if (vars.empty()) {
      r.set(t0, s0);
      ++kept;
      return;
    }
    for (const Options* o : opts) {
      if (o->empty()) return;
    }
    const std::size_t nv = vars.size();
    std::vector<std::size_t> g(nv, 0), w(nv, 0);
    auto advance = [&](std::vector<std::size_t>& idx, auto&& size_of) {
      for (std::size_t k = nv; k-- > 0;) {
        if (++idx[k] < size_of(k)) return true;
        idx[k] = 0;
      }
      return false;
    };
    do {
      for (std::size_t k = 0; k < nv; ++k) sigma[vars[k]] = (*opts[k])[g[k]].v;
      auto lhs = apply_ids(u, t0, sigma);
      if (!lhs) continue;
      std::fill(w.begin(), w.end(), 0);
      do {
        for (std::size_t k = 0; k < nv; ++k) {
          rho[vars[k]] = (*opts[k])[g[k]].ws[w[k]];
        }
        if (auto rhs = apply_ids(u, s0, rho)) {
          r.set(*lhs, *rhs);
          ++kept;
        }
      } while (advance(w, [&](std::size_t k) { return (*opts[k])[g[k]].ws.size(); }));
    } while (advance(g, [&](std::size_t k) { return opts[k]->size(); }));
  });
  count(stats, total, kept);
  return r;
}

TermRel parallel_closure(const TermRel& a, OverflowStats* stats) {
  Rel x = lfp([&](const Rel& y) { return join(a, hat(y)); }, a.carrier());
  if (stats) hat(x, stats);
  return x;
}

TermRel sequential_closure(const TermRel& a, OverflowStats* stats) {
  Rel x = lfp([&](const Rel& y) { return join(a, check(y)); }, a.carrier());
  if (stats) check(x, stats);
  return x;
}

TermRel full_closure(const TermRel& a, FullClosureVariant variant,
                     OverflowStats* stats) {
  Rel step = variant == FullClosureVariant::Reflexive ? refl_closure(a) : a;
  Rel x = lfp([&](const Rel& y) { return compose(hat(y), step); }, a.carrier());
  if (stats) hat(x, stats);
  return x;
}

}  // namespace reltrs
