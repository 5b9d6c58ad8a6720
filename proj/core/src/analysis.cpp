// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reltrs/analysis.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace reltrs {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Unconfirmed:
      return "unconfirmed";
  }
  return "?";
}

std::vector<std::string> ConfluenceReport::witness_labels(const Rel& a) const {
  if (!witness) return {};
  const auto& c = *a.carrier();
  return {witness->source ? c.label(*witness->source) : std::string(),
          c.label(witness->left), c.label(witness->right)};
}

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

// First pair of lhs missing from rhs, preferring pairs with distinct
// components.
std::optional<std::pair<std::size_t, std::size_t>> first_gap(const Rel& lhs,
                                                             const Rel& rhs) {
  std::optional<std::pair<std::size_t, std::size_t>> diag, off;
  lhs.for_each_pair([&](std::size_t i, std::size_t j) {
    if (off || rhs.test(i, j)) return;
    if (i != j) {
      off = {i, j};
    } else if (!diag) {
      diag = {i, j};
    }
  });
  return off ? off : diag;
}

// Some k with k r i and k r j.
std::optional<std::size_t> common_source(const Rel& r, std::size_t i,
                                         std::size_t j) {
  for (std::size_t k = 0; k < r.n(); ++k) {
    if (r.test(k, i) && r.test(k, j)) return k;
  }
  return std::nullopt;
}

ConfluenceReport peak_property(std::string name, const Rel& peaks_of,
                               const Rel& lhs, const Rel& rhs) {
  ConfluenceReport rep;
  rep.property = std::move(name);
  if (auto gap = first_gap(lhs, rhs)) {
    rep.verdict = Verdict::Fails;
    rep.witness = Witness{common_source(peaks_of, gap->first, gap->second),
                          gap->first, gap->second};
  }
  return rep;
}

InequalityReport inequality(std::string name, const Rel& lhs, const Rel& rhs,
                            bool truncation_sensitive,
                            std::uint64_t overflow) {
  InequalityReport rep;
  rep.name = std::move(name);
  lhs.for_each_pair([&](std::size_t i, std::size_t j) {
    if (rhs.test(i, j)) return;
    ++rep.violations;
    if (rep.counterexamples.size() < kMaxCounterexamples) {
      rep.counterexamples.emplace_back(i, j);
    }
  });
  if (rep.violations) {
    rep.verdict = truncation_sensitive && overflow > 0 ? Verdict::Unconfirmed
                                                       : Verdict::Fails;
  }
  return rep;
}

}  // namespace

ConfluenceReport has_diamond(const Rel& a) {
  Rel ac = converse(a);
  return peak_property("diamond", a, compose(ac, a), compose(a, ac));
}

ConfluenceReport is_confluent(const Rel& a) {
  Rel s = kleene_star(a);
  Rel sc = converse(s);
  return peak_property("confluence", s, compose(sc, s), compose(s, sc));
}

ConfluenceReport is_weakly_confluent(const Rel& a) {
  Rel s = kleene_star(a);
  return peak_property("weak-confluence", a, compose(converse(a), a),
                       compose(s, converse(s)));
}

ConfluenceReport is_church_rosser(const Rel& a) {
  Rel lhs = kleene_star(sym_closure(a));
  Rel rhs = compose(kleene_star(a), kleene_star(converse(a)));
  ConfluenceReport rep;
  rep.property = "church-rosser";
  // rhs <= lhs always holds; only the other direction can fail.
  if (auto gap = first_gap(lhs, rhs)) {
    rep.verdict = Verdict::Fails;
    rep.witness = Witness{std::nullopt, gap->first, gap->second};
  } else if (auto back = first_gap(rhs, lhs)) {
    rep.verdict = Verdict::Fails;
    rep.witness = Witness{std::nullopt, back->first, back->second};
  }
  return rep;
}

const InequalityReport& CpReport::get(std::string_view name) const {
  for (const auto& it : items) {
    if (it.name == name) return it;
  }
  throw std::out_of_range("no such inequality: " + std::string(name));
}

CpReport check_cp_relation(const TermRel& ai) {
  CpReport rep;
  rep.universe_size = ai.n();
  OverflowStats st;
  Rel ais = sequential_closure(ai, &st);
  Rel aih = full_closure(ai, FullClosureVariant::Reflexive, &st);
  Rel delta = id(ai.carrier());
  Rel delta_ais = subst_rel(delta, ais, SubstReading::Occurring, &st);
  Rel d_ais = derivative(delta, ais, &st);
  rep.overflow_dropped = st.dropped;

  Rel peak = compose(converse(ai), ai);
  Rel star = kleene_star(ais);
  Rel join = compose(star, converse(star));
  rep.items.push_back(inequality("CP-1", peak, join, true, st.dropped));
  rep.items.push_back(inequality("CP-2", compose(converse(ai), d_ais),
                                 compose(delta_ais, converse(aih)), true,
                                 st.dropped));
  rep.items.push_back(inequality("CP-1'", peak, delta, false, st.dropped));
  return rep;
}

CpReport check_cp(const Trs& trs, const CarrierPtr& c) {
  OverflowStats st;
  Rel ai = ground_instances(trs, c, &st);
  CpReport rep = check_cp_relation(ai);
  rep.overflow_dropped += st.dropped;
  // Root overflow only hides pairs; re-derive verdicts with the total.
  for (auto& item : rep.items) {
    if (item.verdict == Verdict::Fails && item.name != "CP-1'" &&
        rep.overflow_dropped > 0) {
      item.verdict = Verdict::Unconfirmed;
    }
  }
  return rep;
}

bool TechniqueReport::premises_hold() const {
  return dagger.verdict == Verdict::Holds && ddagger.verdict == Verdict::Holds;
}

TechniqueReport check_weak_confluence_technique(const TermRel& a) {
  TechniqueReport rep;
  OverflowStats st;
  Rel as = sequential_closure(a, &st);
  Rel d_as = derivative(id(a.carrier()), as, &st);
  rep.overflow_dropped = st.dropped;
  Rel star = kleene_star(as);
  Rel join = compose(star, converse(star));
  Rel ac = converse(a);
  rep.dagger = inequality("dagger", compose(ac, a), join, true, st.dropped);
  rep.ddagger = inequality("ddagger", compose(ac, d_as), join, true, st.dropped);
  rep.conclusion =
      inequality("conclusion", compose(converse(as), as), join, true, st.dropped);
  return rep;
}

PeakReport weak_confluence_by_peaks(const ReductionGraph& g,
                                    unsigned join_depth) {
  if (g.kind() != StepKind::Seq) {
    throw std::invalid_argument("peak enumeration needs a sequential graph");
  }
  if (!g.exhaustive()) throw NotExhaustive();
  const std::size_t n = g.nodes().size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const Edge& e : g.edges()) succ[e.source].push_back(e.target);
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  std::vector<std::vector<std::size_t>> balls(n);
  std::vector<char> cached(n, 0);
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 0;
  auto ball = [&](std::size_t v) -> const std::vector<std::size_t>& {
    if (cached[v]) return balls[v];
    ++stamp;
    std::vector<std::size_t> out{v};
    mark[v] = stamp;
    std::size_t lo = 0;
    for (unsigned d = 0; d < join_depth; ++d) {
      std::size_t hi = out.size();
      if (lo == hi) break;
      for (std::size_t k = lo; k < hi; ++k) {
        for (std::size_t w : succ[out[k]]) {
          if (mark[w] != stamp) {
            mark[w] = stamp;
            out.push_back(w);
          }
        }
      }
      lo = hi;
    }
    std::sort(out.begin(), out.end());
    balls[v] = std::move(out);
    cached[v] = 1;
    return balls[v];
  };

  PeakReport rep;
  for (std::size_t t = 0; t < n; ++t) {
    const auto& s = succ[t];
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        ++rep.peaks;
        const auto& b1 = ball(s[i]);
        const auto& b2 = ball(s[j]);
        std::size_t p = 0, q = 0;
        bool joined = false;
        while (p < b1.size() && q < b2.size()) {
          if (b1[p] == b2[q]) {
            joined = true;
            break;
          }
          if (b1[p] < b2[q]) {
            ++p;
          } else {
            ++q;
          }
        }
        if (!joined && !rep.witness) {
          rep.verdict = Verdict::Fails;
          rep.witness = Witness{t, s[i], s[j]};
        }
      }
    }
  }
  return rep;
}

Verdict SpectrumReport::verdict() const {
  if (!exhaustive) return Verdict::Unconfirmed;
  bool ok = seq_not_in_par == 0 && par_not_in_full == 0 &&
            full_not_in_star == 0 && par_star_equal && full_star_equal;
  return ok ? Verdict::Holds : Verdict::Fails;
}

SpectrumReport check_spectrum(const Trs& trs, const std::vector<Term>& seeds) {
  SpectrumReport rep;
  ReductionGraph g = reachable(trs, seeds, StepKind::Seq);
  rep.nodes = g.nodes().size();
  rep.exhaustive = g.exhaustive();
  if (!rep.exhaustive) return rep;
  Rel seq_star = g.star_relation();
  Rel par(g.carrier()), full(g.carrier());
  for (std::size_t v = 0; v < g.nodes().size(); ++v) {
    const Term& t = g.nodes()[v];
    auto seq = sequential_step(trs, t);
    auto ps = parallel_step(trs, t);
    auto fs = full_step(trs, t);
    for (const Term& s : seq) rep.seq_not_in_par += ps.count(s) ? 0 : 1;
    for (const Term& s : ps) {
      rep.par_not_in_full += fs.count(s) ? 0 : 1;
      if (auto w = g.find(s)) par.set(v, *w);
    }
    for (const Term& s : fs) {
      auto w = g.find(s);
      if (!w || !seq_star.test(v, *w)) {
        ++rep.full_not_in_star;
        continue;
      }
      full.set(v, *w);
    }
  }
  rep.par_star_equal = kleene_star(par) == seq_star;
  rep.full_star_equal = kleene_star(full) == seq_star;
  return rep;
}

ClosureAgreement check_closure_semantics(const Trs& trs,
                                         const std::vector<Term>& seeds) {
  ClosureAgreement rep;
  ReductionGraph g = reachable(trs, seeds, StepKind::Seq);
  if (!g.exhaustive()) throw NotExhaustive();
  auto u = Universe::closure(trs.signature, trs.variables, g.nodes());
  rep.nodes = u->size();
  rep.closed = true;
  for (TermId t = 0; t < u->size(); ++t) {
    if (!u->is_var(t) && u->arity(t) > 0 && !g.find(u->term(t))) {
      rep.closed = false;
    }
  }
  CarrierPtr c = Carrier::of(u);
  Rel ai = ground_instances(trs, c);
  Rel par = parallel_closure(ai);
  Rel full = full_closure(ai, FullClosureVariant::Reflexive);
  Rel bare = full_closure(ai, FullClosureVariant::Bare);

  auto mismatches = [&](const Rel& rel, StepKind kind) {
    std::size_t bad = 0;
    for (TermId t = 0; t < u->size(); ++t) {
      std::vector<std::size_t> row;
      for (const Term& s : step(trs, u->term(t), kind)) {
        if (auto j = u->find(s)) {
          row.push_back(*j);
        } else {
          ++bad;
        }
      }
      std::sort(row.begin(), row.end());
      std::vector<std::size_t> got;
      rel.for_each_succ(t, [&](std::size_t j) { got.push_back(j); });
      std::vector<std::size_t> diff;
      std::set_symmetric_difference(row.begin(), row.end(), got.begin(),
                                    got.end(), std::back_inserter(diff));
      bad += diff.size();
    }
    return bad;
  };
  rep.par_mismatches = mismatches(par, StepKind::Par);
  rep.full_mismatches = mismatches(full, StepKind::Full);
  rep.bare_full_mismatches = mismatches(bare, StepKind::Full);
  return rep;
}

}  // namespace reltrs
