// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reltrs/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace reltrs {

void Trs::validate() const {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    std::string where = "rule " + std::to_string(i + 1) + ": ";
    try {
      check_well_formed(r.lhs, signature, variables);
      check_well_formed(r.rhs, signature, variables);
    } catch (const SyntaxError& e) {
      throw TrsError(where + e.what());
    }
    if (r.lhs.is_var()) throw TrsError(where + "variable as lhs");
    auto lv = free_vars(r.lhs);
    for (const auto& v : free_vars(r.rhs)) {
      if (!lv.count(v)) {
        throw TrsError(where + "fresh variable in rhs: " + v);
      }
    }
  }
}

Trs arithmetic_trs() {
  Trs trs;
  trs.signature = arithmetic_signature();
  trs.variables = {"x", "y"};
  auto x = Term::var("x");
  auto y = Term::var("y");
  auto zero = Term::app("0");
  auto S = [](Term t) { return Term::app("S", {std::move(t)}); };
  auto A = [](Term a, Term b) { return Term::app("A", {std::move(a), std::move(b)}); };
  auto M = [](Term a, Term b) { return Term::app("M", {std::move(a), std::move(b)}); };
  trs.rules = {
      {A(zero, x), x},
      {A(S(x), y), S(A(x, y))},
      {M(zero, x), zero},
      {M(S(x), y), A(M(x, y), y)},
  };
  return trs;
}

TermRel rules_relation(const Trs& trs, const CarrierPtr& c) {
  const Universe& u = universe_of(c);
  Rel r(c);
  for (const Rule& rule : trs.rules) {
    auto l = u.find(rule.lhs);
    auto rr = u.find(rule.rhs);
    if (l && rr) r.set(*l, *rr);
  }
  return r;
}

TermRel ground_instances(const Trs& trs, const CarrierPtr& c,
                         OverflowStats* stats) {
  const Universe& u = universe_of(c);
  Rel r(c);
  for (TermId t = 0; t < u.size(); ++t) {
    for (const Term& s : root_reducts(trs, u.term(t))) {
      if (auto j = u.find(s)) {
        r.set(t, *j);
      } else if (stats) {
        ++stats->dropped;
      }
    }
  }
  return r;
}

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::Seq:
      return "seq";
    case StepKind::Par:
      return "par";
    case StepKind::Full:
      return "full";
  }
  return "?";
}

std::optional<StepKind> parse_step_kind(std::string_view s) {
  if (s == "seq") return StepKind::Seq;
  if (s == "par") return StepKind::Par;
  if (s == "full") return StepKind::Full;
  return std::nullopt;
}

std::vector<Term> root_reducts(const Trs& trs, const Term& t) {
  std::vector<Term> out;
  if (t.is_var()) return out;
  for (const Rule& rule : trs.rules) {
    if (rule.lhs.name() != t.name()) continue;
    if (auto sigma = match_rule(rule.lhs, t)) {
      out.push_back(apply_substitution(rule.rhs, *sigma));
    }
  }
  return out;
}

std::vector<Redex> redexes(const Trs& trs, const Term& t) {
  std::vector<Redex> out;
  for (auto& [ctx, sub] : decompose(t)) {
    if (sub.is_var()) continue;
    for (std::size_t i = 0; i < trs.rules.size(); ++i) {
      const Rule& rule = trs.rules[i];
      if (auto sigma = match_rule(rule.lhs, sub)) {
        Term target = ctx.plug(apply_substitution(rule.rhs, *sigma));
        out.push_back({ctx, i, std::move(*sigma), std::move(target)});
      }
    }
  }
  return out;
}

std::set<Term> sequential_step(const Trs& trs, const Term& t) {
  std::set<Term> out;
  for (Redex& r : redexes(trs, t)) out.insert(std::move(r.target));
  return out;
}

namespace {

template <class F>
void for_each_args(const std::vector<std::vector<Term>>& opts, F&& f) {
  for (const auto& o : opts) {
    if (o.empty()) return;
  }
  std::vector<std::size_t> idx(opts.size(), 0);
  for (;;) {
    std::vector<Term> args;
    args.reserve(opts.size());
    for (std::size_t i = 0; i < opts.size(); ++i) args.push_back(opts[i][idx[i]]);
    f(std::move(args));
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

}  // namespace

std::set<Term> parallel_step(const Trs& trs, const Term& t) {
  std::set<Term> out;
  if (t.is_var()) {
    out.insert(t);
    return out;
  }
  for (Term& s : root_reducts(trs, t)) out.insert(std::move(s));
  std::vector<std::vector<Term>> opts;
  for (const Term& a : t.args()) {
    auto s = parallel_step(trs, a);
    opts.emplace_back(s.begin(), s.end());
  }
  for_each_args(opts, [&](std::vector<Term> args) {
    out.insert(Term::app(t.name(), std::move(args)));
  });
  return out;
}

std::set<Term> full_step(const Trs& trs, const Term& t) {
  std::set<Term> out;
  if (t.is_var()) {
    out.insert(t);
    return out;
  }
  for (Term& s : root_reducts(trs, t)) out.insert(std::move(s));
  std::vector<std::vector<Term>> opts;
  for (const Term& a : t.args()) {
    auto s = full_step(trs, a);
    opts.emplace_back(s.begin(), s.end());
  }
  for_each_args(opts, [&](std::vector<Term> args) {
    Term u = Term::app(t.name(), std::move(args));
    for (Term& v : root_reducts(trs, u)) out.insert(std::move(v));
    out.insert(std::move(u));
  });
  return out;
}

std::set<Term> step(const Trs& trs, const Term& t, StepKind kind) {
  switch (kind) {
    case StepKind::Seq:
      return sequential_step(trs, t);
    case StepKind::Par:
      return parallel_step(trs, t);
    case StepKind::Full:
      return full_step(trs, t);
  }
  return {};
}

std::optional<std::size_t> ReductionGraph::find(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ReductionGraph::intern(const Term& t) {
  auto [it, inserted] = index_.emplace(t, nodes_.size());
  if (inserted) nodes_.push_back(t);
  return it->second;
}

std::vector<Term> ReductionGraph::normal_forms() const {
  if (!exhaustive_) throw NotExhaustive();
  std::vector<char> has_out(nodes_.size(), 0);
  for (const Edge& e : edges_) has_out[e.source] = 1;
  std::vector<Term> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!has_out[i]) out.push_back(nodes_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const CarrierPtr& ReductionGraph::carrier() const {
  if (!carrier_) {
    std::vector<std::string> labels;
    labels.reserve(nodes_.size());
    for (const Term& t : nodes_) labels.push_back(t.to_string());
    carrier_ = Carrier::make(std::move(labels));
  }
  return carrier_;
}

Rel ReductionGraph::relation() const {
  Rel r(carrier());
  for (const Edge& e : edges_) r.set(e.source, e.target);
  return r;
}

Rel ReductionGraph::star_relation() const {
  if (!exhaustive_) throw NotExhaustive();
  return kleene_star(relation());
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string ReductionGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph reduction {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  std::vector<char> is_seed(nodes_.size(), 0);
  for (std::size_t s : seeds_) is_seed[s] = 1;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    os << "  n" << i << " [label=\"" << dot_escape(nodes_[i].to_string())
       << "\"";
    if (is_seed[i]) os << ", style=bold";
    os << "];\n";
  }
  for (const Edge& e : edges_) {
    os << "  n" << e.source << " -> n" << e.target << " [label=\""
       << to_string(e.kind);
    if (e.rule) os << " r" << (*e.rule + 1);
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

ReductionGraph reachable(const Trs& trs, const std::vector<Term>& seeds,
                         StepKind kind, std::optional<std::size_t> step_bound) {
  ReductionGraph g;
  g.kind_ = kind;
  std::vector<std::size_t> frontier;
  for (const Term& s : seeds) {
    std::size_t before = g.nodes_.size();
    std::size_t i = g.intern(s);
    g.seeds_.push_back(i);
    if (g.nodes_.size() > before) frontier.push_back(i);
  }

  std::size_t level = 0;
  while (!frontier.empty()) {
    if (step_bound && level >= *step_bound) break;
    std::vector<std::size_t> next;
    for (std::size_t v : frontier) {
      Term t = g.nodes_[v];
      auto add_edge = [&](Term target, std::optional<std::size_t> rule,
                          std::optional<Context> ctx, Substitution sigma) {
        std::size_t before = g.nodes_.size();
        std::size_t w = g.intern(target);
        if (g.nodes_.size() > before) next.push_back(w);
        g.edges_.push_back({v, w, kind, rule, std::move(ctx), std::move(sigma)});
      };
      if (kind == StepKind::Seq) {
        for (Redex& r : redexes(trs, t)) {
          add_edge(std::move(r.target), r.rule, std::move(r.context),
                   std::move(r.sigma));
        }
      } else {
        for (const Term& s : step(trs, t, kind)) {
          if (s == t) continue;
          add_edge(s, std::nullopt, std::nullopt, {});
        }
      }
    }
    frontier = std::move(next);
    ++level;
  }

  g.exhaustive_ = true;
  for (std::size_t v : frontier) {
    const Term& t = g.nodes_[v];
    bool can_step = false;
    for (const Term& s : step(trs, t, kind)) {
      if (!(s == t) || kind == StepKind::Seq) {
        can_step = true;
        break;
      }
    }
    if (can_step) {
      g.exhaustive_ = false;
      break;
    }
  }
  return g;
}

std::vector<Term> terms_up_to_depth(const Signature& sig,
                                    const std::vector<std::string>& vars,
                                    unsigned d) {
  auto u = Universe::enumerate(sig, vars, d);
  std::vector<Term> out;
  out.reserve(u->size());
  for (TermId i = 0; i < u->size(); ++i) out.push_back(u->term(i));
  return out;
}

}  // namespace reltrs
