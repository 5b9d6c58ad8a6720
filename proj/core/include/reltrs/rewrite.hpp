// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "reltrs/relalg.hpp"
#include "reltrs/syntax.hpp"
#include "reltrs/termrel.hpp"

namespace reltrs {

struct Rule {
  Term lhs;
  Term rhs;
};

/// Raised when a rule or rule set violates the executable restrictions.
class TrsError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

struct Trs {
  Signature signature;
  std::vector<std::string> variables;
  std::vector<Rule> rules;

  /// Checks well-formedness, that no lhs is a variable and that every rhs
  /// variable occurs in its lhs.
  void validate() const;
};

/// A(0,x) -> x, A(S(x),y) -> S(A(x,y)), M(0,x) -> 0, M(S(x),y) -> A(M(x,y),y).
Trs arithmetic_trs();

/// The rules as a relation, for rules whose sides both lie in the universe.
TermRel rules_relation(const Trs& trs, const CarrierPtr& c);

/// Root reduction instances restricted to the universe. Instances whose
/// right-hand side leaves the universe are counted in `stats`.
TermRel ground_instances(const Trs& trs, const CarrierPtr& c,
                         OverflowStats* stats = nullptr);

enum class StepKind { Seq, Par, Full };
std::string_view to_string(StepKind k);
std::optional<StepKind> parse_step_kind(std::string_view s);

/// A rule application at one position.
struct Redex {
  Context context;
  std::size_t rule;
  Substitution sigma;
  Term target;
};

std::vector<Term> root_reducts(const Trs& trs, const Term& t);
std::vector<Redex> redexes(const Trs& trs, const Term& t);

std::set<Term> sequential_step(const Trs& trs, const Term& t);
std::set<Term> parallel_step(const Trs& trs, const Term& t);
std::set<Term> full_step(const Trs& trs, const Term& t);
std::set<Term> step(const Trs& trs, const Term& t, StepKind kind);

/// Raised when an operation needs the complete reachable set.
class NotExhaustive : public std::runtime_error {
 public:
  NotExhaustive()
      : std::runtime_error("reduction graph is not exhaustive") {}
};

struct Edge {
  std::size_t source;
  std::size_t target;
  StepKind kind;
  /// Sequential edges carry the rule, hole position and substitution.
  std::optional<std::size_t> rule;
  std::optional<Context> context;
  Substitution sigma;
};

/// Reachability graph of one stepper. For the reflexive steppers (par, full)
/// the trivial step t => t is not stored as an edge.
class ReductionGraph {
 public:
  StepKind kind() const { return kind_; }
  const std::vector<Term>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& seeds() const { return seeds_; }
  bool exhaustive() const { return exhaustive_; }
  std::optional<std::size_t> find(const Term& t) const;

  /// Nodes without outgoing edges; throws NotExhaustive.
  std::vector<Term> normal_forms() const;
  /// One-step relation over the node set (edges deduplicated).
  Rel relation() const;
  /// Reflexive transitive reachability; throws NotExhaustive.
  Rel star_relation() const;
  const CarrierPtr& carrier() const;

  std::string to_dot() const;

 private:
  friend ReductionGraph reachable(const Trs&, const std::vector<Term>&,
                                  StepKind, std::optional<std::size_t>);
  std::size_t intern(const Term& t);

  StepKind kind_ = StepKind::Seq;
  std::vector<Term> nodes_;
  std::unordered_map<Term, std::size_t, TermHash> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> seeds_;
  bool exhaustive_ = false;
  mutable CarrierPtr carrier_;
};

/// Breadth-first closure of a stepper from the seeds. With a bound, nodes
/// more than `step_bound` steps away are not expanded; the graph is then
/// exhaustive only if none of the unexpanded nodes can step.
ReductionGraph reachable(const Trs& trs, const std::vector<Term>& seeds,
                         StepKind kind,
                         std::optional<std::size_t> step_bound = std::nullopt);

/// All terms of depth <= d over the signature and the given variables.
std::vector<Term> terms_up_to_depth(const Signature& sig,
                                    const std::vector<std::string>& vars,
                                    unsigned d);

}  // namespace reltrs
