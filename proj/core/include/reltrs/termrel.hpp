// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reltrs/relalg.hpp"
#include "reltrs/syntax.hpp"

namespace reltrs {

/// A term relation is a Rel whose carrier was built with Carrier::of(u).
using TermRel = Rel;

/// Counts instance pairs that the finite universe could not hold.
struct OverflowStats {
  std::uint64_t dropped = 0;
};

struct WorkingContext {
  Signature signature;
  std::vector<std::string> variables;
  unsigned support_depth = 1;
  unsigned working_depth = 2;
};

/// Carrier over the universe of all terms of depth <= working_depth.
CarrierPtr make_term_carrier(const WorkingContext& ctx,
                             std::size_t cap = Universe::kDefaultCap);

/// The universe behind a term carrier; throws std::invalid_argument for a
/// plain carrier.
const Universe& universe_of(const Rel& a);
const Universe& universe_of(const CarrierPtr& c);

/// Pairs whose both components have depth <= d.
Rel restrict_depth(const Rel& a, unsigned d);

TermRel i_eta(const CarrierPtr& c);
TermRel i_sigma0(const CarrierPtr& c);

// Structural operators. A pair whose source lies in the universe but whose
// constructed target does not is dropped and counted in `stats`.

TermRel tilde(const TermRel& a, OverflowStats* stats = nullptr);
TermRel hat(const TermRel& a, OverflowStats* stats = nullptr);
/// Sequential refinement: exactly one argument changes along a.
TermRel check(const TermRel& a, OverflowStats* stats = nullptr);
/// One argument related by b, all siblings related by a.
TermRel derivative(const TermRel& a, const TermRel& b,
                   OverflowStats* stats = nullptr);
/// tilde restricted to operators of arity exactly n.
TermRel taylor(unsigned n, const TermRel& a, OverflowStats* stats = nullptr);

enum class SubstReading {
  /// Only variables occurring in the related pair are constrained.
  Occurring,
  /// Additionally every non-occurring variable needs some b-pair, so the
  /// result is empty when b is empty and a pair misses a variable.
  Strict,
};

/// Relational substitution a[b]: pairs (t^sigma, s^rho) with (t, s) in a and
/// sigma(x) b rho(x) for the constrained variables x.
TermRel subst_rel(const TermRel& a, const TermRel& b,
                  SubstReading reading = SubstReading::Occurring,
                  OverflowStats* stats = nullptr);

/// mu x. a v hat(x)
TermRel parallel_closure(const TermRel& a, OverflowStats* stats = nullptr);
/// mu x. a v check(x)
TermRel sequential_closure(const TermRel& a, OverflowStats* stats = nullptr);

enum class FullClosureVariant {
  /// mu x. hat(x) ; (a v id), matching the inference rules of full reduction.
  Reflexive,
  /// mu x. hat(x) ; a, the bare formula.
  Bare,
};

TermRel full_closure(const TermRel& a,
                     FullClosureVariant variant = FullClosureVariant::Reflexive,
                     OverflowStats* stats = nullptr);

}  // namespace reltrs
