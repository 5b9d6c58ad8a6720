// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reltrs/relalg.hpp"
#include "reltrs/rewrite.hpp"
#include "reltrs/termrel.hpp"

namespace reltrs {

enum class Verdict { Holds, Fails, Unconfirmed };
std::string_view to_string(Verdict v);

/// A pair of elements (left, right) that should have been joinable, with
/// the element both were reached from when the property is about peaks.
struct Witness {
  std::optional<std::size_t> source;
  std::size_t left;
  std::size_t right;
};

struct ConfluenceReport {
  std::string property;
  Verdict verdict = Verdict::Holds;
  std::optional<Witness> witness;
  std::uint64_t overflow_dropped = 0;
  /// Labels of source, left, right (source empty when absent).
  std::vector<std::string> witness_labels(const Rel& a) const;
};

/// a°;a <= a;a°
ConfluenceReport has_diamond(const Rel& a);
/// a*°;a* <= a*;a*°
ConfluenceReport is_confluent(const Rel& a);
/// a°;a <= a*;a*°
ConfluenceReport is_weakly_confluent(const Rel& a);
/// (a v a°)* = a*;a°*
ConfluenceReport is_church_rosser(const Rel& a);

/// One checked inequality lhs <= rhs.
struct InequalityReport {
  std::string name;
  Verdict verdict = Verdict::Holds;
  /// Up to a handful of pairs in lhs but not in rhs.
  std::vector<std::pair<std::size_t, std::size_t>> counterexamples;
  std::size_t violations = 0;
};

struct CpReport {
  std::vector<InequalityReport> items;  // CP-1, CP-2, CP-1'
  std::uint64_t overflow_dropped = 0;
  std::size_t universe_size = 0;
  const InequalityReport& get(std::string_view name) const;
};

/// Evaluates the critical-pair conditions for a = root reduction instances of
/// the TRS over the universe of `c`. A failing inequality whose right-hand
/// side involves closures is reported as unconfirmed when pairs were lost to
/// truncation.
CpReport check_cp(const Trs& trs, const CarrierPtr& c);

/// The same conditions for an arbitrary term relation a (taken as a = a[id]).
CpReport check_cp_relation(const TermRel& a);

struct TechniqueReport {
  InequalityReport dagger;      // a°;a <= as*;as*°
  InequalityReport ddagger;     // a°;d_id(as) <= as*;as*°
  InequalityReport conclusion;  // as°;as <= as*;as*°
  std::uint64_t overflow_dropped = 0;
  bool premises_hold() const;
};

/// Premises and conclusion of the weak-confluence proof technique, where
/// `as` is the sequential closure of a.
TechniqueReport check_weak_confluence_technique(const TermRel& a);

/// Weak confluence on a sequential reduction graph, by enumerating every
/// peak and searching for a common reduct within `join_depth` steps.
struct PeakReport {
  Verdict verdict = Verdict::Holds;
  std::size_t peaks = 0;
  std::optional<Witness> witness;  // node indices of the graph
};
PeakReport weak_confluence_by_peaks(const ReductionGraph& g,
                                    unsigned join_depth = 12);

/// seq <= par <= full <= seq* pointwise on the reachable closure of the
/// seeds, plus equality of the three reflexive transitive closures.
struct SpectrumReport {
  std::size_t nodes = 0;
  bool exhaustive = false;
  std::size_t seq_not_in_par = 0;
  std::size_t par_not_in_full = 0;
  std::size_t full_not_in_star = 0;
  bool par_star_equal = false;
  bool full_star_equal = false;
  Verdict verdict() const;
};
SpectrumReport check_spectrum(const Trs& trs, const std::vector<Term>& seeds);

/// Compares parallel_closure(⊳) and full_closure(⊳) over the reachable
/// closure of the seeds against the inductive steppers.
struct ClosureAgreement {
  std::size_t nodes = 0;
  bool closed = false;  // reachable set is subterm-closed
  std::size_t par_mismatches = 0;
  std::size_t full_mismatches = 0;
  std::size_t bare_full_mismatches = 0;
};
ClosureAgreement check_closure_semantics(const Trs& trs,
                                         const std::vector<Term>& seeds);

}  // namespace reltrs
