// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

// Shared machinery of the law suites: per-sample context and the law table.

#pragma once

#include <cstdint>
#include <functional>
#include <nlohmann/json.hpp>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "reltrs/laws.hpp"

namespace reltrs::detail {

/// Which carrier a term law samples over.
enum class TermCarrier {
  None,
  /// All terms of the working depth, relations drawn on the support depth.
  Working,
  /// Ground terms of the working depth, depth non-increasing relations.
  Ground,
};

class SampleCtx {
 public:
  SampleCtx(const SampleConfig& cfg, std::uint64_t seed, CarrierPtr carrier,
            SubstReading reading, LawScope scope);

  const SampleConfig& cfg() const { return cfg_; }
  std::mt19937_64& rng() { return rng_; }
  double uniform();
  std::size_t below(std::size_t n);
  bool coin(double p) { return uniform() < p; }

  /// Fresh plain carrier of random size in [1, max_carrier].
  CarrierPtr plain_carrier(std::size_t max_size = 0);
  /// Random relation over c with the configured density, recorded as input.
  Rel rel(const std::string& name, const CarrierPtr& c);
  Rel rel(const std::string& name, const CarrierPtr& c, double density);
  /// Random term relation with both components within the support depth.
  Rel term_rel(const std::string& name);
  /// Random ground relation: each term gets at most one successor, of no
  /// greater depth.
  Rel ground_rel(const std::string& name);

  const CarrierPtr& carrier() const { return carrier_; }
  OverflowStats* stats() { return &stats_; }
  std::uint64_t dropped() const { return stats_.dropped; }
  SubstReading reading() const { return reading_; }

  Rel subst(const Rel& a, const Rel& b) {
    // The strict reading only differs from the occurring one when b is empty.
    if (b.empty()) reading_matters_ = true;
    return subst_rel(a, b, reading_, &stats_);
  }
  bool reading_matters() const { return reading_matters_; }

  void record(const std::string& name, const Rel& r);
  void record(const std::string& name, nlohmann::json v) {
    inputs_[name] = std::move(v);
  }
  const nlohmann::json& inputs() const { return inputs_; }

  // Checks. The first failing check is remembered; later ones still run
  // but do not overwrite the detail.
  bool leq(const Rel& lhs, const Rel& rhs, std::string_view what);
  bool eq(const Rel& lhs, const Rel& rhs, std::string_view what);
  bool expect(bool ok, std::string_view what);
  /// Marks the sample as not meeting a side condition.
  void skip(std::string_view why);

  bool failed() const { return failed_; }
  bool skipped() const { return skipped_; }
  const std::string& detail() const { return detail_; }

 private:
  Rel scoped(const Rel& a) const;

  const SampleConfig& cfg_;
  std::mt19937_64 rng_;
  CarrierPtr carrier_;
  SubstReading reading_;
  LawScope scope_;
  OverflowStats stats_;
  nlohmann::json inputs_ = nlohmann::json::object();
  bool reading_matters_ = false;
  bool failed_ = false;
  bool skipped_ = false;
  std::string detail_;
};

struct LawDef {
  LawId meta;
  TermCarrier carrier = TermCarrier::None;
  /// Uses relational substitution, so failures are re-checked under the
  /// strict reading.
  bool uses_subst = false;
  std::function<void(SampleCtx&)> body;
};

void register_relation_laws(std::vector<LawDef>& out);
void register_fixpoint_laws(std::vector<LawDef>& out);
void register_termrel_laws(std::vector<LawDef>& out);

const std::vector<LawDef>& law_table();

// Small builders used by the registration code.
inline LawDef law(std::string id, std::string anchor, LawKind kind,
                  LawSuite suite, std::function<void(SampleCtx&)> body) {
  LawDef d;
  d.meta.id = std::move(id);
  d.meta.anchor = std::move(anchor);
  d.meta.kind = kind;
  d.meta.suite = suite;
  d.body = std::move(body);
  return d;
}

}  // namespace reltrs::detail
