// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "reltrs/relalg.hpp"
#include "reltrs/syntax.hpp"
#include "reltrs/termrel.hpp"

namespace reltrs {

enum class LawKind { Equality, Inequality, Implication };
enum class LawSuite { Relation, Fixpoint, Termrel };
/// Hard laws must hold on every sample. Soft laws compare closures over a
/// truncated universe; a failure on a sample that lost pairs to truncation
/// is counted as unconfirmed rather than as a counterexample.
enum class LawStrength { Hard, Soft };
/// Work: compare over the whole working universe. Support: compare only
/// pairs of terms within the support depth, whose witnesses fit the
/// working universe.
enum class LawScope { Work, Support };

struct LawId {
  std::string id;
  std::string anchor;
  LawKind kind = LawKind::Equality;
  LawSuite suite = LawSuite::Relation;
  LawStrength strength = LawStrength::Hard;
  LawScope scope = LawScope::Work;
};

struct SampleConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  double density = 0.15;
  unsigned support_depth = 1;
  /// Working depth used unless a law has a headroom override.
  unsigned working_depth = 2;
  Signature signature = arithmetic_signature();
  std::size_t variable_count = 2;
  /// Largest carrier for the pure relation suite.
  std::size_t max_carrier = 5;
  /// Per-law working depth overrides.
  std::map<std::string, unsigned> headroom;
  /// Restrict the run to these law ids; empty means all.
  std::vector<std::string> laws;
  std::size_t max_counterexamples = 3;
  FullClosureVariant full_variant = FullClosureVariant::Reflexive;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;

  std::vector<std::string> variable_names() const;
};

struct Counterexample {
  std::size_t sample = 0;
  std::uint64_t sample_seed = 0;
  nlohmann::json inputs;
  std::string detail;
};

struct LawReport {
  LawId law;
  unsigned working_depth = 0;  // 0 for non-term suites
  std::size_t samples_run = 0;
  std::size_t skipped = 0;
  std::size_t counterexample_count = 0;
  std::size_t unconfirmed = 0;
  /// Samples failing under the occurring-variables reading of substitution
  /// but passing under the strict reading.
  std::size_t reading_divergences = 0;
  std::uint64_t overflow_dropped = 0;
  std::vector<Counterexample> counterexamples;

  /// "pass", "fail" or "unconfirmed".
  std::string verdict() const;
};

/// Every catalogued law, in a fixed order.
const std::vector<LawId>& law_catalog();
std::optional<LawId> find_law(const std::string& id);

std::vector<LawReport> run_relation_law_suite(const SampleConfig& cfg);
std::vector<LawReport> run_fixpoint_calculus_suite(const SampleConfig& cfg);
std::vector<LawReport> run_termrel_law_suite(const SampleConfig& cfg);
/// All three suites, in catalog order, honouring cfg.laws.
std::vector<LawReport> run_all_law_suites(const SampleConfig& cfg);

/// Re-runs one sample of a law from its recorded seed. Returns true when
/// the law holds (or the sample is skipped) on that sample.
bool replay_sample(const std::string& law_id, const SampleConfig& cfg,
                   std::uint64_t sample_seed, Counterexample* out = nullptr);

/// Each pair of c x c independently with probability density. Draws one
/// number per pair in row-major order.
Rel random_relation(CarrierPtr c, double density, std::mt19937_64& rng);

/// Deterministic per-sample seed derived from the run seed, law and index.
std::uint64_t sample_seed(std::uint64_t run_seed, const std::string& law_id,
                          std::size_t sample);

/// Any hard law with a counterexample.
bool any_hard_failure(const std::vector<LawReport>& reports);

nlohmann::json to_json(const LawReport& r);
nlohmann::json to_json(const std::vector<LawReport>& rs);
nlohmann::json to_json(const SampleConfig& cfg);
/// Throws std::invalid_argument on malformed or unknown fields.
SampleConfig sample_config_from_json(const nlohmann::json& j);

std::string_view to_string(LawKind k);
std::string_view to_string(LawSuite s);
std::string_view to_string(LawStrength s);
std::string_view to_string(LawScope s);

}  // namespace reltrs
