// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include "reltrs/analysis.hpp"
#include "reltrs/relalg.hpp"
#include "reltrs/rewrite.hpp"

namespace reltrs {

/// {"size": n, "pairs": [[l, r], ...]} with pairs sorted by label.
nlohmann::json rel_to_json(const Rel& a);
/// Inverse of rel_to_json over a given carrier.
Rel rel_from_json(const CarrierPtr& c, const nlohmann::json& j);

nlohmann::json to_json(const ReductionGraph& g);
nlohmann::json to_json(const ConfluenceReport& r, const Rel& a);
nlohmann::json to_json(const InequalityReport& r, const Rel& over);
nlohmann::json to_json(const CpReport& r, const Rel& over);
nlohmann::json to_json(const TechniqueReport& r, const Rel& over);
nlohmann::json to_json(const PeakReport& r, const ReductionGraph& g);
nlohmann::json to_json(const SpectrumReport& r);

}  // namespace reltrs
