// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reltrs/json_io.hpp"

#include <algorithm>

namespace reltrs {

using nlohmann::json;

json rel_to_json(const Rel& a) {
  auto pairs = a.labelled_pairs();
  json arr = json::array();
  for (auto& [l, r] : pairs) arr.push_back({l, r});
  return {{"size", a.n()}, {"pairs", std::move(arr)}};
}

Rel rel_from_json(const CarrierPtr& c, const json& j) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : j.at("pairs")) {
    pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  }
  return from_labelled_pairs(c, pairs);
}

json to_json(const ReductionGraph& g) {
  json nodes = json::array();
  for (const Term& t : g.nodes()) nodes.push_back(t.to_string());
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    json je = {{"source", e.source},
               {"target", e.target},
               {"kind", std::string(to_string(e.kind))}};
    if (e.rule) je["rule"] = *e.rule + 1;
    if (e.context) {
      je["context"] = e.context->to_string();
    }
    if (!e.sigma.empty()) {
      json s = json::object();
      for (const auto& [v, t] : e.sigma) s[v] = t.to_string();
      je["sigma"] = std::move(s);
    }
    edges.push_back(std::move(je));
  }
  json out = {{"kind", std::string(to_string(g.kind()))},
              {"exhaustive", g.exhaustive()},
              {"nodes", std::move(nodes)},
              {"seeds", g.seeds()},
              {"edges", std::move(edges)}};
  if (g.exhaustive()) {
    json nf = json::array();
    for (const Term& t : g.normal_forms()) nf.push_back(t.to_string());
    out["normal_forms"] = std::move(nf);
  }
  return out;
}

json to_json(const ConfluenceReport& r, const Rel& a) {
  json out = {{"property", r.property},
              {"verdict", std::string(to_string(r.verdict))},
              {"overflow_dropped", r.overflow_dropped}};
  if (r.witness) {
    const auto& c = *a.carrier();
    json w = {{"left", c.label(r.witness->left)},
              {"right", c.label(r.witness->right)}};
    if (r.witness->source) w["source"] = c.label(*r.witness->source);
    out["witness"] = std::move(w);
  }
  return out;
}

json to_json(const InequalityReport& r, const Rel& over) {
  const auto& c = *over.carrier();
  json ce = json::array();
  for (auto [i, j] : r.counterexamples) ce.push_back({c.label(i), c.label(j)});
  return {{"name", r.name},
          {"verdict", std::string(to_string(r.verdict))},
          {"violations", r.violations},
          {"counterexamples", std::move(ce)}};
}

json to_json(const CpReport& r, const Rel& over) {
  json items = json::array();
  for (const auto& it : r.items) items.push_back(to_json(it, over));
  return {{"universe_size", r.universe_size},
          {"overflow_dropped", r.overflow_dropped},
          {"conditions", std::move(items)}};
}

json to_json(const TechniqueReport& r, const Rel& over) {
  return {{"dagger", to_json(r.dagger, over)},
          {"ddagger", to_json(r.ddagger, over)},
          {"conclusion", to_json(r.conclusion, over)},
          {"premises_hold", r.premises_hold()},
          {"overflow_dropped", r.overflow_dropped}};
}

json to_json(const PeakReport& r, const ReductionGraph& g) {
  json out = {{"property", "weak-confluence"},
              {"verdict", std::string(to_string(r.verdict))},
              {"peaks", r.peaks}};
  if (r.witness) {
    json w = {{"left", g.nodes()[r.witness->left].to_string()},
              {"right", g.nodes()[r.witness->right].to_string()}};
    if (r.witness->source) {
      w["source"] = g.nodes()[*r.witness->source].to_string();
    }
    out["witness"] = std::move(w);
  }
  return out;
}

json to_json(const SpectrumReport& r) {
  return {{"nodes", r.nodes},
          {"exhaustive", r.exhaustive},
          {"seq_not_in_par", r.seq_not_in_par},
          {"par_not_in_full", r.par_not_in_full},
          {"full_not_in_star", r.full_not_in_star},
          {"par_star_equal", r.par_star_equal},
          {"full_star_equal", r.full_star_equal},
          {"verdict", std::string(to_string(r.verdict()))}};
}

}  // namespace reltrs
