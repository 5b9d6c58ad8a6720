// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reltrs/laws.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "laws_internal.hpp"

namespace reltrs {

using nlohmann::json;

std::string_view to_string(LawKind k) {
  switch (k) {
    case LawKind::Equality:
      return "equality";
    case LawKind::Inequality:
      return "inequality";
    case LawKind::Implication:
      return "implication";
  }
  return "?";
}

std::string_view to_string(LawSuite s) {
  switch (s) {
    case LawSuite::Relation:
      return "relation";
    case LawSuite::Fixpoint:
      return "fixpoint";
    case LawSuite::Termrel:
      return "termrel";
  }
  return "?";
}

std::string_view to_string(LawStrength s) {
  return s == LawStrength::Hard ? "hard" : "soft";
}

std::string_view to_string(LawScope s) {
  return s == LawScope::Work ? "work" : "support";
}

std::vector<std::string> SampleConfig::variable_names() const {
  static const char* kNames[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < variable_count; ++i) {
    out.push_back(i < 4 ? kNames[i] : "v" + std::to_string(i));
  }
  return out;
}

std::string LawReport::verdict() const {
  if (counterexample_count) return "fail";
  if (unconfirmed) return "unconfirmed";
  return "pass";
}

namespace {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Rel random_relation(CarrierPtr c, double density, std::mt19937_64& rng) {
  Rel r(c);
  for (std::size_t i = 0; i < c->size(); ++i) {
    for (std::size_t j = 0; j < c->size(); ++j) {
      if (unit_interval(rng) < density) r.set(i, j);
    }
  }
  return r;
}

namespace detail {

namespace {

std::string pair_list(const Rel& lhs, const Rel& rhs, std::size_t* total) {
  const auto& c = *lhs.carrier();
  std::ostringstream os;
  std::size_t shown = 0;
  *total = 0;
  lhs.for_each_pair([&](std::size_t i, std::size_t j) {
    if (rhs.test(i, j)) return;
    if (++*total > 3) return;
    if (shown++) os << ", ";
    os << '(' << c.label(i) << ", " << c.label(j) << ')';
  });
  return os.str();
}

}  // namespace

SampleCtx::SampleCtx(const SampleConfig& cfg, std::uint64_t seed,
                     CarrierPtr carrier, SubstReading reading, LawScope scope)
    : cfg_(cfg),
      rng_(seed),
      carrier_(std::move(carrier)),
      reading_(reading),
      scope_(scope) {}

double SampleCtx::uniform() { return unit_interval(rng_); }

std::size_t SampleCtx::below(std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n);
}

CarrierPtr SampleCtx::plain_carrier(std::size_t max_size) {
  if (max_size == 0) max_size = cfg_.max_carrier;
  std::size_t n = 1 + below(max_size);
  inputs_["carrier_size"] = n;
  return Carrier::range(n);
}

Rel SampleCtx::rel(const std::string& name, const CarrierPtr& c) {
  return rel(name, c, cfg_.density);
}

Rel SampleCtx::rel(const std::string& name, const CarrierPtr& c,
                   double density) {
  Rel r = random_relation(c, density, rng_);
  record(name, r);
  return r;
}

Rel SampleCtx::term_rel(const std::string& name) {
  const Universe& u = universe_of(carrier_);
  std::size_t n_in = 0;
  while (n_in < u.size() && u.depth(static_cast<TermId>(n_in)) <= cfg_.support_depth) {
    ++n_in;
  }
  Rel r(carrier_);
  for (std::size_t i = 0; i < n_in; ++i) {
    for (std::size_t j = 0; j < n_in; ++j) {
      if (coin(cfg_.density)) r.set(i, j);
    }
  }
  record(name, r);
  return r;
}

Rel SampleCtx::ground_rel(const std::string& name) {
  const Universe& u = universe_of(carrier_);
  Rel r(carrier_);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!coin(cfg_.density)) continue;
    // Ids are ordered by depth, so every id below the end of i's depth
    // level is a candidate target.
    std::size_t end = i + 1;
    while (end < u.size() && u.depth(static_cast<TermId>(end)) <=
                                 u.depth(static_cast<TermId>(i))) {
      ++end;
    }
    std::size_t j = below(end);
    if (j != i) r.set(i, j);
  }
  record(name, r);
  return r;
}

void SampleCtx::record(const std::string& name, const Rel& r) {
  json arr = json::array();
  for (auto& [l, s] : r.labelled_pairs()) arr.push_back({l, s});
  inputs_[name] = std::move(arr);
}

Rel SampleCtx::scoped(const Rel& a) const {
  if (scope_ == LawScope::Support && a.carrier()->universe()) {
    return restrict_depth(a, cfg_.support_depth);
  }
  return a;
}

bool SampleCtx::leq(const Rel& lhs, const Rel& rhs, std::string_view what) {
  Rel l = scoped(lhs);
  Rel r = scoped(rhs);
  if (reltrs::leq(l, r)) return true;
  std::size_t total = 0;
  std::string pairs = pair_list(l, r, &total);
  if (!failed_) {
    detail_ = std::string(what) + ": " + std::to_string(total) +
              " pair(s) of the left side missing on the right, e.g. " + pairs;
  }
  failed_ = true;
  return false;
}

bool SampleCtx::eq(const Rel& lhs, const Rel& rhs, std::string_view what) {
  Rel l = scoped(lhs);
  Rel r = scoped(rhs);
  if (l == r) return true;
  std::size_t total = 0;
  std::string msg;
  if (!reltrs::leq(l, r)) {
    msg = std::string(what) + ": left not below right, e.g. " +
          pair_list(l, r, &total);
  } else {
    msg = std::string(what) + ": right not below left, e.g. " +
          pair_list(r, l, &total);
  }
  if (!failed_) detail_ = msg;
  failed_ = true;
  return false;
}

bool SampleCtx::expect(bool ok, std::string_view what) {
  if (!ok) {
    if (!failed_) detail_ = std::string(what);
    failed_ = true;
  }
  return ok;
}

void SampleCtx::skip(std::string_view why) {
  skipped_ = true;
  if (detail_.empty()) detail_ = std::string(why);
}

const std::vector<LawDef>& law_table() {
  static const std::vector<LawDef> table = [] {
    std::vector<LawDef> t;
    register_relation_laws(t);
    register_fixpoint_laws(t);
    register_termrel_laws(t);
    std::set<std::string> ids;
    for (const auto& d : t) {
      if (!ids.insert(d.meta.id).second) {
        throw std::logic_error("duplicate law id " + d.meta.id);
      }
    }
    return t;
  }();
  return table;
}

}  // namespace detail

using detail::LawDef;
using detail::SampleCtx;
using detail::TermCarrier;

const std::vector<LawId>& law_catalog() {
  static const std::vector<LawId> cat = [] {
    std::vector<LawId> out;
    for (const auto& d : detail::law_table()) out.push_back(d.meta);
    return out;
  }();
  return cat;
}

std::optional<LawId> find_law(const std::string& id) {
  for (const auto& l : law_catalog()) {
    if (l.id == id) return l;
  }
  return std::nullopt;
}

std::uint64_t sample_seed(std::uint64_t run_seed, const std::string& law_id,
                          std::size_t sample) {
  // FNV-1a of the id, then a splitmix64 finaliser over the mix.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : law_id) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::uint64_t z = run_seed ^ (h + 0x9e3779b97f4a7c15ull * (sample + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

unsigned working_depth_for(const LawDef& d, const SampleConfig& cfg) {
  auto it = cfg.headroom.find(d.meta.id);
  return it == cfg.headroom.end() ? cfg.working_depth : it->second;
}

struct Carriers {
  std::map<unsigned, CarrierPtr> working;
  std::map<unsigned, CarrierPtr> ground;

  const CarrierPtr& get(const LawDef& d, const SampleConfig& cfg) {
    static const CarrierPtr none;
    unsigned depth = working_depth_for(d, cfg);
    switch (d.carrier) {
      case TermCarrier::None:
        return none;
      case TermCarrier::Working: {
        auto& c = working[depth];
        if (!c) {
          c = make_term_carrier({cfg.signature, cfg.variable_names(),
                                 cfg.support_depth, depth});
        }
        return c;
      }
      case TermCarrier::Ground: {
        auto& c = ground[depth];
        if (!c) {
          c = make_term_carrier({cfg.signature, {}, cfg.support_depth, depth});
        }
        return c;
      }
    }
    return none;
  }
};

struct SampleResult {
  bool failed = false;
  bool reading_matters = false;
  bool skipped = false;
  std::uint64_t dropped = 0;
  json inputs;
  std::string detail;
};

SampleResult run_sample(const LawDef& d, const SampleConfig& cfg,
                        const CarrierPtr& c, std::uint64_t seed,
                        SubstReading reading) {
  SampleCtx ctx(cfg, seed, c, reading, d.meta.scope);
  SampleResult res;
  try {
    d.body(ctx);
    res.failed = ctx.failed() && !ctx.skipped();
    res.skipped = ctx.skipped();
    res.detail = ctx.detail();
  } catch (const std::exception& e) {
    res.failed = true;
    res.detail = std::string("exception: ") + e.what();
  }
  res.reading_matters = ctx.reading_matters();
  res.dropped = ctx.dropped();
  res.inputs = ctx.inputs();
  return res;
}

LawReport run_law(const LawDef& d, const SampleConfig& cfg,
                  const CarrierPtr& c) {
  LawReport rep;
  rep.law = d.meta;
  if (d.carrier != TermCarrier::None) rep.working_depth = working_depth_for(d, cfg);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    std::uint64_t seed = sample_seed(cfg.seed, d.meta.id, i);
    SampleResult r = run_sample(d, cfg, c, seed, SubstReading::Occurring);
    ++rep.samples_run;
    rep.overflow_dropped += r.dropped;
    if (r.skipped) {
      ++rep.skipped;
      continue;
    }
    if (!r.failed) continue;
    if (d.uses_subst && r.reading_matters &&
        !run_sample(d, cfg, c, seed, SubstReading::Strict).failed) {
      ++rep.reading_divergences;
      continue;
    }
    if (d.meta.strength == LawStrength::Soft && r.dropped > 0) {
      ++rep.unconfirmed;
      continue;
    }
    ++rep.counterexample_count;
    if (rep.counterexamples.size() < cfg.max_counterexamples) {
      rep.counterexamples.push_back({i, seed, std::move(r.inputs), r.detail});
    }
  }
  return rep;
}

void check_config(const SampleConfig& cfg) {
  if (cfg.density < 0.0 || cfg.density > 1.0) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  if (cfg.working_depth < cfg.support_depth) {
    throw std::invalid_argument("working depth below support depth");
  }
  if (cfg.max_carrier == 0) throw std::invalid_argument("max_carrier must be positive");
  for (const auto& id : cfg.laws) {
    if (!find_law(id)) throw std::invalid_argument("unknown law: " + id);
  }
  for (const auto& [id, depth] : cfg.headroom) {
    if (!find_law(id)) throw std::invalid_argument("unknown law in headroom: " + id);
    if (depth < cfg.support_depth) {
      throw std::invalid_argument("headroom for " + id + " below support depth");
    }
  }
}

std::vector<LawReport> run_suites(const SampleConfig& cfg,
                                  std::optional<LawSuite> only) {
  check_config(cfg);
  std::vector<const LawDef*> todo;
  for (const auto& d : detail::law_table()) {
    if (only && d.meta.suite != *only) continue;
    if (!cfg.laws.empty() &&
        std::find(cfg.laws.begin(), cfg.laws.end(), d.meta.id) == cfg.laws.end()) {
      continue;
    }
    todo.push_back(&d);
  }
  Carriers carriers;
  std::vector<CarrierPtr> cs;
  for (const LawDef* d : todo) cs.push_back(carriers.get(*d, cfg));

  std::vector<LawReport> out(todo.size());
  unsigned threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(todo.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < todo.size();) {
      out[k] = run_law(*todo[k], cfg, cs[k]);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace

std::vector<LawReport> run_relation_law_suite(const SampleConfig& cfg) {
  return run_suites(cfg, LawSuite::Relation);
}

std::vector<LawReport> run_fixpoint_calculus_suite(const SampleConfig& cfg) {
  return run_suites(cfg, LawSuite::Fixpoint);
}

std::vector<LawReport> run_termrel_law_suite(const SampleConfig& cfg) {
  return run_suites(cfg, LawSuite::Termrel);
}

std::vector<LawReport> run_all_law_suites(const SampleConfig& cfg) {
  return run_suites(cfg, std::nullopt);
}

bool replay_sample(const std::string& law_id, const SampleConfig& cfg,
                   std::uint64_t seed, Counterexample* out) {
  for (const auto& d : detail::law_table()) {
    if (d.meta.id != law_id) continue;
    Carriers carriers;
    SampleResult r =
        run_sample(d, cfg, carriers.get(d, cfg), seed, SubstReading::Occurring);
    if (out) {
      out->sample_seed = seed;
      out->inputs = r.inputs;
      out->detail = r.detail;
    }
    return !r.failed;
  }
  throw std::invalid_argument("unknown law: " + law_id);
}

bool any_hard_failure(const std::vector<LawReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const LawReport& r) {
    return r.law.strength == LawStrength::Hard && r.counterexample_count > 0;
  });
}

json to_json(const LawReport& r) {
  json ce = json::array();
  for (const auto& c : r.counterexamples) {
    ce.push_back({{"sample", c.sample},
                  {"seed", c.sample_seed},
                  {"inputs", c.inputs},
                  {"detail", c.detail}});
  }
  json out = {{"law", r.law.id},
              {"anchor", r.law.anchor},
              {"kind", std::string(to_string(r.law.kind))},
              {"suite", std::string(to_string(r.law.suite))},
              {"strength", std::string(to_string(r.law.strength))},
              {"scope", std::string(to_string(r.law.scope))},
              {"samples", r.samples_run},
              {"skipped", r.skipped},
              {"counterexample_count", r.counterexample_count},
              {"unconfirmed", r.unconfirmed},
              {"reading_divergences", r.reading_divergences},
              {"overflow_dropped", r.overflow_dropped},
              {"counterexamples", std::move(ce)},
              {"verdict", r.verdict()}};
  if (r.working_depth) out["working_depth"] = r.working_depth;
  return out;
}

json to_json(const std::vector<LawReport>& rs) {
  json laws = json::array();
  std::size_t fails = 0, unconfirmed = 0;
  for (const auto& r : rs) {
    laws.push_back(to_json(r));
    if (r.verdict() == "fail") ++fails;
    if (r.verdict() == "unconfirmed") ++unconfirmed;
  }
  return {{"laws", std::move(laws)},
          {"summary",
           {{"total", rs.size()},
            {"fail", fails},
            {"unconfirmed", unconfirmed},
            {"hard_failure", any_hard_failure(rs)}}}};
}

json to_json(const SampleConfig& cfg) {
  json sig = json::array();
  for (const auto& [name, arity] : cfg.signature.operators()) {
    sig.push_back({name, arity});
  }
  return {{"seed", cfg.seed},
          {"samples", cfg.samples},
          {"density", cfg.density},
          {"support_depth", cfg.support_depth},
          {"working_depth", cfg.working_depth},
          {"signature", std::move(sig)},
          {"variable_count", cfg.variable_count},
          {"max_carrier", cfg.max_carrier},
          {"headroom", cfg.headroom},
          {"laws", cfg.laws},
          {"max_counterexamples", cfg.max_counterexamples},
          {"full_variant",
           cfg.full_variant == FullClosureVariant::Reflexive ? "reflexive" : "bare"},
          {"threads", cfg.threads}};
}

SampleConfig sample_config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be an object");
  SampleConfig cfg;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "seed") {
        cfg.seed = v.get<std::uint64_t>();
      } else if (key == "samples") {
        cfg.samples = v.get<std::size_t>();
      } else if (key == "density") {
        cfg.density = v.get<double>();
      } else if (key == "support_depth") {
        cfg.support_depth = v.get<unsigned>();
      } else if (key == "working_depth") {
        cfg.working_depth = v.get<unsigned>();
      } else if (key == "signature") {
        Signature sig;
        for (const auto& op : v) {
          sig.add(op.at(0).get<std::string>(), op.at(1).get<unsigned>());
        }
        cfg.signature = std::move(sig);
      } else if (key == "variable_count") {
        cfg.variable_count = v.get<std::size_t>();
      } else if (key == "max_carrier") {
        cfg.max_carrier = v.get<std::size_t>();
      } else if (key == "headroom") {
        cfg.headroom = v.get<std::map<std::string, unsigned>>();
      } else if (key == "laws") {
        cfg.laws = v.get<std::vector<std::string>>();
      } else if (key == "max_counterexamples") {
        cfg.max_counterexamples = v.get<std::size_t>();
      } else if (key == "threads") {
        cfg.threads = v.get<unsigned>();
      } else if (key == "full_variant") {
        auto s = v.get<std::string>();
        if (s == "reflexive") {
          cfg.full_variant = FullClosureVariant::Reflexive;
        } else if (s == "bare") {
          cfg.full_variant = FullClosureVariant::Bare;
        } else {
          throw std::invalid_argument("full_variant must be reflexive or bare");
        }
      } else {
        throw std::invalid_argument("unknown config field: " + key);
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
  check_config(cfg);
  return cfg;
}

}  // namespace reltrs
