// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "reltrs/analysis.hpp"
#include "reltrs/json_io.hpp"
#include "reltrs/trs_file.hpp"

namespace reltrs::cli {

using nlohmann::json;

namespace {

// Input problems, reported with exit code 3.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("write failed: " + path);
}

// Sends the rendered artefact to --out when given, otherwise to stdout.
void emit(const std::string& rendered, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << rendered;
  } else {
    write_file(path, rendered);
  }
}

TrsFile load(const std::string& path) {
  try {
    return load_trs(path);
  } catch (const TrsFileError& e) {
    throw InputError(path + ":" + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Holds: return kOk;
    case Verdict::Fails: return kFails;
    case Verdict::Unconfirmed: return kUnconfirmed;
  }
  return kFails;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UniverseCapExceeded& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

// ---------------------------------------------------------------- reduce

std::string reduce_text(const Trs& trs, const ReductionGraph& g,
                        std::optional<std::size_t> bound) {
  std::ostringstream os;
  os << "kind: " << to_string(g.kind()) << '\n';
  os << "nodes: " << g.nodes().size() << '\n';
  os << "edges: " << g.edges().size() << '\n';
  for (const Edge& e : g.edges()) {
    os << "  " << g.nodes()[e.source].to_string() << " -> "
       << g.nodes()[e.target].to_string() << "  [" << to_string(e.kind);
    if (e.rule) os << " r" << *e.rule + 1;
    if (e.context) os << " at " << e.context->to_string();
    os << "]\n";
  }
  if (g.exhaustive()) {
    os << "exhaustive: yes\n";
    os << "normal forms:\n";
    for (const Term& t : g.normal_forms()) os << "  " << t.to_string() << '\n';
  } else {
    os << "exhaustive: no (bound " << bound.value_or(0) << " reached)\n";
    // Unexpanded frontier nodes have no edges either, so test each one.
    std::vector<char> has_out(g.nodes().size(), 0);
    for (const Edge& e : g.edges()) has_out[e.source] = 1;
    os << "normal forms found so far:\n";
    for (std::size_t i = 0; i < g.nodes().size(); ++i) {
      if (has_out[i]) continue;
      const Term& t = g.nodes()[i];
      auto next = step(trs, t, g.kind());
      bool only_self = next.empty() || (g.kind() != StepKind::Seq &&
                                        next.size() == 1 && *next.begin() == t);
      if (only_self) os << "  " << t.to_string() << '\n';
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- check-laws

std::string laws_text(const std::vector<LawReport>& reports) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& r : reports) width = std::max(width, r.law.id.size());
  std::size_t fails = 0, unconfirmed = 0;
  for (const auto& r : reports) {
    std::string v = r.verdict();
    if (v == "fail") ++fails;
    if (v == "unconfirmed") ++unconfirmed;
    os << std::left << std::setw(12) << v << std::setw(static_cast<int>(width) + 2)
       << r.law.id << "samples=" << r.samples_run << " skipped=" << r.skipped
       << " counterexamples=" << r.counterexample_count
       << " unconfirmed=" << r.unconfirmed
       << " overflow=" << r.overflow_dropped;
    if (r.law.strength == LawStrength::Soft) os << " (soft)";
    os << '\n';
    if (!r.counterexamples.empty()) {
      const auto& ce = r.counterexamples.front();
      os << "    sample " << ce.sample << " seed " << ce.sample_seed << ": "
         << ce.detail << '\n';
    }
  }
  os << reports.size() << " laws, " << fails << " failing, " << unconfirmed
     << " unconfirmed, hard failure: "
     << (any_hard_failure(reports) ? "yes" : "no") << '\n';
  return os.str();
}

// ---------------------------------------------------------------- analyze

struct AnalysisResult {
  Verdict verdict = Verdict::Holds;
  json report;
  std::string text;
};

std::string witness_text(const json& w) {
  std::string s;
  if (w.contains("source")) s += w["source"].get<std::string>() + " -> ";
  s += "{" + w["left"].get<std::string>() + ", " +
       w["right"].get<std::string>() + "}";
  return s;
}

std::string verdict_line(Verdict v) {
  return "verdict: " + std::string(to_string(v)) + '\n';
}

AnalysisResult analyze_graph(const Trs& trs, const std::vector<Term>& seeds,
                             const AnalyzeOptions& opt) {
  AnalysisResult res;
  ReductionGraph g = reachable(trs, seeds, StepKind::Seq, opt.bound);
  std::ostringstream os;
  os << "nodes: " << g.nodes().size() << '\n';
  if (!g.exhaustive()) {
    res.verdict = Verdict::Unconfirmed;
    res.report = {{"property", opt.property},
                  {"verdict", std::string(to_string(res.verdict))},
                  {"nodes", g.nodes().size()},
                  {"reason", "reachable set not exhausted within the bound"}};
    os << "reachable set not exhausted within the bound\n"
       << verdict_line(res.verdict);
    res.text = os.str();
    return res;
  }
  if (opt.property == "weak") {
    PeakReport r = weak_confluence_by_peaks(g, opt.join_depth);
    res.verdict = r.verdict;
    res.report = to_json(r, g);
    os << "peaks: " << r.peaks << " (join depth " << opt.join_depth << ")\n";
  } else {
    Rel a = g.relation();
    ConfluenceReport r = opt.property == "cr" ? is_church_rosser(a)
                                              : is_confluent(a);
    res.verdict = r.verdict;
    res.report = to_json(r, a);
    os << "property: " << r.property << '\n';
  }
  res.report["nodes"] = g.nodes().size();
  os << verdict_line(res.verdict);
  if (res.report.contains("witness")) {
    os << "witness: " << witness_text(res.report["witness"]) << '\n';
  }
  res.text = os.str();
  return res;
}

AnalysisResult analyze_cp(const Trs& trs, const std::vector<std::string>& vars,
                          const AnalyzeOptions& opt) {
  AnalysisResult res;
  auto c = Carrier::of(Universe::enumerate(trs.signature, vars, opt.depth));
  CpReport r = check_cp(trs, c);
  res.report = to_json(r, bot(c));
  std::ostringstream os;
  os << "overflow dropped: " << r.overflow_dropped << '\n';
  bool unconfirmed = false, fails = false;
  for (const auto& item : r.items) {
    os << item.name << ": " << to_string(item.verdict);
    if (item.violations) os << " (" << item.violations << " violations)";
    os << '\n';
    for (auto [i, j] : item.counterexamples) {
      os << "  " << c->label(i) << " , " << c->label(j) << '\n';
    }
    fails |= item.verdict == Verdict::Fails;
    unconfirmed |= item.verdict == Verdict::Unconfirmed;
  }
  res.verdict = fails         ? Verdict::Fails
                : unconfirmed ? Verdict::Unconfirmed
                              : Verdict::Holds;
  res.report["verdict"] = std::string(to_string(res.verdict));
  os << verdict_line(res.verdict);
  res.text = os.str();
  return res;
}

AnalysisResult analyze_spectrum(const Trs& trs, const std::vector<Term>& seeds) {
  AnalysisResult res;
  SpectrumReport r = check_spectrum(trs, seeds);
  res.verdict = r.verdict();
  res.report = to_json(r);
  std::ostringstream os;
  os << "nodes: " << r.nodes << '\n'
     << "seq steps not parallel: " << r.seq_not_in_par << '\n'
     << "parallel steps not full: " << r.par_not_in_full << '\n'
     << "full steps not in seq-star: " << r.full_not_in_star << '\n'
     << "par-star = seq-star: " << (r.par_star_equal ? "yes" : "no") << '\n'
     << "full-star = seq-star: " << (r.full_star_equal ? "yes" : "no") << '\n'
     << verdict_line(res.verdict);
  res.text = os.str();
  return res;
}

}  // namespace

std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "dot") return Format::Dot;
  return std::nullopt;
}

int cmd_reduce(const ReduceOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    TrsFile f = load(opt.file);
    Term t = parse_term(opt.term, f.trs);
    ReductionGraph g = reachable(f.trs, {t}, opt.kind, opt.bound);
    std::string text = reduce_text(f.trs, g, opt.bound);
    std::string rendered;
    switch (opt.format) {
      case Format::Text: rendered = text; break;
      case Format::Json: rendered = to_json(g).dump(2) + "\n"; break;
      case Format::Dot: rendered = g.to_dot(); break;
    }
    emit(rendered, opt.out, out);
    if (!opt.out.empty() && opt.format != Format::Text) out << text;
    if (!g.exhaustive()) {
      err << "warning: step bound reached, graph is partial\n";
      return static_cast<int>(kUnconfirmed);
    }
    return static_cast<int>(kOk);
  });
}

SampleConfig resolve_config(const CheckLawsOptions& opt) {
  SampleConfig cfg;
  if (!opt.config.empty()) {
    std::ifstream in(opt.config);
    if (!in) throw InputError("cannot open " + opt.config);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError(opt.config + ": " + e.what());
    }
    cfg = sample_config_from_json(j);
  }
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.samples) cfg.samples = *opt.samples;
  if (opt.density) cfg.density = *opt.density;
  if (opt.support_depth) cfg.support_depth = *opt.support_depth;
  if (opt.depth) cfg.working_depth = *opt.depth;
  if (opt.threads) cfg.threads = *opt.threads;
  if (!opt.laws.empty()) cfg.laws = opt.laws;
  // Round-trip through the JSON reader so flag overrides are validated the
  // same way as file contents.
  return sample_config_from_json(to_json(cfg));
}

int cmd_check_laws(const CheckLawsOptions& opt, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    if (opt.format == Format::Dot) throw InputError("check-laws has no dot output");
    SampleConfig cfg = resolve_config(opt);
    std::vector<LawReport> reports = run_all_law_suites(cfg);
    json report = to_json(reports);
    json jc = to_json(cfg);
    jc.erase("threads");  // does not affect results
    report["config"] = std::move(jc);
    std::string dumped = report.dump(2) + "\n";
    if (!opt.out.empty()) write_file(opt.out, dumped);
    if (opt.format == Format::Json) {
      if (opt.out.empty()) out << dumped;
    } else {
      out << laws_text(reports);
    }
    return static_cast<int>(any_hard_failure(reports) ? kFails : kOk);
  });
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    if (opt.format == Format::Dot) throw InputError("analyze has no dot output");
    const std::string& p = opt.property;
    if (p != "confluence" && p != "weak" && p != "cr" && p != "cp" &&
        p != "spectrum") {
      throw InputError("unknown property '" + p +
                       "' (expected confluence, weak, cr, cp or spectrum)");
    }
    TrsFile f = load(opt.file);
    std::vector<std::string> vars;
    if (opt.open_seeds) vars = f.trs.variables;
    std::vector<Term> seeds =
        terms_up_to_depth(f.trs.signature, vars, opt.depth);

    AnalysisResult res;
    if (p == "cp") {
      res = analyze_cp(f.trs, vars, opt);
    } else if (p == "spectrum") {
      res = analyze_spectrum(f.trs, seeds);
    } else {
      res = analyze_graph(f.trs, seeds, opt);
    }
    if (p != "cp") res.report["seeds"] = seeds.size();

    std::string dumped = res.report.dump(2) + "\n";
    if (!opt.out.empty()) write_file(opt.out, dumped);
    if (opt.format == Format::Json) {
      if (opt.out.empty()) out << dumped;
    } else {
      out << (p == "cp" ? "universe: " : "seeds: ") << seeds.size()
          << " terms (depth <= " << opt.depth
          << (opt.open_seeds ? ", with variables" : ", ground") << ")\n";
      out << res.text;
    }
    return exit_for(res.verdict);
  });
}

}  // namespace reltrs::cli
