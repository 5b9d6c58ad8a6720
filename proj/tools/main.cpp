// Copyright 2026 The reltrs Authors.
// SPDX-License-Identifier: Apache-2.0

// reltrs: reduce terms, analyse confluence and check algebraic laws.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "cli.hpp"

namespace {

const CLI::IsMember kFormats({"text", "json", "dot"});
const CLI::IsMember kKinds({"seq", "par", "full"});

}  // namespace

int main(int argc, char** argv) {
  namespace cli = reltrs::cli;
  CLI::App app{"Relational term rewriting toolkit"};
  app.require_subcommand(1);

  cli::ReduceOptions red;
  std::size_t red_bound = 0;
  auto* reduce = app.add_subcommand("reduce", "Build the reduction graph of a term");
  reduce->add_option("file", red.file, "TRS file")->required();
  reduce->add_option("term", red.term, "Term to reduce")->required();
  std::string red_kind = "seq";
  reduce->add_option("--kind", red_kind, "Step relation: seq, par or full")
      ->check(kKinds);
  auto* red_bound_opt =
      reduce->add_option("--bound", red_bound, "Maximum number of steps");
  std::string red_format = "text";
  reduce->add_option("--format", red_format, "Output format: text, json or dot")
      ->check(kFormats);
  reduce->add_option("--out", red.out, "Write the graph here instead of stdout");

  cli::CheckLawsOptions laws;
  auto* check = app.add_subcommand("check-laws", "Run the law suites");
  check->add_option("config", laws.config, "JSON sample configuration");
  check->add_option("--seed", laws.seed, "Run seed");
  check->add_option("--samples", laws.samples, "Samples per law");
  check->add_option("--density", laws.density, "Relation density in (0,1)");
  check->add_option("--support-depth", laws.support_depth,
                    "Depth of terms in sampled relations");
  check->add_option("--depth", laws.depth, "Working universe depth");
  check->add_option("--threads", laws.threads, "Worker threads (0 = auto)");
  check->add_option("--law", laws.laws, "Only run this law (repeatable)");
  std::string laws_format = "text";
  check->add_option("--format", laws_format, "Stdout format: text or json")
      ->check(kFormats);
  check->add_option("--out", laws.out, "Write the JSON report here");

  cli::AnalyzeOptions an;
  std::size_t an_bound = 0;
  auto* analyze = app.add_subcommand("analyze", "Check a confluence property");
  analyze->add_option("file", an.file, "TRS file")->required();
  analyze->add_option("property", an.property,
                      "confluence, weak, cr, cp or spectrum")
      ->required();
  analyze->add_option("--depth", an.depth,
                      "Seed depth (universe depth for cp)");
  analyze->add_flag("--open", an.open_seeds, "Include variables in seeds");
  auto* an_bound_opt =
      analyze->add_option("--bound", an_bound, "Maximum BFS depth");
  analyze->add_option("--join-depth", an.join_depth,
                      "Join search depth for weak confluence");
  std::uint64_t an_seed = 0;  // analyses are exhaustive, nothing is sampled
  analyze->add_option("--seed", an_seed, "Accepted for uniformity; unused");
  std::string an_format = "text";
  analyze->add_option("--format", an_format, "Output format: text or json")
      ->check(kFormats);
  analyze->add_option("--out", an.out, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  if (*reduce) {
    if (*red_bound_opt) red.bound = red_bound;
    red.kind = *reltrs::parse_step_kind(red_kind);
    red.format = *cli::parse_format(red_format);
    return cli::cmd_reduce(red, std::cout, std::cerr);
  }
  if (*check) {
    laws.format = *cli::parse_format(laws_format);
    return cli::cmd_check_laws(laws, std::cout, std::cerr);
  }
  if (*analyze) {
    if (*an_bound_opt) an.bound = an_bound;
    an.format = *cli::parse_format(an_format);
    return cli::cmd_analyze(an, std::cout, std::cerr);
  }
  return cli::kInputError;
}
