// Copyright 2026 The bu-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// bu_lab: batch front end.
//
//   bu_lab cover  --kind closed|mixed --dim d [--timing]
//   bu_lab kneser sharp  --n n
//   bu_lab kneser verify --file coloring.json
//   bu_lab kneser search --n n --k k [--budget ms]
//   bu_lab learn  --class projection:m --dist spec --e p/q --delta p/q
//                 --trials T --seed s [--n N] [--threads k]
//   bu_lab gamma  (--matrix file | --class spec --d d) [--trials T] [--seed s]
//
// Common: --out path (default stdout), --format json|text.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bulab/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bu_lab: exact checks for antipodal-free covers, Kneser chain colorings and list-replicable learning"};
  app.require_subcommand(1);
  app.fallthrough();  // --out and --format may follow the subcommand

  std::string out_path;
  std::string format = "json";
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  bulab::CoverArgs cover;
  auto* cover_cmd = app.add_subcommand("cover", "build and verify a cover of S^d");
  cover_cmd->add_option("--kind", cover.kind, "closed or mixed")->required();
  cover_cmd->add_option("--dim", cover.dim, "sphere dimension d")->required();
  cover_cmd->add_flag("--timing", cover.timing, "add wall_time to the report");

  bulab::KneserArgs kneser;
  auto* kneser_cmd = app.add_subcommand("kneser", "Kneser chain colorings");
  kneser_cmd->add_option("subcommand", kneser.subcommand, "sharp, verify or search")->required();
  kneser_cmd->add_option("--n", kneser.n, "ground set size");
  kneser_cmd->add_option("--k", kneser.k, "chain color bound for search");
  kneser_cmd->add_option("--budget", kneser.budget_ms, "search budget in milliseconds (0: none)");
  kneser_cmd->add_option("--file", kneser.file, "coloring JSON for verify");

  bulab::LearnArgs learn;
  std::uint64_t learn_n = 0;
  auto* learn_cmd = app.add_subcommand("learn", "replication experiment for the majority-vote learner");
  learn_cmd->add_option("--class", learn.class_spec, "projection:m or powerset:m");
  learn_cmd->add_option("--dist", learn.dist_spec, "chain:{..};(..), pointmass:{x,y} or file:<path>")->required();
  learn_cmd->add_option("--e", learn.e, "accuracy parameter p/q");
  learn_cmd->add_option("--delta", learn.delta, "confidence parameter p/q");
  learn_cmd->add_option("--trials", learn.trials, "number of independent samples");
  learn_cmd->add_option("--seed", learn.seed, "seed");
  auto* n_opt = learn_cmd->add_option("--n", learn_n, "sample size override");
  learn_cmd->add_option("--threads", learn.threads, "worker threads (0: all cores)");

  bulab::GammaArgs gamma;
  auto* gamma_cmd = app.add_subcommand("gamma", "gamma-interpolation of an independent pattern");
  gamma_cmd->add_option("--matrix", gamma.matrix_file, "pattern matrix JSON");
  gamma_cmd->add_option("--class", gamma.class_spec, "class spec to search for a pattern");
  gamma_cmd->add_option("--d", gamma.d, "pattern size");
  gamma_cmd->add_option("--trials", gamma.trials, "random distributions to test");
  gamma_cmd->add_option("--seed", gamma.seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? bulab::kExitOk : bulab::kExitInput;
  }

  bulab::CommandResult result;
  try {
    if (*cover_cmd) {
      result = bulab::cmd_cover(cover);
    } else if (*kneser_cmd) {
      result = bulab::cmd_kneser(kneser);
    } else if (*learn_cmd) {
      if (*n_opt) learn.n = learn_n;
      result = bulab::cmd_learn(learn);
    } else {
      result = bulab::cmd_gamma(gamma);
    }
  } catch (const bulab::InputError& e) {  // BU_LAB_CAPS parsing
    result = bulab::input_error("bu_lab", e.what());
  }

  const std::string text = format == "json" ? result.report.dump(2) + "\n" : bulab::render_text(result.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return bulab::kExitInput;
    }
    out << text;
  }
  if (result.report.contains("error")) std::cerr << result.report["error"].get<std::string>() << "\n";
  return result.exit_code;
}
