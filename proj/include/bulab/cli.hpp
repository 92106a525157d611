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

// In-process command implementations behind tools/bu_lab. Each returns an
// exit code (0 verified, 1 check failed, 2 input or limit error) and a
// structured report; the binary only parses flags and writes the report.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bulab/caps.hpp"
#include "bulab/covers.hpp"
#include "bulab/kneser.hpp"
#include "bulab/learning.hpp"
#include "bulab/serialize.hpp"

namespace bulab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

struct CommandResult {
  int exit_code = kExitOk;
  Json report;
};

inline CommandResult input_error(std::string_view command, const std::string& message) {
  return {kExitInput, Json{{"command", command}, {"error", message}}};
}

// Runs `body`, mapping input errors to exit code 2.
template <class Body>
CommandResult guarded(std::string_view command, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    return input_error(command, e.what());
  }
}

// ---------------------------------------------------------------------------
// cover

struct CoverArgs {
  std::string kind = "closed";
  int dim = 1;
  bool timing = false;
};

inline CommandResult cmd_cover(const CoverArgs& args, const Caps& caps = default_caps()) {
  return guarded("cover", [&] {
    const auto start = std::chrono::steady_clock::now();
    Cover cover;
    int expected = 0;
    const int t = threshold_t(args.dim);
    if (args.kind == "closed") {
      cover = build_closed_cover(args.dim, caps);
      expected = t;
    } else if (args.kind == "mixed") {
      cover = build_mixed_cover(args.dim, caps);
      expected = (t + 1) / 2;
    } else {
      throw InputError("--kind must be closed or mixed, got " + args.kind);
    }

    Json report{{"command", "cover"}, {"d", args.dim}, {"kind", args.kind}, {"t", t}};
    Json labels = Json::array();
    for (const CoverSet& s : cover.sets) labels.push_back(s.label + " (" + to_string(s.kind) + ")");
    report["set_count"] = cover.sets.size();
    report["sets"] = labels;
    report["simplex_counts"] = cover.complex->counts();

    std::vector<std::string> failed;
    const CoverCheck covered = verify_cover(cover);
    report["cover"] = covered.ok;
    if (!covered.ok) {
      report["uncovered"] = to_string(*covered.uncovered);
      failed.push_back("cover");
    }
    const AntipodalCheck antipodal = verify_antipodal_free(cover);
    report["antipodal_free"] = antipodal.ok;
    if (!antipodal.ok) {
      report["antipodal_witness"] = Json{{"set", antipodal.witness->label},
                                         {"simplex", to_string(antipodal.witness->simplex)},
                                         {"image", to_string(antipodal.witness->image)}};
      failed.push_back("antipodal_free");
    }
    report["expected_overlap_degree"] = expected;
    if (covered.ok) {
      const OverlapResult overlap = overlap_degree(cover);
      report["overlap_degree"] = overlap.degree;
      report["witness"] = to_string(overlap.witness);
      report["witness_sets"] = overlap.labels;
      if (overlap.degree != expected) failed.push_back("overlap_degree");
    } else {
      report["overlap_degree"] = nullptr;
    }
    report["failed_checks"] = failed;
    if (args.timing) {
      report["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return CommandResult{failed.empty() ? kExitOk : kExitFailed, report};
  });
}

// ---------------------------------------------------------------------------
// kneser

struct KneserArgs {
  std::string subcommand = "sharp";
  int n = 0;
  int k = 0;
  long budget_ms = 0;  // 0: unlimited
  std::string file;
};

inline CommandResult cmd_kneser(const KneserArgs& args, const Caps& caps = default_caps()) {
  return guarded("kneser", [&] {
    Json report{{"command", "kneser"}, {"subcommand", args.subcommand}};
    if (args.subcommand == "sharp") {
      const KneserColoring c = sharp_kneser_coloring(args.n);
      const KneserCheck valid = is_kneser_coloring(c);
      const ChainColors chains = max_chain_colors(c, caps);
      const int expected = args.n / 2 + 1;
      report["n"] = args.n;
      report["kneser"] = valid.ok;
      report["color_count"] = c.color_count();
      report["max_chain_colors"] = chains.count;
      report["expected_max_chain_colors"] = expected;
      report["chain_witness"] = to_string(chains.witness);
      report["coloring"] = coloring_to_json(c);
      return CommandResult{valid.ok && chains.count == expected ? kExitOk : kExitFailed, report};
    }
    if (args.subcommand == "verify") {
      if (args.file.empty()) throw InputError("kneser verify needs --file");
      const KneserColoring c = coloring_from_json(read_json_file(args.file));
      const KneserCheck valid = is_kneser_coloring(c);
      report["n"] = c.ground_size();
      report["kneser"] = valid.ok;
      if (!valid.ok) {
        report["witness"] = {to_string(valid.witness->first), to_string(valid.witness->second)};
      }
      report["color_count"] = c.color_count();
      const ChainColors chains = max_chain_colors(c, caps);
      report["max_chain_colors"] = chains.count;
      report["chain_witness"] = to_string(chains.witness);
      return CommandResult{valid.ok ? kExitOk : kExitFailed, report};
    }
    if (args.subcommand == "search") {
      const SearchResult result =
          search_min_chain_colors(args.n, args.k, std::chrono::milliseconds(args.budget_ms), caps);
      report["n"] = args.n;
      report["k"] = args.k;
      report["verdict"] = to_string(result.verdict);
      report["nodes"] = result.nodes;
      if (result.coloring) report["coloring"] = coloring_to_json(*result.coloring);
      return CommandResult{kExitOk, report};
    }
    throw InputError("kneser subcommand must be sharp, verify or search, got " + args.subcommand);
  });
}

// ---------------------------------------------------------------------------
// Class and distribution specs.

struct ClassSpec {
  std::string family;  // "projection" or "powerset"
  int m = 0;
  ConceptClass h_class;
};

inline ClassSpec parse_class_spec(std::string_view spec, const Caps& caps = default_caps()) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InputError("class spec must look like projection:m or powerset:m");
  ClassSpec out;
  out.family = std::string(spec.substr(0, colon));
  const std::string m_text(spec.substr(colon + 1));
  if (m_text.empty() || m_text.find_first_not_of("0123456789") != std::string::npos || m_text.size() > 4) {
    throw InputError("class size must be a positive integer, got '" + m_text + "'");
  }
  out.m = std::stoi(m_text);
  if (out.family == "projection") out.h_class = projection_class(out.m, caps);
  else if (out.family == "powerset") out.h_class = powerset_class(out.m, caps);
  else throw InputError("unknown class family " + out.family);
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

inline std::string_view strip_brackets(std::string_view s, char open, char close, const char* what) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw InputError(std::string("expected ") + open + "..." + close + " around " + what);
  }
  return s.substr(1, s.size() - 2);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

}  // namespace detail

// chain:{{1}<{1,2}};(1/2,1/2)   pointmass:{x,y}   file:<path>
// For pointmass, y is 0, 1 or "both" (mass 1/2 on each label).
inline ExampleDistribution parse_distribution_spec(std::string_view spec, const ClassSpec& cls) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InputError("distribution spec needs a kind prefix");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  if (kind == "file") return distribution_from_json(read_json_file(std::string(body)), cls.h_class);
  if (kind == "pointmass") {
    auto parts = detail::split(detail::strip_brackets(body, '{', '}', "pointmass"), ',');
    if (parts.size() != 2) throw InputError("pointmass needs {x,y}");
    auto index = cls.h_class.point_index(std::string(parts[0]));
    if (!index) throw InputError("point " + std::string(parts[0]) + " is not in the domain of " + cls.h_class.name);
    std::map<Example, Rational> masses;
    if (parts[1] == "0" || parts[1] == "1") {
      masses[Example{*index, parts[1] == "1" ? 1 : 0}] = 1;
    } else if (parts[1] == "both") {
      masses[Example{*index, 0}] = Rational(1, 2);
      masses[Example{*index, 1}] = Rational(1, 2);
    } else {
      throw InputError("pointmass label must be 0, 1 or both");
    }
    return ExampleDistribution(cls.h_class.domain_size(), masses);
  }
  if (kind == "chain") {
    if (cls.family != "projection") throw InputError("chain distributions are defined over projection classes");
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw InputError("chain spec needs sets;weights");
    Chain sets;
    for (std::string_view item : detail::split(detail::strip_brackets(body.substr(0, semi), '{', '}', "chain sets"), '<')) {
      sets.push_back(parse_key(cls.m, detail::strip_brackets(item, '{', '}', "a chain set")));
    }
    std::vector<Rational> weights;
    for (std::string_view w : detail::split(detail::strip_brackets(body.substr(semi + 1), '(', ')', "weights"), ',')) {
      weights.push_back(parse_rational(w));
    }
    return chain_distribution(sets, weights, cls.m).distribution;
  }
  throw InputError("unknown distribution kind " + std::string(kind));
}

// ---------------------------------------------------------------------------
// learn

struct LearnArgs {
  std::string class_spec = "projection:3";
  std::string dist_spec;
  std::string e = "1/100";
  std::string delta = "1/20";
  std::uint64_t trials = 500;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> n;  // overrides sample_size_for
  unsigned threads = 0;
};

inline Json replication_to_json(const ReplicationReport& r, const ConceptClass& h_class) {
  (void)h_class;
  Json table = Json::object();
  for (const OutputFrequency& f : r.frequencies) {
    table[f.hypothesis.key()] = Json{{"hypothesis", f.hypothesis.name},
                                     {"count", f.count},
                                     {"frequency", to_string(Rational(Integer(f.count), Integer(r.trials)))},
                                     {"loss", to_string(f.loss)}};
  }
  Json lists = Json::array();
  for (const ListAtDelta& l : r.lists) lists.push_back(Json{{"delta", to_string(l.delta)}, {"list", l.keys}});
  Json losses = Json::object();
  for (const std::string& key : r.list()) losses[key] = to_string(r.entry(key).loss);
  return Json{{"frequencies", table},
              {"list", r.list()},
              {"list_size", r.list().size()},
              {"losses", losses},
              {"lists", lists},
              {"max_frequency", to_string(r.max_frequency)},
              {"majority_outputs", r.majority_outputs}};
}

inline CommandResult cmd_learn(const LearnArgs& args, const Caps& caps = default_caps()) {
  return guarded("learn", [&]() -> CommandResult {
    const ClassSpec cls = parse_class_spec(args.class_spec, caps);
    const ExampleDistribution d = parse_distribution_spec(args.dist_spec, cls);
    if (!is_realizable(d, cls.h_class)) {
      throw InputError("distribution " + args.dist_spec + " is not realizable by " + cls.h_class.name);
    }
    const Rational e = parse_rational(args.e);
    const Rational delta = parse_rational(args.delta);
    if (e <= 0 || e >= 1 || delta <= 0 || delta >= 1) throw InputError("--e and --delta must lie in (0, 1)");
    const std::uint64_t domain = cls.h_class.domain_size();
    const std::uint64_t n = args.n ? *args.n : sample_size_for(e, delta, domain);
    ReplicationOptions options;
    options.delta = delta;
    options.threads = args.threads;
    const ReplicationReport r = replication_experiment(cls.h_class, d, e, n, args.trials, args.seed, options);

    const std::size_t list_bound = 1 + cls.m / 2;
    const Rational loss_bound = (2 * Rational(domain) + 4) * e;
    bool losses_ok = true;
    for (const std::string& key : r.list()) losses_ok = losses_ok && r.entry(key).loss <= loss_bound;
    const bool size_ok = r.list().size() <= list_bound;

    Json report{{"command", "learn"},
                {"class", cls.h_class.name},
                {"m", cls.m},
                {"M", domain},
                {"distribution", args.dist_spec},
                {"e", to_string(e)},
                {"delta", to_string(delta)},
                {"n", n},
                {"trials", args.trials},
                {"seed", args.seed}};
    report.update(replication_to_json(r, cls.h_class));
    report["list_size_bound"] = list_bound;
    report["loss_bound"] = to_string(loss_bound);
    report["list_size_ok"] = size_ok;
    report["losses_ok"] = losses_ok;
    return CommandResult{size_ok && losses_ok ? kExitOk : kExitFailed, report};
  });
}

// ---------------------------------------------------------------------------
// gamma

struct GammaArgs {
  std::string matrix_file;
  std::string class_spec;
  int d = 0;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
};

inline CommandResult cmd_gamma(const GammaArgs& args, const Caps& caps = default_caps()) {
  return guarded("gamma", [&]() -> CommandResult {
    Json report{{"command", "gamma"}};
    PatternMatrix p;
    if (!args.matrix_file.empty() && !args.class_spec.empty()) {
      throw InputError("give either --matrix or --class, not both");
    }
    if (!args.matrix_file.empty()) {
      p = matrix_from_json(read_json_file(args.matrix_file));
      report["source"] = args.matrix_file;
    } else if (!args.class_spec.empty()) {
      const ClassSpec cls = parse_class_spec(args.class_spec, caps);
      if (args.d < 1) throw InputError("--d must be positive");
      report["class"] = cls.h_class.name;
      report["d"] = args.d;
      auto pattern = find_independent_pattern(cls.h_class, args.d);
      if (!pattern) {
        report["full_rank"] = false;
        report["error"] = "pattern rank of " + cls.h_class.name + " is below " + std::to_string(args.d);
        return CommandResult{kExitFailed, report};
      }
      Json hyps = Json::array();
      for (std::size_t i : pattern->hypotheses) hyps.push_back(cls.h_class.hypotheses[i].name);
      Json points = Json::array();
      for (std::size_t x : pattern->points) points.push_back(cls.h_class.domain[x]);
      report["hypotheses"] = hyps;
      report["points"] = points;
      p = pattern->matrix;
    } else {
      throw InputError("gamma needs --matrix or --class with --d");
    }
    report["rows"] = p.rows();
    if (p.d > 20) throw InputError("matrix dimension above 20");
    {
      detail::EchelonBasis basis;
      for (const auto& row : p.rows()) basis.add(std::vector<Rational>(row.begin(), row.end()));
      if (static_cast<int>(basis.rank()) < p.d) {
        report["full_rank"] = false;
        report["error"] = "pattern matrix is singular";
        return CommandResult{kExitFailed, report};
      }
    }
    report["full_rank"] = true;
    const Rational gamma = gamma_interpolation(p);
    const GammaCheck check = check_gamma_realizable(p, gamma, args.trials, args.seed);
    report["gamma"] = to_string(gamma);
    report["trials"] = args.trials;
    report["seed"] = args.seed;
    report["checked"] = check.checked;
    report["gamma_realizable"] = check.ok;
    if (check.witness) {
      Json q = Json::array();
      for (const Rational& v : check.witness->weights) q.push_back(to_string(v));
      report["witness"] = Json{{"labels", check.witness->labels}, {"Q", q},
                               {"best_corr", to_string(check.witness->best_corr)}};
    }
    return CommandResult{check.ok ? kExitOk : kExitFailed, report};
  });
}

}  // namespace bulab
