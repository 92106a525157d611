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

// JSON file formats.
//
//   coloring:     {"n": 3, "colors": {"1": 1, "1,2": 0, ...}}
//   matrix:       {"rows": [[1, 1, 1], [1, 1, -1], [1, -1, 1]]}
//   distribution: {"examples": [{"x": "101", "y": 1, "p": "1/2"}, ...]}
//
// Rationals are "p/q" strings; no floating point crosses a file.

#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bulab/kneser.hpp"
#include "bulab/learning.hpp"
#include "bulab/rational.hpp"
#include "bulab/subset.hpp"

namespace bulab {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

// Wraps nlohmann type errors (wrong field types, missing keys) as input errors.
template <class F>
auto parse_guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError("malformed " + what + ": " + e.what());
  }
}

inline Json coloring_to_json(const KneserColoring& c) {
  Json colors = Json::object();
  for (const Subset& a : nonempty_subsets(c.ground_size())) colors[to_key(a)] = c(a);
  return Json{{"n", c.ground_size()}, {"colors", colors}};
}

inline KneserColoring coloring_from_json(const Json& j) {
  return parse_guarded("coloring", [&] {
    if (!j.is_object() || !j.contains("n") || !j.contains("colors")) {
      throw InputError("malformed coloring: expected {\"n\": ..., \"colors\": {...}}");
    }
    const int n = j.at("n").get<int>();
    std::map<Subset, int> colors;
    for (const auto& [key, value] : j.at("colors").items()) {
      Subset a = parse_key(n, key);
      if (!colors.emplace(a, value.get<int>()).second) throw InputError("duplicate coloring key " + key);
    }
    return KneserColoring::from_map(n, colors);
  });
}

inline Json matrix_to_json(const PatternMatrix& p) { return Json{{"rows", p.rows()}}; }

inline PatternMatrix matrix_from_json(const Json& j) {
  return parse_guarded("matrix", [&] {
    if (!j.is_object() || !j.contains("rows")) throw InputError("malformed matrix: expected {\"rows\": [...]}");
    return PatternMatrix::from_rows(j.at("rows").get<std::vector<std::vector<int>>>());
  });
}

inline ExampleDistribution distribution_from_json(const Json& j, const ConceptClass& h_class) {
  return parse_guarded("distribution", [&] {
    if (!j.is_object() || !j.contains("examples")) {
      throw InputError("malformed distribution: expected {\"examples\": [...]}");
    }
    std::map<Example, Rational> masses;
    for (const Json& e : j.at("examples")) {
      const std::string x = e.at("x").get<std::string>();
      auto index = h_class.point_index(x);
      if (!index) throw InputError("point " + x + " is not in the domain of " + h_class.name);
      const int y = e.at("y").get<int>();
      if (y != 0 && y != 1) throw InputError("labels must be 0 or 1");
      masses[Example{*index, y}] += parse_rational(e.at("p").get<std::string>());
    }
    return ExampleDistribution(h_class.domain_size(), masses);
  });
}

inline Json distribution_to_json(const ExampleDistribution& d, const ConceptClass& h_class) {
  Json examples = Json::array();
  for (const auto& [e, p] : d.support()) {
    examples.push_back(Json{{"x", h_class.domain[e.x]}, {"y", e.y}, {"p", to_string(p)}});
  }
  return Json{{"examples", examples}};
}

// Human-oriented rendering of a report: one "key: value" line per field.
inline std::string render_text(const Json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return out.str();
}

}  // namespace bulab
