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

#pragma once

#include <cstdlib>
#include <string>
#include <string_view>

#include "bulab/rational.hpp"

namespace bulab {

// Size limits for the exhaustive routines. The defaults keep every full
// enumeration at desk scale; BU_LAB_CAPS raises them, e.g.
//   BU_LAB_CAPS=q=5,search=6
struct Caps {
  int b_dim = 5;        // build_b
  int q_dim = 4;        // build_q and the covers
  int search_n = 5;     // search_min_chain_colors
  int chain_n = 10;     // max_chain_colors (n! maximal chains)
  int class_m = 10;     // projection_class / powerset_class
};

inline Caps parse_caps(std::string_view spec, Caps caps = {}) {
  while (!spec.empty()) {
    auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("BU_LAB_CAPS entry without '=': " + std::string(item));
    std::string key(item.substr(0, eq));
    int value = 0;
    try {
      value = std::stoi(std::string(item.substr(eq + 1)));
    } catch (const std::exception&) {
      throw InputError("BU_LAB_CAPS value is not an integer: " + std::string(item));
    }
    if (key == "b") caps.b_dim = value;
    else if (key == "q") caps.q_dim = value;
    else if (key == "search") caps.search_n = value;
    else if (key == "chains") caps.chain_n = value;
    else if (key == "class") caps.class_m = value;
    else throw InputError("unknown BU_LAB_CAPS key: " + key);
  }
  return caps;
}

inline const Caps& default_caps() {
  static const Caps caps = [] {
    const char* env = std::getenv("BU_LAB_CAPS");
    return env ? parse_caps(env) : Caps{};
  }();
  return caps;
}

}  // namespace bulab
