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

#include <cstdint>
#include <random>

namespace bulab {

// Every randomized routine draws from std::mt19937_64. Independent streams
// (one per trial) are seeded with splitmix64 over (seed, stream index), so a
// stream depends only on those two numbers and not on scheduling.
using Engine = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline Engine stream_engine(std::uint64_t seed, std::uint64_t stream) {
  return Engine(splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL + 1)));
}

// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(Engine& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace bulab
