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

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bulab/rational.hpp"

namespace bulab {

inline constexpr int kMaxGroundSize = 62;

// A subset of the ground set [n] = {1, ..., n}. Member i is bit i-1.
class Subset {
 public:
  Subset() = default;
  Subset(int ground_size, std::uint64_t bits) : bits_(bits), n_(ground_size) {
    if (ground_size < 1 || ground_size > kMaxGroundSize) {
      throw InputError("ground size must lie in [1, 62], got " + std::to_string(ground_size));
    }
    if (bits & ~full_mask(ground_size)) {
      throw InputError("subset has members outside [" + std::to_string(ground_size) + "]");
    }
  }

  static Subset of(int ground_size, std::initializer_list<int> members) {
    return of(ground_size, std::span<const int>(members.begin(), members.size()));
  }
  static Subset of(int ground_size, std::span<const int> members) {
    std::uint64_t bits = 0;
    for (int i : members) {
      if (i < 1 || i > ground_size) {
        throw InputError("member " + std::to_string(i) + " outside [" + std::to_string(ground_size) + "]");
      }
      bits |= std::uint64_t{1} << (i - 1);
    }
    return Subset(ground_size, bits);
  }
  static Subset full(int ground_size) { return Subset(ground_size, full_mask(ground_size)); }

  static constexpr std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  std::uint64_t bits() const { return bits_; }
  int ground_size() const { return n_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full_mask(n_); }
  // Neither empty nor the whole ground set.
  bool is_nontrivial() const { return !empty() && !is_full(); }
  bool contains(int i) const { return i >= 1 && i <= n_ && ((bits_ >> (i - 1)) & 1U); }
  int min_member() const { return empty() ? 0 : std::countr_zero(bits_) + 1; }
  int max_member() const { return empty() ? 0 : 64 - std::countl_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  bool is_subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }
  bool is_proper_subset_of(const Subset& other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  // Canonical order: cardinality first, then lexicographic on sorted members.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    if (a.size() != b.size()) return a.size() <=> b.size();
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    // The set holding the lowest differing element comes first.
    std::uint64_t low = std::uint64_t{1} << std::countr_zero(a.bits_ ^ b.bits_);
    return (a.bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint64_t bits_ = 0;
  int n_ = 1;
};

inline Subset complement(const Subset& t) {
  return Subset(t.ground_size(), ~t.bits() & Subset::full_mask(t.ground_size()));
}

inline bool disjoint(const Subset& a, const Subset& b) { return (a.bits() & b.bits()) == 0; }

// Comma-joined sorted members, e.g. "1,3". The empty set is "".
inline std::string to_key(const Subset& t) {
  std::string out;
  for (int i : t.members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

inline Subset parse_key(int ground_size, std::string_view key) {
  std::vector<int> members;
  while (!key.empty()) {
    auto comma = key.find(',');
    std::string item(key.substr(0, comma));
    key = comma == std::string_view::npos ? std::string_view{} : key.substr(comma + 1);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("malformed subset key element '" + item + "'");
    }
    members.push_back(std::stoi(item));
  }
  return Subset::of(ground_size, members);
}

// "{1,3}"
inline std::string to_string(const Subset& t) { return "{" + to_key(t) + "}"; }

// Sets strictly increasing under inclusion.
using Chain = std::vector<Subset>;

inline bool is_chain(std::span<const Subset> sets) {
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    if (sets[i].ground_size() != sets[i + 1].ground_size()) return false;
    if (!sets[i].is_proper_subset_of(sets[i + 1])) return false;
  }
  return true;
}

inline std::string to_string(std::span<const Subset> chain) {
  std::string out = "(";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += " < ";
    out += to_string(chain[i]);
  }
  return out + ")";
}

// Shorter chains first, then entrywise in canonical subset order.
inline std::strong_ordering compare_chains(std::span<const Subset> a, std::span<const Subset> b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// All nonempty subsets of [n] in canonical order.
inline std::vector<Subset> nonempty_subsets(int n) {
  std::vector<Subset> out;
  std::uint64_t full = Subset::full_mask(n);
  out.reserve(full);
  for (std::uint64_t b = 1; b <= full; ++b) out.emplace_back(n, b);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bulab
