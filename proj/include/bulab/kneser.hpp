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

// Kneser colorings of the nonempty subsets of [n] and the colorful-chain
// quantities attached to them.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bulab/caps.hpp"
#include "bulab/subset.hpp"

namespace bulab {

inline constexpr int kMaxColoringGroundSize = 24;

// Total map from the 2^n - 1 nonempty subsets of [n] to non-negative colors.
class KneserColoring {
 public:
  KneserColoring() = default;

  // Every set starts uncolored; use set() and then check is_total().
  explicit KneserColoring(int n) : n_(n) {
    if (n < 1 || n > kMaxColoringGroundSize) {
      throw InputError("coloring ground size must lie in [1, " +
                       std::to_string(kMaxColoringGroundSize) + "], got " + std::to_string(n));
    }
    colors_.assign(std::size_t{1} << n, -1);
  }

  static KneserColoring from_map(int n, const std::map<Subset, int>& colors) {
    KneserColoring c(n);
    for (const auto& [set, color] : colors) c.set(set, color);
    if (!c.is_total()) throw InputError("partial coloring: " + to_string(c.first_uncolored()) + " has no color");
    return c;
  }

  int ground_size() const { return n_; }

  void set(const Subset& a, int color) {
    if (a.ground_size() != n_) throw InputError("subset ground size does not match coloring");
    if (a.empty()) throw InputError("the empty set is not colored");
    if (color < 0) throw InputError("colors must be non-negative");
    colors_[a.bits()] = color;
  }

  int operator()(const Subset& a) const { return colors_.at(a.bits()); }
  int at_bits(std::uint64_t bits) const { return colors_[bits]; }

  bool is_total() const {
    return std::all_of(colors_.begin() + 1, colors_.end(), [](int c) { return c >= 0; });
  }

  Subset first_uncolored() const {
    for (const Subset& a : nonempty_subsets(n_)) {
      if (colors_[a.bits()] < 0) return a;
    }
    return Subset(n_, 0);
  }

  // Number of distinct colors in use.
  int color_count() const {
    std::vector<int> used(colors_.begin() + 1, colors_.end());
    std::sort(used.begin(), used.end());
    return static_cast<int>(std::unique(used.begin(), used.end()) - used.begin());
  }

  std::map<Subset, int> to_map() const {
    std::map<Subset, int> out;
    for (std::uint64_t b = 1; b < colors_.size(); ++b) out.emplace(Subset(n_, b), colors_[b]);
    return out;
  }

  friend bool operator==(const KneserColoring&, const KneserColoring&) = default;

 private:
  int n_ = 0;
  std::vector<int> colors_;  // indexed by subset bits; slot 0 unused
};

struct KneserCheck {
  bool ok = true;
  std::optional<std::pair<Subset, Subset>> witness;  // disjoint, same color
};

// Disjoint nonempty sets must receive distinct colors. The witness is the
// canonically least violating pair.
inline KneserCheck is_kneser_coloring(const KneserColoring& c) {
  if (!c.is_total()) throw InputError("partial coloring: " + to_string(c.first_uncolored()) + " has no color");
  const int n = c.ground_size();
  const std::uint64_t full = Subset::full_mask(n);
  for (const Subset& a : nonempty_subsets(n)) {
    std::optional<Subset> best;
    const std::uint64_t rest = full & ~a.bits();
    for (std::uint64_t b = rest; b; b = (b - 1) & rest) {
      if (c.at_bits(b) != c(a)) continue;
      Subset candidate(n, b);
      if (candidate < a) continue;
      if (!best || candidate < *best) best = candidate;
    }
    if (best) return {false, std::pair{a, *best}};
  }
  return {};
}

// Sets whose size passes `fits` take color min(A); the rest share color 0.
template <class Fits>
KneserColoring min_element_coloring(int n, Fits fits) {
  KneserColoring c(n);
  for (std::uint64_t b = 1; b <= Subset::full_mask(n); ++b) {
    Subset a(n, b);
    c.set(a, fits(a.size()) ? a.min_member() : 0);
  }
  return c;
}

// Small sets (|A| <= n/2) take color min(A); large sets share color 0.
inline KneserColoring sharp_kneser_coloring(int n) {
  if (n < 1) throw InputError("n must be positive");
  return min_element_coloring(n, [n](int size) { return 2 * size <= n; });
}

// Sets with |A| <= n(1 - 1/p) take color min(A); the rest share color 0.
inline KneserColoring p_kneser_coloring(int n, int p) {
  if (p < 2 || p > n) {
    throw InputError("p must lie in [2, n], got p=" + std::to_string(p) + " n=" + std::to_string(n));
  }
  return min_element_coloring(n, [n, p](int size) { return p * size <= n * (p - 1); });
}

struct ChainColors {
  int count = 0;
  Chain witness;
};

// Maximum number of distinct colors along a chain. Only maximal chains are
// enumerated: extending a chain never loses a color. The witness is the
// first maximal chain, in lexicographic order of the element insertion
// sequence, attaining the maximum.
inline ChainColors max_chain_colors(const KneserColoring& c, const Caps& caps = default_caps()) {
  const int n = c.ground_size();
  if (n > caps.chain_n) {
    throw InputError("max_chain_colors enumerates n! chains; n=" + std::to_string(n) +
                     " exceeds the cap " + std::to_string(caps.chain_n));
  }
  // Dense renumbering so the per-color counters fit in a vector.
  std::map<int, int> dense;
  for (std::uint64_t b = 1; b <= Subset::full_mask(n); ++b) dense.emplace(c.at_bits(b), 0);
  int next = 0;
  for (auto& [color, id] : dense) id = next++;
  std::vector<int> dense_of(std::size_t{1} << n, 0);
  for (std::uint64_t b = 1; b <= Subset::full_mask(n); ++b) dense_of[b] = dense[c.at_bits(b)];

  std::vector<int> counts(next, 0);
  std::vector<int> order;
  std::vector<int> best_order;
  int best = 0;

  auto dfs = [&](auto&& self, std::uint64_t set, int distinct) -> void {
    if (static_cast<int>(order.size()) == n) {
      if (distinct > best) {
        best = distinct;
        best_order = order;
      }
      return;
    }
    // The chain cannot gain more colors than it has sets left.
    if (distinct + (n - static_cast<int>(order.size())) <= best) return;
    for (int i = 1; i <= n; ++i) {
      std::uint64_t bit = std::uint64_t{1} << (i - 1);
      if (set & bit) continue;
      std::uint64_t next_set = set | bit;
      int color = dense_of[next_set];
      bool fresh = counts[color]++ == 0;
      order.push_back(i);
      self(self, next_set, distinct + (fresh ? 1 : 0));
      order.pop_back();
      --counts[color];
    }
  };
  dfs(dfs, 0, 0);

  ChainColors out;
  out.count = best;
  std::uint64_t set = 0;
  for (int i : best_order) {
    set |= std::uint64_t{1} << (i - 1);
    out.witness.emplace_back(n, set);
  }
  return out;
}

struct PKneserCheck {
  bool ok = true;
  std::vector<Subset> witness;  // p distinct same-colored sets with empty intersection
};

// No p distinct sets of one color may have empty common intersection.
inline PKneserCheck is_p_kneser_coloring(const KneserColoring& c, int p) {
  if (p < 2) throw InputError("p must be at least 2");
  if (!c.is_total()) throw InputError("partial coloring: " + to_string(c.first_uncolored()) + " has no color");
  const int n = c.ground_size();
  std::map<int, std::vector<Subset>> classes;
  for (const Subset& a : nonempty_subsets(n)) classes[c(a)].push_back(a);

  for (const auto& [color, members] : classes) {
    if (static_cast<int>(members.size()) < p) continue;
    // Smallest-index family of at most p members with empty intersection;
    // any such family pads to p distinct sets.
    std::vector<std::size_t> picked;
    auto dfs = [&](auto&& self, std::size_t from, std::uint64_t meet) -> bool {
      if (meet == 0 && !picked.empty()) return true;
      if (static_cast<int>(picked.size()) == p) return false;
      for (std::size_t i = from; i < members.size(); ++i) {
        picked.push_back(i);
        if (self(self, i + 1, meet & members[i].bits())) return true;
        picked.pop_back();
      }
      return false;
    };
    if (!dfs(dfs, 0, Subset::full_mask(n))) continue;

    PKneserCheck out{false, {}};
    std::vector<bool> used(members.size(), false);
    for (std::size_t i : picked) used[i] = true;
    for (std::size_t i = 0; i < members.size() && static_cast<int>(picked.size()) < p; ++i) {
      if (!used[i]) {
        used[i] = true;
        picked.push_back(i);
      }
    }
    std::sort(picked.begin(), picked.end());
    for (std::size_t i : picked) out.witness.push_back(members[i]);
    return out;
  }
  return {};
}

enum class SearchVerdict { kFeasible, kInfeasible, kBudgetExceeded };

inline std::string to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::kFeasible: return "Feasible";
    case SearchVerdict::kInfeasible: return "Infeasible";
    case SearchVerdict::kBudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

struct SearchResult {
  SearchVerdict verdict = SearchVerdict::kInfeasible;
  std::optional<KneserColoring> coloring;  // set iff kFeasible
  std::uint64_t nodes = 0;
};

// Backtracking search for a Kneser coloring of [n] whose maximal chains all
// carry at most k colors. Subsets are visited in canonical order (cardinality,
// then lexicographic) so every maximal chain is filled bottom-up; colors are
// numbered by first use, which removes the color-permutation symmetry.
// A zero budget means no time limit.
inline SearchResult search_min_chain_colors(int n, int k,
                                            std::chrono::milliseconds budget = std::chrono::milliseconds{0},
                                            const Caps& caps = default_caps()) {
  if (n < 1) throw InputError("n must be positive");
  if (k < 1) throw InputError("k must be positive");
  if (n > caps.search_n) {
    throw InputError("search n=" + std::to_string(n) + " exceeds the cap " + std::to_string(caps.search_n));
  }
  if (n > 6) throw InputError("search supports n <= 6 (color masks are 64-bit)");

  const std::vector<Subset> order = nonempty_subsets(n);
  const int set_count = static_cast<int>(order.size());

  // Maximal chains as permutations; chain ch passes through the set formed by
  // its first L elements at level L.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> through(std::size_t{1} << n);
  int chain_count = 0;
  do {
    std::uint64_t set = 0;
    for (int level = 0; level < n; ++level) {
      set |= std::uint64_t{1} << (perm[level] - 1);
      through[set].push_back(chain_count);
    }
    ++chain_count;
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Earlier sets disjoint from each set.
  std::vector<std::vector<int>> earlier_disjoint(set_count);
  for (int i = 0; i < set_count; ++i) {
    for (int j = 0; j < i; ++j) {
      if (disjoint(order[i], order[j])) earlier_disjoint[i].push_back(j);
    }
  }

  // masks[ch * (n + 1) + level]: colors seen on chain ch up to that level.
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(chain_count) * (n + 1), 0);
  std::vector<int> color(set_count, -1);

  SearchResult result;
  const auto start = std::chrono::steady_clock::now();
  const bool limited = budget.count() > 0;
  bool out_of_budget = false;

  auto dfs = [&](auto&& self, int pos, int used) -> bool {
    if (pos == set_count) return true;
    ++result.nodes;
    if (limited && (result.nodes & 0xFFF) == 0 && std::chrono::steady_clock::now() - start > budget) {
      out_of_budget = true;
    }
    if (out_of_budget) return false;

    const Subset& a = order[pos];
    const int level = a.size();
    const auto& chains = through[a.bits()];
    const int max_color = std::min(used, 63);
    for (int c = 0; c <= max_color; ++c) {
      bool clash = false;
      for (int j : earlier_disjoint[pos]) {
        if (color[j] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      const std::uint64_t bit = std::uint64_t{1} << c;
      bool within = true;
      for (int ch : chains) {
        if (std::popcount(masks[ch * (n + 1) + level - 1] | bit) > k) {
          within = false;
          break;
        }
      }
      if (!within) continue;
      for (int ch : chains) masks[ch * (n + 1) + level] = masks[ch * (n + 1) + level - 1] | bit;
      color[pos] = c;
      if (self(self, pos + 1, c == used ? used + 1 : used)) return true;
      if (out_of_budget) return false;
    }
    color[pos] = -1;
    return false;
  };

  if (dfs(dfs, 0, 0)) {
    KneserColoring found(n);
    for (int i = 0; i < set_count; ++i) found.set(order[i], color[i]);
    result.verdict = SearchVerdict::kFeasible;
    result.coloring = std::move(found);
  } else {
    result.verdict = out_of_budget ? SearchVerdict::kBudgetExceeded : SearchVerdict::kInfeasible;
  }
  return result;
}

}  // namespace bulab
