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

// The barycentric subdivision B^d of the boundary of the (d+1)-simplex, its
// second subdivision Q^d, and the antipodal involution (complementation of
// the vertex sets of [d+2]).
//
// B^d: vertices are the nontrivial subsets of [d+2]; simplices are chains.
// Q^d: vertices are chains; simplices are chains of chains v_1 < ... < v_m.
// A point of B^d is a convex combination of a chain of subsets. Q^d is
// realized with weights: vertex {T_1 < ... < T_r} sits at sum c/w(T_q) T_q.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bulab/caps.hpp"
#include "bulab/rational.hpp"
#include "bulab/subset.hpp"

namespace bulab {

// t(d) = ceil((d+3)/2), the closed-cover overlap degree.
inline int threshold_t(int d) { return (d + 4) / 2; }

// w(T) = 1 if |T| < t, 1/2 otherwise.
inline Rational weight(const Subset& t_set, int t) {
  return t_set.size() < t ? Rational(1) : Rational(1, 2);
}

// ---------------------------------------------------------------------------
// Points.

// Exact barycentric coordinates over a chain of nontrivial subsets.
class SpherePoint {
 public:
  SpherePoint() = default;

  // Zero coordinates are dropped. Throws unless the support is a chain of
  // nontrivial subsets and the coordinates are non-negative with sum 1.
  explicit SpherePoint(std::map<Subset, Rational> coords) {
    Rational total = 0;
    for (auto& [set, value] : coords) {
      if (value < 0) throw InputError("negative barycentric coordinate at " + to_string(set));
      if (value == 0) continue;
      if (!set.is_nontrivial()) throw InputError("support contains trivial set " + to_string(set));
      total += value;
      coords_.emplace(set, value);
    }
    if (total != 1) throw InputError("barycentric coordinates sum to " + bulab::to_string(total));
    if (!is_chain(support())) throw InputError("support is not a chain");
  }

  // Canonical order sorts by size first, so the support comes out increasing.
  Chain support() const {
    Chain out;
    for (const auto& [set, value] : coords_) out.push_back(set);
    return out;
  }

  Rational lambda(const Subset& t_set) const {
    auto it = coords_.find(t_set);
    return it == coords_.end() ? Rational(0) : it->second;
  }

  const std::map<Subset, Rational>& coords() const { return coords_; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  std::map<Subset, Rational> coords_;
};

// lambda_T(nu(x)) = lambda_{nu(T)}(x).
inline SpherePoint involute_point(const SpherePoint& x) {
  std::map<Subset, Rational> out;
  for (const auto& [set, value] : x.coords()) out.emplace(complement(set), value);
  return SpherePoint(std::move(out));
}

struct HValue {
  Rational value;
  std::vector<Subset> argmax;  // canonical order
};

// h(x) = max_T w(T) lambda_T(x), with every maximizer.
inline HValue evaluate_h(const SpherePoint& x, int t) {
  HValue out;
  for (const auto& [set, lambda] : x.coords()) {
    Rational v = weight(set, t) * lambda;
    if (out.argmax.empty() || v > out.value) {
      out.value = v;
      out.argmax = {set};
    } else if (v == out.value) {
      out.argmax.push_back(set);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// B^d.

inline Chain involute_chain(std::span<const Subset> chain) {
  Chain out;
  out.reserve(chain.size());
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.push_back(complement(*it));
  return out;
}

namespace detail {

// All chains of nontrivial subsets of [n], grouped by length - 1.
inline std::vector<std::vector<Chain>> enumerate_chains(int n) {
  std::vector<Subset> vertices;
  for (std::uint64_t b = 1; b < Subset::full_mask(n); ++b) vertices.emplace_back(n, b);
  std::sort(vertices.begin(), vertices.end());

  std::vector<std::vector<Chain>> by_dim(std::max(n - 1, 1));
  Chain current;
  auto extend = [&](auto&& self) -> void {
    by_dim[current.size() - 1].push_back(current);
    const Subset last = current.back();
    for (const Subset& next : vertices) {
      if (last.is_proper_subset_of(next)) {
        current.push_back(next);
        self(self);
        current.pop_back();
      }
    }
  };
  for (const Subset& v : vertices) {
    current = {v};
    extend(extend);
  }
  for (auto& group : by_dim) {
    std::sort(group.begin(), group.end(),
              [](const Chain& a, const Chain& b) { return compare_chains(a, b) < 0; });
  }
  return by_dim;
}

inline long alternating_sum(const std::vector<std::size_t>& counts) {
  long chi = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(counts[k]);
  }
  return chi;
}

}  // namespace detail

struct BComplex {
  int d = 0;
  std::vector<Subset> vertices;
  std::vector<std::vector<Chain>> simplices;  // simplices[k]: k-dimensional

  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out;
    for (const auto& group : simplices) out.push_back(group.size());
    return out;
  }
  long euler_characteristic() const { return detail::alternating_sum(counts()); }
};

inline BComplex build_b(int d, const Caps& caps = default_caps()) {
  if (d < 0) throw InputError("dimension must be non-negative");
  if (d > caps.b_dim) {
    throw InputError("B^d dimension " + std::to_string(d) + " exceeds the cap " + std::to_string(caps.b_dim));
  }
  BComplex out;
  out.d = d;
  out.simplices = detail::enumerate_chains(d + 2);
  for (const Chain& c : out.simplices[0]) out.vertices.push_back(c.front());
  return out;
}

// ---------------------------------------------------------------------------
// Q^d.

// A chain of chains v_1 < ... < v_m, stored as its largest chain v_m plus,
// for each entry of v_m, the index of the first v_j containing it.
// Level 0 entries form v_1.
class QSimplex {
 public:
  QSimplex() = default;
  QSimplex(Chain top, std::vector<int> levels) : top_(std::move(top)), levels_(std::move(levels)) {
    if (top_.empty() || top_.size() != levels_.size()) throw InputError("malformed Q-simplex");
    if (!is_chain(top_)) throw InputError("Q-simplex top vertex is not a chain");
    int m = *std::max_element(levels_.begin(), levels_.end()) + 1;
    std::vector<bool> seen(m, false);
    for (int l : levels_) {
      if (l < 0) throw InputError("negative Q-simplex level");
      seen[l] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw InputError("Q-simplex levels must be contiguous from 0");
    }
    vertex_count_ = m;
  }

  // From explicit vertices v_1 < ... < v_m.
  static QSimplex from_vertices(const std::vector<Chain>& vertices) {
    if (vertices.empty()) throw InputError("empty Q-simplex");
    const Chain& top = vertices.back();
    std::vector<int> levels(top.size(), -1);
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (j > 0) {
        bool contained = vertices[j].size() > vertices[j - 1].size() &&
                         std::includes(vertices[j].begin(), vertices[j].end(),
                                       vertices[j - 1].begin(), vertices[j - 1].end());
        if (!contained) throw InputError("Q-simplex vertices are not strictly nested");
      }
      for (const Subset& s : vertices[j]) {
        auto it = std::find(top.begin(), top.end(), s);
        if (it == top.end()) throw InputError("Q-simplex vertices are not nested");
        auto& l = levels[it - top.begin()];
        if (l < 0) l = static_cast<int>(j);
      }
    }
    return QSimplex(top, std::move(levels));
  }

  int vertex_count() const { return vertex_count_; }
  int dimension() const { return vertex_count_ - 1; }
  const Chain& top() const { return top_; }
  std::span<const int> levels() const { return levels_; }

  // v_{j+1}: entries of the top chain with level <= j.
  Chain vertex(int j) const {
    Chain out;
    for (std::size_t i = 0; i < top_.size(); ++i) {
      if (levels_[i] <= j) out.push_back(top_[i]);
    }
    return out;
  }
  Chain min_vertex() const { return vertex(0); }
  std::vector<Chain> vertices() const {
    std::vector<Chain> out;
    for (int j = 0; j < vertex_count_; ++j) out.push_back(vertex(j));
    return out;
  }

  // Largest entry size among levels <= j.
  int max_size_through(int j) const {
    int out = 0;
    for (std::size_t i = 0; i < top_.size(); ++i) {
      if (levels_[i] <= j) out = std::max(out, top_[i].size());
    }
    return out;
  }

  // Face spanned by the vertices whose indices are set in `keep`.
  QSimplex face(std::uint32_t keep) const {
    std::vector<Chain> kept;
    for (int j = 0; j < vertex_count_; ++j) {
      if (keep & (1U << j)) kept.push_back(vertex(j));
    }
    return from_vertices(kept);
  }

  friend bool operator==(const QSimplex&, const QSimplex&) = default;

  // Dimension first, then vertex by vertex.
  friend std::strong_ordering operator<=>(const QSimplex& a, const QSimplex& b) {
    if (a.vertex_count_ != b.vertex_count_) return a.vertex_count_ <=> b.vertex_count_;
    for (int j = 0; j < a.vertex_count_; ++j) {
      if (auto c = compare_chains(a.vertex(j), b.vertex(j)); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  Chain top_;
  std::vector<int> levels_;
  int vertex_count_ = 0;
};

inline std::string to_string(const QSimplex& s) {
  std::string out = "[";
  for (int j = 0; j < s.vertex_count(); ++j) {
    if (j) out += ", ";
    out += to_string(s.vertex(j));
  }
  return out + "]";
}

// Each vertex chain maps to the reversed chain of complements; the nesting
// of vertices is preserved.
inline QSimplex involute_simplex(const QSimplex& s) {
  const std::size_t k = s.top().size();
  Chain top(k);
  std::vector<int> levels(k);
  for (std::size_t i = 0; i < k; ++i) {
    top[k - 1 - i] = complement(s.top()[i]);
    levels[k - 1 - i] = s.levels()[i];
  }
  return QSimplex(std::move(top), std::move(levels));
}

struct QComplex {
  int d = 0;
  int t = 0;                                   // weight threshold
  std::vector<Chain> vertices;                 // canonical order
  std::vector<std::vector<QSimplex>> simplices;  // simplices[k]: k-dimensional

  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out;
    for (const auto& group : simplices) out.push_back(group.size());
    return out;
  }
  long euler_characteristic() const { return detail::alternating_sum(counts()); }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& group : simplices) n += group.size();
    return n;
  }

  // Realized position of a vertex chain: sum_q c/w(T_q) T_q with the
  // coefficients normalized to 1.
  SpherePoint realize(const Chain& vertex) const {
    Rational inverse_total = 0;
    for (const Subset& s : vertex) inverse_total += 1 / weight(s, t);
    std::map<Subset, Rational> coords;
    for (const Subset& s : vertex) coords.emplace(s, (1 / weight(s, t)) / inverse_total);
    return SpherePoint(std::move(coords));
  }

  // sum_j beta_j realize(v_j); beta must be non-negative with sum 1.
  SpherePoint point_in(const QSimplex& s, std::span<const Rational> beta) const {
    if (static_cast<int>(beta.size()) != s.vertex_count()) throw InputError("beta length mismatch");
    Rational total = 0;
    std::map<Subset, Rational> coords;
    for (int j = 0; j < s.vertex_count(); ++j) {
      total += beta[j];
      if (beta[j] == 0) continue;
      const SpherePoint v = realize(s.vertex(j));
      for (const auto& [set, value] : v.coords()) coords[set] += beta[j] * value;
    }
    if (total != 1) throw InputError("beta must sum to 1");
    return SpherePoint(std::move(coords));
  }

  SpherePoint barycenter(const QSimplex& s) const {
    std::vector<Rational> beta(s.vertex_count(), Rational(1, s.vertex_count()));
    return point_in(s, beta);
  }
};

namespace detail {

// Every ordered partition of {0, ..., k-1} into nonempty blocks, as a level
// vector, visited by `emit`.
template <class Emit>
void for_each_ordered_partition(int k, Emit&& emit) {
  std::vector<int> levels(k, -1);
  auto assign = [&](auto&& self, int level, int remaining) -> void {
    if (remaining == 0) {
      emit(levels);
      return;
    }
    // Choose the nonempty block of still-unassigned items placed at `level`.
    std::vector<int> free;
    for (int i = 0; i < k; ++i) {
      if (levels[i] < 0) free.push_back(i);
    }
    const std::uint32_t limit = 1U << free.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      int taken = 0;
      for (std::size_t b = 0; b < free.size(); ++b) {
        if (mask & (1U << b)) {
          levels[free[b]] = level;
          ++taken;
        }
      }
      self(self, level + 1, remaining - taken);
      for (std::size_t b = 0; b < free.size(); ++b) {
        if (mask & (1U << b)) levels[free[b]] = -1;
      }
    }
  };
  assign(assign, 0, k);
}

}  // namespace detail

// Q^d with the weighted realization for threshold t (default t(d)).
inline QComplex build_q(int d, const Caps& caps = default_caps(), int t = -1) {
  if (d < 0) throw InputError("dimension must be non-negative");
  if (d > caps.q_dim) {
    throw InputError("Q^d dimension " + std::to_string(d) + " exceeds the cap " + std::to_string(caps.q_dim));
  }
  QComplex out;
  out.d = d;
  out.t = t < 0 ? threshold_t(d) : t;
  const auto chains = detail::enumerate_chains(d + 2);
  for (const auto& group : chains) {
    for (const Chain& c : group) out.vertices.push_back(c);
  }
  out.simplices.resize(d + 1);
  for (const Chain& top : out.vertices) {
    detail::for_each_ordered_partition(static_cast<int>(top.size()), [&](const std::vector<int>& levels) {
      int m = *std::max_element(levels.begin(), levels.end()) + 1;
      out.simplices[m - 1].emplace_back(top, levels);
    });
  }
  for (auto& group : out.simplices) std::sort(group.begin(), group.end());
  return out;
}

// The Q-simplex whose relative interior contains x under the weighted
// realization: the support ordered into levels by decreasing w(T) lambda_T.
inline QSimplex carrier_simplex(const SpherePoint& x, int t) {
  Chain top = x.support();
  std::vector<Rational> weighted;
  for (const Subset& s : top) weighted.push_back(weight(s, t) * x.lambda(s));
  std::vector<Rational> distinct = weighted;
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> levels;
  for (const Rational& v : weighted) {
    levels.push_back(static_cast<int>(std::find(distinct.begin(), distinct.end(), v) - distinct.begin()));
  }
  return QSimplex(std::move(top), std::move(levels));
}

// The set of Q-simplices tau whose relative interiors meet nu(relint sigma)
// under the weighted realization. The combinatorial image involute_simplex
// differs from this in general because w(nu(T)) != w(T).
//
// In log coordinates a point of relint(sigma) is a_i = log2(w(S_i) lambda_i)
// with a constant on each level and strictly decreasing across levels; its
// image has weighted log coordinates a_i + delta_i with
// delta_i = log2 w(nu S_i) - log2 w(S_i) in {-1, 0, 1}. Which level
// orderings of a + delta occur is a system of difference constraints with
// integer bounds over the m level values, so every feasible pattern is
// attained with gaps on the grid 1/(m+1), and gaps beyond 2 behave alike.
class AntipodalImages {
 public:
  explicit AntipodalImages(int t) : t_(t) {}

  std::vector<QSimplex> operator()(const QSimplex& s) {
    const std::size_t k = s.top().size();
    std::vector<int> deltas(k);
    for (std::size_t i = 0; i < k; ++i) {
      deltas[i] = log_weight(complement(s.top()[i])) - log_weight(s.top()[i]);
    }
    Key key{std::vector<int>(s.levels().begin(), s.levels().end()), deltas};
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, image_levels(key.first, deltas, s.vertex_count())).first;

    Chain top(k);
    for (std::size_t i = 0; i < k; ++i) top[k - 1 - i] = complement(s.top()[i]);
    std::vector<QSimplex> out;
    for (const auto& levels : it->second) out.emplace_back(top, levels);
    return out;
  }

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  int log_weight(const Subset& s) const { return s.size() < t_ ? 0 : -1; }

  // Level vectors for the image, indexed in the order of the image's top
  // chain (which reverses sigma's).
  static std::vector<std::vector<int>> image_levels(const std::vector<int>& levels,
                                                    const std::vector<int>& deltas, int m) {
    const int unit = m + 1;
    const int max_gap = 2 * unit + 1;
    const std::size_t k = levels.size();
    std::vector<std::vector<int>> found;
    std::vector<int> z(m, 0);
    std::vector<int> b(k);
    auto record = [&] {
      for (std::size_t i = 0; i < k; ++i) b[i] = z[levels[i]] + deltas[i] * unit;
      std::vector<int> distinct = b;
      std::sort(distinct.begin(), distinct.end(), std::greater<>());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      std::vector<int> image(k);
      for (std::size_t i = 0; i < k; ++i) {
        image[k - 1 - i] =
            static_cast<int>(std::find(distinct.begin(), distinct.end(), b[i]) - distinct.begin());
      }
      if (std::find(found.begin(), found.end(), image) == found.end()) found.push_back(std::move(image));
    };
    auto place = [&](auto&& self, int j) -> void {
      if (j == m) {
        record();
        return;
      }
      for (int gap = 1; gap <= max_gap; ++gap) {
        z[j] = z[j - 1] - gap;
        self(self, j + 1);
      }
    };
    if (m == 1) {
      record();
    } else {
      place(place, 1);
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  int t_;
  std::map<Key, std::vector<std::vector<int>>> memo_;
};

// ---------------------------------------------------------------------------
// Text dumps for golden tests.

inline std::string dump(const BComplex& b) {
  std::ostringstream out;
  out << "complex B d=" << b.d << "\n";
  out << "vertices " << b.vertices.size() << "\n";
  for (const Subset& v : b.vertices) out << "  " << to_string(v) << "\n";
  for (std::size_t k = 0; k < b.simplices.size(); ++k) {
    out << "dim " << k << " count " << b.simplices[k].size() << "\n";
    for (const Chain& c : b.simplices[k]) out << "  " << to_string(c) << "\n";
  }
  out << "euler " << b.euler_characteristic() << "\n";
  return out.str();
}

inline std::string dump(const QComplex& q) {
  std::ostringstream out;
  out << "complex Q d=" << q.d << " t=" << q.t << "\n";
  out << "vertices " << q.vertices.size() << "\n";
  for (const Chain& v : q.vertices) out << "  " << to_string(v) << "\n";
  for (std::size_t k = 0; k < q.simplices.size(); ++k) {
    out << "dim " << k << " count " << q.simplices[k].size() << "\n";
    for (const QSimplex& s : q.simplices[k]) out << "  " << to_string(s) << "\n";
  }
  out << "euler " << q.euler_characteristic() << "\n";
  return out.str();
}

}  // namespace bulab
