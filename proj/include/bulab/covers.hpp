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

// Antipodal-free covers of B^d ~ S^d and their exact verification.
//
// Each cover set is a union of relative interiors of Q^d simplices (weighted
// realization), so membership is a predicate on simplices and every check
// is a finite scan.

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bulab/caps.hpp"
#include "bulab/random.hpp"
#include "bulab/simplicial.hpp"

namespace bulab {

enum class SetKind { kOpen, kClosed };

inline std::string to_string(SetKind k) { return k == SetKind::kOpen ? "open" : "closed"; }

struct CoverSet {
  std::string label;
  SetKind kind = SetKind::kClosed;
  // relint(sigma) lies in the set.
  std::function<bool(const QSimplex&)> contains;
  // Pointwise definition through h, when the set has one.
  std::function<bool(const SpherePoint&)> contains_point;
};

struct Cover {
  int d = 0;
  std::string kind;  // "closed", "mixed" or a caller-chosen tag
  std::vector<CoverSet> sets;
  std::shared_ptr<const QComplex> complex;

  int t() const { return complex->t; }
};

namespace detail {

inline std::shared_ptr<const QComplex> shared_q(int d, const Caps& caps) {
  return std::make_shared<const QComplex>(build_q(d, caps));
}

inline std::string subset_label(const char* prefix, const Subset& s) {
  return std::string(prefix) + "{" + to_key(s) + "}";
}

// A_+: the union of F_T over |T| >= t.
inline CoverSet large_sets(int t) {
  CoverSet plus;
  plus.label = "A_+";
  plus.kind = SetKind::kClosed;
  plus.contains = [t](const QSimplex& s) {
    for (std::size_t q = 0; q < s.top().size(); ++q) {
      if (s.levels()[q] == 0 && s.top()[q].size() >= t) return true;
    }
    return false;
  };
  plus.contains_point = [t](const SpherePoint& x) {
    for (const Subset& s : evaluate_h(x, t).argmax) {
      if (s.size() >= t) return true;
    }
    return false;
  };
  return plus;
}

}  // namespace detail

// Closed cover with d+3 sets: A_i collects the F_T with i in T and |T| < t,
// and A_+ collects the F_T with |T| >= t. F_T = {x : w(T) lambda_T(x) = h(x)}
// contains relint(sigma) iff T is in the smallest vertex v_1 of sigma.
inline Cover build_closed_cover(int d, const Caps& caps = default_caps()) {
  Cover cover;
  cover.d = d;
  cover.kind = "closed";
  cover.complex = detail::shared_q(d, caps);
  const int t = cover.complex->t;
  for (int i = 1; i <= d + 2; ++i) {
    auto small_with_i = [i, t](const Subset& s) { return s.contains(i) && s.size() < t; };
    CoverSet set;
    set.label = "A_" + std::to_string(i);
    set.kind = SetKind::kClosed;
    set.contains = [small_with_i](const QSimplex& s) {
      for (std::size_t q = 0; q < s.top().size(); ++q) {
        if (s.levels()[q] == 0 && small_with_i(s.top()[q])) return true;
      }
      return false;
    };
    set.contains_point = [small_with_i, t](const SpherePoint& x) {
      for (const Subset& s : evaluate_h(x, t).argmax) {
        if (small_with_i(s)) return true;
      }
      return false;
    };
    cover.sets.push_back(std::move(set));
  }
  cover.sets.push_back(detail::large_sets(t));
  return cover;
}

// Mixed cover with s = ceil(t/2). A vertex chain is low when its largest
// set has size <= s; a simplex is low when v_1 is low.
//   F'_T (open, |T| <= s):     sigma low and T lies in a low vertex of sigma.
//   F_T (closed, s < |T| < t): T in v_1.
//   A_+ (closed):              some T in v_1 has |T| >= t.
inline Cover build_mixed_cover(int d, const Caps& caps = default_caps()) {
  Cover cover;
  cover.d = d;
  cover.kind = "mixed";
  cover.complex = detail::shared_q(d, caps);
  const int t = cover.complex->t;
  const int s_low = (t + 1) / 2;
  const int n = d + 2;

  std::vector<Subset> sets;
  for (std::uint64_t b = 1; b < Subset::full_mask(n); ++b) sets.emplace_back(n, b);
  std::sort(sets.begin(), sets.end());

  for (const Subset& target : sets) {
    if (target.size() > s_low) continue;
    CoverSet open;
    open.label = detail::subset_label("F'_", target);
    open.kind = SetKind::kOpen;
    // Low vertices are exactly the prefixes v_1..v_j with small maxima, so T
    // lies in a low vertex iff the vertex where T first appears is low.
    open.contains = [target, s_low](const QSimplex& s) {
      for (std::size_t q = 0; q < s.top().size(); ++q) {
        if (s.top()[q] == target) return s.max_size_through(s.levels()[q]) <= s_low;
      }
      return false;
    };
    cover.sets.push_back(std::move(open));
  }
  for (const Subset& target : sets) {
    if (target.size() <= s_low || target.size() >= t) continue;
    CoverSet closed;
    closed.label = detail::subset_label("F_", target);
    closed.kind = SetKind::kClosed;
    closed.contains = [target](const QSimplex& s) {
      for (std::size_t q = 0; q < s.top().size(); ++q) {
        if (s.top()[q] == target) return s.levels()[q] == 0;
      }
      return false;
    };
    closed.contains_point = [target, t](const SpherePoint& x) {
      const auto argmax = evaluate_h(x, t).argmax;
      return std::find(argmax.begin(), argmax.end(), target) != argmax.end();
    };
    cover.sets.push_back(std::move(closed));
  }
  cover.sets.push_back(detail::large_sets(t));
  return cover;
}

// Scans every Q-simplex in canonical order (dimension, then vertices).
template <class Visit>
void for_each_simplex(const QComplex& q, Visit&& visit) {
  for (const auto& group : q.simplices) {
    for (const QSimplex& s : group) visit(s);
  }
}

struct CoverCheck {
  bool ok = true;
  std::optional<QSimplex> uncovered;
};

inline CoverCheck verify_cover(const Cover& c) {
  CoverCheck out;
  for_each_simplex(*c.complex, [&](const QSimplex& s) {
    if (!out.ok) return;
    for (const CoverSet& set : c.sets) {
      if (set.contains(s)) return;
    }
    out = {false, s};
  });
  return out;
}

struct AntipodalWitness {
  std::string label;
  QSimplex simplex;
  QSimplex image;  // meets nu(relint simplex) and lies in the same set
};

struct AntipodalCheck {
  bool ok = true;
  std::optional<AntipodalWitness> witness;
};

// A set A is antipodal-free iff no relint(sigma) in A has a point whose image
// under nu also lies in A. Images are the exact Q-simplices met by
// nu(relint sigma), see AntipodalImages.
inline AntipodalCheck verify_antipodal_free(const Cover& c) {
  AntipodalImages images(c.t());
  AntipodalCheck out;
  for_each_simplex(*c.complex, [&](const QSimplex& s) {
    if (!out.ok) return;
    std::vector<const CoverSet*> holding;
    for (const CoverSet& set : c.sets) {
      if (set.contains(s)) holding.push_back(&set);
    }
    if (holding.empty()) return;
    for (const QSimplex& image : images(s)) {
      for (const CoverSet* set : holding) {
        if (set->contains(image)) {
          out = {false, AntipodalWitness{set->label, s, image}};
          return;
        }
      }
    }
  });
  return out;
}

struct OverlapResult {
  int degree = 0;
  QSimplex witness;
  std::vector<std::string> labels;  // sets containing the witness
};

// Largest number of sets sharing a point. Throws on a non-covering input.
inline OverlapResult overlap_degree(const Cover& c) {
  if (auto check = verify_cover(c); !check.ok) {
    throw InputError("overlap_degree needs a cover; " + to_string(*check.uncovered) + " is uncovered");
  }
  OverlapResult out;
  for_each_simplex(*c.complex, [&](const QSimplex& s) {
    int count = 0;
    for (const CoverSet& set : c.sets) count += set.contains(s) ? 1 : 0;
    if (count > out.degree) {
      out.degree = count;
      out.witness = s;
    }
  });
  for (const CoverSet& set : c.sets) {
    if (set.contains(out.witness)) out.labels.push_back(set.label);
  }
  return out;
}

struct CrossCheck {
  bool agree = true;
  std::size_t points = 0;
  std::optional<std::pair<std::string, QSimplex>> disagreement;  // set label, simplex
};

namespace detail {

// Compares every pointwise-defined set with its simplex predicate at x, and
// the carrier of x with sigma.
inline bool agrees_at(const Cover& c, const QSimplex& s, const SpherePoint& x, CrossCheck& out) {
  ++out.points;
  if (carrier_simplex(x, c.t()) != s) {
    out = {false, out.points, std::pair{std::string("carrier"), s}};
    return false;
  }
  for (const CoverSet& set : c.sets) {
    if (!set.contains_point) continue;
    if (set.contains(s) != set.contains_point(x)) {
      out = {false, out.points, std::pair{set.label, s}};
      return false;
    }
  }
  return true;
}

inline void require_pointwise(const Cover& c) {
  for (const CoverSet& set : c.sets) {
    if (!set.contains_point) {
      throw InputError("cross_check_geometric needs pointwise sets; " + set.label + " has none");
    }
  }
}

}  // namespace detail

// Random exact points x = sum_j beta_j v_j in random Q-simplices, beta_j
// positive, checked against the h-based definitions.
inline CrossCheck cross_check_geometric(const Cover& c, int trials, std::uint64_t seed) {
  detail::require_pointwise(c);
  std::vector<const QSimplex*> all;
  for_each_simplex(*c.complex, [&](const QSimplex& s) { all.push_back(&s); });
  Engine rng = stream_engine(seed, 0);
  CrossCheck out;
  for (int trial = 0; trial < trials; ++trial) {
    const QSimplex& s = *all[uniform_int(rng, 0, static_cast<std::int64_t>(all.size()) - 1)];
    std::vector<Rational> beta;
    Rational total = 0;
    for (int j = 0; j < s.vertex_count(); ++j) {
      beta.emplace_back(uniform_int(rng, 1, 1000));
      total += beta.back();
    }
    for (Rational& b : beta) b /= total;
    if (!detail::agrees_at(c, s, c.complex->point_in(s, beta), out)) return out;
  }
  return out;
}

inline CrossCheck cross_check_barycenters(const Cover& c) {
  detail::require_pointwise(c);
  CrossCheck out;
  for_each_simplex(*c.complex, [&](const QSimplex& s) {
    if (out.agree) detail::agrees_at(c, s, c.complex->barycenter(s), out);
  });
  return out;
}

// The cover relabelled by the combinatorial involution: sigma is in the new
// set iff nu(sigma) is in the old one.
inline Cover involuted(const Cover& c) {
  Cover out = c;
  for (CoverSet& set : out.sets) {
    set.label = "nu(" + set.label + ")";
    set.contains = [inner = set.contains](const QSimplex& s) { return inner(involute_simplex(s)); };
    set.contains_point = nullptr;
  }
  return out;
}

}  // namespace bulab
