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

// Finite concept classes over a finite domain with labels {0, 1}, exact
// example distributions, the majority-vote list-replicable learner and its
// replication experiments.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bulab/caps.hpp"
#include "bulab/random.hpp"
#include "bulab/rational.hpp"
#include "bulab/subset.hpp"

namespace bulab {

// ---------------------------------------------------------------------------
// Hypotheses and classes.

struct Hypothesis {
  std::string name;
  std::vector<std::uint8_t> labels;  // labels[x] in {0, 1}

  int operator()(std::size_t x) const { return labels.at(x); }

  // The label vector as a bit string, e.g. "0110"; used as a stable key.
  std::string key() const {
    std::string out;
    out.reserve(labels.size());
    for (std::uint8_t y : labels) out += static_cast<char>('0' + y);
    return out;
  }

  friend bool operator==(const Hypothesis& a, const Hypothesis& b) { return a.labels == b.labels; }
};

struct ConceptClass {
  std::string name;
  std::vector<std::string> domain;
  std::vector<Hypothesis> hypotheses;

  std::size_t domain_size() const { return domain.size(); }

  std::optional<std::size_t> point_index(const std::string& x) const {
    auto it = std::find(domain.begin(), domain.end(), x);
    if (it == domain.end()) return std::nullopt;
    return static_cast<std::size_t>(it - domain.begin());
  }
};

// Validates the class and merges domain points on which every hypothesis
// agrees (the first occurrence survives).
inline ConceptClass make_concept_class(std::string name, std::vector<std::string> domain,
                                       std::vector<Hypothesis> hypotheses) {
  for (const Hypothesis& h : hypotheses) {
    if (h.labels.size() != domain.size()) throw InputError("hypothesis " + h.name + " is not total");
    for (std::uint8_t y : h.labels) {
      if (y > 1) throw InputError("hypothesis " + h.name + " has a label outside {0,1}");
    }
  }
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    for (std::size_t j = i + 1; j < hypotheses.size(); ++j) {
      if (hypotheses[i] == hypotheses[j]) {
        throw InputError("hypotheses " + hypotheses[i].name + " and " + hypotheses[j].name + " coincide");
      }
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < domain.size(); ++x) {
    bool duplicate = std::any_of(keep.begin(), keep.end(), [&](std::size_t k) {
      return std::all_of(hypotheses.begin(), hypotheses.end(),
                         [&](const Hypothesis& h) { return h.labels[k] == h.labels[x]; });
    });
    if (!duplicate) keep.push_back(x);
  }
  ConceptClass out;
  out.name = std::move(name);
  for (std::size_t x : keep) out.domain.push_back(domain[x]);
  for (Hypothesis& h : hypotheses) {
    Hypothesis reduced{h.name, {}};
    for (std::size_t x : keep) reduced.labels.push_back(h.labels[x]);
    out.hypotheses.push_back(std::move(reduced));
  }
  return out;
}

// The bit string x_1 x_2 ... x_m of the point with indicator bits `bits`.
inline std::string cube_point_name(int m, std::uint64_t bits) {
  std::string out;
  for (int i = 0; i < m; ++i) out += ((bits >> i) & 1U) ? '1' : '0';
  return out;
}

// H_m: h_i(x) = x_i on X = {0,1}^m. Point index = indicator bits of x.
inline ConceptClass projection_class(int m, const Caps& caps = default_caps()) {
  if (m < 1 || m > caps.class_m) {
    throw InputError("projection class needs 1 <= m <= " + std::to_string(caps.class_m));
  }
  const std::size_t size = std::size_t{1} << m;
  std::vector<std::string> domain;
  for (std::size_t b = 0; b < size; ++b) domain.push_back(cube_point_name(m, b));
  std::vector<Hypothesis> hypotheses;
  for (int i = 1; i <= m; ++i) {
    Hypothesis h{"h" + std::to_string(i), std::vector<std::uint8_t>(size)};
    for (std::size_t b = 0; b < size; ++b) h.labels[b] = (b >> (i - 1)) & 1U;
    hypotheses.push_back(std::move(h));
  }
  return make_concept_class("projection:" + std::to_string(m), std::move(domain), std::move(hypotheses));
}

// Characteristic functions of all subsets of [m], over the domain [m].
inline ConceptClass powerset_class(int m, const Caps& caps = default_caps()) {
  if (m < 1 || m > caps.class_m) {
    throw InputError("powerset class needs 1 <= m <= " + std::to_string(caps.class_m));
  }
  std::vector<std::string> domain;
  for (int i = 1; i <= m; ++i) domain.push_back(std::to_string(i));
  std::vector<Hypothesis> hypotheses;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
    Hypothesis h{"{" + (b ? to_key(Subset(m, b)) : std::string()) + "}", std::vector<std::uint8_t>(m)};
    for (int i = 0; i < m; ++i) h.labels[i] = (b >> i) & 1U;
    hypotheses.push_back(std::move(h));
  }
  return make_concept_class("powerset:" + std::to_string(m), std::move(domain), std::move(hypotheses));
}

// h_maj(x) = 1 iff at least half of the class says 1; exact ties go to 1.
inline Hypothesis majority_vote(const ConceptClass& h_class) {
  if (h_class.hypotheses.empty()) throw InputError("majority vote of an empty class");
  Hypothesis out{"maj", std::vector<std::uint8_t>(h_class.domain_size())};
  const std::size_t total = h_class.hypotheses.size();
  for (std::size_t x = 0; x < h_class.domain_size(); ++x) {
    std::size_t ones = 0;
    for (const Hypothesis& h : h_class.hypotheses) ones += h.labels[x];
    out.labels[x] = 2 * ones >= total ? 1 : 0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distributions and losses.

struct Example {
  std::size_t x = 0;
  int y = 0;
  friend auto operator<=>(const Example&, const Example&) = default;
};

// Exact probabilities over X x {0,1}.
class ExampleDistribution {
 public:
  ExampleDistribution() = default;

  ExampleDistribution(std::size_t domain_size, const std::map<Example, Rational>& masses)
      : mass_(2 * domain_size, Rational(0)) {
    Rational total = 0;
    for (const auto& [e, p] : masses) {
      if (e.x >= domain_size || (e.y != 0 && e.y != 1)) throw InputError("example outside X x {0,1}");
      if (p < 0) throw InputError("negative probability");
      mass_[2 * e.x + e.y] += p;
      total += p;
    }
    if (total != 1) throw InputError("probabilities sum to " + to_string(total) + ", not 1");
  }

  std::size_t domain_size() const { return mass_.size() / 2; }
  const Rational& operator()(std::size_t x, int y) const { return mass_.at(2 * x + y); }

  // Positive-mass examples in (x, y) order.
  std::vector<std::pair<Example, Rational>> support() const {
    std::vector<std::pair<Example, Rational>> out;
    for (std::size_t i = 0; i < mass_.size(); ++i) {
      if (mass_[i] > 0) out.emplace_back(Example{i / 2, static_cast<int>(i % 2)}, mass_[i]);
    }
    return out;
  }

  friend bool operator==(const ExampleDistribution&, const ExampleDistribution&) = default;

 private:
  std::vector<Rational> mass_;  // [2x + y]
};

inline Rational population_loss(const ExampleDistribution& d, const Hypothesis& h) {
  Rational loss = 0;
  for (const auto& [e, p] : d.support()) {
    if (h(e.x) != e.y) loss += p;
  }
  return loss;
}

// corr_Q(h) = 1 - 2 L_Q(h).
inline Rational corr(const ExampleDistribution& q, const Hypothesis& h) {
  return 1 - 2 * population_loss(q, h);
}

inline Rational tv_distance(const ExampleDistribution& a, const ExampleDistribution& b) {
  if (a.domain_size() != b.domain_size()) throw InputError("distributions over different domains");
  Rational sum = 0;
  for (std::size_t x = 0; x < a.domain_size(); ++x) {
    for (int y = 0; y < 2; ++y) sum += abs(Rational(a(x, y) - b(x, y)));
  }
  return sum / 2;
}

inline bool is_realizable(const ExampleDistribution& d, const ConceptClass& h_class) {
  return std::any_of(h_class.hypotheses.begin(), h_class.hypotheses.end(),
                     [&](const Hypothesis& h) { return population_loss(d, h) == 0; });
}

using LabeledSample = std::vector<Example>;

// A sample stored as multiplicities; equivalent to any ordering of it.
struct SampleCounts {
  std::vector<std::pair<Example, std::uint64_t>> counts;  // sorted by example, counts > 0
  std::uint64_t n = 0;

  static SampleCounts from_sample(const LabeledSample& s) {
    std::map<Example, std::uint64_t> tally;
    for (const Example& e : s) ++tally[e];
    SampleCounts out;
    for (const auto& [e, c] : tally) out.counts.emplace_back(e, c);
    out.n = s.size();
    return out;
  }
};

inline Rational empirical_loss(const SampleCounts& s, const Hypothesis& h) {
  if (s.n == 0) throw InputError("empirical loss of an empty sample");
  Integer wrong = 0;
  for (const auto& [e, c] : s.counts) {
    if (h(e.x) != e.y) wrong += c;
  }
  return Rational(wrong, Integer(s.n));
}

inline Rational empirical_loss(const LabeledSample& s, const Hypothesis& h) {
  return empirical_loss(SampleCounts::from_sample(s), h);
}

// ---------------------------------------------------------------------------
// Chain distributions over H_m.

struct ChainDistribution {
  int m = 0;
  Chain sets;
  std::vector<Rational> weights;
  ExampleDistribution distribution;
};

// D = sum_i lambda_i D_{A_i}, where D_A puts 1/2 on (A, 1) and 1/2 on
// ([m] - A, 0). Domain points are the indicator vectors of H_m's domain.
inline ChainDistribution chain_distribution(const Chain& sets, const std::vector<Rational>& weights, int m) {
  if (sets.empty()) throw InputError("chain distribution needs at least one set");
  if (sets.size() != weights.size()) throw InputError("one weight per chain set is required");
  if (m < 1 || m > kMaxGroundSize) throw InputError("bad m for chain distribution");
  Rational total = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].ground_size() != m) throw InputError("chain set " + to_string(sets[i]) + " is not over [m]");
    if (!sets[i].is_nontrivial()) throw InputError("chain set " + to_string(sets[i]) + " is trivial");
    if (weights[i] <= 0) throw InputError("chain weights must be positive");
    total += weights[i];
  }
  if (total != 1) throw InputError("chain weights sum to " + to_string(total) + ", not 1");
  if (!is_chain(sets)) throw InputError("sets are not strictly increasing");
  if (m > 20) throw InputError("chain distributions over H_m need m <= 20");

  std::map<Example, Rational> masses;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    masses[Example{sets[i].bits(), 1}] += weights[i] / 2;
    masses[Example{complement(sets[i]).bits(), 0}] += weights[i] / 2;
  }
  return ChainDistribution{m, sets, weights, ExampleDistribution(std::size_t{1} << m, masses)};
}

// nu(D) = sum_i lambda_i D_{[m] - A_i}.
inline ChainDistribution involute_distribution(const ChainDistribution& d) {
  Chain sets;
  std::vector<Rational> weights;
  for (std::size_t i = d.sets.size(); i-- > 0;) {
    sets.push_back(complement(d.sets[i]));
    weights.push_back(d.weights[i]);
  }
  return chain_distribution(sets, weights, d.m);
}

// A random chain over [m]: a random ordering of [m], a random nonempty set
// of prefix lengths in [1, m-1], and integer weights in [1, 9] normalized.
inline ChainDistribution random_chain_distribution(int m, Engine& rng) {
  if (m < 2) throw InputError("chain distributions need m >= 2");
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i + 1;
  for (int i = m - 1; i > 0; --i) std::swap(order[i], order[uniform_int(rng, 0, i)]);
  std::vector<int> sizes;
  for (int s = 1; s < m; ++s) {
    if (uniform_int(rng, 0, 1)) sizes.push_back(s);
  }
  if (sizes.empty()) sizes.push_back(static_cast<int>(uniform_int(rng, 1, m - 1)));
  Chain sets;
  std::vector<Rational> weights;
  Rational total = 0;
  for (int s : sizes) {
    sets.push_back(Subset::of(m, std::span<const int>(order.data(), s)));
    weights.emplace_back(uniform_int(rng, 1, 9));
    total += weights.back();
  }
  for (Rational& w : weights) w /= total;
  return chain_distribution(sets, weights, m);
}

// theta(D)(x) = D(x,1) when positive, otherwise -D(x,0).
inline std::vector<Rational> theta_embed(const ExampleDistribution& d) {
  std::vector<Rational> out(d.domain_size());
  for (std::size_t x = 0; x < d.domain_size(); ++x) {
    if (d(x, 0) > 0 && d(x, 1) > 0) {
      throw InputError("theta_embed needs a realizable distribution; point " + std::to_string(x) +
                       " carries both labels");
    }
    out[x] = d(x, 1) > 0 ? d(x, 1) : Rational(-d(x, 0));
  }
  return out;
}

inline ExampleDistribution theta_invert(const std::vector<Rational>& v) {
  std::map<Example, Rational> masses;
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (v[x] > 0) masses[Example{x, 1}] = v[x];
    if (v[x] < 0) masses[Example{x, 0}] = -v[x];
  }
  return ExampleDistribution(v.size(), masses);
}

// ---------------------------------------------------------------------------
// Sampling.

// Inverse-CDF sampler: a 64-bit uniform u selects the first support entry
// with u < ceil(F_i * 2^64), compared exactly.
class Sampler {
 public:
  static constexpr std::uint64_t kExactDrawLimit = std::uint64_t{1} << 22;

  explicit Sampler(const ExampleDistribution& d) {
    Rational cumulative = 0;
    const Integer scale = Integer(1) << 64;
    for (const auto& [e, p] : d.support()) {
      cumulative += p;
      Rational scaled = cumulative * scale;
      Integer ceil_value = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
      if (Rational(ceil_value) < scaled) ++ceil_value;
      examples_.push_back(e);
      probabilities_.push_back(to_double(p));
      thresholds_.push_back(static_cast<unsigned __int128>(ceil_value));
    }
  }

  std::size_t draw_index(Engine& rng) const {
    const std::uint64_t u = rng();
    for (std::size_t i = 0; i < thresholds_.size(); ++i) {
      if (u < thresholds_[i]) return i;
    }
    return thresholds_.size() - 1;
  }

  Example draw(Engine& rng) const { return examples_[draw_index(rng)]; }

  LabeledSample sample(Engine& rng, std::uint64_t n) const {
    LabeledSample out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(draw(rng));
    return out;
  }

  // Multiplicities of an i.i.d. sample of size n. Up to kExactDrawLimit the
  // sample is drawn point by point; above it the multinomial is split into
  // conditional binomials.
  SampleCounts counts(Engine& rng, std::uint64_t n) const {
    std::vector<std::uint64_t> tally(examples_.size(), 0);
    if (n <= kExactDrawLimit) {
      for (std::uint64_t i = 0; i < n; ++i) ++tally[draw_index(rng)];
    } else {
      std::uint64_t remaining = n;
      double remaining_mass = 1.0;
      for (std::size_t i = 0; i + 1 < examples_.size() && remaining > 0; ++i) {
        double p = std::clamp(probabilities_[i] / remaining_mass, 0.0, 1.0);
        std::binomial_distribution<std::int64_t> binomial(static_cast<std::int64_t>(remaining), p);
        tally[i] = static_cast<std::uint64_t>(binomial(rng));
        remaining -= tally[i];
        remaining_mass -= probabilities_[i];
      }
      tally.back() += remaining;
    }
    SampleCounts out;
    out.n = n;
    for (std::size_t i = 0; i < examples_.size(); ++i) {
      if (tally[i] > 0) out.counts.emplace_back(examples_[i], tally[i]);
    }
    return out;
  }

 private:
  std::vector<Example> examples_;
  std::vector<double> probabilities_;
  std::vector<unsigned __int128> thresholds_;
};

// n = ceil((2M ln 2 + ln(1/delta)) / (2 e^2)): Hoeffding plus a union bound
// over the 2^(2M) events of X x {0,1}, which bounds the TV distance between
// D and the empirical distribution by e with probability 1 - delta.
inline std::uint64_t sample_size_for(const Rational& e, const Rational& delta, std::uint64_t domain_size) {
  if (e <= 0 || e >= 1 || delta <= 0 || delta >= 1) throw InputError("e and delta must lie in (0, 1)");
  const long double ev = e.convert_to<long double>();
  const long double dv = delta.convert_to<long double>();
  const long double n = (2.0L * static_cast<long double>(domain_size) * std::log(2.0L) + std::log(1.0L / dv)) /
                        (2.0L * ev * ev);
  return static_cast<std::uint64_t>(std::ceil(n));
}

// ---------------------------------------------------------------------------
// The learner.

struct LearnerOutput {
  Hypothesis hypothesis;
  bool majority = false;
  std::optional<std::size_t> index;  // position in the class for the fallback branch
};

class NoConsistentHypothesis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outputs h_maj when L_S(h_maj) <= (2M + 2) e, otherwise the first
// hypothesis of the class consistent with S.
inline LearnerOutput learn(const ConceptClass& h_class, const Hypothesis& h_maj, const SampleCounts& s,
                           const Rational& e) {
  if (s.n == 0) throw InputError("the learner needs a nonempty sample");
  if (e <= 0) throw InputError("e must be positive");
  const Rational bound = (2 * Rational(h_class.domain_size()) + 2) * e;
  if (empirical_loss(s, h_maj) <= bound) return {h_maj, true, std::nullopt};
  for (std::size_t i = 0; i < h_class.hypotheses.size(); ++i) {
    if (empirical_loss(s, h_class.hypotheses[i]) == 0) return {h_class.hypotheses[i], false, i};
  }
  throw NoConsistentHypothesis("no hypothesis in " + h_class.name + " is consistent with the sample");
}

inline Hypothesis learner(const ConceptClass& h_class, const LabeledSample& s, const Rational& e) {
  return learn(h_class, majority_vote(h_class), SampleCounts::from_sample(s), e).hypothesis;
}

// ---------------------------------------------------------------------------
// Replication experiments.

struct OutputFrequency {
  Hypothesis hypothesis;  // name is "maj" or the class member's name (both if equal)
  std::uint64_t count = 0;
  Rational loss;
};

struct ListAtDelta {
  Rational delta;
  std::vector<std::string> keys;  // label-vector keys, by descending frequency
};

struct ReplicationReport {
  std::string class_name;
  std::uint64_t domain_size = 0;
  Rational e;
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  Rational delta;
  std::vector<OutputFrequency> frequencies;  // sorted by key
  std::vector<ListAtDelta> lists;            // the first entry uses `delta`
  Rational max_frequency;
  std::uint64_t majority_outputs = 0;

  const std::vector<std::string>& list() const { return lists.front().keys; }
  const OutputFrequency& entry(const std::string& key) const {
    for (const auto& f : frequencies) {
      if (f.hypothesis.key() == key) return f;
    }
    throw std::out_of_range("no output " + key);
  }
};

// Greedy: most frequent outputs first (ties by key) until the mass reaches
// 1 - delta.
inline std::vector<std::string> high_probability_list(const std::vector<OutputFrequency>& freq,
                                                      std::uint64_t trials, const Rational& delta) {
  std::vector<const OutputFrequency*> order;
  for (const auto& f : freq) order.push_back(&f);
  std::stable_sort(order.begin(), order.end(),
                   [](const OutputFrequency* a, const OutputFrequency* b) { return a->count > b->count; });
  std::vector<std::string> out;
  const Rational target = (1 - delta) * Rational(trials);
  std::uint64_t mass = 0;
  for (const OutputFrequency* f : order) {
    if (Rational(mass) >= target) break;
    out.push_back(f->hypothesis.key());
    mass += f->count;
  }
  return out;
}

struct ReplicationOptions {
  Rational delta{1, 20};
  std::vector<Rational> extra_deltas{Rational(1, 100), Rational(1, 10)};
  unsigned threads = 0;  // 0: hardware concurrency
};

// Runs the learner on `trials` independent samples of size n. Trial i uses
// stream_engine(seed, i), so the report does not depend on the thread count.
inline ReplicationReport replication_experiment(const ConceptClass& h_class, const ExampleDistribution& d,
                                                const Rational& e, std::uint64_t n, std::uint64_t trials,
                                                std::uint64_t seed, const ReplicationOptions& options = {}) {
  if (!is_realizable(d, h_class)) throw InputError("distribution is not realizable by " + h_class.name);
  if (trials < 1) throw InputError("trials must be positive");
  if (n < 1) throw InputError("sample size must be positive");
  if (d.domain_size() != h_class.domain_size()) throw InputError("distribution and class domains differ");

  const Hypothesis h_maj = majority_vote(h_class);
  const Sampler sampler(d);
  // -1 encodes h_maj, otherwise the class index.
  std::vector<long> outputs(trials, 0);

  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      Engine rng = stream_engine(seed, trial);
      LearnerOutput out = learn(h_class, h_maj, sampler.counts(rng, n), e);
      outputs[trial] = out.majority ? -1 : static_cast<long>(*out.index);
    }
  };
  if (threads <= 1) {
    run(0, trials);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(trials, begin + chunk);
      if (begin < end) pool.emplace_back(run, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::map<std::string, OutputFrequency> by_key;
  ReplicationReport report;
  for (long o : outputs) {
    const Hypothesis& h = o < 0 ? h_maj : h_class.hypotheses[o];
    auto [it, inserted] = by_key.try_emplace(h.key(), OutputFrequency{h, 0, population_loss(d, h)});
    if (!inserted && it->second.hypothesis.name != h.name &&
        it->second.hypothesis.name.find(h.name) == std::string::npos) {
      it->second.hypothesis.name += "=" + h.name;
    }
    ++it->second.count;
    if (o < 0) ++report.majority_outputs;
  }
  report.class_name = h_class.name;
  report.domain_size = h_class.domain_size();
  report.e = e;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.delta = options.delta;
  std::uint64_t top = 0;
  for (auto& [key, f] : by_key) {
    top = std::max(top, f.count);
    report.frequencies.push_back(std::move(f));
  }
  report.max_frequency = Rational(Integer(top), Integer(trials));
  report.lists.push_back({options.delta, high_probability_list(report.frequencies, trials, options.delta)});
  for (const Rational& extra : options.extra_deltas) {
    report.lists.push_back({extra, high_probability_list(report.frequencies, trials, extra)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Linear independence and gamma-interpolation.

// d x d matrix over {+1, -1}; row i is (h_i(x_1), ..., h_i(x_d)) with label
// 0 encoded as -1.
struct PatternMatrix {
  int d = 0;
  std::vector<int> entries;  // row-major

  int at(int row, int col) const { return entries.at(static_cast<std::size_t>(row) * d + col); }

  static PatternMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    PatternMatrix p;
    p.d = static_cast<int>(rows.size());
    if (p.d == 0) throw InputError("empty pattern matrix");
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != p.d) throw InputError("pattern matrix must be square");
      for (int v : row) {
        if (v != 1 && v != -1) throw InputError("pattern matrix entries must be +1 or -1");
        p.entries.push_back(v);
      }
    }
    return p;
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) out[i].push_back(at(i, j));
    }
    return out;
  }
};

namespace detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Solves a x = b by Gauss-Jordan elimination; nullopt if a is singular.
inline std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Incremental row-echelon basis for greedy rank building.
class EchelonBasis {
 public:
  // Adds v if it is independent of the basis; returns whether it was added.
  bool add(std::vector<Rational> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& coeff = v[pivots_[i]];
      if (coeff == 0) continue;
      Rational factor = coeff / rows_[i][pivots_[i]];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * rows_[i][c];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) return false;
    pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
    rows_.push_back(std::move(v));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace detail

struct IndependentPattern {
  std::vector<std::size_t> hypotheses;  // class indices
  std::vector<std::size_t> points;      // domain indices
  PatternMatrix matrix;
};

// Greedy rank building: take hypotheses in class order while they raise the
// rank of their +-1 label vectors, then points in domain order while they
// raise the rank of the chosen rows' columns.
inline std::optional<IndependentPattern> find_independent_pattern(const ConceptClass& h_class, int d) {
  if (d < 1) throw InputError("d must be positive");
  auto sign = [](std::uint8_t y) { return y ? 1 : -1; };
  IndependentPattern out;
  detail::EchelonBasis rows;
  for (std::size_t i = 0; i < h_class.hypotheses.size() && static_cast<int>(out.hypotheses.size()) < d; ++i) {
    std::vector<Rational> v;
    for (std::uint8_t y : h_class.hypotheses[i].labels) v.emplace_back(sign(y));
    if (rows.add(std::move(v))) out.hypotheses.push_back(i);
  }
  if (static_cast<int>(out.hypotheses.size()) < d) return std::nullopt;
  detail::EchelonBasis cols;
  for (std::size_t x = 0; x < h_class.domain_size() && static_cast<int>(out.points.size()) < d; ++x) {
    std::vector<Rational> v;
    for (std::size_t i : out.hypotheses) v.emplace_back(sign(h_class.hypotheses[i].labels[x]));
    if (cols.add(std::move(v))) out.points.push_back(x);
  }
  std::vector<std::vector<int>> matrix;
  for (std::size_t i : out.hypotheses) {
    std::vector<int> row;
    for (std::size_t x : out.points) row.push_back(sign(h_class.hypotheses[i].labels[x]));
    matrix.push_back(std::move(row));
  }
  out.matrix = PatternMatrix::from_rows(matrix);
  return out;
}

// alpha with sum_i alpha_i row_i = y; nullopt when the rows are dependent.
inline std::optional<std::vector<Rational>> interpolation_coefficients(const PatternMatrix& p,
                                                                       const std::vector<int>& y) {
  detail::RationalMatrix transpose(p.d, std::vector<Rational>(p.d));
  for (int i = 0; i < p.d; ++i) {
    for (int j = 0; j < p.d; ++j) transpose[j][i] = p.at(i, j);
  }
  std::vector<Rational> rhs(y.begin(), y.end());
  return detail::solve(std::move(transpose), std::move(rhs));
}

inline std::vector<int> sign_vector(int d, std::uint32_t mask) {
  std::vector<int> y(d);
  for (int j = 0; j < d; ++j) y[j] = (mask >> j) & 1U ? -1 : 1;
  return y;
}

// gamma = min over y in {+-1}^d of 1 / sum_i |alpha_{y,i}|.
inline Rational gamma_interpolation(const PatternMatrix& p) {
  if (p.d < 1 || p.d > 20) throw InputError("gamma_interpolation supports 1 <= d <= 20");
  Rational worst = 0;
  for (std::uint32_t mask = 0; mask < (1U << p.d); ++mask) {
    auto alpha = interpolation_coefficients(p, sign_vector(p.d, mask));
    if (!alpha) throw InputError("pattern matrix is singular");
    Rational l1 = 0;
    for (const Rational& a : *alpha) l1 += abs(a);
    worst = std::max(worst, l1);
  }
  return 1 / worst;
}

struct GammaWitness {
  std::vector<int> labels;       // y_j
  std::vector<Rational> weights;  // Q_j
  Rational best_corr;            // max over the 2d signed rows
};

struct GammaCheck {
  bool ok = true;
  std::uint64_t checked = 0;
  std::optional<GammaWitness> witness;
};

// Best correlation of {+-h_i} against labels y under Q: max_i |sum_j Q_j y_j P_ij|.
inline Rational best_signed_corr(const PatternMatrix& p, const std::vector<int>& y, const std::vector<Rational>& q) {
  Rational best = 0;
  for (int i = 0; i < p.d; ++i) {
    Rational c = 0;
    for (int j = 0; j < p.d; ++j) c += q[j] * (y[j] * p.at(i, j));
    best = std::max(best, abs(c));
  }
  return best;
}

// Checks max_h corr_Q(h) >= gamma over the class {+-h_i}. Besides `trials`
// random (y, Q) pairs, every extreme candidate u = P^{-1} s, s in {+-1}^d,
// is tried (labels y = sign(u), Q = |u| / |u|_1); those attain the minimum
// of the correlation game whenever it sits at a vertex.
inline GammaCheck check_gamma_realizable(const PatternMatrix& p, const Rational& gamma, std::uint64_t trials,
                                         std::uint64_t seed) {
  GammaCheck out;
  auto test = [&](const std::vector<int>& y, const std::vector<Rational>& q) {
    ++out.checked;
    Rational best = best_signed_corr(p, y, q);
    if (best < gamma) {
      out.ok = false;
      out.witness = GammaWitness{y, q, best};
      return false;
    }
    return true;
  };

  detail::RationalMatrix a(p.d, std::vector<Rational>(p.d));
  for (int i = 0; i < p.d; ++i) {
    for (int j = 0; j < p.d; ++j) a[i][j] = p.at(i, j);
  }
  for (std::uint32_t mask = 0; mask < (1U << p.d); ++mask) {
    auto sv = sign_vector(p.d, mask);
    auto u = detail::solve(a, std::vector<Rational>(sv.begin(), sv.end()));
    if (!u) throw InputError("pattern matrix is singular");
    Rational l1 = 0;
    for (const Rational& v : *u) l1 += abs(v);
    std::vector<int> y;
    std::vector<Rational> q;
    for (const Rational& v : *u) {
      y.push_back(v < 0 ? -1 : 1);
      q.push_back(abs(v) / l1);
    }
    if (!test(y, q)) return out;
  }

  Engine rng = stream_engine(seed, 0);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::vector<int> y(p.d);
    std::vector<Rational> q(p.d);
    Integer total = 0;
    for (int j = 0; j < p.d; ++j) {
      y[j] = uniform_int(rng, 0, 1) ? 1 : -1;
      std::int64_t w = uniform_int(rng, 0, 16);
      q[j] = w;
      total += w;
    }
    if (total == 0) {
      q[0] = 1;
      total = 1;
    }
    for (Rational& v : q) v /= Rational(total);
    if (!test(y, q)) return out;
  }
  return out;
}

}  // namespace bulab
