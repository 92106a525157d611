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

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "bulab/learning.hpp"

namespace bulab {
namespace {

std::size_t cube(int m, std::vector<int> ones) { return Subset::of(m, std::span<const int>(ones)).bits(); }

ExampleDistribution point_mass(std::size_t domain, std::size_t x, int y) {
  return ExampleDistribution(domain, {{Example{x, y}, Rational(1)}});
}

Chain chain_of(int m, std::vector<std::vector<int>> sets) {
  Chain out;
  for (auto& s : sets) out.push_back(Subset::of(m, std::span<const int>(s)));
  return out;
}

// Determinant by cofactor expansion; an oracle independent of elimination.
Rational det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rational out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(row);
    }
    out += (c % 2 == 0 ? 1 : -1) * a[0][c] * det(minor);
  }
  return out;
}

// gamma by Cramer's rule over all sign vectors.
Rational gamma_by_cramer(const PatternMatrix& p) {
  const int d = p.d;
  std::vector<std::vector<Rational>> transpose(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) transpose[j][i] = p.at(i, j);
  }
  const Rational base = det(transpose);
  Rational worst = 0;
  for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
    Rational l1 = 0;
    for (int i = 0; i < d; ++i) {
      auto replaced = transpose;
      for (int j = 0; j < d; ++j) replaced[j][i] = (mask >> j) & 1U ? -1 : 1;
      l1 += abs(Rational(det(replaced) / base));
    }
    worst = std::max(worst, l1);
  }
  return 1 / worst;
}

TEST(Classes, ProjectionExamples) {
  ConceptClass h2 = projection_class(2);
  const std::size_t x10 = cube(2, {1});
  EXPECT_EQ(h2.domain[x10], "10");
  EXPECT_EQ(h2.hypotheses[0](x10), 1);
  EXPECT_EQ(h2.hypotheses[1](x10), 0);
  ConceptClass h1 = projection_class(1);
  ASSERT_EQ(h1.hypotheses.size(), 1U);
  EXPECT_EQ(h1.hypotheses[0].labels, (std::vector<std::uint8_t>{0, 1}));
  ConceptClass h3 = projection_class(3);
  EXPECT_EQ(h3.domain_size(), 8U);
  EXPECT_EQ(h3.hypotheses.size(), 3U);
  EXPECT_THROW(projection_class(11), InputError);
  EXPECT_THROW(projection_class(0), InputError);
}

TEST(Classes, PowersetExamples) {
  ConceptClass p2 = powerset_class(2);
  EXPECT_EQ(p2.domain_size(), 2U);
  EXPECT_EQ(p2.hypotheses.size(), 4U);
  ConceptClass p3 = powerset_class(3);
  std::set<std::vector<std::uint8_t>> labelings;
  for (const Hypothesis& h : p3.hypotheses) labelings.insert(h.labels);
  EXPECT_EQ(labelings.size(), 8U);  // [3] is shattered
  EXPECT_TRUE(labelings.count({0, 0, 0}));
  EXPECT_TRUE(labelings.count({1, 1, 1}));
}

TEST(Classes, DomainPointsWithEqualColumnsAreMerged) {
  ConceptClass c = make_concept_class("c", {"a", "b", "c"}, {{"f", {0, 1, 0}}, {"g", {1, 1, 1}}});
  EXPECT_EQ(c.domain, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(c.hypotheses[0].labels, (std::vector<std::uint8_t>{0, 1}));
  EXPECT_THROW(make_concept_class("c", {"a"}, {{"f", {0}}, {"g", {0}}}), InputError);
  EXPECT_THROW(make_concept_class("c", {"a", "b"}, {{"f", {0}}}), InputError);
}

TEST(Majority, MatchesCountingOracle) {
  for (int m = 1; m <= 6; ++m) {
    ConceptClass h = projection_class(m);
    Hypothesis maj = majority_vote(h);
    for (std::size_t x = 0; x < h.domain_size(); ++x) {
      const int ones = std::popcount(x);
      EXPECT_EQ(maj(x), 2 * ones >= m ? 1 : 0);
      std::size_t agree = 0;
      for (const Hypothesis& g : h.hypotheses) agree += g(x) == maj(x);
      EXPECT_GE(2 * agree, h.hypotheses.size());
    }
  }
  EXPECT_EQ(majority_vote(projection_class(2))(cube(2, {1})), 1);  // tie
  EXPECT_EQ(majority_vote(projection_class(1)).labels, projection_class(1).hypotheses[0].labels);
  EXPECT_THROW(majority_vote(ConceptClass{}), InputError);
}

TEST(Losses, Examples) {
  ConceptClass h3 = projection_class(3);
  EXPECT_EQ(population_loss(point_mass(8, cube(3, {1}), 1), h3.hypotheses[0]), 0);
  ChainDistribution da = chain_distribution(chain_of(3, {{1, 2}}), {Rational(1)}, 3);
  EXPECT_EQ(da.distribution(cube(3, {1, 2}), 1), Rational(1, 2));
  EXPECT_EQ(da.distribution(cube(3, {3}), 0), Rational(1, 2));
  EXPECT_EQ(population_loss(da.distribution, h3.hypotheses[2]), 1);
  EXPECT_EQ(population_loss(da.distribution, h3.hypotheses[0]), 0);

  SampleCounts correct = SampleCounts::from_sample({{cube(3, {1}), 1}, {cube(3, {2}), 0}});
  EXPECT_EQ(empirical_loss(correct, h3.hypotheses[0]), 0);
  LabeledSample split{{5, 1}, {5, 0}};
  for (const Hypothesis& h : h3.hypotheses) EXPECT_EQ(empirical_loss(split, h), Rational(1, 2));
  EXPECT_THROW(empirical_loss(LabeledSample{}, h3.hypotheses[0]), InputError);
}

TEST(Losses, ExactCountSampleReproducesPopulationLoss) {
  Engine rng = stream_engine(31, 0);
  ConceptClass h4 = projection_class(4);
  for (int trial = 0; trial < 50; ++trial) {
    ChainDistribution d = random_chain_distribution(4, rng);
    Integer lcm = 1;
    for (const auto& [e, p] : d.distribution.support()) lcm = boost::multiprecision::lcm(lcm, denominator(p));
    LabeledSample s;
    for (const auto& [e, p] : d.distribution.support()) {
      Rational count = p * Rational(lcm);
      for (Integer i = 0; i < numerator(count); ++i) s.push_back(e);
    }
    for (const Hypothesis& h : h4.hypotheses) EXPECT_EQ(empirical_loss(s, h), population_loss(d.distribution, h));
  }
}

TEST(TV, Examples) {
  ChainDistribution d1 = chain_distribution(chain_of(2, {{1}}), {Rational(1)}, 2);
  ChainDistribution d2 = chain_distribution(chain_of(2, {{2}}), {Rational(1)}, 2);
  EXPECT_EQ(tv_distance(d1.distribution, d1.distribution), 0);
  EXPECT_EQ(tv_distance(d1.distribution, d2.distribution), 1);
  EXPECT_EQ(tv_distance(point_mass(4, 0, 0), point_mass(4, 0, 1)), 1);
}

TEST(ChainDistribution, Examples) {
  ConceptClass h3 = projection_class(3);
  ChainDistribution d = chain_distribution(chain_of(3, {{1}, {1, 2}}), {Rational(1, 2), Rational(1, 2)}, 3);
  EXPECT_EQ(population_loss(d.distribution, h3.hypotheses[0]), 0);
  EXPECT_EQ(population_loss(d.distribution, h3.hypotheses[2]), 1);
  EXPECT_TRUE(is_realizable(d.distribution, h3));

  ChainDistribution single = chain_distribution(chain_of(3, {{1}}), {Rational(1)}, 3);
  ChainDistribution expected = chain_distribution(chain_of(3, {{2, 3}}), {Rational(1)}, 3);
  EXPECT_EQ(involute_distribution(single).distribution, expected.distribution);
}

TEST(ChainDistribution, Validation) {
  EXPECT_THROW(chain_distribution(chain_of(3, {{1}, {2}}), {Rational(1, 2), Rational(1, 2)}, 3), InputError);
  EXPECT_THROW(chain_distribution(chain_of(3, {{1, 2, 3}}), {Rational(1)}, 3), InputError);
  EXPECT_THROW(chain_distribution(chain_of(3, {{1}}), {Rational(1, 2)}, 3), InputError);
  EXPECT_THROW(chain_distribution(chain_of(3, {{1}, {1, 2}}), {Rational(0), Rational(1)}, 3), InputError);
}

TEST(ChainDistribution, LossIdentityAndInvolution) {
  Engine rng = stream_engine(32, 0);
  for (int m = 2; m <= 6; ++m) {
    ConceptClass h = projection_class(m);
    for (int trial = 0; trial < 40; ++trial) {
      ChainDistribution d = random_chain_distribution(m, rng);
      ChainDistribution nu = involute_distribution(d);
      EXPECT_EQ(involute_distribution(nu).distribution, d.distribution);
      for (const Hypothesis& g : h.hypotheses) {
        EXPECT_EQ(population_loss(d.distribution, g) + population_loss(nu.distribution, g), 1);
        const bool in_first = d.sets.front().contains(std::stoi(g.name.substr(1)));
        const bool outside_last = !d.sets.back().contains(std::stoi(g.name.substr(1)));
        if (in_first) EXPECT_EQ(population_loss(d.distribution, g), 0);
        if (outside_last) EXPECT_EQ(population_loss(d.distribution, g), 1);
      }
    }
  }
}

TEST(Theta, RoundTripNegationAndIsometry) {
  ConceptClass h3 = projection_class(3);
  std::vector<Rational> unit = theta_embed(point_mass(8, 3, 1));
  for (std::size_t x = 0; x < 8; ++x) EXPECT_EQ(unit[x], x == 3 ? 1 : 0);

  Engine rng = stream_engine(33, 0);
  for (int trial = 0; trial < 50; ++trial) {
    ChainDistribution a = random_chain_distribution(4, rng);
    ChainDistribution b = random_chain_distribution(4, rng);
    std::vector<Rational> ta = theta_embed(a.distribution);
    std::vector<Rational> tb = theta_embed(b.distribution);
    EXPECT_EQ(theta_invert(ta), a.distribution);
    Rational l1 = 0, half_distance = 0;
    for (std::size_t x = 0; x < ta.size(); ++x) {
      l1 += abs(ta[x]);
      half_distance += abs(Rational(ta[x] - tb[x]));
    }
    EXPECT_EQ(l1, 1);
    EXPECT_EQ(tv_distance(a.distribution, b.distribution), half_distance / 2);

    // Flipping every label negates the embedding.
    std::map<Example, Rational> flipped;
    for (const auto& [e, p] : a.distribution.support()) flipped[Example{e.x, 1 - e.y}] = p;
    std::vector<Rational> tf = theta_embed(ExampleDistribution(a.distribution.domain_size(), flipped));
    for (std::size_t x = 0; x < ta.size(); ++x) EXPECT_EQ(tf[x], -ta[x]);
  }
  ExampleDistribution both(8, {{Example{1, 0}, Rational(1, 2)}, {Example{1, 1}, Rational(1, 2)}});
  EXPECT_THROW(theta_embed(both), InputError);
}

TEST(Realizable, Examples) {
  ConceptClass h3 = projection_class(3);
  ExampleDistribution both(8, {{Example{1, 0}, Rational(1, 2)}, {Example{1, 1}, Rational(1, 2)}});
  EXPECT_FALSE(is_realizable(both, h3));
  EXPECT_FALSE(is_realizable(both, powerset_class(3)));
  std::map<Example, Rational> uniform;
  for (std::size_t x = 0; x < 8; ++x) uniform[Example{x, h3.hypotheses[0](x)}] = Rational(1, 8);
  EXPECT_TRUE(is_realizable(ExampleDistribution(8, uniform), h3));
}

TEST(Learner, Examples) {
  ConceptClass h3 = projection_class(3);
  Hypothesis maj = majority_vote(h3);
  LabeledSample by_maj;
  for (std::size_t x = 0; x < 8; ++x) by_maj.push_back({x, maj(x)});
  EXPECT_EQ(learner(h3, by_maj, Rational(1, 1000)), maj);

  ConceptClass h2 = projection_class(2);
  LabeledSample s(100, Example{cube(2, {1}), 0});
  LearnerOutput out = learn(h2, majority_vote(h2), SampleCounts::from_sample(s), Rational(1, 1000));
  EXPECT_FALSE(out.majority);
  EXPECT_EQ(out.hypothesis.name, "h2");

  LabeledSample clash{{cube(2, {1}), 0}, {cube(2, {1}), 1}, {cube(2, {1, 2}), 0}};
  EXPECT_THROW(learner(h2, clash, Rational(1, 1000)), NoConsistentHypothesis);
}

TEST(Learner, FallbackPicksTheLowestIndexConsistentHypothesis) {
  ConceptClass h4 = projection_class(4);
  // Labels consistent with h2 and h3 but far from the majority.
  LabeledSample s{{cube(4, {2, 3}), 1}, {cube(4, {1, 4}), 0}, {cube(4, {2, 3}), 1}};
  LearnerOutput out = learn(h4, majority_vote(h4), SampleCounts::from_sample(s), Rational(1, 1000));
  ASSERT_FALSE(out.majority);
  EXPECT_EQ(*out.index, 1U);
}

TEST(SampleSize, FormulaAndMonotonicity) {
  // ceil((8 ln 2 + ln 20) / (2/100)) = ceil(427.04...) = 428.
  const double oracle = std::ceil((8 * std::log(2.0) + std::log(20.0)) / (2 * 0.01));
  EXPECT_EQ(oracle, 428.0);
  EXPECT_EQ(sample_size_for(Rational(1, 10), Rational(1, 20), 4), 428U);
  EXPECT_GE(sample_size_for(Rational(1, 20), Rational(1, 20), 4), sample_size_for(Rational(1, 10), Rational(1, 20), 4));
  EXPECT_GE(sample_size_for(Rational(1, 10), Rational(1, 100), 4), sample_size_for(Rational(1, 10), Rational(1, 20), 4));
  const double ratio = static_cast<double>(sample_size_for(Rational(1, 100), Rational(1, 20), 256)) /
                       static_cast<double>(sample_size_for(Rational(1, 100), Rational(1, 20), 128));
  EXPECT_NEAR(ratio, 2.0, 0.02);
  EXPECT_THROW(sample_size_for(Rational(0), Rational(1, 2), 4), InputError);
}

TEST(Sampler, DyadicProbabilitiesSplitTheWordRangeExactly) {
  ExampleDistribution d(2, {{Example{0, 0}, Rational(1, 4)}, {Example{1, 1}, Rational(3, 4)}});
  Sampler sampler(d);
  Engine rng = stream_engine(34, 0);
  std::uint64_t zeros = 0;
  for (int i = 0; i < 200000; ++i) {
    Engine probe = rng;
    const std::uint64_t u = probe();
    const Example e = sampler.draw(rng);
    EXPECT_EQ(e.x == 0, u < (std::uint64_t{1} << 62));
    zeros += e.x == 0;
  }
  EXPECT_NEAR(static_cast<double>(zeros) / 200000, 0.25, 0.005);
}

TEST(Sampler, BothCountPathsMatchTheDistribution) {
  ExampleDistribution d(3, {{Example{0, 0}, Rational(1, 6)}, {Example{1, 1}, Rational(1, 3)}, {Example{2, 0}, Rational(1, 2)}});
  Sampler sampler(d);
  for (std::uint64_t n : {std::uint64_t{1} << 20, std::uint64_t{1} << 30}) {
    Engine rng = stream_engine(35, n);
    SampleCounts s = sampler.counts(rng, n);
    std::uint64_t total = 0;
    for (const auto& [e, c] : s.counts) {
      total += c;
      const double p = to_double(d(e.x, e.y));
      EXPECT_NEAR(static_cast<double>(c) / static_cast<double>(n), p, 6 * std::sqrt(p / static_cast<double>(n)));
    }
    EXPECT_EQ(total, n);
  }
}

TEST(Replication, ZeroLossMajorityGivesASingletonList) {
  ConceptClass h3 = projection_class(3);
  ChainDistribution d = chain_distribution(chain_of(3, {{1, 2}}), {Rational(1)}, 3);
  const Hypothesis maj = majority_vote(h3);
  EXPECT_EQ(population_loss(d.distribution, maj), 0);
  const Rational e(1, 100);
  ReplicationReport r = replication_experiment(h3, d.distribution, e, sample_size_for(e, Rational(1, 20), 8), 200, 1);
  ASSERT_EQ(r.list().size(), 1U);
  EXPECT_EQ(r.list()[0], maj.key());
  EXPECT_EQ(r.max_frequency, 1);
  EXPECT_EQ(r.majority_outputs, 200U);
}

TEST(Replication, ReportsDoNotDependOnThreadCount) {
  ConceptClass h4 = projection_class(4);
  ChainDistribution d = chain_distribution(chain_of(4, {{1}, {1, 2, 3}}), {Rational(1, 4), Rational(3, 4)}, 4);
  const Rational e = population_loss(d.distribution, majority_vote(h4)) / 34;  // threshold at the population loss
  const std::uint64_t n = 20000;
  auto run = [&](unsigned threads) {
    ReplicationOptions o;
    o.threads = threads;
    return replication_experiment(h4, d.distribution, e, n, 64, 99, o);
  };
  ReplicationReport a = run(1), b = run(4), c = run(7);
  for (const ReplicationReport* r : {&b, &c}) {
    EXPECT_EQ(r->list(), a.list());
    EXPECT_EQ(r->max_frequency, a.max_frequency);
    ASSERT_EQ(r->frequencies.size(), a.frequencies.size());
    for (std::size_t i = 0; i < a.frequencies.size(); ++i) {
      EXPECT_EQ(r->frequencies[i].hypothesis, a.frequencies[i].hypothesis);
      EXPECT_EQ(r->frequencies[i].count, a.frequencies[i].count);
    }
  }
  EXPECT_GE(a.frequencies.size(), 2U);  // the fallback branch is exercised
}

TEST(Replication, SingleTrialAndNonRealizableInput) {
  ConceptClass h3 = projection_class(3);
  ChainDistribution d = chain_distribution(chain_of(3, {{1}, {1, 2}}), {Rational(1, 2), Rational(1, 2)}, 3);
  ReplicationReport r = replication_experiment(h3, d.distribution, Rational(1, 100), 1000, 1, 7);
  EXPECT_EQ(r.frequencies.size(), 1U);
  EXPECT_EQ(r.max_frequency, 1);
  ExampleDistribution both(8, {{Example{1, 0}, Rational(1, 2)}, {Example{1, 1}, Rational(1, 2)}});
  EXPECT_THROW(replication_experiment(h3, both, Rational(1, 100), 10, 1, 7), InputError);
}

TEST(HighProbabilityList, GreedyByFrequency) {
  std::vector<OutputFrequency> f{{{"a", {0}}, 10, 0}, {{"b", {1}}, 85, 0}, {{"c", {0, 1}}, 5, 0}};
  EXPECT_EQ(high_probability_list(f, 100, Rational(1, 20)), (std::vector<std::string>{"1", "0"}));
  EXPECT_EQ(high_probability_list(f, 100, Rational(1, 5)), (std::vector<std::string>{"1"}));
  EXPECT_EQ(high_probability_list(f, 100, Rational(1, 100)), (std::vector<std::string>{"1", "0", "01"}));
}

TEST(Corr, Examples) {
  ConceptClass h1 = projection_class(1);
  EXPECT_EQ(corr(point_mass(2, 1, 1), h1.hypotheses[0]), 1);
  EXPECT_EQ(corr(point_mass(2, 1, 0), h1.hypotheses[0]), -1);
  ExampleDistribution quarter(2, {{Example{1, 1}, Rational(3, 4)}, {Example{1, 0}, Rational(1, 4)}});
  EXPECT_EQ(corr(quarter, h1.hypotheses[0]), Rational(1, 2));
}

TEST(IndependentPattern, Examples) {
  auto p2 = find_independent_pattern(powerset_class(2), 2);
  ASSERT_TRUE(p2.has_value());
  std::vector<std::vector<Rational>> m2;
  for (const auto& row : p2->matrix.rows()) m2.emplace_back(row.begin(), row.end());
  EXPECT_NE(det(m2), 0);

  ConceptClass single = make_concept_class("one", {"a", "b"}, {{"f", {0, 1}}});
  EXPECT_FALSE(find_independent_pattern(single, 2).has_value());

  for (int m = 2; m <= 5; ++m) {
    ConceptClass h = projection_class(m);
    std::vector<std::vector<int>> rows(m, std::vector<int>(m));
    std::vector<std::vector<Rational>> exact(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        rows[i][j] = h.hypotheses[i](cube(m, {j + 1})) ? 1 : -1;
        exact[i][j] = rows[i][j];
        EXPECT_EQ(rows[i][j], i == j ? 1 : -1);  // 2I - J
      }
    }
    // 2I - J has eigenvalue 2 - m, so it is singular only at m = 2.
    EXPECT_EQ(det(exact) == 0, m == 2);
    auto found = find_independent_pattern(h, m);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->hypotheses.size(), static_cast<std::size_t>(m));
  }
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma_interpolation(PatternMatrix::from_rows({{1}})), 1);
  EXPECT_EQ(gamma_interpolation(PatternMatrix::from_rows({{1, 1}, {1, -1}})), 1);
  PatternMatrix p3 = PatternMatrix::from_rows({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}});
  EXPECT_EQ(gamma_interpolation(p3), Rational(1, 3));
  EXPECT_EQ(gamma_by_cramer(p3), Rational(1, 3));
  auto alpha = interpolation_coefficients(p3, {-1, 1, 1});
  ASSERT_TRUE(alpha.has_value());
  EXPECT_EQ(*alpha, (std::vector<Rational>{1, -1, -1}));
  EXPECT_THROW(gamma_interpolation(PatternMatrix::from_rows({{1, 1}, {1, 1}})), InputError);
  EXPECT_THROW(PatternMatrix::from_rows({{1, 0}, {1, 1}}), InputError);
}

TEST(Gamma, RealizabilityAtGammaAndMinimality) {
  PatternMatrix p3 = PatternMatrix::from_rows({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}});
  const Rational gamma = gamma_interpolation(p3);
  EXPECT_TRUE(check_gamma_realizable(p3, gamma, 10000, 1).ok);
  GammaCheck above = check_gamma_realizable(p3, gamma + Rational(1, 100), 10000, 1);
  ASSERT_FALSE(above.ok);
  EXPECT_EQ(above.witness->best_corr, Rational(1, 3));
  // Uniform Q on a single point: some signed row matches the label.
  EXPECT_GE(best_signed_corr(p3, {-1, 1, 1}, {Rational(1), 0, 0}), 1);
}

TEST(Gamma, RandomFullRankMatricesAgreeWithCramer) {
  Engine rng = stream_engine(36, 0);
  int tested = 0;
  while (tested < 40) {
    const int d = static_cast<int>(uniform_int(rng, 1, 4));
    std::vector<std::vector<int>> rows(d, std::vector<int>(d));
    std::vector<std::vector<Rational>> exact(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) exact[i][j] = rows[i][j] = uniform_int(rng, 0, 1) ? 1 : -1;
    }
    PatternMatrix p = PatternMatrix::from_rows(rows);
    if (det(exact) == 0) {
      EXPECT_THROW(gamma_interpolation(p), InputError);
      continue;
    }
    ++tested;
    const Rational gamma = gamma_interpolation(p);
    EXPECT_GT(gamma, 0);
    EXPECT_EQ(gamma, gamma_by_cramer(p));
    EXPECT_TRUE(check_gamma_realizable(p, gamma, 500, tested).ok);
    EXPECT_FALSE(check_gamma_realizable(p, gamma + Rational(1, 1000), 0, tested).ok);
  }
}

}  // namespace
}  // namespace bulab
