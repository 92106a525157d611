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

// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit 0 iff all
// pass. Exact checks have zero tolerance; each criterion also carries a
// wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bulab/cli.hpp"
#include "bulab/covers.hpp"
#include "bulab/kneser.hpp"
#include "bulab/learning.hpp"
#include "bulab/simplicial.hpp"

namespace {

using namespace bulab;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, const std::string& name, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = seconds <= limit_seconds;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / limit %.0fs", seconds, limit_seconds);
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << " " << name << ": " << out.detail << " (" << timing
            << (in_time ? "" : ", over time limit") << ")" << std::endl;
}

// The fixed suite of criteria 6 and 7: 20 seeded chain distributions per m.
std::vector<ChainDistribution> chain_suite(int m) {
  std::vector<ChainDistribution> out;
  for (int i = 0; i < 20; ++i) {
    Engine rng = stream_engine(20260, static_cast<std::uint64_t>(100 * m + i));
    out.push_back(random_chain_distribution(m, rng));
  }
  return out;
}

Outcome covers(const std::string& kind, const int (&expected)[4]) {
  Outcome out;
  std::ostringstream detail;
  for (int d = 1; d <= 3; ++d) {
    CommandResult r = cmd_cover({kind, d, false});
    const Json& rep = r.report;
    const bool ok = r.exit_code == kExitOk && rep["cover"] == true && rep["antipodal_free"] == true &&
                    rep["overlap_degree"] == expected[d];
    out.ok = out.ok && ok;
    detail << "d=" << d << " overlap=" << rep.value("overlap_degree", Json()).dump() << "/" << expected[d]
           << " cover=" << rep.value("cover", Json()).dump()
           << " antipodal_free=" << rep.value("antipodal_free", Json()).dump() << (d < 3 ? "; " : "");
  }
  out.detail = detail.str();
  return out;
}

}  // namespace

int main() {
  std::cout << "bu_lab acceptance suite" << std::endl;

  criterion("AC1", "closed cover sharpness", 120, [] {
    const int expected[4] = {0, 2, 3, 3};
    return covers("closed", expected);
  });

  criterion("AC2", "mixed cover sharpness", 300, [] {
    const int expected[4] = {0, 1, 2, 2};
    return covers("mixed", expected);
  });

  criterion("AC3", "colorful chains upper bound", 10, [] {
    Outcome out;
    std::ostringstream detail;
    for (int n = 1; n <= 8; ++n) {
      KneserColoring c = sharp_kneser_coloring(n);
      const int chains = max_chain_colors(c).count;
      const bool ok = is_kneser_coloring(c).ok && chains == n / 2 + 1 && (n < 2 || c.color_count() == n + 1);
      out.ok = out.ok && ok;
      detail << "n=" << n << ":" << chains << "/" << c.color_count() << (n < 8 ? " " : "");
    }
    out.detail = "max chain colors/total colors " + detail.str();
    return out;
  });

  criterion("AC4", "colorful chains lower bound (exhaustive)", 300, [] {
    Outcome out;
    std::ostringstream detail;
    for (int n = 2; n <= 4; ++n) {
      SearchResult r = search_min_chain_colors(n, n / 2);
      out.ok = out.ok && r.verdict == SearchVerdict::kInfeasible;
      detail << "n=" << n << " k=" << n / 2 << " " << to_string(r.verdict) << " (" << r.nodes << " nodes)"
             << (n < 4 ? "; " : "");
    }
    out.detail = detail.str();
    return out;
  });

  criterion("AC5", "loss-antipodality identity", 10, [] {
    Outcome out;
    std::size_t checked = 0;
    for (int m = 2; m <= 6; ++m) {
      ConceptClass h = projection_class(m);
      Engine rng = stream_engine(505, static_cast<std::uint64_t>(m));
      for (int i = 0; i < 1000; ++i) {
        ChainDistribution d = random_chain_distribution(m, rng);
        ChainDistribution nu = involute_distribution(d);
        for (const Hypothesis& g : h.hypotheses) {
          ++checked;
          if (population_loss(d.distribution, g) + population_loss(nu.distribution, g) != 1) out.ok = false;
        }
      }
    }
    out.detail = std::to_string(checked) + " (distribution, hypothesis) pairs over 1000 distributions per m=2..6";
    return out;
  });

  criterion("AC6", "list size and loss bound", 600, [] {
    Outcome out;
    std::ostringstream detail;
    const Rational delta(1, 20);
    for (int m = 3; m <= 6; ++m) {
      ConceptClass h = projection_class(m);
      const std::uint64_t big_m = h.domain_size();
      const Rational e(1, 100 * (2 * big_m + 4));
      const std::uint64_t n = sample_size_for(e, delta, big_m);
      const Rational loss_bound = (2 * Rational(big_m) + 4) * e;
      int passed = 0;
      std::size_t largest = 0;
      std::vector<ChainDistribution> suite = chain_suite(m);
      for (std::size_t i = 0; i < suite.size(); ++i) {
        ReplicationOptions options;
        options.delta = delta;
        ReplicationReport r = replication_experiment(h, suite[i].distribution, e, n, 500, 6000 + 100 * m + i, options);
        bool ok = r.list().size() <= static_cast<std::size_t>(1 + m / 2);
        for (const std::string& key : r.list()) ok = ok && r.entry(key).loss <= loss_bound;
        passed += ok;
        largest = std::max(largest, r.list().size());
      }
      out.ok = out.ok && passed >= 19;
      detail << "m=" << m << " n=" << n << " passed " << passed << "/20 max list " << largest << " (bound "
             << 1 + m / 2 << ")" << (m < 6 ? "; " : "");
    }
    out.detail = detail.str();
    return out;
  });

  criterion("AC7", "fallback branch exercised", 120, [] {
    Outcome out;
    const int m = 4;
    ConceptClass h = projection_class(m);
    const Hypothesis maj = majority_vote(h);
    const std::uint64_t big_m = h.domain_size();
    const Rational delta(1, 20);
    int witnesses = 0;
    std::size_t best_support = 0;
    std::string example;
    std::vector<ChainDistribution> suite = chain_suite(m);
    for (std::size_t i = 0; i < suite.size(); ++i) {
      const Rational loss = population_loss(suite[i].distribution, maj);
      if (loss == 0) continue;
      // The majority threshold (2M+2)e sits at the population loss of h_maj.
      const Rational e = loss / (2 * Rational(big_m) + 2);
      const std::uint64_t n = sample_size_for(e, delta, big_m);
      ReplicationReport r = replication_experiment(h, suite[i].distribution, e, n, 500, 7000 + i);
      if (r.frequencies.size() >= 2) {
        ++witnesses;
        if (r.frequencies.size() > best_support) {
          best_support = r.frequencies.size();
          std::ostringstream s;
          s << "suite #" << i << " L(h_maj)=" << to_string(loss) << " e=" << to_string(e) << " outputs:";
          for (const OutputFrequency& f : r.frequencies) s << " " << f.hypothesis.name << "x" << f.count;
          example = s.str();
        }
      }
    }
    out.ok = witnesses > 0;
    out.detail = std::to_string(witnesses) + " of 20 distributions with >= 2 outputs; " + example;
    return out;
  });

  criterion("AC8", "gamma-interpolation", 30, [] {
    Outcome out;
    PatternMatrix p = PatternMatrix::from_rows({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}});
    const Rational gamma = gamma_interpolation(p);
    GammaCheck at = check_gamma_realizable(p, gamma, 10000, 8);
    GammaCheck above = check_gamma_realizable(p, gamma + Rational(1, 100), 10000, 8);
    out.ok = gamma == Rational(1, 3) && at.ok && !above.ok;
    out.detail = "gamma=" + to_string(gamma) + " realizable at gamma over " + std::to_string(at.checked) +
                 " distributions: " + (at.ok ? "yes" : "no") + "; violation at gamma+1/100: " +
                 (above.ok ? "not found" : "corr " + to_string(above.witness->best_corr));
    return out;
  });

  criterion("AC9", "structural invariants", 120, [] {
    Outcome out;
    std::ostringstream detail;
    detail << "chi(B^d) d=0..5:";
    for (int d = 0; d <= 5; ++d) {
      const long chi = build_b(d).euler_characteristic();
      out.ok = out.ok && chi == 1 + (d % 2 == 0 ? 1 : -1);
      detail << " " << chi;
    }
    detail << "; chi(Q^d) d=0..3:";
    std::size_t simplices = 0;
    for (int d = 0; d <= 3; ++d) {
      QComplex q = build_q(d);
      const long chi = q.euler_characteristic();
      out.ok = out.ok && chi == 1 + (d % 2 == 0 ? 1 : -1);
      detail << " " << chi;
      for (const auto& group : q.simplices) {
        std::set<QSimplex> members(group.begin(), group.end());
        for (const QSimplex& s : group) {
          ++simplices;
          QSimplex image = involute_simplex(s);
          out.ok = out.ok && image != s && involute_simplex(image) == s && members.count(image);
        }
      }
    }
    detail << "; nu free involution on " << simplices << " simplices";
    for (int d = 0; d <= 2; ++d) {
      CrossCheck c = cross_check_barycenters(build_closed_cover(d));
      out.ok = out.ok && c.agree;
      detail << "; barycenters d=" << d << ": " << c.points << (c.agree ? " agree" : " DISAGREE");
    }
    out.detail = detail.str();
    return out;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
