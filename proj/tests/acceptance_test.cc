// Copyright 2026 The Edge Sampler Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edge_sampler/exact_dist.h"
#include "edge_sampler/experiments.h"
#include "edge_sampler/generators.h"
#include "edge_sampler/parallel.h"
#include "edge_sampler/sampler.h"
#include "support/graph_enumeration.h"
#include "support/scripted_stream.h"

namespace edge_sampler {
namespace {

using Outcome = std::optional<DirectedEdge>;
using testing::Enumerate;

constexpr double kEpsilons[] = {0.05, 0.1, 0.25, 0.45};
constexpr EdgeCount kMaxTheta = 8;

struct Verdict {
  bool pass = true;
  std::string detail;
};

Rational Q(std::uint64_t num, std::uint64_t den) {
  Rational r(mpz_class(static_cast<unsigned long>(num)),
             mpz_class(static_cast<unsigned long>(den)));
  r.canonicalize();
  return r;
}

std::string Fmt(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", x);
  return buffer;
}

template <typename Procedure>
testing::EnumeratedLaw<Outcome> LawOf(const Graph& g, Procedure procedure) {
  return Enumerate<Outcome>([&](RandomStream& stream) {
    QueryOracle oracle(g, stream);
    return procedure(oracle);
  });
}

std::vector<Graph> AllSmallConnectedGraphs() {
  std::vector<Graph> all;
  for (VertexId n = 1; n <= testing::kMaxEnumeratedVertices; ++n) {
    for (Graph& g : testing::ConnectedGraphs(n)) all.push_back(std::move(g));
  }
  return all;
}

// 1. Light-edge procedure, exhaustive.
Verdict LightEdgeExact(const std::vector<Graph>& graphs) {
  std::uint64_t cases = 0;
  std::uint64_t paths = 0;
  for (const Graph& g : graphs) {
    for (EdgeCount theta = 1; theta <= kMaxTheta; ++theta) {
      const DegreePartition p = Partition(g, theta);
      const auto law =
          LawOf(g, [&](QueryOracle& o) { return SampleLightEdge(o, theta); });
      paths += law.paths;
      ++cases;
      const Rational per_edge = Q(1, g.num_vertices() * theta);
      for (const DirectedEdge& e : g.directed_edges()) {
        const Rational expected = p.heavy(e.origin) ? Rational(0) : per_edge;
        if (law.Of(e) != expected) {
          return {false, "n=" + std::to_string(g.num_vertices()) + " theta=" +
                             std::to_string(theta) + " edge " + ToString(e) +
                             ": " + law.Of(e).get_str() + " != " +
                             expected.get_str()};
        }
      }
      if (1 - law.Of(std::nullopt) != Q(p.light_edges, g.num_vertices() * theta)) {
        return {false, "success mismatch at theta=" + std::to_string(theta)};
      }
    }
  }
  return {true, std::to_string(graphs.size()) + " graphs, " +
                    std::to_string(cases) + " (graph, theta) cases, " +
                    std::to_string(paths) + " enumerated paths, all exact"};
}

// 2. Heavy-edge procedure, exhaustive, plus the success interval.
Verdict HeavyEdgeExact(const std::vector<Graph>& graphs) {
  std::uint64_t cases = 0;
  std::uint64_t nonempty = 0;
  for (const Graph& g : graphs) {
    const std::uint64_t n = g.num_vertices();
    const Rational m = Q(g.num_directed_edges(), 1);
    for (EdgeCount theta = 1; theta <= kMaxTheta; ++theta) {
      const DegreePartition p = Partition(g, theta);
      const auto law =
          LawOf(g, [&](QueryOracle& o) { return SampleHeavyEdge(o, theta); });
      ++cases;
      for (const DirectedEdge& e : g.directed_edges()) {
        const Rational expected =
            p.heavy(e.origin)
                ? Q(LightDegree(g, p, e.origin), n * theta * g.degree(e.origin))
                : Rational(0);
        if (law.Of(e) != expected) {
          return {false, "n=" + std::to_string(n) + " theta=" +
                             std::to_string(theta) + " edge " + ToString(e) +
                             ": " + law.Of(e).get_str() + " != " +
                             expected.get_str()};
        }
      }
      const Rational success = 1 - law.Of(std::nullopt);
      const Rational upper = Q(p.heavy_edges, n * theta);
      const Rational lower = upper * (1 - m / Q(theta * theta, 1));
      if (success < lower || success > upper) {
        return {false, "success " + success.get_str() + " outside [" +
                           lower.get_str() + ", " + upper.get_str() + "]"};
      }
      nonempty += success > 0;
    }
  }
  return {true, std::to_string(cases) + " cases exact, interval holds (" +
                    std::to_string(nonempty) + " with a reachable heavy edge)"};
}

// 3. Analytic pointwise closeness at theta = ceil(sqrt(2m/eps)).
Verdict PointwiseCloseness(const std::vector<testing::NamedGraph>& suite) {
  double worst_ratio = -1;
  std::string worst;
  for (const auto& [name, g] : suite) {
    const double m = static_cast<double>(g.num_directed_edges());
    for (double eps : kEpsilons) {
      const EdgeCount theta = ThresholdFor(m, eps);
      const ClosenessReport r =
          ConditionalCloseness(g, ComputeAttemptDistribution(g, theta));
      if (!r.PointwiseOk(eps)) {
        return {false, name + " eps=" + Fmt(eps) + ": max_ratio_dev " +
                           r.max_ratio_dev.get_str()};
      }
      const double ratio = r.max_ratio_dev.get_d() / eps;
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst = name + " eps=" + Fmt(eps) + " dev=" + Fmt(r.max_ratio_dev.get_d());
      }
    }
  }
  return {true, std::to_string(suite.size()) + " graphs x 4 eps; largest max_ratio_dev/eps " +
                    Fmt(worst_ratio) + " (" + worst + ")"};
}

// 4. Residual failure probability, analytic and empirical.
Verdict FailureProbability(const std::vector<testing::NamedGraph>& suite) {
  constexpr std::uint64_t kRuns = 1000;
  const double sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / kRuns);
  double worst_analytic = 0;
  double worst_empirical = 0;
  std::string worst_name;
  std::uint64_t seed = 100;
  for (const auto& [name, g] : suite) {
    for (double eps : kEpsilons) {
      const SamplerConfig cfg = SamplerConfig::Make(
          g.num_vertices(), static_cast<double>(g.num_directed_edges()), eps);
      const Rational residual = ResidualFailure(g, cfg);
      if (residual >= Q(1, 3)) {
        return {false, name + " eps=" + Fmt(eps) + ": residual " +
                           Fmt(residual.get_d())};
      }
      worst_analytic = std::max(worst_analytic, residual.get_d());
      SeededStream rng(++seed);
      QueryOracle oracle(g, rng);
      std::uint64_t failures = 0;
      for (std::uint64_t i = 0; i < kRuns; ++i) {
        failures += SampleEdgeAlmostUniformly(oracle, cfg).failed();
      }
      const double rate = static_cast<double>(failures) / kRuns;
      if (rate >= 1.0 / 3 + 3 * sigma) {
        return {false, name + " eps=" + Fmt(eps) + ": empirical failure rate " +
                           Fmt(rate)};
      }
      if (rate >= worst_empirical) {
        worst_empirical = rate;
        worst_name = name + " eps=" + Fmt(eps);
      }
    }
  }
  return {true, "max analytic residual " + Fmt(worst_analytic) +
                    ", max empirical rate " + Fmt(worst_empirical) + " (" +
                    worst_name + ", 1000 runs each)"};
}

// 5. Monte Carlo against the analytic conditional law.
Verdict MonteCarloFit() {
  struct Case {
    const char* spec;
    EdgeCount theta;
  };
  std::ostringstream detail;
  bool pass = true;
  for (const Case& c : {Case{"star:5", 3}, Case{"clique_union:er:30,0.2,4", 5}}) {
    const Graph g = Generate(c.spec, 1);
    EmpiricalSpec spec;
    spec.theta = c.theta;
    const EmpiricalReport r = EmpiricalDistribution(g, spec, 1000000, 2024);
    const bool ok = r.fit.p_value >= 0.01 && r.fit.max_abs_z <= 5 &&
                    !r.fit.impossible_cell_hit;
    pass = pass && ok;
    detail << c.spec << " theta=" << c.theta << ": p=" << Fmt(r.fit.p_value)
           << " max|z|=" << Fmt(r.fit.max_abs_z) << " df="
           << r.fit.degrees_of_freedom << "; ";
  }
  return {pass, detail.str()};
}

// 6. Query-cost scaling on the ER family.
Verdict QueryScaling() {
  std::vector<std::string> specs;
  for (std::uint64_t n = 512; n <= 8192; n *= 2) {
    std::ostringstream s;
    s << "er:" << n << "," << 16.0 / static_cast<double>(n);
    specs.push_back(s.str());
  }
  ScalingOptions options;
  options.epsilon = 0.25;
  options.trials = 200;
  options.seed = 6;
  const ScalingResult result = RunScaling(specs, options);
  if (!result.fit) return {false, "no fit"};
  std::ostringstream detail;
  detail << "slope=" << Fmt(result.fit->slope) << " over";
  for (const ScalingRun& r : result.runs) {
    detail << " n=" << r.n << ":" << Fmt(r.mean_queries);
  }
  const double slope = result.fit->slope;
  return {slope >= 0.8 && slope <= 1.2, detail.str()};
}

// 7. Weighted expectations against the uniform expectation.
Verdict WeightedExpectations(const std::vector<testing::NamedGraph>& suite) {
  constexpr std::uint64_t kDraws = 100000;
  constexpr double kEps = 0.25;
  double worst_ratio = 0;
  std::string worst;
  std::uint64_t seed = 700;
  for (const auto& [name, g] : suite) {
    const double m = static_cast<double>(g.num_directed_edges());
    const SamplerConfig cfg = SamplerConfig::Make(g.num_vertices(), m, kEps);
    const AttemptDistribution dist = ComputeAttemptDistribution(g, cfg.theta);
    // Output law of a successful run: uniform in fallback mode, otherwise the
    // attempt's conditional law.
    std::vector<double> conditional(g.num_vertices(), 1.0 / m);
    if (!cfg.uses_fallback()) {
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        conditional[v] = Rational(dist.attempt[v] / dist.success).get_d();
      }
    }
    auto law = [&](VertexId origin) { return conditional[origin]; };
    // Indicator of the least likely edge.
    DirectedEdge rare = g.directed_edges().front();
    for (const DirectedEdge& e : g.directed_edges()) {
      if (law(e.origin) < law(rare.origin)) rare = e;
    }
    const std::vector<std::pair<std::string, std::function<double(DirectedEdge)>>>
        weights = {
            {"origin-degree",
             [&](DirectedEdge e) { return static_cast<double>(g.degree(e.origin)); }},
            {"indicator", [rare](DirectedEdge e) { return e == rare ? 1.0 : 0.0; }},
        };
    for (const auto& [wname, w] : weights) {
      double uniform_mean = 0;
      double law_mean = 0;
      double law_second = 0;
      for (const DirectedEdge& e : g.directed_edges()) {
        uniform_mean += w(e) / m;
        law_mean += law(e.origin) * w(e);
        law_second += law(e.origin) * w(e) * w(e);
      }
      // Monte Carlo standard error of the mean of kDraws independent draws
      // from the sampler's output law.
      const double se =
          std::sqrt(std::max(0.0, law_second - law_mean * law_mean) / kDraws);

      double sum = 0;
      std::mutex mutex;
      ParallelFor(kTrialChunks, [&](std::size_t chunk) {
        SeededStream rng(MixSeed(++seed * 131, chunk));
        QueryOracle oracle(g, rng);
        const std::uint64_t draws = ChunkTrials(kDraws, chunk);
        if (draws == 0) return;
        const WeightedEstimate est = WeightedExpectation(oracle, cfg, w, draws);
        std::lock_guard lock(mutex);
        sum += est.mean * static_cast<double>(draws);
      });
      const double mean = sum / kDraws;
      const double tolerance = kEps * std::abs(uniform_mean) + 4 * se;
      const double error = std::abs(mean - uniform_mean);
      if (error > tolerance) {
        return {false, name + " " + wname + ": |" + Fmt(mean) + " - " +
                           Fmt(uniform_mean) + "| > " + Fmt(tolerance)};
      }
      if (tolerance > 0 && error / tolerance >= worst_ratio) {
        worst_ratio = error / tolerance;
        worst = name + " " + wname;
      }
    }
  }
  return {true, std::to_string(suite.size()) +
                    " graphs x 2 weights, eps=0.25; largest error/tolerance " +
                    Fmt(worst_ratio) + " (" + worst + ")"};
}

// 8. Degree-proportional vertex law.
Verdict VertexCloseness(const std::vector<testing::NamedGraph>& suite) {
  double worst = 0;
  for (const auto& [name, g] : suite) {
    const double m = static_cast<double>(g.num_directed_edges());
    for (double eps : kEpsilons) {
      const AttemptDistribution dist =
          ComputeAttemptDistribution(g, ThresholdFor(m, eps));
      const ClosenessReport r = DegreeProportionalCloseness(g, dist);
      if (!r.PointwiseOk(eps)) {
        return {false, name + " eps=" + Fmt(eps) + ": " + r.max_ratio_dev.get_str()};
      }
      worst = std::max(worst, r.max_ratio_dev.get_d() / eps);
    }
  }
  return {true, std::to_string(suite.size()) +
                    " graphs x 4 eps; largest max_ratio_dev/eps " + Fmt(worst)};
}

// 9. Hidden-clique lower-bound phenomenon.
Verdict LowerBound() {
  const GeneratorSpec base = GeneratorSpec::Parse("er:2000,0.01");
  LowerBoundOptions options;
  options.strategies = {Strategy::kSampler, Strategy::kDegreeHunter,
                        Strategy::kBlindGuess};
  options.trials = 2000;
  options.seed = 9;
  const std::vector<LowerBoundRun> runs = RunLowerBound(base, options);
  const std::uint64_t low = runs.front().budget;
  std::uint64_t high = 0;
  for (const LowerBoundRun& r : runs) high = std::max(high, r.budget);

  std::ostringstream detail;
  bool pass = true;
  const LowerBoundRun& any = runs.front();
  detail << "n=" << any.n << " m=" << any.m << " k=" << any.clique_size
         << " |E_K|/m=" << Fmt(any.clique_fraction) << "; ";
  std::set<std::pair<Strategy, std::uint64_t>> seen;
  for (const LowerBoundRun& r : runs) {
    if (!seen.insert({r.strategy, r.budget}).second) continue;
    if (r.budget == low) {
      const double sigma =
          BinomialStandardError(std::min(r.witness_bound, 1.0), r.trials);
      const bool ok = r.witness_rate <= r.witness_bound + 3 * sigma &&
                      r.tv_lower_estimate >= 0.3;
      pass = pass && ok;
      detail << ToString(r.strategy) << "@t=" << r.budget
             << ": witness=" << Fmt(r.witness_rate) << " (bound "
             << Fmt(r.witness_bound) << "), tv>=" << Fmt(r.tv_lower_estimate)
             << (ok ? "" : " FAIL") << "; ";
    }
    if (r.budget == high && r.strategy == Strategy::kSampler) {
      const bool ok = r.returned > 0 &&
                      std::abs(r.clique_hit_rate - r.clique_fraction) <= 0.05;
      pass = pass && ok;
      detail << "sampler@t=" << r.budget << ": hit=" << Fmt(r.clique_hit_rate)
             << " vs " << Fmt(r.clique_fraction) << " (" << r.returned
             << " returned)" << (ok ? "" : " FAIL") << "; ";
    }
  }
  const auto flagged = FlagNonMonotoneStrategies(runs);
  detail << "non-monotone flags: " << flagged.size();
  return {pass, detail.str()};
}

// 10. Fallback attempt, exhaustive.
Verdict FallbackExact(const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) {
    const std::uint64_t n = g.num_vertices();
    const auto law = LawOf(g, [](QueryOracle& o) { return FallbackAttempt(o); });
    const Rational success = 1 - law.Of(std::nullopt);
    if (success != Q(g.num_directed_edges(), n * n)) {
      return {false, "success mismatch at n=" + std::to_string(n)};
    }
    if (success == 0) continue;
    for (const DirectedEdge& e : g.directed_edges()) {
      if (law.Of(e) / success != Q(1, g.num_directed_edges())) {
        return {false, "non-uniform edge " + ToString(e)};
      }
    }
  }
  return {true, std::to_string(graphs.size()) +
                    " graphs: conditional law exactly uniform, success m/n^2"};
}

int Main() {
  const std::vector<Graph> small = AllSmallConnectedGraphs();
  const std::vector<testing::NamedGraph> suite = testing::SuiteGraphs();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"light-edge law exact (n<=8, theta<=8)", [&] { return LightEdgeExact(small); }},
      {"heavy-edge closed form and success interval", [&] { return HeavyEdgeExact(small); }},
      {"pointwise eps-closeness on suite", [&] { return PointwiseCloseness(suite); }},
      {"failure probability below 1/3", [&] { return FailureProbability(suite); }},
      {"Monte Carlo matches analytic law", [] { return MonteCarloFit(); }},
      {"query-cost log-log slope in [0.8, 1.2]", [] { return QueryScaling(); }},
      {"weighted expectation within tolerance", [&] { return WeightedExpectations(suite); }},
      {"degree-proportional vertex law eps-close", [&] { return VertexCloseness(suite); }},
      {"hidden-clique lower-bound phenomenon", [] { return LowerBound(); }},
      {"fallback exactly uniform", [&] { return FallbackExact(small); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    failures += !v.pass;
    std::printf("[%s] %zu. %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), v.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace edge_sampler

int main() { return edge_sampler::Main(); }
