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

#include "edge_sampler/exact_dist.h"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "edge_sampler/edge_count.h"
#include "edge_sampler/parallel.h"
#include "edge_sampler/query_oracle.h"
#include "edge_sampler/random.h"

namespace edge_sampler {
namespace {

Rational Fraction(std::uint64_t numerator, std::uint64_t denominator) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  Rational r{mpz_class(static_cast<unsigned long>(numerator)),
             mpz_class(static_cast<unsigned long>(denominator))};
  r.canonicalize();
  return r;
}

Rational Count(std::uint64_t value) { return Fraction(value, 1); }

Rational Abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

double ToDouble(const Rational& r) { return r.get_d(); }

std::uint64_t EdgeKey(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Rational ToRational(double value) { return Rational(value); }

AttemptDistribution ComputeAttemptDistribution(const Graph& graph,
                                               EdgeCount theta) {
  if (theta == 0) throw ParameterError("theta must be >= 1");
  const DegreePartition partition = Partition(graph, theta);
  AttemptDistribution dist;
  dist.theta = theta;
  dist.n = graph.num_vertices();
  dist.m = graph.num_directed_edges();
  const VertexId n = dist.n;
  dist.light_call.assign(n, Rational(0));
  dist.heavy_call.assign(n, Rational(0));
  dist.attempt.assign(n, Rational(0));
  if (n == 0) return dist;

  const Rational per_call = Fraction(1, 1) / (Count(n) * Count(theta));
  for (VertexId v = 0; v < n; ++v) {
    const EdgeCount d = graph.degree(v);
    if (d == 0) continue;
    if (!partition.heavy(v)) {
      dist.light_call[v] = per_call;
      dist.light_success += Count(d) * per_call;
    } else {
      const EdgeCount light_neighbors = LightDegree(graph, partition, v);
      dist.heavy_call[v] = per_call * Fraction(light_neighbors, d);
      dist.heavy_success += Count(light_neighbors) * per_call;
    }
    dist.attempt[v] = (dist.light_call[v] + dist.heavy_call[v]) / 2;
  }
  dist.success = (dist.light_success + dist.heavy_success) / 2;
  return dist;
}

std::map<DirectedEdge, Rational> AttemptDistribution::PerEdge(
    const Graph& graph) const {
  std::map<DirectedEdge, Rational> per_edge;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    for (VertexId w : graph.neighbors(v)) per_edge.emplace(DirectedEdge{v, w}, attempt[v]);
  }
  return per_edge;
}

std::vector<double> AttemptDistribution::ConditionalInEdgeOrder(
    const Graph& graph) const {
  if (success == 0) throw UndefinedConditional("attempt never succeeds");
  std::vector<double> probabilities;
  probabilities.reserve(graph.num_directed_edges());
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    const double p = ToDouble(attempt[v] / success);
    for (std::size_t i = 0; i < graph.degree(v); ++i) probabilities.push_back(p);
  }
  return probabilities;
}

Rational FallbackSuccess(const Graph& graph) {
  const Rational n = Count(graph.num_vertices());
  return Count(graph.num_directed_edges()) / (n * n);
}

ClosenessReport ConditionalCloseness(const Graph& graph,
                                     const AttemptDistribution& dist) {
  if (dist.success == 0) {
    throw UndefinedConditional(
        "conditional distribution undefined: success probability is 0");
  }
  ClosenessReport report;
  const Rational m = Count(dist.m);
  const Rational uniform = Fraction(1, dist.m);
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    const EdgeCount d = graph.degree(v);
    if (d == 0) continue;
    const Rational conditional = dist.attempt[v] / dist.success;
    const Rational deviation = Abs(conditional * m - 1);
    if (!report.worst || deviation > report.max_ratio_dev) {
      report.max_ratio_dev = deviation;
      report.worst = DirectedEdge{v, graph.neighbors(v)[0]};
    }
    report.tv_distance += Count(d) * Abs(conditional - uniform);
  }
  report.tv_distance /= 2;
  return report;
}

ClosenessReport DegreeProportionalCloseness(const Graph& graph,
                                            const AttemptDistribution& dist) {
  if (dist.success == 0) {
    throw UndefinedConditional(
        "conditional distribution undefined: success probability is 0");
  }
  ClosenessReport report;
  const Rational m = Count(dist.m);
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    const EdgeCount d = graph.degree(v);
    if (d == 0) continue;
    // Mass of edges leaving v plus mass of edges entering v, halved.
    Rational incident = Count(d) * dist.attempt[v];
    for (VertexId u : graph.neighbors(v)) incident += dist.attempt[u];
    const Rational vertex_prob = incident / (2 * dist.success);
    const Rational target = Count(d) / m;
    const Rational deviation = Abs(vertex_prob / target - 1);
    if (!report.worst || deviation > report.max_ratio_dev) {
      report.max_ratio_dev = deviation;
      report.worst = DirectedEdge{v, v};
    }
    report.tv_distance += Abs(vertex_prob - target);
  }
  report.tv_distance /= 2;
  return report;
}

bool LemmaReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) {
    return !c.applicable || c.passed;
  });
}

LemmaReport VerifyLemmaBounds(const Graph& graph, EdgeCount theta,
                              double epsilon) {
  const AttemptDistribution dist = ComputeAttemptDistribution(graph, theta);
  const DegreePartition partition = Partition(graph, theta);
  const Rational n = Count(graph.num_vertices());
  const Rational m = Count(graph.num_directed_edges());
  const Rational t = Count(theta);
  const Rational eps = ToRational(epsilon);
  const Rational n_theta = n * t;
  const Rational correction = 1 - m / (t * t);  // 1 - m / theta^2

  LemmaReport report;
  report.theta = theta;
  report.epsilon = epsilon;
  report.threshold_sufficient = eps > 0 && t * t * eps >= 2 * m;

  {
    LemmaCheck check;
    check.name = "light_success";
    const Rational expected = Count(partition.light_edges) / n_theta;
    check.passed = dist.light_success == expected;
    check.margin = ToDouble(dist.light_success - expected);
    check.detail = "light success " + dist.light_success.get_str() +
                   " vs |E_light|/(n theta) = " + expected.get_str();
    report.checks.push_back(check);
  }
  {
    LemmaCheck check;
    check.name = "heavy_success_interval";
    const Rational upper = Count(partition.heavy_edges) / n_theta;
    const Rational lower = upper * correction;
    check.passed = lower <= dist.heavy_success && dist.heavy_success <= upper;
    check.margin = std::min(ToDouble(dist.heavy_success - lower),
                            ToDouble(upper - dist.heavy_success));
    check.detail = "heavy success " + dist.heavy_success.get_str() + " in [" +
                   lower.get_str() + ", " + upper.get_str() + "]";
    report.checks.push_back(check);
  }
  {
    LemmaCheck check;
    check.name = "light_degree_bound";
    std::optional<Rational> min_slack;
    for (VertexId v : partition.heavy_vertices) {
      const Rational slack = Count(LightDegree(graph, partition, v)) -
                             correction * Count(graph.degree(v));
      if (!min_slack || slack < *min_slack) min_slack = slack;
    }
    check.passed = !min_slack || *min_slack > 0;
    check.margin = min_slack ? ToDouble(*min_slack) : 0.0;
    check.detail = std::to_string(partition.heavy_vertices.size()) +
                   " heavy vertices";
    report.checks.push_back(check);
  }
  {
    LemmaCheck check;
    check.name = "mixture_success";
    check.applicable = report.threshold_sufficient;
    const Rational bound = (1 - eps) * m / (2 * n_theta);
    check.passed = dist.success >= bound;
    check.margin = ToDouble(dist.success - bound);
    check.detail = "success " + dist.success.get_str() +
                   " vs (1-eps) m/(2 n theta) = " + bound.get_str();
    report.checks.push_back(check);
  }
  {
    LemmaCheck check;
    check.name = "per_edge_bounds";
    const Rational upper = 1 / (2 * n_theta);
    const Rational lower = (1 - eps / 2) / (2 * n_theta);
    std::optional<Rational> min_p;
    std::optional<Rational> max_p;
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
      if (graph.degree(v) == 0) continue;
      if (!min_p || dist.attempt[v] < *min_p) min_p = dist.attempt[v];
      if (!max_p || dist.attempt[v] > *max_p) max_p = dist.attempt[v];
    }
    if (min_p) {
      const bool upper_ok = *max_p <= upper;
      const bool lower_ok = *min_p >= lower;
      // The upper bound holds for every theta; the lower needs the threshold.
      check.passed = upper_ok && (!report.threshold_sufficient || lower_ok);
      check.margin = std::min(ToDouble(upper - *max_p), ToDouble(*min_p - lower));
      check.detail = "p_e in [" + min_p->get_str() + ", " + max_p->get_str() + "]";
    }
    report.checks.push_back(check);
  }
  {
    LemmaCheck check;
    check.name = "pointwise_closeness";
    check.applicable = report.threshold_sufficient && dist.success > 0;
    if (dist.success > 0) {
      const ClosenessReport closeness = ConditionalCloseness(graph, dist);
      check.passed = closeness.max_ratio_dev <= eps;
      check.margin = ToDouble(eps - closeness.max_ratio_dev);
      check.detail = "max_ratio_dev " + closeness.max_ratio_dev.get_str();
    } else {
      check.passed = false;
      check.detail = "attempt never succeeds";
    }
    report.checks.push_back(check);
  }
  return report;
}

Rational ResidualFailure(const Graph& graph, const SamplerConfig& config) {
  Rational success;
  std::uint64_t attempts = 0;
  if (config.uses_fallback()) {
    success = FallbackSuccess(graph);
    attempts = config.n;
  } else {
    success = ComputeAttemptDistribution(graph, config.theta).success;
    attempts = config.attempt_budget;
  }
  const Rational miss = 1 - success;
  mpz_class numerator;
  mpz_class denominator;
  mpz_pow_ui(numerator.get_mpz_t(), miss.get_num_mpz_t(), attempts);
  mpz_pow_ui(denominator.get_mpz_t(), miss.get_den_mpz_t(), attempts);
  Rational result(numerator, denominator);
  result.canonicalize();
  return result;
}

void to_json(nlohmann::json& j, const ClosenessReport& report) {
  j = nlohmann::json{{"max_ratio_dev", ToDouble(report.max_ratio_dev)},
                     {"max_ratio_dev_exact", report.max_ratio_dev.get_str()},
                     {"tv_distance", ToDouble(report.tv_distance)}};
  if (report.worst) {
    j["worst"] = {report.worst->origin, report.worst->target};
  }
}

void to_json(nlohmann::json& j, const LemmaReport& report) {
  j = nlohmann::json{{"theta", report.theta},
                     {"epsilon", report.epsilon},
                     {"threshold_sufficient", report.threshold_sufficient},
                     {"all_passed", report.all_passed()}};
  nlohmann::json checks = nlohmann::json::array();
  for (const LemmaCheck& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"applicable", c.applicable},
                      {"passed", c.passed},
                      {"margin", c.margin},
                      {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
}

EmpiricalReport EmpiricalDistribution(
    const Graph& graph, const EmpiricalSpec& spec, std::uint64_t trials,
    std::uint64_t seed, const std::optional<std::vector<double>>& reference) {
  if (trials == 0) throw ParameterError("trials must be >= 1");
  const EdgeCount theta =
      spec.procedure == EmpiricalSpec::Procedure::kFullAlgorithm
          ? spec.config.theta
          : spec.theta;
  const bool full_fallback =
      spec.procedure == EmpiricalSpec::Procedure::kFullAlgorithm &&
      spec.config.uses_fallback();
  const AttemptDistribution dist = ComputeAttemptDistribution(graph, theta);
  if (dist.success == 0 && !full_fallback) {
    throw UndefinedConditional("sampler can never return an edge at theta " +
                               std::to_string(theta));
  }

  EmpiricalReport report;
  std::unordered_map<std::uint64_t, std::size_t> index_of;
  index_of.reserve(graph.num_directed_edges());
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    for (VertexId w : graph.neighbors(v)) {
      index_of.emplace(EdgeKey(v, w), report.edges.size());
      report.edges.push_back({v, w});
    }
  }
  if (reference) {
    if (reference->size() != report.edges.size()) {
      throw ParameterError("reference must have one probability per edge");
    }
    report.reference = *reference;
  } else if (full_fallback) {
    report.reference.assign(report.edges.size(),
                            1.0 / static_cast<double>(report.edges.size()));
  } else {
    report.reference = dist.ConditionalInEdgeOrder(graph);
  }

  report.counts.assign(report.edges.size(), 0);
  report.trials = trials;
  std::mutex merge_mutex;
  ParallelFor(kTrialChunks, [&](std::size_t chunk) {
    SeededStream rng(MixSeed(seed, chunk + 1));
    QueryOracle oracle(graph, rng);
    std::vector<std::uint64_t> counts(report.edges.size(), 0);
    std::uint64_t failures = 0;
    const std::uint64_t chunk_trials = ChunkTrials(trials, chunk);
    for (std::uint64_t t = 0; t < chunk_trials; ++t) {
      std::optional<DirectedEdge> edge;
      if (spec.procedure == EmpiricalSpec::Procedure::kFullAlgorithm) {
        edge = SampleEdgeAlmostUniformly(oracle, spec.config).edge;
        if (!edge) {
          ++failures;
          continue;
        }
      } else {
        while (!edge) edge = MixtureAttempt(oracle, theta);
      }
      ++counts[index_of.at(EdgeKey(edge->origin, edge->target))];
    }
    std::lock_guard lock(merge_mutex);
    for (std::size_t i = 0; i < counts.size(); ++i) report.counts[i] += counts[i];
    report.failures += failures;
  });
  report.successes = report.trials - report.failures;
  report.fit = ChiSquareTest(report.counts, report.reference);
  return report;
}

}  // namespace edge_sampler
