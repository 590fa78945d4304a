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

// Closed-form distribution of one mixture attempt, in exact rationals.
//
// Every directed edge out of the same origin v has the same probability, so
// the distribution is stored per origin:
//
//   light call:  1 / (n theta)                   if v is light, else 0
//   heavy call:  d_light(v) / (n theta d(v))     if v is heavy, else 0
//   attempt:     (light call + heavy call) / 2
//
// Sums over edges become sums over vertices weighted by d(v), which keeps the
// exact arithmetic O(n) rational operations.

#ifndef EDGE_SAMPLER_EXACT_DIST_H_
#define EDGE_SAMPLER_EXACT_DIST_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edge_sampler/graph.h"
#include "edge_sampler/sampler.h"
#include "edge_sampler/statistics.h"
#include "json.hpp"

namespace edge_sampler {

using Rational = mpq_class;

// Exact conversion of a double (every finite double is a dyadic rational).
Rational ToRational(double value);

struct AttemptDistribution {
  EdgeCount theta = 1;
  VertexId n = 0;
  EdgeCount m = 0;
  std::vector<Rational> light_call;  // per origin, one SampleLightEdge call
  std::vector<Rational> heavy_call;  // per origin, one SampleHeavyEdge call
  std::vector<Rational> attempt;     // per origin, one mixture attempt
  Rational light_success;
  Rational heavy_success;
  Rational success;                  // sum of p_e over all directed edges

  // p_e for the directed edge e; e must be an edge of the graph.
  const Rational& probability(DirectedEdge e) const {
    return attempt[e.origin];
  }
  // Materialized per-edge map; intended for small graphs.
  std::map<DirectedEdge, Rational> PerEdge(const Graph& graph) const;
  // Conditional probabilities p_e / success in the graph's CSR edge order.
  std::vector<double> ConditionalInEdgeOrder(const Graph& graph) const;
};

AttemptDistribution ComputeAttemptDistribution(const Graph& graph,
                                               EdgeCount theta);

// Per-attempt success probability of the q > n fallback: m / n^2.
Rational FallbackSuccess(const Graph& graph);

class UndefinedConditional : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Closeness of the conditional P(e) = p_e / success to the reference.
struct ClosenessReport {
  Rational max_ratio_dev;  // max |P(x) / Q(x) - 1| over the support of Q
  Rational tv_distance;    // (1/2) sum |P(x) - Q(x)|
  // An element attaining max_ratio_dev (an edge for edge reports; for vertex
  // reports origin == target == the vertex).
  std::optional<DirectedEdge> worst;

  bool PointwiseOk(double epsilon) const {
    return max_ratio_dev <= ToRational(epsilon);
  }
};

// Against the uniform distribution over the m directed edges. Throws
// UndefinedConditional when the attempt can never succeed.
ClosenessReport ConditionalCloseness(const Graph& graph,
                                     const AttemptDistribution& dist);

// Vertex law of "sample an edge, return either endpoint with probability
// 1/2", against d(v) / m. Isolated vertices have probability zero under both.
ClosenessReport DegreeProportionalCloseness(const Graph& graph,
                                            const AttemptDistribution& dist);

struct LemmaCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  // Slack of the inequality (>= 0 when it holds); 0 for equalities.
  double margin = 0;
  std::string detail;
};

struct LemmaReport {
  EdgeCount theta = 1;
  double epsilon = 0;
  // theta^2 >= 2 m / eps, the hypothesis of the eps-closeness statements.
  bool threshold_sufficient = false;
  std::vector<LemmaCheck> checks;

  // Not-applicable checks count as passing.
  bool all_passed() const;
};

// Checks, in exact arithmetic:
//   light_success          light success == |E_light| / (n theta)
//   heavy_success_interval |E_heavy|(1 - m/theta^2)/(n theta) <= heavy success
//                          <= |E_heavy| / (n theta)
//   light_degree_bound     d_light(v) > (1 - m/theta^2) d(v) for heavy v
//   mixture_success        success >= (1 - eps) m / (2 n theta)   [needs
//                          theta^2 >= 2m/eps]
//   per_edge_bounds        (1 - eps/2)/(2 n theta) <= p_e <= 1/(2 n theta)
//                          [needs theta^2 >= 2m/eps for the lower bound]
//   pointwise_closeness    max_ratio_dev <= eps   [needs theta^2 >= 2m/eps]
LemmaReport VerifyLemmaBounds(const Graph& graph, EdgeCount theta,
                              double epsilon);

// Residual failure probability (1 - success)^attempts of the full algorithm
// with the given config (fallback success if config.uses_fallback()).
Rational ResidualFailure(const Graph& graph, const SamplerConfig& config);

void to_json(nlohmann::json& j, const ClosenessReport& report);
void to_json(nlohmann::json& j, const LemmaReport& report);

// Monte Carlo cross-check of the analytic distribution.
struct EmpiricalSpec {
  enum class Procedure {
    // Repeat mixture attempts at `theta` until one succeeds; one trial per
    // returned edge.
    kMixtureUntilSuccess,
    // One full SampleEdgeAlmostUniformly run per trial.
    kFullAlgorithm,
  };
  Procedure procedure = Procedure::kMixtureUntilSuccess;
  EdgeCount theta = 1;
  SamplerConfig config;  // kFullAlgorithm only
};

struct EmpiricalReport {
  std::vector<DirectedEdge> edges;  // CSR order
  std::vector<std::uint64_t> counts;
  std::vector<double> reference;    // probability per edge used for the test
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  GoodnessOfFit fit;
};

// `reference` defaults to the analytic conditional distribution; pass a
// different one (in CSR edge order) to test against an alternative.
EmpiricalReport EmpiricalDistribution(
    const Graph& graph, const EmpiricalSpec& spec, std::uint64_t trials,
    std::uint64_t seed,
    const std::optional<std::vector<double>>& reference = std::nullopt);

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_EXACT_DIST_H_
