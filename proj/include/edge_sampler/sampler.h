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

// Almost-uniform edge sampling from vertex, degree and neighbor queries.
//
// Vertices of degree <= theta are light, the rest heavy; a directed edge takes
// the label of its origin. One call of SampleLightEdge returns each light edge
// with probability exactly 1/(n theta). SampleHeavyEdge walks one more step
// from a light edge that lands on a heavy vertex v and returns (v, w) with
// probability d_light(v) / (n theta d(v)), which is within a factor
// (1 - m/theta^2) of 1/(n theta). Mixing the two with a fair coin at
// theta >= sqrt(2m/eps) gives a per-attempt distribution whose conditional is
// pointwise eps-close to uniform over all m directed edges.
//
// All randomness is drawn from oracle.rng() in this order: mixture coin
// (0 = light, 1 = heavy), the vertex query, j in [1, theta], and for the heavy
// branch the index into the heavy vertex's neighbors. The fallback draws the
// vertex query, then i in [1, n].

#ifndef EDGE_SAMPLER_SAMPLER_H_
#define EDGE_SAMPLER_SAMPLER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "edge_sampler/graph.h"
#include "edge_sampler/query_oracle.h"

namespace edge_sampler {

// ceil(sqrt(2 m_hat / eps)); the smallest integer threshold with
// theta^2 >= 2 m_hat / eps.
EdgeCount ThresholdFor(double m_hat, double epsilon);
// ceil(10 n / ((1 - eps) sqrt(eps m_hat))).
std::uint64_t AttemptBudgetFor(std::uint64_t n, double m_hat, double epsilon);

struct SamplerConfig {
  double epsilon = 0.25;
  double m_hat = 0;
  VertexId n = 0;
  EdgeCount theta = 1;
  std::uint64_t attempt_budget = 1;  // q

  // Throws ParameterError unless 0 < eps < 1/2, m_hat > 0 and n >= 1.
  static SamplerConfig Make(VertexId n, double m_hat, double epsilon);

  // q > n: the uniform-vertex/uniform-index fallback is cheaper.
  bool uses_fallback() const { return attempt_budget > n; }
};

void to_json(nlohmann::json& j, const SamplerConfig& config);

struct SampleReport {
  std::optional<DirectedEdge> edge;  // nullopt: every attempt failed
  std::uint64_t attempts = 0;
  QueryCounts queries;
  SamplerConfig config;
  bool fallback = false;

  bool failed() const { return !edge.has_value(); }
};

std::optional<DirectedEdge> SampleLightEdge(QueryOracle& oracle,
                                            EdgeCount theta);
std::optional<DirectedEdge> SampleHeavyEdge(QueryOracle& oracle,
                                            EdgeCount theta);
// Fair coin between the two procedures above.
std::optional<DirectedEdge> MixtureAttempt(QueryOracle& oracle,
                                           EdgeCount theta);

// Uniform vertex u, uniform i in [1, n], neighbor(u, i). Each directed edge
// is hit with probability exactly 1/n^2.
std::optional<DirectedEdge> FallbackAttempt(QueryOracle& oracle);

struct FallbackResult {
  std::optional<DirectedEdge> edge;
  std::uint64_t attempts = 0;
};
FallbackResult FallbackUniformEdge(QueryOracle& oracle, std::uint64_t budget);

// Up to q mixture attempts at the configured theta, returning the first edge;
// if q > n, runs up to n fallback attempts instead.
SampleReport SampleEdgeAlmostUniformly(QueryOracle& oracle,
                                       const SamplerConfig& config);

struct UndirectedSample {
  std::optional<UndirectedEdge> edge;
  SampleReport report;
};
UndirectedSample SampleUndirectedEdge(QueryOracle& oracle,
                                      const SamplerConfig& config);

// Samples an edge and returns either endpoint with probability 1/2, giving a
// vertex distribution close to d(v) / m.
struct VertexSample {
  std::optional<VertexId> vertex;
  SampleReport report;
};
VertexSample SampleDegreeProportionalVertex(QueryOracle& oracle,
                                            const SamplerConfig& config);

class SamplingFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WeightedEstimate {
  double mean = 0;
  double standard_error = 0;
  std::uint64_t draws = 0;
  std::uint64_t failed_runs = 0;
  QueryCounts queries;
};

// Mean of weight(e) over `samples` sampled edges. A draw whose sampler run
// fails is retried; SamplingFailed is thrown once one draw fails
// `max_failures_per_draw` runs in a row.
WeightedEstimate WeightedExpectation(
    QueryOracle& oracle, const SamplerConfig& config,
    const std::function<double(DirectedEdge)>& weight, std::uint64_t samples,
    std::uint64_t max_failures_per_draw = 64);

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_SAMPLER_H_
