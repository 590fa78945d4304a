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

#include "edge_sampler/sampler.h"

#include <cmath>
#include <string>

#include "edge_sampler/edge_count.h"

namespace edge_sampler {

EdgeCount ThresholdFor(double m_hat, double epsilon) {
  const long double target =
      2.0L * static_cast<long double>(m_hat) / static_cast<long double>(epsilon);
  auto theta = static_cast<EdgeCount>(std::ceil(std::sqrt(target)));
  while (theta > 1 && static_cast<long double>(theta - 1) * (theta - 1) >= target) {
    --theta;
  }
  while (static_cast<long double>(theta) * theta < target) ++theta;
  return theta == 0 ? 1 : theta;
}

std::uint64_t AttemptBudgetFor(std::uint64_t n, double m_hat, double epsilon) {
  const long double q =
      10.0L * n /
      ((1.0L - epsilon) * std::sqrt(static_cast<long double>(epsilon) * m_hat));
  const auto budget = static_cast<std::uint64_t>(std::ceil(q));
  return budget == 0 ? 1 : budget;
}

SamplerConfig SamplerConfig::Make(VertexId n, double m_hat, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw ParameterError("epsilon must lie in the open interval (0, 1/2), got " +
                         std::to_string(epsilon));
  }
  if (!(m_hat > 0.0) || !std::isfinite(m_hat)) {
    throw ParameterError("edge estimate must be positive and finite");
  }
  if (n == 0) throw ParameterError("graph has no vertices");
  SamplerConfig config;
  config.epsilon = epsilon;
  config.m_hat = m_hat;
  config.n = n;
  config.theta = ThresholdFor(m_hat, epsilon);
  config.attempt_budget = AttemptBudgetFor(n, m_hat, epsilon);
  return config;
}

void to_json(nlohmann::json& j, const SamplerConfig& config) {
  j = nlohmann::json{{"epsilon", config.epsilon},
                     {"m_hat", config.m_hat},
                     {"n", config.n},
                     {"theta", config.theta},
                     {"q", config.attempt_budget},
                     {"fallback", config.uses_fallback()}};
}

std::optional<DirectedEdge> SampleLightEdge(QueryOracle& oracle,
                                            EdgeCount theta) {
  const VertexId u = oracle.random_vertex();
  if (oracle.degree(u) > theta) return std::nullopt;
  const std::uint64_t j = 1 + oracle.rng().Uniform(theta);
  const auto v = oracle.neighbor(u, j);
  if (!v) return std::nullopt;
  return DirectedEdge{u, *v};
}

std::optional<DirectedEdge> SampleHeavyEdge(QueryOracle& oracle,
                                            EdgeCount theta) {
  const VertexId u = oracle.random_vertex();
  if (oracle.degree(u) > theta) return std::nullopt;
  const std::uint64_t j = 1 + oracle.rng().Uniform(theta);
  const auto v = oracle.neighbor(u, j);
  if (!v) return std::nullopt;
  const EdgeCount dv = oracle.degree(*v);
  if (dv <= theta) return std::nullopt;
  const std::uint64_t i = 1 + oracle.rng().Uniform(dv);
  const auto w = oracle.neighbor(*v, i);
  if (!w) return std::nullopt;  // unreachable for a consistent oracle
  return DirectedEdge{*v, *w};
}

std::optional<DirectedEdge> MixtureAttempt(QueryOracle& oracle,
                                           EdgeCount theta) {
  return oracle.rng().Coin() ? SampleHeavyEdge(oracle, theta)
                             : SampleLightEdge(oracle, theta);
}

std::optional<DirectedEdge> FallbackAttempt(QueryOracle& oracle) {
  const VertexId u = oracle.random_vertex();
  const std::uint64_t i = 1 + oracle.rng().Uniform(oracle.num_vertices());
  const auto v = oracle.neighbor(u, i);
  if (!v) return std::nullopt;
  return DirectedEdge{u, *v};
}

FallbackResult FallbackUniformEdge(QueryOracle& oracle, std::uint64_t budget) {
  FallbackResult result;
  while (result.attempts < budget) {
    ++result.attempts;
    result.edge = FallbackAttempt(oracle);
    if (result.edge) break;
  }
  return result;
}

SampleReport SampleEdgeAlmostUniformly(QueryOracle& oracle,
                                       const SamplerConfig& config) {
  SampleReport report;
  report.config = config;
  const QueryCounts before = oracle.counts();
  if (config.uses_fallback()) {
    report.fallback = true;
    FallbackResult result = FallbackUniformEdge(oracle, config.n);
    report.edge = result.edge;
    report.attempts = result.attempts;
  } else {
    while (report.attempts < config.attempt_budget) {
      ++report.attempts;
      report.edge = MixtureAttempt(oracle, config.theta);
      if (report.edge) break;
    }
  }
  report.queries = oracle.counts() - before;
  return report;
}

UndirectedSample SampleUndirectedEdge(QueryOracle& oracle,
                                      const SamplerConfig& config) {
  UndirectedSample sample;
  sample.report = SampleEdgeAlmostUniformly(oracle, config);
  if (sample.report.edge) {
    sample.edge = UndirectedEdge::Of(*sample.report.edge);
  }
  return sample;
}

VertexSample SampleDegreeProportionalVertex(QueryOracle& oracle,
                                            const SamplerConfig& config) {
  VertexSample sample;
  sample.report = SampleEdgeAlmostUniformly(oracle, config);
  if (sample.report.edge) {
    const DirectedEdge e = *sample.report.edge;
    sample.vertex = oracle.rng().Coin() ? e.target : e.origin;
  }
  return sample;
}

WeightedEstimate WeightedExpectation(
    QueryOracle& oracle, const SamplerConfig& config,
    const std::function<double(DirectedEdge)>& weight, std::uint64_t samples,
    std::uint64_t max_failures_per_draw) {
  if (samples == 0) throw ParameterError("samples must be >= 1");
  WeightedEstimate estimate;
  const QueryCounts before = oracle.counts();
  // Welford running mean/variance.
  double mean = 0;
  double m2 = 0;
  for (std::uint64_t draw = 0; draw < samples; ++draw) {
    std::uint64_t failures = 0;
    std::optional<DirectedEdge> edge;
    while (!edge) {
      edge = SampleEdgeAlmostUniformly(oracle, config).edge;
      if (!edge) {
        ++estimate.failed_runs;
        if (++failures >= max_failures_per_draw) {
          throw SamplingFailed("draw " + std::to_string(draw) + " failed " +
                               std::to_string(failures) + " runs in a row");
        }
      }
    }
    const double x = weight(*edge);
    ++estimate.draws;
    const double delta = x - mean;
    mean += delta / static_cast<double>(estimate.draws);
    m2 += delta * (x - mean);
  }
  estimate.mean = mean;
  if (estimate.draws > 1) {
    const double variance = m2 / static_cast<double>(estimate.draws - 1);
    estimate.standard_error =
        std::sqrt(variance / static_cast<double>(estimate.draws));
  }
  estimate.queries = oracle.counts() - before;
  return estimate;
}

}  // namespace edge_sampler
