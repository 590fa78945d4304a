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

#include "edge_sampler/edge_count.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace edge_sampler {
namespace {

// Centers [m, 2m] around the unbiased degree-sum estimate.
constexpr double kInflation = 1.5;

EdgeEstimate ExactEstimate(QueryOracle& oracle) {
  const EdgeCount m = oracle.unmetered_directed_edge_count();
  if (m == 0) throw ParameterError("graph has no edges");
  return {static_cast<double>(m), QueryCounts{}, "exact"};
}

EdgeEstimate DegreeSumEstimate(QueryOracle& oracle, std::uint64_t samples) {
  if (samples == 0) throw ParameterError("degree-sum-mc needs samples >= 1");
  const QueryCounts before = oracle.counts();
  long double degree_sum = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    degree_sum += oracle.degree(oracle.random_vertex());
  }
  const double mean = static_cast<double>(degree_sum / samples);
  const double m_hat = kInflation * mean * oracle.num_vertices();
  if (!(m_hat > 0)) {
    throw ParameterError("degree-sum-mc saw only isolated vertices");
  }
  return {m_hat, oracle.counts() - before, "degree-sum-mc"};
}

}  // namespace

EstimatorKind ParseEstimatorKind(const std::string& name) {
  if (name == "exact") return EstimatorKind::kExact;
  if (name == "degree-sum-mc" || name == "degree_sum_mc") {
    return EstimatorKind::kDegreeSumMc;
  }
  throw ParameterError("unknown estimator '" + name +
                       "' (expected exact or degree-sum-mc)");
}

std::string ToString(EstimatorKind kind) {
  return kind == EstimatorKind::kExact ? "exact" : "degree-sum-mc";
}

std::uint64_t DefaultDegreeSamples(std::uint64_t n) {
  const auto root = static_cast<std::uint64_t>(
      std::ceil(static_cast<double>(n) / std::sqrt(static_cast<double>(n))));
  return 2 * std::max<std::uint64_t>(1, root);
}

EdgeEstimate EstimateEdges(QueryOracle& oracle, const EstimatorParams& params) {
  switch (params.kind) {
    case EstimatorKind::kExact:
      return ExactEstimate(oracle);
    case EstimatorKind::kDegreeSumMc:
      return DegreeSumEstimate(
          oracle,
          params.samples.value_or(DefaultDegreeSamples(oracle.num_vertices())));
  }
  throw ParameterError("unknown estimator");
}

double MedianEstimate(std::span<double> values) {
  if (values.empty() || values.size() % 2 == 0) {
    throw ParameterError("median needs an odd number of estimates");
  }
  auto mid = values.begin() + values.size() / 2;
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

EdgeEstimate EstimateEdgesAmplified(QueryOracle& oracle,
                                    const EdgeEstimator& estimator,
                                    std::uint64_t repetitions) {
  if (repetitions == 0 || repetitions % 2 == 0) {
    throw ParameterError("repetitions must be odd and >= 1");
  }
  std::vector<double> values;
  values.reserve(repetitions);
  EdgeEstimate result;
  for (std::uint64_t r = 0; r < repetitions; ++r) {
    EdgeEstimate single = estimator(oracle);
    values.push_back(single.m_hat);
    result.queries_used += single.queries_used;
    result.method = single.method;
  }
  result.m_hat = MedianEstimate(values);
  if (repetitions > 1) {
    result.method += "/median-of-" + std::to_string(repetitions);
  }
  return result;
}

EdgeEstimate EstimateEdgesAmplified(QueryOracle& oracle,
                                    const EstimatorParams& params,
                                    std::uint64_t repetitions) {
  return EstimateEdgesAmplified(
      oracle, [&params](QueryOracle& o) { return EstimateEdges(o, params); },
      repetitions);
}

std::uint64_t AmplificationRepetitions(std::uint64_t n, double epsilon) {
  if (!(epsilon > 0)) throw ParameterError("epsilon must be positive");
  const double target =
      epsilon / (2.0 * static_cast<double>(n) * static_cast<double>(n));
  auto r = static_cast<std::uint64_t>(std::ceil(-18.0 * std::log(target)));
  r = std::max<std::uint64_t>(r, 1);
  if (r % 2 == 0) ++r;
  return r;
}

}  // namespace edge_sampler
