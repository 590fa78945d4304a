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

#ifndef EDGE_SAMPLER_EDGE_COUNT_H_
#define EDGE_SAMPLER_EDGE_COUNT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "edge_sampler/query_oracle.h"

namespace edge_sampler {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Estimate of m on the directed scale. A "good" estimate lies in [m, 2m].
struct EdgeEstimate {
  double m_hat = 0;
  QueryCounts queries_used;
  std::string method;
};

enum class EstimatorKind {
  // Reads the true m without metered queries; isolates sampler behaviour.
  kExact,
  // n * mean(sampled degrees) * 1.5 from `samples` vertex+degree query pairs.
  kDegreeSumMc,
};

struct EstimatorParams {
  EstimatorKind kind = EstimatorKind::kExact;
  // Sample size for kDegreeSumMc; nullopt means DefaultDegreeSamples(n).
  std::optional<std::uint64_t> samples;
};

// Anything that can produce an EdgeEstimate from an oracle can stand in for
// the built-ins.
using EdgeEstimator = std::function<EdgeEstimate(QueryOracle&)>;

EstimatorKind ParseEstimatorKind(const std::string& name);
std::string ToString(EstimatorKind kind);

// Throws ParameterError if samples == 0 or the graph has no edges (the exact
// estimator) / every sampled degree is zero (degree-sum; m_hat must be > 0).
EdgeEstimate EstimateEdges(QueryOracle& oracle, const EstimatorParams& params);

// Median of `repetitions` independent runs. repetitions must be odd.
EdgeEstimate EstimateEdgesAmplified(QueryOracle& oracle,
                                    const EstimatorParams& params,
                                    std::uint64_t repetitions);
EdgeEstimate EstimateEdgesAmplified(QueryOracle& oracle,
                                    const EdgeEstimator& estimator,
                                    std::uint64_t repetitions);

// 2 * ceil(n / sqrt(n)): one doubling of the sample size suggested by the
// initial guess m_hat = n.
std::uint64_t DefaultDegreeSamples(std::uint64_t n);

// Median of an odd-length list of estimates (the list is reordered).
double MedianEstimate(std::span<double> values);

// Smallest odd r with exp(-r / 18) <= eps / (2 n^2): by Hoeffding, the median
// of r runs that are each good with probability 2/3 is then bad with
// probability at most eps / (2 n^2). Grows as O(log(n / eps)).
std::uint64_t AmplificationRepetitions(std::uint64_t n, double epsilon);

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_EDGE_COUNT_H_
