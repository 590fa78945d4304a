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

#ifndef EDGE_SAMPLER_EXPERIMENTS_H_
#define EDGE_SAMPLER_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edge_sampler/edge_count.h"
#include "edge_sampler/generators.h"
#include "edge_sampler/query_oracle.h"
#include "edge_sampler/statistics.h"
#include "json.hpp"

namespace edge_sampler {

// ---------------------------------------------------------------------------
// Query-cost scaling.

struct ScalingOptions {
  double epsilon = 0.25;
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
  std::uint64_t graph_seed = 1;
  EstimatorParams estimator;
};

struct ScalingRun {
  std::string spec;
  VertexId n = 0;
  EdgeCount m = 0;  // directed
  double epsilon = 0;
  std::uint64_t trials = 0;
  double mean_queries = 0;
  double stddev_queries = 0;
  double failure_rate = 0;
  std::uint64_t fallback_runs = 0;
  double predicted_scale = 0;  // n / sqrt(eps m)
};

struct ScalingResult {
  std::vector<ScalingRun> runs;
  // log(mean_queries) against log(n / sqrt(eps m)); needs two distinct scales.
  std::optional<LinearFit> fit;
};

// Each trial runs the estimator and then one full sampler run; the query bill
// covers both. Throws ParameterError if trials < 30.
ScalingResult RunScaling(std::span<const std::string> specs,
                         const ScalingOptions& options);

// ---------------------------------------------------------------------------
// Lower-bound construction: G = base ∪ K with a hidden clique K.

enum class Strategy {
  // The almost-uniform sampler told the exact m, cut off at the budget.
  kSampler,
  // Probes random vertices for their degree, then tries to return an edge at
  // the highest-degree vertex found (pair query first, then a neighbor query).
  kDegreeHunter,
  // Returns two uniformly random distinct labels without querying.
  kBlindGuess,
};

std::string ToString(Strategy strategy);
Strategy ParseStrategy(const std::string& name);

struct LowerBoundOptions {
  std::vector<Strategy> strategies = {Strategy::kSampler,
                                      Strategy::kDegreeHunter};
  // Empty selects DefaultBudgets.
  std::vector<std::uint64_t> budgets;
  std::uint64_t trials = 2000;
  std::uint64_t seed = 1;
  std::uint64_t graph_seed = 1;
  double epsilon = 0.25;  // for kSampler
};

struct LowerBoundInstance {
  GeneratedGraph generated;
  std::uint64_t clique_size = 0;
  EdgeCount clique_directed_edges = 0;
  // |E_K| >= m / 2, the property the hit-rate bound relies on.
  bool clique_majority = false;
};

// clique_union(base, ceil(sqrt(2 m'))) with m' the directed edge count of the
// base graph.
LowerBoundInstance BuildLowerBoundInstance(const GeneratorSpec& base,
                                           std::uint64_t graph_seed);

// ceil of n/(100 sqrt m), n/(10 sqrt m), n/sqrt m, 10 n/sqrt m.
std::vector<std::uint64_t> DefaultBudgets(VertexId n, EdgeCount m);

struct LowerBoundRun {
  std::string base_spec;
  EdgeCount base_undirected_edges = 0;
  std::uint64_t clique_size = 0;
  VertexId n = 0;
  EdgeCount m = 0;
  EdgeCount clique_directed_edges = 0;
  std::uint64_t budget = 0;
  Strategy strategy = Strategy::kSampler;
  std::uint64_t trials = 0;
  std::uint64_t returned = 0;
  std::uint64_t clique_hits = 0;
  std::uint64_t witness_trials = 0;
  double return_rate = 0;
  // Fraction of returned edges that lie in E_K (0 if nothing was returned).
  double clique_hit_rate = 0;
  double witness_rate = 0;
  // max(0, 1/2 - clique_hit_rate): a lower bound on the total variation
  // distance of the returned-edge law from uniform, via the event "edge in
  // E_K" which has uniform probability >= 1/2.
  double tv_lower_estimate = 0;
  double witness_bound = 0;  // 4 k t / n
  double clique_fraction = 0;  // |E_K| / m
};

// One fresh uniformly random relabeling per trial; each strategy runs under a
// hard query meter of `budget` queries.
std::vector<LowerBoundRun> RunLowerBound(const GeneratorSpec& base,
                                         const LowerBoundOptions& options);

// Strategies whose tv_lower_estimate rises with the budget, beyond
// 3 standard errors; reported, not treated as an error.
std::vector<std::string> FlagNonMonotoneStrategies(
    std::span<const LowerBoundRun> runs);

void to_json(nlohmann::json& j, const ScalingRun& run);
void to_json(nlohmann::json& j, const LowerBoundRun& run);

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_EXPERIMENTS_H_
