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

#include "edge_sampler/experiments.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "edge_sampler/parallel.h"
#include "edge_sampler/random.h"
#include "edge_sampler/sampler.h"

namespace edge_sampler {
namespace {

struct Moments {
  std::uint64_t count = 0;
  long double sum = 0;
  long double sum_squares = 0;
  std::uint64_t failures = 0;
  std::uint64_t fallbacks = 0;

  void Add(double x) {
    ++count;
    sum += x;
    sum_squares += static_cast<long double>(x) * x;
  }
  Moments& operator+=(const Moments& o) {
    count += o.count;
    sum += o.sum;
    sum_squares += o.sum_squares;
    failures += o.failures;
    fallbacks += o.fallbacks;
    return *this;
  }
};

// Flags the first query that touches the hidden clique: a degree or neighbor
// query on a clique vertex, or a pair query naming two clique vertices.
class WitnessDetector final : public QueryObserver {
 public:
  explicit WitnessDetector(const std::vector<bool>& label_in_clique)
      : in_clique_(label_in_clique) {}

  void OnQuery(const QueryRecord& r) override {
    switch (r.kind) {
      case QueryKind::kVertex:
        break;
      case QueryKind::kDegree:
      case QueryKind::kNeighbor:
        if (in_clique_[r.vertex]) witnessed_ = true;
        break;
      case QueryKind::kPair:
        if (in_clique_[r.vertex] &&
            in_clique_[static_cast<VertexId>(r.argument)]) {
          witnessed_ = true;
        }
        break;
    }
  }
  bool witnessed() const { return witnessed_; }

 private:
  const std::vector<bool>& in_clique_;
  bool witnessed_ = false;
};

std::optional<DirectedEdge> HuntHighDegree(QueryOracle& oracle,
                                           std::uint64_t budget) {
  struct Probe {
    VertexId v;
    EdgeCount d;
  };
  const std::uint64_t start = oracle.counts().total();
  auto used = [&] { return oracle.counts().total() - start; };
  std::optional<Probe> best;
  std::optional<Probe> second;
  // A probe costs two queries; two more are kept for returning an edge.
  while (used() + 4 <= budget) {
    const VertexId v = oracle.random_vertex();
    const Probe probe{v, oracle.degree(v)};
    if (best && best->v == v) continue;
    if (!best || probe.d > best->d) {
      second = best;
      best = probe;
    } else if ((!second || probe.d > second->d) && probe.v != best->v) {
      second = probe;
    }
  }
  if (!best || best->d == 0) return std::nullopt;
  if (second && second->d > 0 && used() + 1 <= budget &&
      oracle.pair(best->v, second->v)) {
    return DirectedEdge{best->v, second->v};
  }
  if (used() + 1 > budget) return std::nullopt;
  const auto w = oracle.neighbor(best->v, 1 + oracle.rng().Uniform(best->d));
  if (!w) return std::nullopt;
  return DirectedEdge{best->v, *w};
}

std::optional<DirectedEdge> BlindGuess(QueryOracle& oracle) {
  const VertexId n = oracle.num_vertices();
  if (n < 2) return std::nullopt;
  const auto a = static_cast<VertexId>(oracle.rng().Uniform(n));
  auto b = static_cast<VertexId>(oracle.rng().Uniform(n - 1));
  if (b >= a) ++b;
  return DirectedEdge{a, b};
}

std::optional<DirectedEdge> RunStrategy(Strategy strategy, QueryOracle& oracle,
                                        const SamplerConfig& config,
                                        std::uint64_t budget) {
  switch (strategy) {
    case Strategy::kSampler:
      return SampleEdgeAlmostUniformly(oracle, config).edge;
    case Strategy::kDegreeHunter:
      return HuntHighDegree(oracle, budget);
    case Strategy::kBlindGuess:
      return BlindGuess(oracle);
  }
  return std::nullopt;
}

std::uint64_t CeilPositive(double x) {
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(x)));
}

}  // namespace

ScalingResult RunScaling(std::span<const std::string> specs,
                         const ScalingOptions& options) {
  if (options.trials < 30) throw ParameterError("scaling needs >= 30 trials");
  ScalingResult result;
  for (std::size_t index = 0; index < specs.size(); ++index) {
    const Graph graph = Generate(specs[index], options.graph_seed);
    if (graph.num_directed_edges() == 0) {
      throw ParameterError("graph '" + specs[index] + "' has no edges");
    }
    Moments total;
    std::mutex merge_mutex;
    ParallelFor(kTrialChunks, [&](std::size_t chunk) {
      SeededStream rng(MixSeed(options.seed, index * kTrialChunks + chunk + 1));
      QueryOracle oracle(graph, rng);
      Moments local;
      for (std::uint64_t t = 0; t < ChunkTrials(options.trials, chunk); ++t) {
        const QueryCounts before = oracle.counts();
        const EdgeEstimate estimate = EstimateEdges(oracle, options.estimator);
        const SamplerConfig config = SamplerConfig::Make(
            graph.num_vertices(), estimate.m_hat, options.epsilon);
        const SampleReport report = SampleEdgeAlmostUniformly(oracle, config);
        local.Add(static_cast<double>((oracle.counts() - before).total()));
        if (report.failed()) ++local.failures;
        if (report.fallback) ++local.fallbacks;
      }
      std::lock_guard lock(merge_mutex);
      total += local;
    });

    ScalingRun run;
    run.spec = specs[index];
    run.n = graph.num_vertices();
    run.m = graph.num_directed_edges();
    run.epsilon = options.epsilon;
    run.trials = options.trials;
    const long double count = total.count;
    run.mean_queries = static_cast<double>(total.sum / count);
    const long double variance =
        total.count > 1 ? (total.sum_squares - total.sum * total.sum / count) /
                              (count - 1)
                        : 0;
    run.stddev_queries = static_cast<double>(std::sqrt(std::max(variance, 0.0L)));
    run.failure_rate = static_cast<double>(total.failures) / options.trials;
    run.fallback_runs = total.fallbacks;
    run.predicted_scale =
        run.n / std::sqrt(options.epsilon * static_cast<double>(run.m));
    result.runs.push_back(run);
  }

  std::vector<double> x;
  std::vector<double> y;
  for (const ScalingRun& run : result.runs) {
    x.push_back(std::log(run.predicted_scale));
    y.push_back(std::log(run.mean_queries));
  }
  const bool distinct =
      x.size() >= 2 && std::any_of(x.begin(), x.end(),
                                   [&](double v) { return v != x.front(); });
  if (distinct) result.fit = FitLine(x, y);
  return result;
}

std::string ToString(Strategy strategy) {
  switch (strategy) {
    case Strategy::kSampler:
      return "sampler";
    case Strategy::kDegreeHunter:
      return "degree-hunter";
    case Strategy::kBlindGuess:
      return "blind-guess";
  }
  return "unknown";
}

Strategy ParseStrategy(const std::string& name) {
  if (name == "sampler") return Strategy::kSampler;
  if (name == "degree-hunter") return Strategy::kDegreeHunter;
  if (name == "blind-guess") return Strategy::kBlindGuess;
  throw ParameterError("unknown strategy '" + name +
                       "' (expected sampler, degree-hunter or blind-guess)");
}

LowerBoundInstance BuildLowerBoundInstance(const GeneratorSpec& base,
                                           std::uint64_t graph_seed) {
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::kCliqueUnion;
  spec.base = std::make_shared<GeneratorSpec>(base);
  LowerBoundInstance instance;
  instance.generated = GenerateWithMetadata(spec, graph_seed);
  instance.clique_size = instance.generated.clique_vertices.size();
  instance.clique_directed_edges =
      instance.clique_size * (instance.clique_size - (instance.clique_size > 0));
  instance.clique_majority = 2 * instance.clique_directed_edges >=
                             instance.generated.graph.num_directed_edges();
  return instance;
}

std::vector<std::uint64_t> DefaultBudgets(VertexId n, EdgeCount m) {
  const double scale = n / std::sqrt(static_cast<double>(m));
  return {CeilPositive(scale / 100), CeilPositive(scale / 10),
          CeilPositive(scale), CeilPositive(10 * scale)};
}

std::vector<LowerBoundRun> RunLowerBound(const GeneratorSpec& base,
                                         const LowerBoundOptions& options) {
  if (options.trials == 0) throw ParameterError("trials must be >= 1");
  const LowerBoundInstance instance =
      BuildLowerBoundInstance(base, options.graph_seed);
  const Graph& graph = instance.generated.graph;
  const VertexId n = graph.num_vertices();
  const EdgeCount m = graph.num_directed_edges();
  if (m == 0) throw ParameterError("lower-bound instance has no edges");
  std::vector<bool> in_clique(n, false);
  for (VertexId v : instance.generated.clique_vertices) in_clique[v] = true;

  const std::vector<std::uint64_t> budgets =
      options.budgets.empty() ? DefaultBudgets(n, m) : options.budgets;
  // The lower bound grants the algorithm the exact edge count.
  const SamplerConfig config =
      SamplerConfig::Make(n, static_cast<double>(m), options.epsilon);

  std::vector<LowerBoundRun> runs;
  for (Strategy strategy : options.strategies) {
    for (std::uint64_t budget : budgets) {
      struct Tally {
        std::uint64_t returned = 0;
        std::uint64_t hits = 0;
        std::uint64_t witnesses = 0;
      } tally;
      std::mutex merge_mutex;
      ParallelFor(kTrialChunks, [&](std::size_t chunk) {
        SeededStream rng(MixSeed(options.seed, chunk + 1));
        Tally local;
        std::vector<VertexId> label_of(n);
        std::vector<bool> label_in_clique(n);
        for (std::uint64_t t = 0; t < ChunkTrials(options.trials, chunk); ++t) {
          std::iota(label_of.begin(), label_of.end(), VertexId{0});
          std::shuffle(label_of.begin(), label_of.end(), rng.engine());
          for (VertexId v = 0; v < n; ++v) label_in_clique[label_of[v]] = in_clique[v];

          QueryOracle oracle(graph, rng);
          oracle.set_relabeling(label_of);
          oracle.set_budget(budget);
          WitnessDetector detector(label_in_clique);
          oracle.set_observer(&detector);
          std::optional<DirectedEdge> edge;
          try {
            edge = RunStrategy(strategy, oracle, config, budget);
          } catch (const QueryBudgetExhausted&) {
            edge.reset();
          }
          if (detector.witnessed()) ++local.witnesses;
          if (edge) {
            ++local.returned;
            if (edge->origin != edge->target && label_in_clique[edge->origin] &&
                label_in_clique[edge->target]) {
              ++local.hits;
            }
          }
        }
        std::lock_guard lock(merge_mutex);
        tally.returned += local.returned;
        tally.hits += local.hits;
        tally.witnesses += local.witnesses;
      });

      LowerBoundRun run;
      run.base_spec = base.ToString();
      run.base_undirected_edges = instance.generated.base_undirected_edges;
      run.clique_size = instance.clique_size;
      run.n = n;
      run.m = m;
      run.clique_directed_edges = instance.clique_directed_edges;
      run.budget = budget;
      run.strategy = strategy;
      run.trials = options.trials;
      run.returned = tally.returned;
      run.clique_hits = tally.hits;
      run.witness_trials = tally.witnesses;
      const auto trials = static_cast<double>(options.trials);
      run.return_rate = tally.returned / trials;
      run.clique_hit_rate =
          tally.returned > 0
              ? static_cast<double>(tally.hits) / static_cast<double>(tally.returned)
              : 0.0;
      run.witness_rate = tally.witnesses / trials;
      run.tv_lower_estimate = std::max(0.0, 0.5 - run.clique_hit_rate);
      run.witness_bound = 4.0 * static_cast<double>(instance.clique_size) *
                          static_cast<double>(budget) / n;
      run.clique_fraction = static_cast<double>(instance.clique_directed_edges) /
                            static_cast<double>(m);
      runs.push_back(run);
    }
  }
  return runs;
}

std::vector<std::string> FlagNonMonotoneStrategies(
    std::span<const LowerBoundRun> runs) {
  std::map<Strategy, std::vector<const LowerBoundRun*>> by_strategy;
  for (const LowerBoundRun& run : runs) by_strategy[run.strategy].push_back(&run);
  std::vector<std::string> flagged;
  for (auto& [strategy, list] : by_strategy) {
    std::sort(list.begin(), list.end(),
              [](const LowerBoundRun* a, const LowerBoundRun* b) {
                return a->budget < b->budget;
              });
    for (std::size_t i = 1; i < list.size(); ++i) {
      const LowerBoundRun& lo = *list[i - 1];
      const LowerBoundRun& hi = *list[i];
      const double slack =
          3 * (BinomialStandardError(lo.clique_hit_rate, std::max<std::uint64_t>(lo.returned, 1)) +
               BinomialStandardError(hi.clique_hit_rate, std::max<std::uint64_t>(hi.returned, 1)));
      if (hi.tv_lower_estimate > lo.tv_lower_estimate + slack) {
        flagged.push_back(ToString(strategy));
        break;
      }
    }
  }
  return flagged;
}

void to_json(nlohmann::json& j, const ScalingRun& run) {
  j = nlohmann::json{{"spec", run.spec},
                     {"n", run.n},
                     {"m_directed", run.m},
                     {"m_undirected", run.m / 2},
                     {"epsilon", run.epsilon},
                     {"trials", run.trials},
                     {"mean_queries", run.mean_queries},
                     {"stddev_queries", run.stddev_queries},
                     {"failure_rate", run.failure_rate},
                     {"fallback_runs", run.fallback_runs},
                     {"predicted_scale", run.predicted_scale}};
}

void to_json(nlohmann::json& j, const LowerBoundRun& run) {
  j = nlohmann::json{{"base_spec", run.base_spec},
                     {"base_undirected_edges", run.base_undirected_edges},
                     {"clique_size", run.clique_size},
                     {"n", run.n},
                     {"m_directed", run.m},
                     {"clique_directed_edges", run.clique_directed_edges},
                     {"budget", run.budget},
                     {"strategy", ToString(run.strategy)},
                     {"trials", run.trials},
                     {"returned", run.returned},
                     {"return_rate", run.return_rate},
                     {"clique_hit_rate", run.clique_hit_rate},
                     {"clique_fraction", run.clique_fraction},
                     {"witness_rate", run.witness_rate},
                     {"witness_bound", run.witness_bound},
                     {"tv_lower_estimate", run.tv_lower_estimate}};
}

}  // namespace edge_sampler
