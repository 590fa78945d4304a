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

#include "edge_sampler/query_oracle.h"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "edge_sampler/generators.h"
#include "edge_sampler/sampler.h"

namespace edge_sampler {
namespace {

Graph Path3() {
  const std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}, {1, 2}};
  return Graph::FromEdges(edges, 3);
}

TEST(QueryOracleTest, SingleVertexAlwaysZero) {
  const Graph g = Graph::FromEdges({}, 1);
  SeededStream rng(1);
  QueryOracle oracle(g, rng);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(oracle.random_vertex(), 0u);
  EXPECT_EQ(oracle.counts().vertex, 100u);
}

TEST(QueryOracleTest, RandomVertexIsUniform) {
  const Graph g = Graph::FromEdges({}, 4);
  SeededStream rng(11);
  QueryOracle oracle(g, rng);
  constexpr int kDraws = 1000000;
  std::array<int, 4> counts{};
  for (int i = 0; i < kDraws; ++i) ++counts[oracle.random_vertex()];
  const double sigma = std::sqrt(kDraws * 0.25 * 0.75);
  for (int c : counts) EXPECT_LE(std::abs(c - kDraws * 0.25), 5 * sigma);
}

TEST(QueryOracleTest, CountersAdvanceOncePerCall) {
  const Graph g = Path3();
  SeededStream rng(2);
  QueryOracle oracle(g, rng);
  const QueryCounts before = oracle.counts();
  for (int i = 0; i < 7; ++i) oracle.random_vertex();
  oracle.degree(1);
  oracle.degree(1);
  oracle.neighbor(0, 5);  // a failing neighbor query is still metered
  oracle.pair(0, 2);
  const QueryCounts delta = oracle.counts() - before;
  EXPECT_EQ(delta.vertex, 7u);
  EXPECT_EQ(delta.degree, 2u);
  EXPECT_EQ(delta.neighbor, 1u);
  EXPECT_EQ(delta.pair, 1u);
  EXPECT_EQ(delta.total(), 11u);
}

TEST(QueryOracleTest, DegreeAnswers) {
  const Graph path = Path3();
  const Graph star = Generate("star:5", 1);
  const Graph isolated = Graph::FromEdges({}, 2);
  SeededStream rng(3);
  QueryOracle a(path, rng);
  QueryOracle b(star, rng);
  QueryOracle c(isolated, rng);
  EXPECT_EQ(a.degree(1), 2u);
  EXPECT_EQ(b.degree(0), 5u);
  EXPECT_EQ(c.degree(1), 0u);
}

TEST(QueryOracleTest, NeighborAnswers) {
  const Graph g = Path3();
  SeededStream rng(4);
  QueryOracle oracle(g, rng);
  EXPECT_EQ(oracle.neighbor(1, 1), std::optional<VertexId>(0));
  EXPECT_EQ(oracle.neighbor(1, 2), std::optional<VertexId>(2));
  EXPECT_EQ(oracle.neighbor(0, 2), std::nullopt);
  EXPECT_EQ(oracle.neighbor(0, 0), std::nullopt);
  const Graph er = Generate("er:40,0.2", 9);
  QueryOracle big(er, rng);
  for (VertexId v = 0; v < er.num_vertices(); ++v) {
    const auto d = er.degree(v);
    if (d == 0) continue;
    EXPECT_EQ(big.neighbor(v, d), std::optional<VertexId>(er.neighbors(v).back()));
    EXPECT_EQ(big.neighbor(v, d + 1), std::nullopt);
  }
}

TEST(QueryOracleTest, PairAnswers) {
  const Graph g = Path3();
  SeededStream rng(5);
  QueryOracle oracle(g, rng);
  EXPECT_TRUE(oracle.pair(0, 1));
  EXPECT_FALSE(oracle.pair(0, 2));
  EXPECT_FALSE(oracle.pair(1, 1));
}

TEST(QueryOracleTest, OutOfRangeVertexThrows) {
  const Graph g = Path3();
  SeededStream rng(5);
  QueryOracle oracle(g, rng);
  EXPECT_THROW(oracle.degree(3), std::out_of_range);
  EXPECT_THROW(oracle.neighbor(7, 1), std::out_of_range);
  EXPECT_THROW(oracle.pair(0, 3), std::out_of_range);
  EXPECT_EQ(oracle.counts().total(), 0u);
}

TEST(QueryOracleTest, TranscriptReplaysUnderSameSeed) {
  const Graph g = Generate("clique_union:er:50,0.1,6", 2);
  const SamplerConfig cfg =
      SamplerConfig::Make(g.num_vertices(), g.num_directed_edges(), 0.2);
  auto transcript = [&](std::uint64_t seed) {
    SeededStream rng(seed);
    QueryOracle oracle(g, rng);
    TranscriptRecorder recorder;
    oracle.set_observer(&recorder);
    for (int i = 0; i < 20; ++i) SampleEdgeAlmostUniformly(oracle, cfg);
    return recorder.records();
  };
  const auto first = transcript(77);
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, transcript(77));
  EXPECT_NE(first, transcript(78));
}

TEST(QueryOracleTest, SamplerIssuesNoPairQueries) {
  for (const char* spec : {"star:30", "clique_union:er:80,0.1,9", "er:300,0.05"}) {
    const Graph g = Generate(spec, 1);
    SeededStream rng(6);
    QueryOracle oracle(g, rng);
    for (double eps : {0.05, 0.25, 0.45}) {
      const SamplerConfig cfg =
          SamplerConfig::Make(g.num_vertices(), g.num_directed_edges(), eps);
      for (int i = 0; i < 50; ++i) SampleEdgeAlmostUniformly(oracle, cfg);
    }
    EXPECT_EQ(oracle.counts().pair, 0u) << spec;
    EXPECT_GT(oracle.counts().total(), 0u);
  }
}

TEST(QueryOracleTest, RelabelingIsConsistent) {
  const Graph g = Path3();
  SeededStream rng(8);
  QueryOracle oracle(g, rng);
  // internal 0 -> label 2, 1 -> 0, 2 -> 1: the path becomes 2 - 0 - 1.
  oracle.set_relabeling({2, 0, 1});
  EXPECT_EQ(oracle.degree(0), 2u);
  EXPECT_EQ(oracle.degree(2), 1u);
  EXPECT_TRUE(oracle.pair(2, 0));
  EXPECT_FALSE(oracle.pair(2, 1));
  EXPECT_EQ(oracle.neighbor(0, 1), std::optional<VertexId>(2));
  EXPECT_THROW(oracle.set_relabeling({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(oracle.set_relabeling({0, 1}), std::invalid_argument);
}

TEST(QueryOracleTest, BudgetStopsBeforeAnswering) {
  const Graph g = Path3();
  SeededStream rng(9);
  QueryOracle oracle(g, rng);
  oracle.random_vertex();
  oracle.set_budget(2);
  oracle.degree(0);
  oracle.degree(1);
  EXPECT_THROW(oracle.degree(2), QueryBudgetExhausted);
  EXPECT_EQ(oracle.counts().total(), 3u);
  oracle.clear_budget();
  EXPECT_NO_THROW(oracle.degree(2));
}

TEST(QueryOracleTest, CountsSerializeWithTotal) {
  const QueryCounts counts{1, 2, 3, 4};
  const nlohmann::json j = counts;
  EXPECT_EQ(j["vertex"], 1);
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["neighbor"], 3);
  EXPECT_EQ(j["pair"], 4);
  EXPECT_EQ(j["total"], 10);
}

}  // namespace
}  // namespace edge_sampler
