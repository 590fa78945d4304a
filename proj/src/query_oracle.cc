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

#include <string>

namespace edge_sampler {

void to_json(nlohmann::json& j, const QueryCounts& counts) {
  j = nlohmann::json{{"vertex", counts.vertex},
                     {"degree", counts.degree},
                     {"neighbor", counts.neighbor},
                     {"pair", counts.pair},
                     {"total", counts.total()}};
}

QueryOracle::QueryOracle(const Graph& graph, RandomStream& rng)
    : graph_(&graph), rng_(&rng) {}

void QueryOracle::set_relabeling(std::vector<VertexId> label_of) {
  const VertexId n = graph_->num_vertices();
  if (label_of.size() != n) {
    throw std::invalid_argument("relabeling must cover every vertex");
  }
  std::vector<VertexId> internal_of(n, n);
  for (VertexId v = 0; v < n; ++v) {
    if (label_of[v] >= n || internal_of[label_of[v]] != n) {
      throw std::invalid_argument("relabeling is not a permutation");
    }
    internal_of[label_of[v]] = v;
  }
  label_of_ = std::move(label_of);
  internal_of_ = std::move(internal_of);
}

void QueryOracle::set_budget(std::uint64_t total) {
  budget_end_ = counts_.total() + total;
}

void QueryOracle::Charge() {
  if (budget_end_ && counts_.total() >= *budget_end_) {
    throw QueryBudgetExhausted();
  }
}

void QueryOracle::CheckVertex(VertexId v) const {
  if (v >= graph_->num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range (n = " +
                            std::to_string(graph_->num_vertices()) + ")");
  }
}

VertexId QueryOracle::random_vertex() {
  Charge();
  ++counts_.vertex;
  const auto label = static_cast<VertexId>(rng_->Uniform(num_vertices()));
  Notify({QueryKind::kVertex, label, 0, label});
  return label;
}

EdgeCount QueryOracle::degree(VertexId v) {
  CheckVertex(v);
  Charge();
  ++counts_.degree;
  const EdgeCount d = graph_->degree(ToInternal(v));
  Notify({QueryKind::kDegree, v, 0, static_cast<std::int64_t>(d)});
  return d;
}

std::optional<VertexId> QueryOracle::neighbor(VertexId v, std::uint64_t index) {
  CheckVertex(v);
  Charge();
  ++counts_.neighbor;
  const VertexId internal = ToInternal(v);
  std::optional<VertexId> answer;
  if (index >= 1 && index <= graph_->degree(internal)) {
    answer = ToLabel(graph_->neighbors(internal)[index - 1]);
  }
  Notify({QueryKind::kNeighbor, v, index,
          answer ? static_cast<std::int64_t>(*answer) : -1});
  return answer;
}

bool QueryOracle::pair(VertexId v, VertexId w) {
  CheckVertex(v);
  CheckVertex(w);
  Charge();
  ++counts_.pair;
  const bool adjacent = graph_->has_edge(ToInternal(v), ToInternal(w));
  Notify({QueryKind::kPair, v, w, adjacent ? 1 : 0});
  return adjacent;
}

}  // namespace edge_sampler
