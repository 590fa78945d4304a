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

#ifndef EDGE_SAMPLER_QUERY_ORACLE_H_
#define EDGE_SAMPLER_QUERY_ORACLE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "edge_sampler/graph.h"
#include "edge_sampler/random.h"
#include "json.hpp"

namespace edge_sampler {

struct QueryCounts {
  std::uint64_t vertex = 0;
  std::uint64_t degree = 0;
  std::uint64_t neighbor = 0;
  std::uint64_t pair = 0;

  std::uint64_t total() const { return vertex + degree + neighbor + pair; }

  QueryCounts& operator+=(const QueryCounts& other) {
    vertex += other.vertex;
    degree += other.degree;
    neighbor += other.neighbor;
    pair += other.pair;
    return *this;
  }
  friend QueryCounts operator+(QueryCounts a, const QueryCounts& b) {
    return a += b;
  }
  // Counts accrued between two snapshots; `later` must dominate `earlier`.
  friend QueryCounts operator-(const QueryCounts& later,
                               const QueryCounts& earlier) {
    return {later.vertex - earlier.vertex, later.degree - earlier.degree,
            later.neighbor - earlier.neighbor, later.pair - earlier.pair};
  }
  friend bool operator==(const QueryCounts&, const QueryCounts&) = default;
};

// {"vertex", "degree", "neighbor", "pair", "total"}
void to_json(nlohmann::json& j, const QueryCounts& counts);

enum class QueryKind { kVertex, kDegree, kNeighbor, kPair };

// One query and its answer, in the labels the caller sees. For neighbor
// queries `answer` is -1 on fail; for pair queries it is 0 or 1.
struct QueryRecord {
  QueryKind kind = QueryKind::kVertex;
  VertexId vertex = 0;
  std::uint64_t argument = 0;  // neighbor index or second pair vertex
  std::int64_t answer = 0;

  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

class QueryObserver {
 public:
  virtual ~QueryObserver() = default;
  virtual void OnQuery(const QueryRecord& record) = 0;
};

class TranscriptRecorder final : public QueryObserver {
 public:
  void OnQuery(const QueryRecord& record) override {
    records_.push_back(record);
  }
  const std::vector<QueryRecord>& records() const { return records_; }

 private:
  std::vector<QueryRecord> records_;
};

// Raised by a budgeted oracle in place of the first query past its budget.
class QueryBudgetExhausted : public std::runtime_error {
 public:
  QueryBudgetExhausted() : std::runtime_error("query budget exhausted") {}
};

// Metered access to a graph through vertex, degree, neighbor and pair queries.
// Each call bumps exactly one counter. Uniform vertex draws come from the
// attached RandomStream, which samplers also use for their own coins, so one
// seed replays a full query/answer transcript.
//
// An oracle may present the graph under a vertex relabeling (label = π(v)) and
// may enforce a hard total-query budget; both serve the lower-bound
// experiments. Out-of-range vertex ids throw std::out_of_range: they are
// programming errors, not query failures.
class QueryOracle {
 public:
  QueryOracle(const Graph& graph, RandomStream& rng);

  VertexId random_vertex();
  EdgeCount degree(VertexId v);
  // 1-based index; nullopt (fail) when index is 0 or exceeds d(v).
  std::optional<VertexId> neighbor(VertexId v, std::uint64_t index);
  bool pair(VertexId v, VertexId w);

  // n is part of every algorithm's input, so reading it is free.
  VertexId num_vertices() const { return graph_->num_vertices(); }
  const QueryCounts& counts() const { return counts_; }
  RandomStream& rng() { return *rng_; }

  // Ground truth m for the `exact` estimator. Not metered; samplers must not
  // call this.
  EdgeCount unmetered_directed_edge_count() const {
    return graph_->num_directed_edges();
  }

  // label_of[v] is the label under which internal vertex v is presented.
  // Must be a permutation of 0..n-1.
  void set_relabeling(std::vector<VertexId> label_of);
  // Queries beyond `total` (counted from now on, all kinds) throw
  // QueryBudgetExhausted without being answered or counted.
  void set_budget(std::uint64_t total);
  void clear_budget() { budget_end_.reset(); }
  void set_observer(QueryObserver* observer) { observer_ = observer; }

 private:
  void Charge();
  void CheckVertex(VertexId v) const;
  VertexId ToInternal(VertexId label) const {
    return internal_of_.empty() ? label : internal_of_[label];
  }
  VertexId ToLabel(VertexId v) const {
    return label_of_.empty() ? v : label_of_[v];
  }
  void Notify(const QueryRecord& record) {
    if (observer_ != nullptr) observer_->OnQuery(record);
  }

  const Graph* graph_;
  RandomStream* rng_;
  QueryCounts counts_;
  std::vector<VertexId> label_of_;
  std::vector<VertexId> internal_of_;
  std::optional<std::uint64_t> budget_end_;
  QueryObserver* observer_ = nullptr;
};

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_QUERY_ORACLE_H_
