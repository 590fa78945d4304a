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

#ifndef EDGE_SAMPLER_GRAPH_H_
#define EDGE_SAMPLER_GRAPH_H_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edge_sampler {

using VertexId = std::uint32_t;
using EdgeCount = std::uint64_t;

// An ordered pair (origin, target) with target adjacent to origin. Every
// undirected edge {u, v} contributes the two directed edges (u, v) and (v, u).
struct DirectedEdge {
  VertexId origin = 0;
  VertexId target = 0;

  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// Unordered pair stored with lo < hi.
struct UndirectedEdge {
  VertexId lo = 0;
  VertexId hi = 0;

  static UndirectedEdge Of(DirectedEdge e) {
    return e.origin < e.target ? UndirectedEdge{e.origin, e.target}
                               : UndirectedEdge{e.target, e.origin};
  }
  friend auto operator<=>(const UndirectedEdge&,
                          const UndirectedEdge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph in CSR form. Vertices are the dense ids 0..n-1 and
// each vertex keeps its neighbors in first-appearance order of the input edge
// list; that order is what 1-based neighbor queries index into. Immutable after
// construction.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError naming the offending pair on a self-loop, a duplicate
  // edge (in either orientation) or an id >= num_vertices.
  static Graph FromEdges(std::span<const std::pair<VertexId, VertexId>> edges,
                         VertexId num_vertices);

  VertexId num_vertices() const { return num_vertices_; }
  // m in the directed-edge convention: sum of all degrees.
  EdgeCount num_directed_edges() const { return targets_.size(); }
  EdgeCount num_undirected_edges() const { return targets_.size() / 2; }

  EdgeCount degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], degree(v)};
  }
  bool has_edge(VertexId v, VertexId w) const;
  EdgeCount max_degree() const;

  // Each undirected edge once, in the order it was given at construction.
  const std::vector<std::pair<VertexId, VertexId>>& edge_list() const {
    return edge_list_;
  }

  // All m directed edges, grouped by origin in neighbor order.
  std::vector<DirectedEdge> directed_edges() const;

  // Symmetry, simplicity and degree-sum consistency; true for any graph built
  // through FromEdges.
  bool CheckInvariants() const;

 private:
  VertexId num_vertices_ = 0;
  std::vector<EdgeCount> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<VertexId> sorted_targets_;
  std::vector<std::pair<VertexId, VertexId>> edge_list_;
};

// Light/heavy split at threshold theta: v is light iff d(v) <= theta. A
// directed edge is light or heavy according to its origin.
struct DegreePartition {
  EdgeCount theta = 1;
  std::vector<VertexId> light_vertices;
  std::vector<VertexId> heavy_vertices;
  EdgeCount light_edges = 0;
  EdgeCount heavy_edges = 0;
  std::vector<bool> is_heavy;

  bool heavy(VertexId v) const { return is_heavy[v]; }
};

DegreePartition Partition(const Graph& graph, EdgeCount theta);

// |neighbors(v) ∩ light vertices| under the given partition.
EdgeCount LightDegree(const Graph& graph, const DegreePartition& partition,
                      VertexId v);

std::string ToString(DirectedEdge e);

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_GRAPH_H_
