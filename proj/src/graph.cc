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

#include "edge_sampler/graph.h"

#include <algorithm>
#include <unordered_set>

namespace edge_sampler {
namespace {

std::string PairString(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::uint64_t PairKey(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph Graph::FromEdges(std::span<const std::pair<VertexId, VertexId>> edges,
                       VertexId num_vertices) {
  Graph g;
  g.num_vertices_ = num_vertices;
  std::vector<EdgeCount> degree(num_vertices, 0);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      throw GraphError("vertex id out of range in edge " + PairString(u, v) +
                       " (n = " + std::to_string(num_vertices) + ")");
    }
    if (u == v) throw GraphError("self-loop " + PairString(u, v));
    if (!seen.insert(PairKey(u, v)).second) {
      throw GraphError("duplicate edge " + PairString(u, v));
    }
    ++degree[u];
    ++degree[v];
  }

  g.offsets_.assign(num_vertices + 1, 0);
  for (VertexId v = 0; v < num_vertices; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.targets_.resize(g.offsets_.back());
  std::vector<EdgeCount> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  g.sorted_targets_ = g.targets_;
  for (VertexId v = 0; v < num_vertices; ++v) {
    std::sort(g.sorted_targets_.begin() + g.offsets_[v],
              g.sorted_targets_.begin() + g.offsets_[v + 1]);
  }
  g.edge_list_.assign(edges.begin(), edges.end());
  return g;
}

bool Graph::has_edge(VertexId v, VertexId w) const {
  auto first = sorted_targets_.begin() + offsets_[v];
  auto last = sorted_targets_.begin() + offsets_[v + 1];
  return std::binary_search(first, last, w);
}

EdgeCount Graph::max_degree() const {
  EdgeCount best = 0;
  for (VertexId v = 0; v < num_vertices_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<DirectedEdge> Graph::directed_edges() const {
  std::vector<DirectedEdge> edges;
  edges.reserve(targets_.size());
  for (VertexId v = 0; v < num_vertices_; ++v) {
    for (VertexId w : neighbors(v)) edges.push_back({v, w});
  }
  return edges;
}

bool Graph::CheckInvariants() const {
  if (offsets_.size() != static_cast<std::size_t>(num_vertices_) + 1) {
    return false;
  }
  if (targets_.size() % 2 != 0) return false;
  for (VertexId v = 0; v < num_vertices_; ++v) {
    auto sorted = std::span(sorted_targets_).subspan(offsets_[v], degree(v));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] == v) return false;
      if (i > 0 && sorted[i] == sorted[i - 1]) return false;
      if (!has_edge(sorted[i], v)) return false;
    }
  }
  return true;
}

DegreePartition Partition(const Graph& graph, EdgeCount theta) {
  DegreePartition p;
  p.theta = theta;
  p.is_heavy.assign(graph.num_vertices(), false);
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    const EdgeCount d = graph.degree(v);
    if (d <= theta) {
      p.light_vertices.push_back(v);
      p.light_edges += d;
    } else {
      p.heavy_vertices.push_back(v);
      p.heavy_edges += d;
      p.is_heavy[v] = true;
    }
  }
  return p;
}

EdgeCount LightDegree(const Graph& graph, const DegreePartition& partition,
                      VertexId v) {
  EdgeCount count = 0;
  for (VertexId w : graph.neighbors(v)) {
    if (!partition.heavy(w)) ++count;
  }
  return count;
}

std::string ToString(DirectedEdge e) { return PairString(e.origin, e.target); }

}  // namespace edge_sampler
