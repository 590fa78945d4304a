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

#include "support/graph_enumeration.h"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "edge_sampler/generators.h"

namespace edge_sampler::testing {
namespace {

using Adjacency = std::array<std::uint8_t, kMaxEnumeratedVertices>;

bool Adjacent(const Adjacency& adj, int a, int b) { return (adj[a] >> b) & 1; }

std::uint32_t CodeUnder(const Adjacency& adj, int n, const std::vector<int>& at) {
  std::uint32_t code = 0;
  int bit = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q, ++bit) {
      if (Adjacent(adj, at[p], at[q])) code |= 1u << bit;
    }
  }
  return code;
}

// Colour refinement from degrees; colours are isomorphism invariant.
std::vector<int> RefinedColours(const Adjacency& adj, int n) {
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = __builtin_popcount(adj[v]);
  for (int classes = -1;;) {
    std::vector<std::pair<int, std::vector<int>>> signature(n);
    for (int v = 0; v < n; ++v) {
      signature[v].first = colour[v];
      for (int w = 0; w < n; ++w) {
        if (Adjacent(adj, v, w)) signature[v].second.push_back(colour[w]);
      }
      std::sort(signature[v].second.begin(), signature[v].second.end());
    }
    std::vector<std::pair<int, std::vector<int>>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
          distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == classes) return colour;
    classes = static_cast<int>(distinct.size());
  }
}

std::uint32_t Canonical(const Adjacency& adj, int n) {
  const std::vector<int> colour = RefinedColours(adj, n);
  std::map<int, std::vector<int>> by_colour;
  for (int v = 0; v < n; ++v) by_colour[colour[v]].push_back(v);
  std::vector<std::vector<int>> groups;
  for (auto& [c, members] : by_colour) groups.push_back(members);

  std::uint32_t best = ~0u;
  std::vector<int> at;
  for (;;) {
    at.clear();
    for (const auto& g : groups) at.insert(at.end(), g.begin(), g.end());
    best = std::min(best, CodeUnder(adj, n, at));
    std::size_t g = groups.size();
    while (g > 0 && !std::next_permutation(groups[g - 1].begin(),
                                           groups[g - 1].end())) {
      --g;
    }
    if (g == 0) return best;
  }
}

Adjacency Decode(std::uint32_t code, int n) {
  Adjacency adj{};
  int bit = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q, ++bit) {
      if ((code >> bit) & 1) {
        adj[p] |= static_cast<std::uint8_t>(1u << q);
        adj[q] |= static_cast<std::uint8_t>(1u << p);
      }
    }
  }
  return adj;
}

Graph ToGraph(const Adjacency& adj, int n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (Adjacent(adj, a, b)) edges.emplace_back(a, b);
    }
  }
  return Graph::FromEdges(edges, static_cast<VertexId>(n));
}

const std::vector<std::uint32_t>& CodesFor(int n) {
  static std::vector<std::vector<std::uint32_t>> levels = {{}, {0}};
  while (static_cast<int>(levels.size()) <= n) {
    const int size = static_cast<int>(levels.size());
    std::set<std::uint32_t> next;
    // Every connected graph has a vertex whose removal leaves it connected,
    // so extending each smaller representative by one vertex reaches all.
    for (std::uint32_t code : levels.back()) {
      const Adjacency base = Decode(code, size - 1);
      for (unsigned subset = 1; subset < (1u << (size - 1)); ++subset) {
        Adjacency adj = base;
        adj[size - 1] = static_cast<std::uint8_t>(subset);
        for (int v = 0; v < size - 1; ++v) {
          if ((subset >> v) & 1) adj[v] |= static_cast<std::uint8_t>(1u << (size - 1));
        }
        next.insert(Canonical(adj, size));
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels[n];
}

Adjacency FromGraph(const Graph& graph) {
  Adjacency adj{};
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    for (VertexId w : graph.neighbors(v)) {
      adj[v] |= static_cast<std::uint8_t>(1u << w);
    }
  }
  return adj;
}

}  // namespace

std::vector<Graph> ConnectedGraphs(VertexId n) {
  if (n < 1 || n > kMaxEnumeratedVertices) {
    throw std::invalid_argument("ConnectedGraphs supports 1 <= n <= 8");
  }
  std::vector<Graph> graphs;
  for (std::uint32_t code : CodesFor(static_cast<int>(n))) {
    graphs.push_back(ToGraph(Decode(code, static_cast<int>(n)), static_cast<int>(n)));
  }
  return graphs;
}

std::uint32_t CanonicalCode(const Graph& graph) {
  if (graph.num_vertices() > kMaxEnumeratedVertices) {
    throw std::invalid_argument("CanonicalCode supports n <= 8");
  }
  return Canonical(FromGraph(graph), static_cast<int>(graph.num_vertices()));
}

std::vector<NamedGraph> SuiteGraphs() {
  const std::vector<std::string> specs = {
      "path:2",          "path:10",
      "path:200",        "cycle:100",
      "star:5",          "star:50",
      "star:1000",       "clique:3",
      "clique:10",       "clique:60",
      "clique_union:path:4,3",
      "clique_union:er:30,0.2,4",
      "clique_union:er:200,0.05,auto",
      "clique_union:star:100,12",
      "clique_union:er:2000,0.01,auto",
      "er:50,0.2",       "er:200,0.05",
      "er:500,0.02",     "er:1000,0.01",
      "er:2000,0.005",   "er:2000,0.01",
      "er:1000,0.1",
  };
  std::vector<NamedGraph> suite;
  for (const std::string& spec : specs) suite.push_back({spec, Generate(spec, 1)});

  // Adjacent hubs that stay heavy for every eps in (0.05, 0.45): the only
  // shapes here where the attempt law is not flat.
  std::vector<std::pair<VertexId, VertexId>> edges = {{0, 1}};
  for (VertexId leaf = 2; leaf < 1002; ++leaf) edges.emplace_back(leaf < 502 ? 0 : 1, leaf);
  suite.push_back({"double-star:500", Graph::FromEdges(edges, 1002)});
  edges = {{0, 1}};
  for (VertexId leaf = 2; leaf < 302; ++leaf) {
    edges.emplace_back(0, leaf);
    edges.emplace_back(1, leaf);
  }
  suite.push_back({"hub-pair:300", Graph::FromEdges(edges, 302)});
  return suite;
}

}  // namespace edge_sampler::testing
