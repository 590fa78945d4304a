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

#ifndef EDGE_SAMPLER_GENERATORS_H_
#define EDGE_SAMPLER_GENERATORS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edge_sampler/graph.h"

namespace edge_sampler {

// Deterministic test-graph families. The textual form is `kind:arg1,arg2,...`:
//
//   path:N  cycle:N  star:LEAVES  clique:K  er:N,P
//   clique_union:BASE,K      e.g. clique_union:path:4,3
//   clique_union:BASE,auto   K = ceil(sqrt(2 * m'))
//
// where m' is the directed edge count of BASE. clique_union is the disjoint
// union of BASE and a K-clique with all vertex ids uniformly relabeled.
struct GeneratorSpec {
  enum class Kind { kPath, kCycle, kStar, kClique, kErdosRenyi, kCliqueUnion };

  Kind kind = Kind::kPath;
  std::uint64_t size = 0;  // n for path/cycle/er, leaves for star, k for clique
  double probability = 0;  // er only
  std::shared_ptr<const GeneratorSpec> base;  // clique_union only
  std::optional<std::uint64_t> clique_size;   // clique_union; nullopt = auto

  // Throws GraphError on malformed text or invalid parameters.
  static GeneratorSpec Parse(std::string_view text);
  std::string ToString() const;
};

struct GeneratedGraph {
  Graph graph;
  // Ids of the planted clique after relabeling; empty unless clique_union.
  std::vector<VertexId> clique_vertices;
  // Undirected edges of the base graph (m' / 2 in the directed convention).
  EdgeCount base_undirected_edges = 0;
};

GeneratedGraph GenerateWithMetadata(const GeneratorSpec& spec,
                                    std::uint64_t seed);
Graph Generate(const GeneratorSpec& spec, std::uint64_t seed);
Graph Generate(std::string_view spec, std::uint64_t seed);

// ceil(sqrt(2 * base_directed_edges)), computed in integers.
std::uint64_t AutoCliqueSize(EdgeCount base_directed_edges);

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_GENERATORS_H_
