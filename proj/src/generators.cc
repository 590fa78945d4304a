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

#include "edge_sampler/generators.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "edge_sampler/random.h"

namespace edge_sampler {
namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Keeps generated graphs addressable by 32-bit ids with room to spare.
constexpr std::uint64_t kMaxGeneratedVertices = 1ULL << 28;

std::uint64_t ParseCount(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw GraphError("generator: bad " + std::string(what) + " '" +
                     std::string(text) + "'");
  }
  return value;
}

double ParseProbability(std::string_view text) {
  // from_chars for double is missing from older libstdc++.
  std::string s(text);
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || !(value >= 0.0 && value <= 1.0)) {
    throw GraphError("generator: edge probability must be in [0, 1], got '" +
                     s + "'");
  }
  return value;
}

void Require(bool ok, const std::string& message) {
  if (!ok) throw GraphError("generator: " + message);
}

EdgeList PathEdges(std::uint64_t n) {
  EdgeList edges;
  for (std::uint64_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  }
  return edges;
}

EdgeList CliqueEdges(std::uint64_t k, VertexId offset) {
  EdgeList edges;
  for (std::uint64_t i = 0; i < k; ++i) {
    for (std::uint64_t j = i + 1; j < k; ++j) {
      edges.emplace_back(static_cast<VertexId>(offset + i),
                         static_cast<VertexId>(offset + j));
    }
  }
  return edges;
}

// G(n, p) by geometric skipping over the lower-triangular pair sequence, so
// the cost is O(n + m) rather than O(n^2).
EdgeList ErdosRenyiEdges(std::uint64_t n, double p, std::uint64_t seed) {
  EdgeList edges;
  if (n < 2 || p <= 0.0) return edges;
  if (p >= 1.0) return CliqueEdges(n, 0);
  SeededStream rng(seed);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.UniformReal();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) {
      edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
    }
  }
  return edges;
}

}  // namespace

GeneratorSpec GeneratorSpec::Parse(std::string_view text) {
  const auto colon = text.find(':');
  Require(colon != std::string_view::npos,
          "expected kind:args, got '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);

  GeneratorSpec spec;
  if (kind == "clique_union") {
    const auto comma = args.rfind(',');
    Require(comma != std::string_view::npos,
            "clique_union needs BASE,K, got '" + std::string(args) + "'");
    spec.kind = Kind::kCliqueUnion;
    spec.base = std::make_shared<GeneratorSpec>(Parse(args.substr(0, comma)));
    const std::string_view k = args.substr(comma + 1);
    if (k != "auto") spec.clique_size = ParseCount(k, "clique size");
    return spec;
  }
  if (kind == "er" || kind == "erdos_renyi") {
    const auto comma = args.find(',');
    Require(comma != std::string_view::npos,
            "er needs N,P, got '" + std::string(args) + "'");
    spec.kind = Kind::kErdosRenyi;
    spec.size = ParseCount(args.substr(0, comma), "vertex count");
    spec.probability = ParseProbability(args.substr(comma + 1));
    Require(spec.size >= 1, "er needs at least one vertex");
    Require(spec.size <= kMaxGeneratedVertices, "er is too large");
    return spec;
  }
  if (kind == "path") {
    spec.kind = Kind::kPath;
  } else if (kind == "cycle") {
    spec.kind = Kind::kCycle;
  } else if (kind == "star") {
    spec.kind = Kind::kStar;
  } else if (kind == "clique") {
    spec.kind = Kind::kClique;
  } else {
    throw GraphError("generator: unknown kind '" + std::string(kind) + "'");
  }
  spec.size = ParseCount(args, "size");
  Require(spec.size <= kMaxGeneratedVertices, "size is too large");
  switch (spec.kind) {
    case Kind::kPath:
    case Kind::kClique:
      Require(spec.size >= 1, std::string(kind) + " needs at least 1 vertex");
      break;
    case Kind::kCycle:
      Require(spec.size >= 3, "cycle needs at least 3 vertices");
      break;
    case Kind::kStar:
      Require(spec.size >= 1, "star needs at least 1 leaf");
      break;
    default:
      break;
  }
  return spec;
}

std::string GeneratorSpec::ToString() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kPath:
      out << "path:" << size;
      break;
    case Kind::kCycle:
      out << "cycle:" << size;
      break;
    case Kind::kStar:
      out << "star:" << size;
      break;
    case Kind::kClique:
      out << "clique:" << size;
      break;
    case Kind::kErdosRenyi:
      out << "er:" << size << "," << probability;
      break;
    case Kind::kCliqueUnion:
      out << "clique_union:" << base->ToString() << ",";
      if (clique_size) {
        out << *clique_size;
      } else {
        out << "auto";
      }
      break;
  }
  return out.str();
}

std::uint64_t AutoCliqueSize(EdgeCount base_directed_edges) {
  const std::uint64_t target = 2 * base_directed_edges;
  auto k = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(target)));
  while (k * k < target) ++k;
  while (k > 0 && (k - 1) * (k - 1) >= target) --k;
  return k;
}

GeneratedGraph GenerateWithMetadata(const GeneratorSpec& spec,
                                    std::uint64_t seed) {
  GeneratedGraph out;
  EdgeList edges;
  std::uint64_t n = 0;
  switch (spec.kind) {
    case GeneratorSpec::Kind::kPath:
      n = spec.size;
      edges = PathEdges(n);
      break;
    case GeneratorSpec::Kind::kCycle:
      n = spec.size;
      edges = PathEdges(n);
      edges.emplace_back(static_cast<VertexId>(n - 1), 0);
      break;
    case GeneratorSpec::Kind::kStar:
      n = spec.size + 1;
      for (std::uint64_t leaf = 1; leaf < n; ++leaf) {
        edges.emplace_back(0, static_cast<VertexId>(leaf));
      }
      break;
    case GeneratorSpec::Kind::kClique:
      n = spec.size;
      edges = CliqueEdges(n, 0);
      break;
    case GeneratorSpec::Kind::kErdosRenyi:
      n = spec.size;
      edges = ErdosRenyiEdges(n, spec.probability, seed);
      break;
    case GeneratorSpec::Kind::kCliqueUnion: {
      const Graph base = Generate(*spec.base, seed);
      const std::uint64_t k =
          spec.clique_size.value_or(AutoCliqueSize(base.num_directed_edges()));
      const std::uint64_t base_n = base.num_vertices();
      n = base_n + k;
      Require(n <= kMaxGeneratedVertices, "clique_union is too large");
      edges = base.edge_list();
      const EdgeList clique = CliqueEdges(k, static_cast<VertexId>(base_n));
      edges.insert(edges.end(), clique.begin(), clique.end());

      std::vector<VertexId> relabel(n);
      std::iota(relabel.begin(), relabel.end(), VertexId{0});
      std::mt19937_64 engine(MixSeed(seed, 1));
      std::shuffle(relabel.begin(), relabel.end(), engine);
      for (auto& [u, v] : edges) {
        u = relabel[u];
        v = relabel[v];
      }
      for (std::uint64_t i = base_n; i < n; ++i) {
        out.clique_vertices.push_back(relabel[i]);
      }
      std::sort(out.clique_vertices.begin(), out.clique_vertices.end());
      out.base_undirected_edges = base.num_undirected_edges();
      break;
    }
  }
  out.graph = Graph::FromEdges(edges, static_cast<VertexId>(n));
  if (spec.kind != GeneratorSpec::Kind::kCliqueUnion) {
    out.base_undirected_edges = out.graph.num_undirected_edges();
  }
  return out;
}

Graph Generate(const GeneratorSpec& spec, std::uint64_t seed) {
  return GenerateWithMetadata(spec, seed).graph;
}

Graph Generate(std::string_view spec, std::uint64_t seed) {
  return Generate(GeneratorSpec::Parse(spec), seed);
}

}  // namespace edge_sampler
