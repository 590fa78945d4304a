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

#include "edge_sampler/graph_io.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace edge_sampler {
namespace {

[[noreturn]] void Malformed(std::size_t line_number, const std::string& line) {
  throw GraphError("edge list line " + std::to_string(line_number) +
                   ": cannot parse '" + line + "'");
}

bool ParseId(std::istringstream& fields, std::uint64_t& value) {
  std::string token;
  if (!(fields >> token)) return false;
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    return false;
  }
  try {
    value = std::stoull(token);
  } catch (const std::exception&) {
    return false;
  }
  return value < std::numeric_limits<VertexId>::max();
}

}  // namespace

Graph ReadEdgeList(std::istream& in) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::optional<std::uint64_t> declared_n;
  std::uint64_t max_id_plus_one = 0;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line.substr(first));
    if (line[first] == 'n') {
      std::string tag;
      std::uint64_t n = 0;
      fields >> tag;
      if (tag != "n" || !ParseId(fields, n) || edges.size() > 0 || declared_n) {
        Malformed(line_number, line);
      }
      declared_n = n;
    } else {
      std::uint64_t u = 0;
      std::uint64_t v = 0;
      if (!ParseId(fields, u) || !ParseId(fields, v)) {
        Malformed(line_number, line);
      }
      std::string rest;
      if (fields >> rest) Malformed(line_number, line);
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      max_id_plus_one = std::max({max_id_plus_one, u + 1, v + 1});
    }
  }
  const std::uint64_t n = declared_n.value_or(max_id_plus_one);
  return Graph::FromEdges(edges, static_cast<VertexId>(n));
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  return ReadEdgeList(in);
}

void WriteEdgeList(const Graph& graph, std::ostream& out) {
  out << "n " << graph.num_vertices() << "\n";
  for (const auto& [u, v] : graph.edge_list()) out << u << " " << v << "\n";
}

void WriteEdgeListFile(const Graph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write graph file '" + path + "'");
  WriteEdgeList(graph, out);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace edge_sampler
