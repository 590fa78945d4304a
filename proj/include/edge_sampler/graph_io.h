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

#ifndef EDGE_SAMPLER_GRAPH_IO_H_
#define EDGE_SAMPLER_GRAPH_IO_H_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "edge_sampler/graph.h"

namespace edge_sampler {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list text: one `u v` pair per line, `#` lines ignored, optional header
// `n <count>` (otherwise n = max id + 1). Malformed lines raise GraphError with
// the line number; structural problems surface as GraphError from FromEdges.
Graph ReadEdgeList(std::istream& in);
// Throws IoError if the file cannot be opened.
Graph ReadEdgeListFile(const std::string& path);

void WriteEdgeList(const Graph& graph, std::ostream& out);
void WriteEdgeListFile(const Graph& graph, const std::string& path);

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_GRAPH_IO_H_
