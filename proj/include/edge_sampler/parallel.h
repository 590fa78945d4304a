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

#ifndef EDGE_SAMPLER_PARALLEL_H_
#define EDGE_SAMPLER_PARALLEL_H_

#include <cstddef>
#include <cstdint>
#include <functional>

namespace edge_sampler {

// Trials are split into this many chunks, each with its own derived seed, so
// results do not depend on how many threads ran them.
inline constexpr std::size_t kTrialChunks = 16;

// Runs task(i) for i in [0, count) on up to hardware_concurrency threads. The
// first exception thrown by any task is rethrown after all threads join.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& task);

// Number of trials assigned to `chunk` when `trials` are split kTrialChunks
// ways.
std::uint64_t ChunkTrials(std::uint64_t trials, std::size_t chunk);

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_PARALLEL_H_
