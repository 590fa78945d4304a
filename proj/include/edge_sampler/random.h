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

#ifndef EDGE_SAMPLER_RANDOM_H_
#define EDGE_SAMPLER_RANDOM_H_

#include <cstdint>
#include <random>

namespace edge_sampler {

// Source of every random choice a sampler makes. Samplers only ever ask for a
// uniform index in [0, bound), so tests can substitute a scripted stream that
// walks the whole choice tree.
class RandomStream {
 public:
  virtual ~RandomStream() = default;

  // Uniform in [0, bound). bound must be positive.
  virtual std::uint64_t Uniform(std::uint64_t bound) = 0;

  bool Coin() { return Uniform(2) == 1; }
};

// splitmix64 finalizer, used to derive independent seeds per worker/trial.
constexpr std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SeededStream final : public RandomStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(MixSeed(seed, 0)) {}

  std::uint64_t Uniform(std::uint64_t bound) override {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }
  double UniformReal() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_RANDOM_H_
