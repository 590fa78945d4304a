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

// Exhaustive enumeration of a randomized procedure's sample space.
//
// ScriptedStream answers Uniform(bound) from a script and extends the script
// with 0 when it runs out. After each run Advance() moves to the next script
// in odometer order, so every sequence of choices the procedure can make is
// visited exactly once, each with probability 1 / (product of the bounds).

#ifndef EDGE_SAMPLER_TESTS_SUPPORT_SCRIPTED_STREAM_H_
#define EDGE_SAMPLER_TESTS_SUPPORT_SCRIPTED_STREAM_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "edge_sampler/random.h"

namespace edge_sampler::testing {

class ScriptedStream final : public RandomStream {
 public:
  std::uint64_t Uniform(std::uint64_t bound) override;

  // Call after a run. Returns false once every script has been visited.
  bool Advance();

  // Product of the bounds drawn in the run just finished. Throws if the run
  // did not replay its script exactly.
  std::uint64_t PathDenominator() const;

 private:
  std::vector<std::uint64_t> choices_;
  std::vector<std::uint64_t> bounds_;
  std::size_t position_ = 0;
};

template <typename Outcome>
struct EnumeratedLaw {
  std::map<Outcome, mpq_class> probability;
  std::uint64_t paths = 0;

  mpq_class Of(const Outcome& outcome) const {
    const auto it = probability.find(outcome);
    return it == probability.end() ? mpq_class(0) : it->second;
  }
};

// `run` maps a RandomStream to an outcome (ordered, copyable).
template <typename Outcome, typename Run>
EnumeratedLaw<Outcome> Enumerate(Run&& run) {
  // Counts per outcome per path denominator; rationals only at the end.
  std::map<Outcome, std::map<std::uint64_t, std::uint64_t>> tally;
  ScriptedStream stream;
  EnumeratedLaw<Outcome> law;
  do {
    Outcome outcome = run(stream);
    ++tally[outcome][stream.PathDenominator()];
    ++law.paths;
  } while (stream.Advance());
  for (const auto& [outcome, by_denominator] : tally) {
    mpq_class total = 0;
    for (const auto& [denominator, count] : by_denominator) {
      total += mpq_class(mpz_class(static_cast<unsigned long>(count)),
                         mpz_class(static_cast<unsigned long>(denominator)));
    }
    total.canonicalize();
    law.probability[outcome] = total;
  }
  return law;
}

}  // namespace edge_sampler::testing

#endif  // EDGE_SAMPLER_TESTS_SUPPORT_SCRIPTED_STREAM_H_
