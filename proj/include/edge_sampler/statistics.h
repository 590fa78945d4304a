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

#ifndef EDGE_SAMPLER_STATISTICS_H_
#define EDGE_SAMPLER_STATISTICS_H_

#include <cstdint>
#include <span>

namespace edge_sampler {

struct GoodnessOfFit {
  double chi_square = 0;
  std::uint64_t degrees_of_freedom = 0;
  double p_value = 1;
  // max |count - N p| / sqrt(N p (1 - p)) over cells with 0 < p < 1.
  double max_abs_z = 0;
  // A cell with zero expected probability received observations.
  bool impossible_cell_hit = false;
};

// Pearson chi-square of `counts` against `probabilities` (same length,
// summing to 1). Cells with probability zero do not contribute degrees of
// freedom; any count in one forces p_value to 0.
GoodnessOfFit ChiSquareTest(std::span<const std::uint64_t> counts,
                            std::span<const double> probabilities);

// Upper tail of the chi-square distribution.
double ChiSquareSurvival(double statistic, double degrees_of_freedom);

// sqrt(p (1 - p) / trials), the standard error of a binomial proportion.
double BinomialStandardError(double p, std::uint64_t trials);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
};
// Ordinary least squares of y on x. Needs two distinct x values.
LinearFit FitLine(std::span<const double> x, std::span<const double> y);

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_STATISTICS_H_
