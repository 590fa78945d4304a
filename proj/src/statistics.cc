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

#include "edge_sampler/statistics.h"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace edge_sampler {

double ChiSquareSurvival(double statistic, double degrees_of_freedom) {
  if (degrees_of_freedom <= 0) return 1.0;
  if (statistic <= 0) return 1.0;
  return boost::math::gamma_q(degrees_of_freedom / 2.0, statistic / 2.0);
}

GoodnessOfFit ChiSquareTest(std::span<const std::uint64_t> counts,
                            std::span<const double> probabilities) {
  if (counts.size() != probabilities.size()) {
    throw std::invalid_argument("counts and probabilities differ in length");
  }
  GoodnessOfFit fit;
  const double total =
      static_cast<double>(std::accumulate(counts.begin(), counts.end(),
                                          std::uint64_t{0}));
  std::uint64_t cells = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double p = probabilities[i];
    const auto observed = static_cast<double>(counts[i]);
    if (p <= 0) {
      if (counts[i] > 0) fit.impossible_cell_hit = true;
      continue;
    }
    ++cells;
    const double expected = total * p;
    fit.chi_square += (observed - expected) * (observed - expected) / expected;
    if (p < 1) {
      const double z =
          std::abs(observed - expected) / std::sqrt(total * p * (1 - p));
      fit.max_abs_z = std::max(fit.max_abs_z, z);
    }
  }
  fit.degrees_of_freedom = cells > 0 ? cells - 1 : 0;
  fit.p_value = fit.impossible_cell_hit
                    ? 0.0
                    : ChiSquareSurvival(fit.chi_square,
                                        static_cast<double>(fit.degrees_of_freedom));
  return fit;
}

double BinomialStandardError(double p, std::uint64_t trials) {
  if (trials == 0) return 0;
  return std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

LinearFit FitLine(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("FitLine needs two or more paired points");
  }
  const double count = static_cast<double>(x.size());
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / count;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / count;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mean_x) * (x[i] - mean_x);
    sxy += (x[i] - mean_x) * (y[i] - mean_y);
  }
  if (sxx == 0) throw std::invalid_argument("FitLine needs distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  return fit;
}

}  // namespace edge_sampler
