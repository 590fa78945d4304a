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

#ifndef EDGE_SAMPLER_CLI_H_
#define EDGE_SAMPLER_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace edge_sampler {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSamplerFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Runs one command line; `args` excludes the program name. Reports go to
// `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Rounds every floating-point number in `j` to 12 significant digits.
void RoundFloats(nlohmann::json& j);

// "%.12g".
std::string FormatNumber(double value);

}  // namespace edge_sampler

#endif  // EDGE_SAMPLER_CLI_H_
