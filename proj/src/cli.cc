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

#include "edge_sampler/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "edge_sampler/edge_count.h"
#include "edge_sampler/exact_dist.h"
#include "edge_sampler/experiments.h"
#include "edge_sampler/generators.h"
#include "edge_sampler/graph_io.h"
#include "edge_sampler/query_oracle.h"
#include "edge_sampler/random.h"
#include "edge_sampler/sampler.h"

namespace edge_sampler {

std::string FormatNumber(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void RoundFloats(nlohmann::json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v)) j = std::strtod(FormatNumber(v).c_str(), nullptr);
  } else if (j.is_structured()) {
    for (auto& child : j) RoundFloats(child);
  }
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeedChoice {
  std::uint64_t value = 0;
  std::string source;
};

struct CommonOptions {
  std::string graph_path;
  std::string generate;
  std::uint64_t graph_seed = 1;
  std::optional<std::uint64_t> seed;
  double epsilon = 0.25;
  std::string estimator = "exact";
  std::optional<std::uint64_t> samples;
  std::uint64_t reps = 1;
};

SeedChoice ResolveSeed(const std::optional<std::uint64_t>& flag) {
  if (flag) return {*flag, "flag"};
  if (const char* env = std::getenv("EDGE_SAMPLER_SEED")) {
    std::uint64_t value = 0;
    std::istringstream in(env);
    if (!(in >> value) || !in.eof()) {
      throw UsageError(std::string("EDGE_SAMPLER_SEED is not an unsigned "
                                   "integer: '") + env + "'");
    }
    return {value, "env"};
  }
  std::random_device device;
  const std::uint64_t value =
      (static_cast<std::uint64_t>(device()) << 32) | device();
  return {value, "fresh"};
}

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0 && epsilon < 0.5)) {
    throw UsageError("--epsilon must lie in the open interval (0, 1/2), got " +
                     FormatNumber(epsilon));
  }
}

struct LoadedGraph {
  Graph graph;
  nlohmann::json source;
};

LoadedGraph LoadGraph(const CommonOptions& o) {
  const bool has_file = !o.graph_path.empty();
  const bool has_spec = !o.generate.empty();
  if (has_file == has_spec) {
    throw UsageError("exactly one of --graph FILE or --generate SPEC is required");
  }
  if (has_file) {
    return {ReadEdgeListFile(o.graph_path), {{"graph", o.graph_path}}};
  }
  GeneratorSpec spec;
  try {
    spec = GeneratorSpec::Parse(o.generate);
  } catch (const GraphError& e) {
    throw UsageError(std::string("--generate: ") + e.what());
  }
  return {Generate(spec, o.graph_seed),
          {{"generate", spec.ToString()}, {"graph_seed", o.graph_seed}}};
}

EstimatorParams MakeEstimator(const CommonOptions& o) {
  EstimatorParams params;
  try {
    params.kind = ParseEstimatorKind(o.estimator);
  } catch (const ParameterError& e) {
    throw UsageError(std::string("--estimator: ") + e.what());
  }
  params.samples = o.samples;
  if (o.reps == 0 || o.reps % 2 == 0) {
    throw UsageError("--reps must be odd and positive");
  }
  return params;
}

EdgeEstimate Estimate(QueryOracle& oracle, const EstimatorParams& params,
                      std::uint64_t reps) {
  return reps == 1 ? EstimateEdges(oracle, params)
                   : EstimateEdgesAmplified(oracle, params, reps);
}

nlohmann::json GraphSummary(const Graph& g) {
  return {{"n", g.num_vertices()},
          {"m_directed", g.num_directed_edges()},
          {"m_undirected", g.num_undirected_edges()}};
}

void EmitJson(std::ostream& out, nlohmann::json j) {
  RoundFloats(j);
  out << j.dump() << '\n';
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void WriteFileOrThrow(const std::string& path, const std::string& contents) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << contents;
  if (!file) throw IoError("write to '" + path + "' failed");
}

void AddGraphOptions(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--graph", o.graph_path, "edge-list file");
  cmd->add_option("--generate", o.generate,
                  "generator spec, e.g. er:1000,0.05 or clique_union:path:4,3");
  cmd->add_option("--graph-seed", o.graph_seed, "seed for --generate");
}

void AddSeedOption(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed", o.seed,
                  "sampler seed (default: $EDGE_SAMPLER_SEED, else fresh)");
}

void AddEstimatorOptions(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--estimator", o.estimator, "exact | degree-sum-mc");
  cmd->add_option("--samples", o.samples, "degree samples per estimate");
  cmd->add_option("--reps", o.reps, "median-of-r amplification (odd)");
}

// -- sample -----------------------------------------------------------------

struct SampleOptions {
  CommonOptions common;
  std::uint64_t count = 1;
  bool reuse_estimate = false;
};

int RunSample(const SampleOptions& o, std::ostream& out, std::ostream& err) {
  CheckEpsilon(o.common.epsilon);
  const EstimatorParams params = MakeEstimator(o.common);
  const SeedChoice seed = ResolveSeed(o.common.seed);
  const LoadedGraph loaded = LoadGraph(o.common);
  if (loaded.graph.num_directed_edges() == 0) {
    throw ParameterError("graph has no edges");
  }
  nlohmann::json config = loaded.source;
  config["subcommand"] = "sample";
  config["epsilon"] = o.common.epsilon;
  config["seed"] = seed.value;
  config["seed_source"] = seed.source;
  config["estimator"] = ToString(params.kind);
  if (params.samples) config["samples"] = *params.samples;
  config["reps"] = o.common.reps;
  config["count"] = o.count;
  config["reuse_estimate"] = o.reuse_estimate;
  if (o.reuse_estimate && o.count > 1) {
    err << "warning: --reuse-estimate shares one edge-count estimate across "
           "draws, so the draws are not independent\n";
  }

  SeededStream rng(seed.value);
  QueryOracle oracle(loaded.graph, rng);
  std::optional<EdgeEstimate> shared;
  bool any_failure = false;
  for (std::uint64_t draw = 0; draw < o.count; ++draw) {
    const QueryCounts before = oracle.counts();
    EdgeEstimate estimate;
    if (o.reuse_estimate && shared) {
      estimate = *shared;
      estimate.queries_used = {};
    } else {
      estimate = Estimate(oracle, params, o.common.reps);
      if (o.reuse_estimate) shared = estimate;
    }
    const SamplerConfig cfg = SamplerConfig::Make(
        loaded.graph.num_vertices(), estimate.m_hat, o.common.epsilon);
    const SampleReport report = SampleEdgeAlmostUniformly(oracle, cfg);
    nlohmann::json line{{"config", config},
                        {"draw", draw},
                        {"attempts", report.attempts},
                        {"queries", oracle.counts() - before},
                        {"estimator_queries", estimate.queries_used},
                        {"theta", cfg.theta},
                        {"q", cfg.attempt_budget},
                        {"m_hat", estimate.m_hat},
                        {"m_hat_undirected", estimate.m_hat / 2},
                        {"fallback", report.fallback}};
    if (report.edge) {
      line["edge"] = {report.edge->origin, report.edge->target};
    } else {
      line["failure"] = true;
      any_failure = true;
    }
    EmitJson(out, line);
  }
  return any_failure ? kExitSamplerFailure : kExitOk;
}

// -- estimate ---------------------------------------------------------------

int RunEstimate(const CommonOptions& o, std::ostream& out) {
  const EstimatorParams params = MakeEstimator(o);
  const SeedChoice seed = ResolveSeed(o.seed);
  const LoadedGraph loaded = LoadGraph(o);
  nlohmann::json config = loaded.source;
  config["subcommand"] = "estimate";
  config["seed"] = seed.value;
  config["seed_source"] = seed.source;
  config["estimator"] = ToString(params.kind);
  if (params.samples) config["samples"] = *params.samples;
  config["reps"] = o.reps;

  SeededStream rng(seed.value);
  QueryOracle oracle(loaded.graph, rng);
  const EdgeEstimate estimate = Estimate(oracle, params, o.reps);
  const double truth = static_cast<double>(loaded.graph.num_directed_edges());
  EmitJson(out, {{"config", config},
                 {"graph", GraphSummary(loaded.graph)},
                 {"method", estimate.method},
                 {"m_hat", estimate.m_hat},
                 {"m_hat_undirected", estimate.m_hat / 2},
                 {"ratio_to_true_m", estimate.m_hat / truth},
                 {"queries", estimate.queries_used}});
  return kExitOk;
}

// -- verify -----------------------------------------------------------------

struct VerifyOptions {
  CommonOptions common;
  std::optional<EdgeCount> theta;
};

int RunVerify(const VerifyOptions& o, std::ostream& out) {
  CheckEpsilon(o.common.epsilon);
  const LoadedGraph loaded = LoadGraph(o.common);
  const Graph& g = loaded.graph;
  if (g.num_directed_edges() == 0) throw ParameterError("graph has no edges");
  if (o.theta && *o.theta == 0) throw UsageError("--theta must be >= 1");
  const auto m = static_cast<double>(g.num_directed_edges());
  const EdgeCount theta = o.theta.value_or(ThresholdFor(m, o.common.epsilon));

  nlohmann::json config = loaded.source;
  config["subcommand"] = "verify";
  config["epsilon"] = o.common.epsilon;
  config["theta"] = theta;
  config["theta_source"] = o.theta ? "flag" : "derived";

  const AttemptDistribution dist = ComputeAttemptDistribution(g, theta);
  nlohmann::json report{{"config", config},
                        {"graph", GraphSummary(g)},
                        {"success_probability", dist.success.get_d()},
                        {"lemmas", VerifyLemmaBounds(g, theta, o.common.epsilon)}};
  try {
    report["closeness"] = ConditionalCloseness(g, dist);
    report["vertex_closeness"] = DegreeProportionalCloseness(g, dist);
  } catch (const UndefinedConditional&) {
    report["closeness"] = nullptr;
    report["vertex_closeness"] = nullptr;
    report["note"] = "an attempt never succeeds at this threshold";
  }
  const SamplerConfig cfg =
      SamplerConfig::Make(g.num_vertices(), m, o.common.epsilon);
  report["algorithm"] = cfg;
  report["residual_failure"] = ResidualFailure(g, cfg).get_d();
  EmitJson(out, report);
  return kExitOk;
}

// -- gen --------------------------------------------------------------------

struct GenOptions {
  std::string generate;
  std::uint64_t graph_seed = 1;
  std::string output;
};

int RunGen(const GenOptions& o, std::ostream& out) {
  GeneratorSpec spec;
  try {
    spec = GeneratorSpec::Parse(o.generate);
  } catch (const GraphError& e) {
    throw UsageError(std::string("--generate: ") + e.what());
  }
  const GeneratedGraph generated = GenerateWithMetadata(spec, o.graph_seed);
  WriteEdgeListFile(generated.graph, o.output);
  nlohmann::json line{{"config",
                       {{"subcommand", "gen"},
                        {"generate", spec.ToString()},
                        {"graph_seed", o.graph_seed},
                        {"output", o.output}}},
                      {"graph", GraphSummary(generated.graph)}};
  if (!generated.clique_vertices.empty()) {
    line["clique_vertices"] = generated.clique_vertices;
  }
  EmitJson(out, line);
  return kExitOk;
}

// -- bench ------------------------------------------------------------------

struct ReportOptions {
  std::string format = "json";
  std::string plot_data;
};

void CheckFormat(const ReportOptions& r) {
  if (r.format != "json" && r.format != "csv") {
    throw UsageError("--format must be json or csv, got '" + r.format + "'");
  }
}

struct BenchOptions {
  CommonOptions common;
  std::vector<std::string> specs;
  std::uint64_t trials = 200;
  ReportOptions report;
};

std::vector<std::string> DefaultScalingSpecs() {
  std::vector<std::string> specs;
  for (std::uint64_t n = 512; n <= 8192; n *= 2) {
    specs.push_back("er:" + std::to_string(n) + "," +
                    FormatNumber(16.0 / static_cast<double>(n)));
  }
  return specs;
}

int RunBench(const BenchOptions& o, std::ostream& out) {
  CheckEpsilon(o.common.epsilon);
  CheckFormat(o.report);
  ScalingOptions options;
  options.epsilon = o.common.epsilon;
  options.trials = o.trials;
  options.estimator = MakeEstimator(o.common);
  options.graph_seed = o.common.graph_seed;
  const SeedChoice seed = ResolveSeed(o.common.seed);
  options.seed = seed.value;
  if (o.common.reps != 1) throw UsageError("bench does not support --reps");
  const std::vector<std::string> specs =
      o.specs.empty() ? DefaultScalingSpecs() : o.specs;
  for (const std::string& s : specs) {
    try {
      GeneratorSpec::Parse(s);
    } catch (const GraphError& e) {
      throw UsageError(std::string("--generate: ") + e.what());
    }
  }
  const ScalingResult result = RunScaling(specs, options);

  nlohmann::json config{{"subcommand", "bench"},
                        {"epsilon", options.epsilon},
                        {"trials", options.trials},
                        {"seed", seed.value},
                        {"seed_source", seed.source},
                        {"graph_seed", options.graph_seed},
                        {"estimator", ToString(options.estimator.kind)},
                        {"specs", specs}};
  if (o.report.format == "csv") {
    out << "spec,n,m_directed,m_undirected,epsilon,trials,mean_queries,"
           "stddev_queries,failure_rate,fallback_runs,predicted_scale\n";
    for (const ScalingRun& r : result.runs) {
      out << CsvField(r.spec) << ',' << r.n << ',' << r.m << ',' << r.m / 2
          << ',' << FormatNumber(r.epsilon) << ',' << r.trials << ','
          << FormatNumber(r.mean_queries) << ','
          << FormatNumber(r.stddev_queries) << ','
          << FormatNumber(r.failure_rate) << ',' << r.fallback_runs << ','
          << FormatNumber(r.predicted_scale) << '\n';
    }
  } else {
    for (const ScalingRun& r : result.runs) {
      EmitJson(out, {{"config", config}, {"run", r}});
    }
    nlohmann::json summary{{"config", config}, {"summary", true}};
    if (result.fit) {
      summary["loglog_slope"] = result.fit->slope;
      summary["loglog_intercept"] = result.fit->intercept;
    }
    EmitJson(out, summary);
  }
  if (!o.report.plot_data.empty()) {
    std::ostringstream plot;
    plot << "# predicted_scale mean_queries stddev_queries n m_directed\n";
    for (const ScalingRun& r : result.runs) {
      plot << FormatNumber(r.predicted_scale) << ' '
           << FormatNumber(r.mean_queries) << ' '
           << FormatNumber(r.stddev_queries) << ' ' << r.n << ' ' << r.m
           << '\n';
    }
    WriteFileOrThrow(o.report.plot_data, plot.str());
  }
  return kExitOk;
}

// -- lb ---------------------------------------------------------------------

struct LowerBoundCliOptions {
  std::string base = "er:2000,0.01";
  std::vector<std::string> strategies;
  std::vector<std::uint64_t> budgets;
  std::uint64_t trials = 2000;
  std::uint64_t graph_seed = 1;
  std::optional<std::uint64_t> seed;
  double epsilon = 0.25;
  ReportOptions report;
};

int RunLb(const LowerBoundCliOptions& o, std::ostream& out) {
  CheckEpsilon(o.epsilon);
  CheckFormat(o.report);
  GeneratorSpec base;
  try {
    base = GeneratorSpec::Parse(o.base);
  } catch (const GraphError& e) {
    throw UsageError(std::string("--base: ") + e.what());
  }
  LowerBoundOptions options;
  if (!o.strategies.empty()) {
    options.strategies.clear();
    for (const std::string& name : o.strategies) {
      try {
        options.strategies.push_back(ParseStrategy(name));
      } catch (const ParameterError& e) {
        throw UsageError(std::string("--strategy: ") + e.what());
      }
    }
  }
  options.budgets = o.budgets;
  options.trials = o.trials;
  options.graph_seed = o.graph_seed;
  options.epsilon = o.epsilon;
  const SeedChoice seed = ResolveSeed(o.seed);
  options.seed = seed.value;
  const std::vector<LowerBoundRun> runs = RunLowerBound(base, options);

  std::vector<std::string> strategy_names;
  for (Strategy s : options.strategies) strategy_names.push_back(ToString(s));
  nlohmann::json config{{"subcommand", "lb"},
                        {"base", base.ToString()},
                        {"strategies", strategy_names},
                        {"budgets", o.budgets.empty()
                                        ? nlohmann::json("default")
                                        : nlohmann::json(o.budgets)},
                        {"trials", options.trials},
                        {"epsilon", options.epsilon},
                        {"seed", seed.value},
                        {"seed_source", seed.source},
                        {"graph_seed", options.graph_seed}};
  if (o.report.format == "csv") {
    out << "strategy,budget,trials,n,m_directed,clique_size,"
           "clique_directed_edges,returned,return_rate,clique_hit_rate,"
           "clique_fraction,witness_rate,witness_bound,tv_lower_estimate\n";
    for (const LowerBoundRun& r : runs) {
      out << ToString(r.strategy) << ',' << r.budget << ',' << r.trials << ','
          << r.n << ',' << r.m << ',' << r.clique_size << ','
          << r.clique_directed_edges << ',' << r.returned << ','
          << FormatNumber(r.return_rate) << ','
          << FormatNumber(r.clique_hit_rate) << ','
          << FormatNumber(r.clique_fraction) << ','
          << FormatNumber(r.witness_rate) << ','
          << FormatNumber(r.witness_bound) << ','
          << FormatNumber(r.tv_lower_estimate) << '\n';
    }
  } else {
    for (const LowerBoundRun& r : runs) {
      EmitJson(out, {{"config", config}, {"run", r}});
    }
    EmitJson(out, {{"config", config},
                   {"summary", true},
                   {"non_monotone_strategies", FlagNonMonotoneStrategies(runs)}});
  }
  if (!o.report.plot_data.empty()) {
    std::ostringstream plot;
    plot << "# strategy budget clique_hit_rate witness_rate witness_bound "
            "tv_lower_estimate return_rate\n";
    for (const LowerBoundRun& r : runs) {
      plot << ToString(r.strategy) << ' ' << r.budget << ' '
           << FormatNumber(r.clique_hit_rate) << ' '
           << FormatNumber(r.witness_rate) << ' '
           << FormatNumber(r.witness_bound) << ' '
           << FormatNumber(r.tv_lower_estimate) << ' '
           << FormatNumber(r.return_rate) << '\n';
    }
    WriteFileOrThrow(o.report.plot_data, plot.str());
  }
  return kExitOk;
}

void AddReportOptions(CLI::App* cmd, ReportOptions& r) {
  cmd->add_option("--format", r.format, "json | csv");
  cmd->add_option("--plot-data", r.plot_data,
                  "also write gnuplot-ready columns to FILE");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Almost-uniform edge sampling in the local query model",
               "edge_sampler"};
  app.require_subcommand(1);

  SampleOptions sample;
  CLI::App* sample_cmd = app.add_subcommand("sample", "draw edges");
  AddGraphOptions(sample_cmd, sample.common);
  AddSeedOption(sample_cmd, sample.common);
  AddEstimatorOptions(sample_cmd, sample.common);
  sample_cmd->add_option("--epsilon", sample.common.epsilon, "in (0, 1/2)");
  sample_cmd->add_option("--count", sample.count, "number of draws");
  sample_cmd->add_flag("--reuse-estimate", sample.reuse_estimate,
                       "estimate m once for all draws (draws not independent)");

  CommonOptions estimate;
  CLI::App* estimate_cmd = app.add_subcommand("estimate", "estimate m");
  AddGraphOptions(estimate_cmd, estimate);
  AddSeedOption(estimate_cmd, estimate);
  AddEstimatorOptions(estimate_cmd, estimate);

  VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "exact distribution checks");
  AddGraphOptions(verify_cmd, verify.common);
  verify_cmd->add_option("--epsilon", verify.common.epsilon, "in (0, 1/2)");
  verify_cmd->add_option("--theta", verify.theta, "threshold override");

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "query-cost scaling");
  bench_cmd->add_option("--generate", bench.specs,
                        "generator spec (repeatable; default ER n=512..8192)");
  bench_cmd->add_option("--graph-seed", bench.common.graph_seed);
  AddSeedOption(bench_cmd, bench.common);
  AddEstimatorOptions(bench_cmd, bench.common);
  bench_cmd->add_option("--epsilon", bench.common.epsilon, "in (0, 1/2)");
  bench_cmd->add_option("--trials", bench.trials, "trials per graph (>= 30)");
  AddReportOptions(bench_cmd, bench.report);

  LowerBoundCliOptions lb;
  CLI::App* lb_cmd = app.add_subcommand("lb", "hidden-clique experiment");
  lb_cmd->add_option("--base", lb.base, "base generator spec");
  lb_cmd->add_option("--strategy", lb.strategies,
                     "sampler | degree-hunter | blind-guess (repeatable)");
  lb_cmd->add_option("--budget", lb.budgets, "query budget (repeatable)");
  lb_cmd->add_option("--trials", lb.trials);
  lb_cmd->add_option("--graph-seed", lb.graph_seed);
  lb_cmd->add_option("--seed", lb.seed);
  lb_cmd->add_option("--epsilon", lb.epsilon, "in (0, 1/2)");
  AddReportOptions(lb_cmd, lb.report);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "write a generated graph");
  gen_cmd->add_option("--generate", gen.generate, "generator spec")->required();
  gen_cmd->add_option("--graph-seed", gen.graph_seed);
  gen_cmd->add_option("--output", gen.output, "edge-list file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    const auto parsed = app.get_subcommands();
    err << "error: " << e.what() << "\n\n"
        << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  }

  try {
    if (*sample_cmd) return RunSample(sample, out, err);
    if (*estimate_cmd) return RunEstimate(estimate, out);
    if (*verify_cmd) return RunVerify(verify, out);
    if (*bench_cmd) return RunBench(bench, out);
    if (*lb_cmd) return RunLb(lb, out);
    if (*gen_cmd) return RunGen(gen, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const GraphError& e) {
    // Only file contents reach here; generator specs are usage errors.
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const SamplingFailed& e) {
    err << "error: " << e.what() << '\n';
    return kExitSamplerFailure;
  }
  return kExitUsage;
}

}  // namespace edge_sampler
