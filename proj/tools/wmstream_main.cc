// Copyright 2026 The wmstream Authors
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

// wmstream: estimate, oracle, gen and eval subcommands.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wmstream/errors.h"
#include "wmstream/estimator.h"
#include "wmstream/generators.h"
#include "wmstream/harness.h"
#include "wmstream/oracle.h"
#include "wmstream/reduction.h"
#include "wmstream/stream.h"

namespace {

using namespace wmstream;
using harness::ExitCodeFor;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  }
}

nlohmann::ordered_json EdgesToJson(const std::vector<Edge>& edges) {
  auto json = nlohmann::ordered_json::array();
  for (const Edge& e : edges) json.push_back({e.u, e.v, e.w});
  return json;
}

struct EstimateArgs {
  std::string stream;
  double epsilon = 0.5;
  double delta = 0.1;
  std::string estimator = "exact";
  bool verify = false;
  std::string out;
};

int CmdEstimate(const EstimateArgs& args) {
  const Stream stream = ParseStream(ReadFile(args.stream));
  const EstimatorKind kind = *ParseEstimatorKind(args.estimator);
  const RunReport report = Run(stream, RunOptions{args.epsilon, args.delta, kind});

  int code = harness::kExitOk;
  auto json = nlohmann::ordered_json::parse(ReportToJson(report));
  if (args.verify) {
    nlohmann::ordered_json verify;
    const GraphSnapshot snapshot = Replay(stream.header, stream.updates);
    if (snapshot.edges.size() > oracle::kMaxEdges) {
      verify["skipped"] = "graph exceeds oracle capacity";
    } else {
      const double lambda = SpecFor(kind, report.delta_prime).lambda;
      const auto optimum = oracle::ExactMwm(snapshot);
      const bool sandwich =
          SandwichHolds(report.estimate, optimum.value, lambda, args.epsilon);
      verify["oracle"] = optimum.value;
      verify["lambda"] = lambda;
      verify["bound"] = 2.0 * lambda * (1.0 + args.epsilon);
      verify["sandwich"] = sandwich;
      verify["lemma1"] = CheckLemma1(report);
      verify["observations"] = CheckObservations(report);
      if (!sandwich || !CheckLemma1(report) || !CheckObservations(report)) {
        code = harness::kExitInvariant;
      }
    }
    json["verify"] = verify;
  }
  WriteOutput(args.out, json.dump(2) + "\n");
  return code;
}

int CmdOracle(const std::string& path, const std::string& mode) {
  const Stream stream = ParseStream(ReadFile(path));
  const GraphSnapshot snapshot = Replay(stream.header, stream.updates);
  nlohmann::ordered_json json;
  json["mode"] = mode;
  if (mode == "arboricity") {
    json["value"] = oracle::Arboricity(snapshot);
  } else {
    const auto result =
        mode == "mwm" ? oracle::ExactMwm(snapshot) : oracle::ExactMcm(snapshot);
    json["value"] = result.value;
    json["witness"] = EdgesToJson(result.witness);
  }
  std::cout << json.dump(2) << "\n";
  return harness::kExitOk;
}

struct GenArgs {
  std::string family = "forest-union";
  std::string weights = "constant";
  std::string order = "as-generated";
  gen::GenConfig config;
  std::string out;
};

int CmdGen(GenArgs args) {
  auto family = gen::ParseFamily(args.family);
  auto weights = gen::ParseWeightDist(args.weights);
  auto order = gen::ParseOrder(args.order);
  args.config.family = *family;
  args.config.weights = *weights;
  args.config.order = *order;
  WriteOutput(args.out, SerializeStream(gen::Generate(args.config)));
  return harness::kExitOk;
}

struct EvalArgs {
  std::string suite;
  std::string out;
  int jobs = 1;
  bool timing = false;
};

int CmdEval(const EvalArgs& args) {
  const auto runs = harness::ParseSuite(ReadFile(args.suite));
  const auto rows = harness::EvaluateSuite(runs, args.jobs);
  WriteOutput(args.out, harness::RowsToCsv(rows, {args.timing}));
  for (const auto& row : rows) {
    if (row.error) {
      std::cerr << "run " << row.run << ": " << row.error_message << "\n";
    } else if (!row.ok()) {
      std::cerr << "run " << row.run << ": invariant check failed"
                << (row.lemma1_ok ? "" : " [lemma1]")
                << (row.obs_ok ? "" : " [observations]")
                << (row.lemma2_ok ? "" : " [lemma2]")
                << (row.sandwich_ok ? "" : " [sandwich]")
                << (row.contract_ok ? "" : " [contract]") << "\n";
    }
  }
  return harness::SuiteExitCode(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming maximum weighted matching estimation"};
  app.require_subcommand(1);

  const std::vector<std::string> estimator_names{"exact", "exact-offline", "greedy"};

  EstimateArgs estimate;
  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate w(M*) of a stream");
  estimate_cmd->add_option("--stream", estimate.stream, "Stream file")->required();
  estimate_cmd->add_option("--epsilon", estimate.epsilon, "Bucket granularity in (0, 1]");
  estimate_cmd->add_option("--delta", estimate.delta, "Overall failure budget in (0, 1)");
  estimate_cmd->add_option("--estimator", estimate.estimator)
      ->check(CLI::IsMember(estimator_names));
  estimate_cmd->add_flag("--verify", estimate.verify,
                         "Compare against the exact oracle when the graph is small");
  estimate_cmd->add_option("--out", estimate.out, "Output file (default stdout)");

  std::string oracle_stream;
  std::string oracle_mode = "mwm";
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact values on a small graph");
  oracle_cmd->add_option("--stream", oracle_stream, "Stream file")->required();
  oracle_cmd->add_option("--mode", oracle_mode)
      ->check(CLI::IsMember({"mwm", "mcm", "arboricity"}));

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a weighted edge stream");
  gen_cmd->add_option("--family", gen_args.family)
      ->check(CLI::IsMember({"forest-union", "grid", "erdos-renyi"}));
  gen_cmd->add_option("--n", gen_args.config.n, "Vertex count");
  gen_cmd->add_option("--rows", gen_args.config.rows, "Grid rows");
  gen_cmd->add_option("--cols", gen_args.config.cols, "Grid columns");
  gen_cmd->add_option("--nu", gen_args.config.nu, "Forest count");
  gen_cmd->add_option("--p", gen_args.config.p, "Edge probability");
  gen_cmd->add_option("--weights", gen_args.weights)
      ->check(CLI::IsMember({"uniform-int", "powerlaw", "constant"}));
  gen_cmd->add_option("--wmax", gen_args.config.wmax, "Maximum weight W");
  gen_cmd->add_option("--alpha", gen_args.config.alpha, "Power-law exponent");
  gen_cmd->add_option("--order", gen_args.order)
      ->check(CLI::IsMember({"as-generated", "shuffled", "heavy-first", "light-first"}));
  gen_cmd->add_option("--churn", gen_args.config.churn, "Dynamic churn fraction");
  gen_cmd->add_option("--seed", gen_args.config.seed, "RNG seed");
  gen_cmd->add_option("--out", gen_args.out, "Output file (default stdout)");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Run an evaluation suite");
  eval_cmd->add_option("--suite", eval.suite, "Suite file")->required();
  eval_cmd->add_option("--out", eval.out, "CSV output (default stdout)");
  eval_cmd->add_option("--jobs", eval.jobs, "Worker threads")->check(CLI::PositiveNumber);
  eval_cmd->add_flag("--timing", eval.timing, "Add an elapsed_ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : harness::kExitUsage;
  }

  try {
    if (*estimate_cmd) return CmdEstimate(estimate);
    if (*oracle_cmd) return CmdOracle(oracle_stream, oracle_mode);
    if (*gen_cmd) return CmdGen(gen_args);
    if (*eval_cmd) return CmdEval(eval);
  } catch (const Error& e) {
    std::cerr << "error (" << ToString(e.kind()) << "): " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  }
  return harness::kExitUsage;
}
