// Copyright 2026 The duolouvain Authors.
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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "duolouvain/aggregation.h"
#include "duolouvain/bipolar_graph.h"
#include "duolouvain/community.h"
#include "duolouvain/errors.h"
#include "duolouvain/io.h"
#include "duolouvain/metrics.h"
#include "duolouvain/partition.h"
#include "duolouvain/planted.h"
#include "duolouvain/reproduce.h"

namespace duolouvain::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Operator flags shared by detect and reproduce. Unset fields keep the
// configuration they are applied to.
struct OperatorFlags {
  std::vector<std::string> phi_neg;
  std::vector<std::string> phi_pos;
  std::string aggregate_neg;
  std::string aggregate_pos;
  std::string psi;
  std::string negation;
  std::optional<double> gamma;

  void Register(CLI::App* app) {
    app->add_option("--phi-neg", phi_neg,
                    "Symmetrization of the negative associated matrices");
    app->add_option("--phi-pos", phi_pos,
                    "Symmetrization of the positive associated matrices");
    app->add_option("--Phi-neg", aggregate_neg,
                    "Aggregation of the negative matrices");
    app->add_option("--Phi-pos", aggregate_pos,
                    "Aggregation of the positive matrices");
    app->add_option("--psi", psi, "Conjunction of the two sides");
    app->add_option("--negation", negation, "Negation (standard)");
  }

  void Apply(PipelineConfig& config) const {
    auto parse_list = [](const std::vector<std::string>& texts) {
      std::vector<AggregatorSpec> out;
      for (const auto& t : texts) out.push_back(AggregatorSpec::Parse(t));
      return out;
    };
    if (!phi_neg.empty()) config.symmetrize_negative = parse_list(phi_neg);
    if (!phi_pos.empty()) config.symmetrize_positive = parse_list(phi_pos);
    if (!aggregate_neg.empty()) {
      config.aggregate_negative = AggregatorSpec::Parse(aggregate_neg);
    }
    if (!aggregate_pos.empty()) {
      config.aggregate_positive = AggregatorSpec::Parse(aggregate_pos);
    }
    if (!psi.empty()) config.combine = AggregatorSpec::Parse(psi);
    if (!negation.empty()) config.negation = NegationSpec::Parse(negation);
    if (gamma) config.graph_weight = *gamma;
  }
};

// A single symmetrization operator is used for every measure; none means
// the arithmetic mean.
void BroadcastSymmetrization(std::vector<AggregatorSpec>& list,
                             std::size_t s) {
  if (list.empty()) list.push_back(AggregatorSpec::Mean());
  if (list.size() == 1) list.resize(s, list.front());
}

json MatrixStats(const WeightedGraph& m) {
  const std::size_t n = m.size();
  double lo = 0.0, hi = 0.0, sum = 0.0;
  std::size_t nonzero = 0;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double w = m(i, j);
      lo = first ? w : std::min(lo, w);
      hi = first ? w : std::max(hi, w);
      first = false;
      sum += w;
      if (w != 0.0) ++nonzero;
    }
  }
  const double pairs = n > 1 ? static_cast<double>(n * (n - 1)) : 1.0;
  return {{"n", n},
          {"min", lo},
          {"max", hi},
          {"mean", sum / pairs},
          {"density", static_cast<double>(nonzero) / pairs},
          {"total_weight", m.TotalWeight()}};
}

std::vector<BipolarFuzzyMeasure> LoadMeasures(
    const std::vector<std::string>& paths) {
  std::vector<BipolarFuzzyMeasure> out;
  for (const auto& path : paths) {
    const json j = io::ReadJsonFile(path);
    try {
      if (j.is_array()) {
        for (const json& item : j) {
          out.push_back(io::BipolarMeasureFromJson(item));
        }
      } else {
        out.push_back(io::BipolarMeasureFromJson(j));
      }
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  return out;
}

void WriteTextFile(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path.string() + "'");
  file << text;
  if (!file) throw InputError("failed writing '" + path.string() + "'");
}

struct DetectArgs {
  std::string graph;
  std::vector<std::string> f_minus;
  std::vector<std::string> f_plus;
  std::vector<std::string> measures;
  std::string config;
  OperatorFlags ops;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string out;
  std::string csv;
};

int Detect(const DetectArgs& args, std::ostream& out) {
  const bool matrices = !args.f_minus.empty() || !args.f_plus.empty();
  if (matrices && !args.measures.empty()) {
    throw InputError("give either --f-minus/--f-plus or --measures, not both");
  }
  if (!matrices && args.measures.empty()) {
    throw InputError("no relations given (--f-minus/--f-plus or --measures)");
  }
  if (args.f_minus.size() != args.f_plus.size()) {
    throw InputError("--f-minus and --f-plus must be given the same number "
                     "of times");
  }

  PipelineConfig config;
  if (!args.config.empty()) {
    config = io::ConfigFromJson(io::ReadJsonFile(args.config));
  }
  args.ops.Apply(config);

  const WeightedGraph graph = io::LoadMatrix(args.graph);
  LouvainOptions louvain;
  louvain.seed = args.seed;

  BipolarDetection result;
  if (matrices) {
    BipolarMultiGraph multi;
    for (const auto& p : args.f_minus) {
      multi.negatives.push_back(io::LoadMatrix(p, graph.size()));
    }
    for (const auto& p : args.f_plus) {
      multi.positives.push_back(io::LoadMatrix(p, graph.size()));
    }
    result = MultipleBipolarDuoLouvain(graph, multi, config, louvain);
  } else {
    ExtendedMultipleBipolarFuzzyGraph extended{graph,
                                               LoadMeasures(args.measures)};
    const std::size_t s = extended.measures.size();
    BroadcastSymmetrization(config.symmetrize_negative, s);
    BroadcastSymmetrization(config.symmetrize_positive, s);
    ShapleyOptions shapley;
    if (args.samples > 0) {
      shapley.method = ShapleyOptions::Method::kSampled;
      shapley.samples = args.samples;
      shapley.seed = args.seed;
    }
    result = MultipleBipolarDuoLouvain(extended, config, louvain, shapley);
  }

  const DetectionResult& d = result.detection;
  const json partition = io::PartitionToJson(d.partition);
  if (!args.out.empty()) io::WriteJsonFile(args.out, partition);
  if (!args.csv.empty()) {
    std::ostringstream text;
    io::WritePartitionCsv(text, d.partition);
    WriteTextFile(args.csv, text.str());
  }

  json inputs = {{"graph", args.graph}};
  if (matrices) {
    inputs["f_minus"] = args.f_minus;
    inputs["f_plus"] = args.f_plus;
  } else {
    inputs["measures"] = args.measures;
    inputs["shapley"] = args.samples > 0
        ? json{{"method", "sampled"}, {"samples", args.samples}}
        : json{{"method", "exact"}};
  }
  const RelationSummary& r = result.relations;
  json report = {
      {"inputs", inputs},
      {"config", io::ConfigToJson(config)},
      {"seed", args.seed},
      {"modularity", d.modularity},
      {"community_count", d.partition.community_count()},
      {"levels", d.levels},
      {"moves", d.moves},
      {"matrices",
       {{"graph", MatrixStats(graph)},
        {"negative", MatrixStats(r.negative)},
        {"positive", MatrixStats(r.positive)},
        {"bipolar", MatrixStats(r.bipolar)},
        {"modularity_matrix", MatrixStats(r.modularity_matrix)}}},
      {"partition", partition}};
  out << report.dump(2) << '\n';
  return kExitOk;
}

struct GenerateArgs {
  int case_id = 1;
  int graph_label = 1;
  int relations_label = 1;
  std::uint64_t seed = 0;
  std::string out;
};

int Generate(const GenerateArgs& args, std::ostream& out) {
  const BenchmarkSpec spec = CaseSpec(args.case_id, args.graph_label,
                                      args.relations_label, args.seed);
  const BenchmarkInstance instance = GenerateInstance(spec);
  const fs::path dir(args.out);
  fs::create_directories(dir);
  io::SaveDenseCsv(dir / "A.csv", instance.graph);
  io::SaveDenseCsv(dir / "Fminus.csv", instance.negative);
  io::SaveDenseCsv(dir / "Fplus.csv", instance.positive);
  io::WriteJsonFile(dir / "gold.json", io::PartitionToJson(instance.gold));
  const json manifest = {
      {"case", spec.case_id},
      {"graph_label", spec.graph_label},
      {"relations_label", spec.relations_label},
      {"seed", spec.seed},
      {"nodes", spec.node_count()},
      {"graph_sizes", spec.graph_sizes},
      {"relation_sizes", spec.relation_sizes},
      {"graph_probabilities",
       {{"alpha", spec.graph_probabilities.alpha},
        {"beta", spec.graph_probabilities.beta}}},
      {"relation_probabilities",
       {{"alpha", spec.relation_probabilities.alpha},
        {"beta", spec.relation_probabilities.beta}}},
      {"graph_blocks", io::PartitionToJson(instance.graph_blocks)},
      {"files",
       {{"graph", "A.csv"},
        {"f_minus", "Fminus.csv"},
        {"f_plus", "Fplus.csv"},
        {"gold", "gold.json"}}}};
  io::WriteJsonFile(dir / "manifest.json", manifest);
  out << json{{"directory", dir.string()}, {"nodes", spec.node_count()}}.dump()
      << '\n';
  return kExitOk;
}

struct EvaluateArgs {
  std::string first;
  std::string second;
};

int Evaluate(const EvaluateArgs& args, std::ostream& out) {
  const Partition x = io::PartitionFromJson(io::ReadJsonFile(args.first));
  const Partition y = io::PartitionFromJson(io::ReadJsonFile(args.second));
  if (x.size() != y.size()) {
    throw InputError("partitions cover " + std::to_string(x.size()) + " and " +
                     std::to_string(y.size()) + " nodes");
  }
  const json report = {{"nmi", NormalizedMutualInformation(x, y)},
                       {"mutual_information", MutualInformation(x, y)},
                       {"entropy", {Entropy(x), Entropy(y)}},
                       {"communities",
                        {x.community_count(), y.community_count()}}};
  out << report.dump(2) << '\n';
  return kExitOk;
}

struct ReproduceArgs {
  int case_id = 1;
  std::vector<double> gammas;
  std::size_t iterations = 100;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  OperatorFlags ops;
  std::string out;
};

std::string TableCsv(const NmiTable& table) {
  std::ostringstream csv;
  csv << "graph_label";
  for (int r = 1; r <= kParameterLabels; ++r) csv << ',' << r;
  csv << '\n' << std::fixed << std::setprecision(4);
  for (int g = 1; g <= kParameterLabels; ++g) {
    csv << g;
    for (int r = 1; r <= kParameterLabels; ++r) csv << ',' << table[g - 1][r - 1];
    csv << '\n';
  }
  return csv.str();
}

// One gamma writes to --out itself; several write <stem>_gamma<value><ext>.
fs::path TablePath(const fs::path& out, double gamma, bool several) {
  if (!several) return out;
  fs::path p = out;
  p.replace_filename(out.stem().string() + "_gamma" + io::FormatNumber(gamma) +
                     out.extension().string());
  return p;
}

int ReproduceCommand(const ReproduceArgs& args, std::ostream& out) {
  std::vector<double> gammas = args.gammas;
  if (gammas.empty()) gammas.push_back(0.0);
  for (double g : gammas) {
    if (!(g >= 0.0 && g <= 1.0)) {
      throw InputError("gamma must lie in [0, 1], got " + io::FormatNumber(g));
    }
  }
  if (args.case_id < 1 || args.case_id > 4) {
    throw InputError("case must be 1..4");
  }
  if (args.iterations == 0) throw InputError("iterations must be positive");

  const bool several = gammas.size() > 1;
  json tables = json::array();
  for (double gamma : gammas) {
    ReproductionOptions options;
    options.case_id = args.case_id;
    options.iterations = args.iterations;
    options.base_seed = args.seed;
    options.threads = args.threads;
    args.ops.Apply(options.config);
    options.config.graph_weight = gamma;
    const std::string csv = TableCsv(Reproduce(options));
    if (args.out.empty()) {
      if (several) out << "# gamma " << io::FormatNumber(gamma) << '\n';
      out << csv;
      continue;
    }
    const fs::path path = TablePath(args.out, gamma, several);
    WriteTextFile(path, csv);
    tables.push_back({{"gamma", gamma},
                      {"file", path.filename().string()},
                      {"config", io::ConfigToJson(options.config)}});
  }
  if (!args.out.empty()) {
    const json manifest = {{"case", args.case_id},
                           {"iterations", args.iterations},
                           {"seed", args.seed},
                           {"cell_seed",
                            "seed + 10000*(graph_label*9 + relations_label) "
                            "+ iteration"},
                           {"tables", tables}};
    io::WriteJsonFile(args.out + ".manifest.json", manifest);
  }
  return kExitOk;
}

void PrintError(std::ostream& err, const char* kind, const std::string& what) {
  err << json{{"error", {{"kind", kind}, {"message", what}}}}.dump() << '\n';
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Community detection on multiple bipolar fuzzy relations",
               args.empty() ? "duolouvain" : args.front()};
  app.require_subcommand(1);

  DetectArgs detect;
  CLI::App* detect_cmd = app.add_subcommand(
      "detect", "Detect communities on a graph with bipolar relations");
  detect_cmd->add_option("--graph", detect.graph, "Graph matrix (CSV or edges)")
      ->required();
  detect_cmd->add_option("--f-minus", detect.f_minus, "Negative matrix");
  detect_cmd->add_option("--f-plus", detect.f_plus, "Positive matrix");
  detect_cmd->add_option("--measures", detect.measures,
                         "Bipolar fuzzy measure JSON");
  detect_cmd->add_option("--config", detect.config, "Pipeline config JSON");
  detect.ops.Register(detect_cmd);
  detect_cmd->add_option("--gamma", detect.ops.gamma, "Weight of the graph");
  detect_cmd->add_option("--seed", detect.seed, "Node-order seed");
  detect_cmd->add_option("--samples", detect.samples,
                         "Sampled Shapley permutations (0 = exact)");
  detect_cmd->add_option("--out", detect.out, "Partition JSON output");
  detect_cmd->add_option("--csv", detect.csv, "Partition CSV output");

  GenerateArgs generate;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Generate a benchmark instance");
  generate_cmd->add_option("--case", generate.case_id, "Benchmark case")
      ->check(CLI::Range(1, 4));
  generate_cmd->add_option("--graph-label", generate.graph_label,
                           "Parameter label of the graph")
      ->check(CLI::Range(1, kParameterLabels));
  generate_cmd->add_option("--relations-label", generate.relations_label,
                           "Parameter label of the relations")
      ->check(CLI::Range(1, kParameterLabels));
  generate_cmd->add_option("--seed", generate.seed, "Seed");
  generate_cmd->add_option("--out", generate.out, "Output directory")
      ->required();

  EvaluateArgs evaluate;
  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "Compare two partitions");
  evaluate_cmd->add_option("first", evaluate.first, "Partition JSON")
      ->required();
  evaluate_cmd->add_option("second", evaluate.second, "Partition JSON")
      ->required();

  ReproduceArgs reproduce;
  CLI::App* reproduce_cmd = app.add_subcommand(
      "reproduce", "Mean NMI over the 9x9 benchmark grid");
  reproduce_cmd->add_option("--case", reproduce.case_id, "Benchmark case")
      ->check(CLI::Range(1, 4));
  reproduce_cmd->add_option("--gamma", reproduce.gammas,
                            "Weight of the graph (repeatable)");
  reproduce_cmd->add_option("--iterations", reproduce.iterations,
                            "Instances per cell");
  reproduce_cmd->add_option("--seed", reproduce.seed, "Base seed");
  reproduce_cmd->add_option("--threads", reproduce.threads,
                            "Worker threads (0 = hardware)");
  reproduce.ops.Register(reproduce_cmd);
  reproduce_cmd->add_option("--out", reproduce.out, "CSV output");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("duolouvain");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    PrintError(err, "usage", e.what());
    return kExitInput;
  }

  try {
    if (*detect_cmd) return Detect(detect, out);
    if (*generate_cmd) return Generate(generate, out);
    if (*evaluate_cmd) return Evaluate(evaluate, out);
    return ReproduceCommand(reproduce, out);
  } catch (const InputError& e) {
    PrintError(err, "input", e.what());
    return kExitInput;
  } catch (const NumericError& e) {
    PrintError(err, "numeric", e.what());
    return kExitNumeric;
  } catch (const json::exception& e) {
    PrintError(err, "input", e.what());
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    PrintError(err, "input", e.what());
    return kExitInput;
  }
}

}  // namespace duolouvain::cli
