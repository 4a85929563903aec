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

#ifndef DUOLOUVAIN_IO_H_
#define DUOLOUVAIN_IO_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "duolouvain/aggregation.h"
#include "duolouvain/bipolar_graph.h"
#include "duolouvain/fuzzy_measure.h"
#include "duolouvain/partition.h"
#include "duolouvain/weighted_graph.h"

// File formats. Node and element indices are 1-based in every file and
// 0-based in memory. All readers throw InputError on malformed input.
namespace duolouvain::io {

// Shortest decimal text that reads back to the same double.
std::string FormatNumber(double value);

// Dense CSV: n rows of n comma-separated numbers, optionally preceded by a
// line holding just n.
WeightedGraph ReadDenseCsv(std::istream& in);
void WriteDenseCsv(std::ostream& out, const WeightedGraph& matrix);

// Edge list: "i j weight" per line (tabs, spaces or commas), 1-based, '#'
// comments allowed. Weight defaults to 1. The symmetric closure is taken;
// listing a pair twice with different weights is an error. `nodes` of 0
// means the largest index seen.
WeightedGraph ReadEdgeList(std::istream& in, std::size_t nodes = 0);

// Dispatches on extension: .tsv, .txt and .edges are edge lists, anything
// else is dense CSV.
WeightedGraph LoadMatrix(const std::filesystem::path& path,
                         std::size_t nodes = 0);
void SaveDenseCsv(const std::filesystem::path& path,
                  const WeightedGraph& matrix);

// {"n": 3, "form": "explicit", "values": [{"subset": [1, 2], "value": 0.5}]}
// {"n": 3, "form": "additive", "weights": [0.25, 0.25, 0.5]}
FuzzyMeasure MeasureFromJson(const nlohmann::json& j);
nlohmann::json MeasureToJson(const FuzzyMeasure& measure);

// {"negative": <measure>, "positive": <measure>}
BipolarFuzzyMeasure BipolarMeasureFromJson(const nlohmann::json& j);

// {"kind": "owa", "weights": [...]} or a bare string "min" / "owa:0.5,0.5".
AggregatorSpec AggregatorFromJson(const nlohmann::json& j);
nlohmann::json AggregatorToJson(const AggregatorSpec& spec);

// {"phi_neg": [...], "phi_pos": [...], "Phi_neg": spec, "Phi_pos": spec,
//  "negation": "standard", "psi": spec, "gamma": 0.5}; missing keys keep
// the defaults already in `base`.
PipelineConfig ConfigFromJson(const nlohmann::json& j,
                              PipelineConfig base = {});
nlohmann::json ConfigToJson(const PipelineConfig& config);

// {"n": 4, "communities": [[1, 2], [3, 4]]} in canonical order.
Partition PartitionFromJson(const nlohmann::json& j);
nlohmann::json PartitionToJson(const Partition& partition);

// "node,label" rows with a header line; both 1-based.
void WritePartitionCsv(std::ostream& out, const Partition& partition);

nlohmann::json ReadJsonFile(const std::filesystem::path& path);
void WriteJsonFile(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace duolouvain::io

#endif  // DUOLOUVAIN_IO_H_
