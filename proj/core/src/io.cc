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

#include "duolouvain/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "duolouvain/errors.h"

namespace duolouvain::io {
namespace {

using nlohmann::json;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseNumber(std::string_view text, std::size_t line) {
  text = Trim(text);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("line " + std::to_string(line) + ": '" +
                     std::string(text) + "' is not a number");
  }
  return value;
}

std::size_t ParseIndex(std::string_view text, std::size_t line) {
  text = Trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      value == 0) {
    throw InputError("line " + std::to_string(line) + ": '" +
                     std::string(text) + "' is not a 1-based index");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> SplitWhitespaceOrComma(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
T Get(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw InputError(std::string("missing JSON key '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad value for JSON key '") + key +
                     "': " + e.what());
  }
}

}  // namespace

std::string FormatNumber(double value) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

WeightedGraph ReadDenseCsv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t declared = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = Trim(line);
    if (text.empty()) continue;
    const auto fields = Split(text, ',');
    if (rows.empty() && declared == 0 && fields.size() == 1 &&
        text.find('.') == std::string_view::npos) {
      // Possibly a header with n; a 1x1 matrix is written without one.
      std::size_t n = 0;
      const auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), n);
      if (ec == std::errc() && ptr == text.data() + text.size() && n > 1) {
        declared = n;
        continue;
      }
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (auto f : fields) row.push_back(ParseNumber(f, line_no));
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("matrix file is empty");
  if (declared != 0 && declared != n) {
    throw InputError("matrix header declares " + std::to_string(declared) +
                     " rows but " + std::to_string(n) + " were found");
  }
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InputError("matrix row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    }
    values.insert(values.end(), rows[i].begin(), rows[i].end());
  }
  return WeightedGraph::FromDense(n, std::move(values));
}

void WriteDenseCsv(std::ostream& out, const WeightedGraph& matrix) {
  const std::size_t n = matrix.size();
  std::string line;
  for (std::size_t i = 0; i < n; ++i) {
    line.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) line += ',';
      line += FormatNumber(matrix(i, j));
    }
    line += '\n';
    out << line;
  }
}

WeightedGraph ReadEdgeList(std::istream& in, std::size_t nodes) {
  std::map<std::pair<std::size_t, std::size_t>, double> edges;
  std::size_t max_index = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = SplitWhitespaceOrComma(text);
    if (fields.size() < 2 || fields.size() > 3) {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected 'i j [weight]'");
    }
    std::size_t i = ParseIndex(fields[0], line_no);
    std::size_t j = ParseIndex(fields[1], line_no);
    const double w = fields.size() == 3 ? ParseNumber(fields[2], line_no) : 1.0;
    if (!(w >= 0.0)) {
      throw InputError("line " + std::to_string(line_no) +
                       ": weight must be nonnegative");
    }
    max_index = std::max({max_index, i, j});
    if (i > j) std::swap(i, j);
    auto [it, inserted] = edges.try_emplace({i - 1, j - 1}, w);
    if (!inserted && it->second != w) {
      throw InputError("line " + std::to_string(line_no) + ": pair (" +
                       std::to_string(i) + "," + std::to_string(j) +
                       ") listed with conflicting weights");
    }
  }
  const std::size_t n = nodes == 0 ? max_index : nodes;
  if (n == 0) throw InputError("edge list is empty");
  if (max_index > n) {
    throw InputError("edge list mentions node " + std::to_string(max_index) +
                     " but the graph has " + std::to_string(n) + " nodes");
  }
  WeightedGraph g(n);
  for (const auto& [pair, w] : edges) g.Set(pair.first, pair.second, w);
  return g;
}

WeightedGraph LoadMatrix(const std::filesystem::path& path,
                         std::size_t nodes) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file " + path.string());
  const std::string ext = path.extension().string();
  try {
    if (ext == ".tsv" || ext == ".txt" || ext == ".edges") {
      return ReadEdgeList(in, nodes);
    }
    WeightedGraph g = ReadDenseCsv(in);
    if (nodes != 0 && g.size() != nodes) {
      throw InputError("matrix has " + std::to_string(g.size()) +
                       " nodes, expected " + std::to_string(nodes));
    }
    return g;
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void SaveDenseCsv(const std::filesystem::path& path,
                  const WeightedGraph& matrix) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  WriteDenseCsv(out, matrix);
}

FuzzyMeasure MeasureFromJson(const json& j) {
  const auto n = Get<std::size_t>(j, "n");
  const auto form = Get<std::string>(j, "form");
  if (form == "additive") {
    auto weights = Get<std::vector<double>>(j, "weights");
    if (weights.size() != n) {
      throw InputError("additive measure lists " +
                       std::to_string(weights.size()) + " weights for n = " +
                       std::to_string(n));
    }
    return FuzzyMeasure::Additive(std::move(weights));
  }
  if (form != "explicit") {
    throw InputError("measure form must be 'explicit' or 'additive'");
  }
  if (n == 0 || n > kMaxExplicitPlayers) {
    throw InputError("explicit measures need 1 <= n <= " +
                     std::to_string(kMaxExplicitPlayers));
  }
  const json& values = j.contains("values") ? j.at("values") : json();
  if (!values.is_array()) throw InputError("'values' must be an array");
  std::vector<std::pair<SubsetMask, double>> entries;
  for (const json& entry : values) {
    const auto subset = Get<std::vector<std::size_t>>(entry, "subset");
    SubsetMask mask = 0;
    for (std::size_t e : subset) {
      if (e == 0 || e > n) {
        throw InputError("subset element " + std::to_string(e) +
                         " is outside 1.." + std::to_string(n));
      }
      mask |= SubsetMask{1} << (e - 1);
    }
    entries.emplace_back(mask, Get<double>(entry, "value"));
  }
  return FuzzyMeasure::FromEntries(n, entries);
}

json MeasureToJson(const FuzzyMeasure& measure) {
  json j;
  j["n"] = measure.size();
  if (measure.is_additive()) {
    j["form"] = "additive";
    j["weights"] = std::vector<double>(measure.weights().begin(),
                                       measure.weights().end());
    return j;
  }
  j["form"] = "explicit";
  json values = json::array();
  const auto t = measure.table();
  for (SubsetMask s = 0; s < t.size(); ++s) {
    if (t[s] != t[s]) continue;  // missing
    std::vector<std::size_t> subset;
    for (std::size_t e : ElementsOf(s)) subset.push_back(e + 1);
    values.push_back({{"subset", subset}, {"value", t[s]}});
  }
  j["values"] = std::move(values);
  return j;
}

BipolarFuzzyMeasure BipolarMeasureFromJson(const json& j) {
  if (!j.contains("negative") || !j.contains("positive")) {
    throw InputError("bipolar measure needs 'negative' and 'positive'");
  }
  BipolarFuzzyMeasure m{MeasureFromJson(j.at("negative")),
                        MeasureFromJson(j.at("positive"))};
  if (m.negative.size() != m.positive.size()) {
    throw InputError("bipolar measure components have different sizes");
  }
  return m;
}

AggregatorSpec AggregatorFromJson(const json& j) {
  if (j.is_string()) return AggregatorSpec::Parse(j.get<std::string>());
  const auto kind = Get<std::string>(j, "kind");
  if (kind == "owa") {
    return AggregatorSpec::Owa(Get<std::vector<double>>(j, "weights"));
  }
  return AggregatorSpec::Parse(kind);
}

json AggregatorToJson(const AggregatorSpec& spec) {
  switch (spec.kind()) {
    case AggregatorSpec::Kind::kMin:
      return {{"kind", "min"}};
    case AggregatorSpec::Kind::kMax:
      return {{"kind", "max"}};
    case AggregatorSpec::Kind::kMean:
      return {{"kind", "mean"}};
    case AggregatorSpec::Kind::kOwa:
      return {{"kind", "owa"}, {"weights", spec.weights()}};
  }
  return {};
}

PipelineConfig ConfigFromJson(const json& j, PipelineConfig base) {
  if (!j.is_object()) throw InputError("pipeline config must be an object");
  auto spec_list = [&](const char* key) {
    std::vector<AggregatorSpec> out;
    const json& list = j.at(key);
    if (!list.is_array()) {
      throw InputError(std::string("'") + key + "' must be an array");
    }
    for (const json& item : list) out.push_back(AggregatorFromJson(item));
    return out;
  };
  if (j.contains("phi_neg")) base.symmetrize_negative = spec_list("phi_neg");
  if (j.contains("phi_pos")) base.symmetrize_positive = spec_list("phi_pos");
  if (j.contains("Phi_neg")) {
    base.aggregate_negative = AggregatorFromJson(j.at("Phi_neg"));
  }
  if (j.contains("Phi_pos")) {
    base.aggregate_positive = AggregatorFromJson(j.at("Phi_pos"));
  }
  if (j.contains("negation")) {
    base.negation = NegationSpec::Parse(Get<std::string>(j, "negation"));
  }
  if (j.contains("psi")) base.combine = AggregatorFromJson(j.at("psi"));
  if (j.contains("gamma")) base.graph_weight = Get<double>(j, "gamma");
  ValidateConfig(base);
  return base;
}

json ConfigToJson(const PipelineConfig& config) {
  json phi_neg = json::array(), phi_pos = json::array();
  for (const auto& s : config.symmetrize_negative) {
    phi_neg.push_back(AggregatorToJson(s));
  }
  for (const auto& s : config.symmetrize_positive) {
    phi_pos.push_back(AggregatorToJson(s));
  }
  return {{"phi_neg", phi_neg},
          {"phi_pos", phi_pos},
          {"Phi_neg", AggregatorToJson(config.aggregate_negative)},
          {"Phi_pos", AggregatorToJson(config.aggregate_positive)},
          {"negation", config.negation.ToString()},
          {"psi", AggregatorToJson(config.combine)},
          {"gamma", config.graph_weight}};
}

Partition PartitionFromJson(const json& j) {
  const auto n = Get<std::size_t>(j, "n");
  const auto communities =
      Get<std::vector<std::vector<std::size_t>>>(j, "communities");
  std::vector<std::vector<std::size_t>> zero_based = communities;
  for (auto& c : zero_based) {
    for (auto& node : c) {
      if (node == 0) throw InputError("partition node ids are 1-based");
      --node;
    }
  }
  return Partition::FromCommunities(n, zero_based);
}

json PartitionToJson(const Partition& partition) {
  auto communities = partition.Communities();
  for (auto& c : communities) {
    for (auto& node : c) ++node;
  }
  return {{"n", partition.size()}, {"communities", communities}};
}

void WritePartitionCsv(std::ostream& out, const Partition& partition) {
  out << "node,label\n";
  for (std::size_t i = 0; i < partition.size(); ++i) {
    out << i + 1 << ',' << partition.community_of(i) + 1 << '\n';
  }
}

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void WriteJsonFile(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace duolouvain::io
