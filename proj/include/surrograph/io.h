// Copyright 2026 The Surrograph Authors.
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

#ifndef SURROGRAPH_IO_H_
#define SURROGRAPH_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surrograph/graph.h"

namespace surrograph {

// Node-table columns with this prefix become labels (prefix stripped).
inline constexpr const char* kLabelPrefix = "label_";

struct IngestWarnings {
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

struct IngestResult {
  PropertyGraph graph;
  IngestWarnings warnings;
};

// Nodes CSV: header with a `node_id` column, `label_<name>` columns, and any
// other (passive) columns. Edges CSV: header with `src` and `dst`. Label
// domains are the sorted distinct observed values. Self-loops and duplicate
// edges are dropped and counted. Errors carry the offending row number.
IngestResult read_property_graph(std::istream& nodes, std::istream& edges);
IngestResult read_property_graph(const std::filesystem::path& nodes_path,
                                 const std::filesystem::path& edges_path);

// Writes node_id, then columns in the graph's recorded order (labels that no
// longer exist are skipped, new labels appended), then edges as src,dst.
// Anonymous graphs get ids n0..n{|V|-1}.
void write_property_graph(const PropertyGraph& g, std::ostream& nodes, std::ostream& edges);
void write_property_graph(const PropertyGraph& g, const std::filesystem::path& nodes_path,
                          const std::filesystem::path& edges_path);

// Flat `key = value` file; `#` starts a comment. Recognized keys:
//   n_t, m_t, seed, grid, tolerance, tune_mode, community_algo,
//   linchpin_bins, linchpin_attribute, retry_budget, seeds_per_eval,
//   replicates, keep_aug_labels, allocation, jobs, report,
//   regression_attribute, regression_targets
class RunConfig {
 public:
  static RunConfig parse(std::istream& in);
  static RunConfig load(const std::filesystem::path& path);

  void set(const std::string& key, std::string value);
  bool has(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;
  std::optional<double> get_double(const std::string& key) const;
  std::optional<std::uint64_t> get_uint(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  std::optional<std::vector<std::string>> get_list(const std::string& key) const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

std::vector<std::string> split_list(const std::string& text);
double parse_double(const std::string& text, const std::string& what);
std::uint64_t parse_uint(const std::string& text, const std::string& what);

}  // namespace surrograph

#endif  // SURROGRAPH_IO_H_
