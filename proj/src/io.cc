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

#include "surrograph/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "surrograph/error.h"
#include "surrograph/format.h"

namespace surrograph {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
};

Table read_table(std::istream& in, const char* what) {
  Table t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    for (auto& f : fields) f = trim(f);
    if (t.header.empty()) {
      t.header = std::move(fields);
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw InputError(std::string(what) + " row " + std::to_string(line_no) + ": expected " +
                       std::to_string(t.header.size()) + " fields, found " +
                       std::to_string(fields.size()));
    }
    t.rows.push_back(std::move(fields));
    t.line_numbers.push_back(line_no);
  }
  if (t.header.empty()) throw InputError(std::string(what) + ": missing header row");
  return t;
}

std::size_t require_column(const Table& t, const char* name, const char* what) {
  auto it = std::find(t.header.begin(), t.header.end(), name);
  if (it == t.header.end()) {
    throw InputError(std::string(what) + ": header lacks a '" + name + "' column");
  }
  return static_cast<std::size_t>(it - t.header.begin());
}

bool is_label_column(std::string_view name) { return name.starts_with(kLabelPrefix); }

}  // namespace

IngestResult read_property_graph(std::istream& nodes_in, std::istream& edges_in) {
  const Table nodes = read_table(nodes_in, "nodes file");
  const std::size_t id_col = require_column(nodes, "node_id", "nodes file");
  if (nodes.rows.empty()) throw InputError("nodes file: no node rows");

  std::vector<std::size_t> label_cols;
  std::vector<std::size_t> passive_cols;
  std::vector<std::string> order;
  for (std::size_t c = 0; c < nodes.header.size(); ++c) {
    if (c == id_col) continue;
    if (std::count(nodes.header.begin(), nodes.header.end(), nodes.header[c]) > 1) {
      throw InputError("nodes file: duplicate column '" + nodes.header[c] + "'");
    }
    order.push_back(nodes.header[c]);
    if (is_label_column(nodes.header[c])) {
      if (nodes.header[c].size() == std::string_view(kLabelPrefix).size()) {
        throw InputError("nodes file: label column without a name");
      }
      label_cols.push_back(c);
    } else {
      passive_cols.push_back(c);
    }
  }

  const std::size_t n = nodes.rows.size();
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string& id = nodes.rows[r][id_col];
    if (id.empty()) {
      throw InputError("nodes file row " + std::to_string(nodes.line_numbers[r]) +
                       ": empty node_id");
    }
    if (!index.emplace(id, static_cast<VertexId>(r)).second) {
      throw InputError("nodes file row " + std::to_string(nodes.line_numbers[r]) +
                       ": duplicate node_id '" + id + "'");
    }
    ids.push_back(id);
  }

  std::vector<Label> labels;
  for (std::size_t c : label_cols) {
    std::set<std::string> values;
    for (const auto& row : nodes.rows) values.insert(row[c]);
    labels.push_back({nodes.header[c].substr(std::string_view(kLabelPrefix).size()),
                      std::vector<std::string>(values.begin(), values.end())});
  }
  std::vector<std::uint32_t> label_values(n * labels.size());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < labels.size(); ++k) {
      label_values[r * labels.size() + k] = *labels[k].find_value(nodes.rows[r][label_cols[k]]);
    }
  }
  std::vector<PassiveColumn> passive;
  for (std::size_t c : passive_cols) {
    PassiveColumn column{nodes.header[c], {}};
    for (const auto& row : nodes.rows) column.values.push_back(row[c]);
    passive.push_back(std::move(column));
  }

  const Table edges = read_table(edges_in, "edges file");
  const std::size_t src_col = require_column(edges, "src", "edges file");
  const std::size_t dst_col = require_column(edges, "dst", "edges file");
  IngestResult result;
  std::vector<Edge> edge_list;
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t r = 0; r < edges.rows.size(); ++r) {
    VertexId ends[2];
    for (int side = 0; side < 2; ++side) {
      const std::string& id = edges.rows[r][side == 0 ? src_col : dst_col];
      auto it = index.find(id);
      if (it == index.end()) {
        throw InputError("edges file row " + std::to_string(edges.line_numbers[r]) +
                         ": unknown node '" + id + "'");
      }
      ends[side] = it->second;
    }
    if (ends[0] == ends[1]) {
      ++result.warnings.self_loops;
      continue;
    }
    const Edge e = make_edge(ends[0], ends[1]);
    if (!seen.insert(edge_key(e)).second) {
      ++result.warnings.duplicate_edges;
      continue;
    }
    edge_list.push_back(e);
  }

  result.graph = PropertyGraph(n, std::move(edge_list), LabelSchema(std::move(labels)),
                               std::move(label_values), std::move(ids), std::move(passive))
                     .with_column_order(std::move(order));
  return result;
}

IngestResult read_property_graph(const std::filesystem::path& nodes_path,
                                 const std::filesystem::path& edges_path) {
  std::ifstream nodes(nodes_path);
  if (!nodes) throw InputError("cannot open " + nodes_path.string());
  std::ifstream edges(edges_path);
  if (!edges) throw InputError("cannot open " + edges_path.string());
  return read_property_graph(nodes, edges);
}

void write_property_graph(const PropertyGraph& g, std::ostream& nodes, std::ostream& edges) {
  // Resolve output columns: recorded order first, then labels added later.
  struct Column {
    std::string header;
    const Label* label = nullptr;
    std::size_t label_index = 0;
    const PassiveColumn* passive = nullptr;
  };
  std::vector<Column> columns;
  std::vector<bool> label_written(g.schema().size(), false);
  for (const auto& name : g.column_order()) {
    if (is_label_column(name)) {
      const auto k = g.schema().index_of(
          std::string_view(name).substr(std::string_view(kLabelPrefix).size()));
      if (!k || label_written[*k]) continue;
      label_written[*k] = true;
      columns.push_back({name, &g.schema()[*k], *k, nullptr});
    } else {
      for (const auto& p : g.passive_columns()) {
        if (p.name == name) columns.push_back({name, nullptr, 0, &p});
      }
    }
  }
  for (std::size_t k = 0; k < g.schema().size(); ++k) {
    if (!label_written[k]) {
      columns.push_back({kLabelPrefix + g.schema()[k].name, &g.schema()[k], k, nullptr});
    }
  }

  nodes << "node_id";
  for (const auto& c : columns) nodes << ',' << csv_escape(c.header);
  nodes << '\n';
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    nodes << csv_escape(g.node_id(v));
    for (const auto& c : columns) {
      nodes << ','
            << csv_escape(c.label ? g.label_string(v, c.label_index) : c.passive->values[v]);
    }
    nodes << '\n';
  }

  edges << "src,dst\n";
  for (const Edge& e : g.edges()) {
    edges << csv_escape(g.node_id(e.u)) << ',' << csv_escape(g.node_id(e.v)) << '\n';
  }
}

void write_property_graph(const PropertyGraph& g, const std::filesystem::path& nodes_path,
                          const std::filesystem::path& edges_path) {
  std::ofstream nodes(nodes_path, std::ios::binary);
  std::ofstream edges(edges_path, std::ios::binary);
  if (!nodes || !edges) throw InputError("cannot open output files for writing");
  write_property_graph(g, nodes, edges);
  nodes.flush();
  edges.flush();
  if (!nodes || !edges) throw InputError("write failure on graph output");
}

RunConfig RunConfig::parse(std::istream& in) {
  RunConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw InputError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(text).substr(0, eq));
    if (key.empty()) {
      throw InputError("config line " + std::to_string(line_no) + ": empty key");
    }
    config.values_[key] = trim(std::string_view(text).substr(eq + 1));
  }
  return config;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path.string());
  return parse(in);
}

void RunConfig::set(const std::string& key, std::string value) { values_[key] = std::move(value); }

bool RunConfig::has(const std::string& key) const { return values_.contains(key); }

std::optional<std::string> RunConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> RunConfig::get_double(const std::string& key) const {
  auto v = get(key);
  if (!v) return std::nullopt;
  return parse_double(*v, key);
}

std::optional<std::uint64_t> RunConfig::get_uint(const std::string& key) const {
  auto v = get(key);
  if (!v) return std::nullopt;
  return parse_uint(*v, key);
}

std::optional<bool> RunConfig::get_bool(const std::string& key) const {
  auto v = get(key);
  if (!v) return std::nullopt;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  throw InputError("config key '" + key + "': expected a boolean, got '" + *v + "'");
}

std::optional<std::vector<std::string>> RunConfig::get_list(const std::string& key) const {
  auto v = get(key);
  if (!v) return std::nullopt;
  return split_list(*v);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        trim(std::string_view(text).substr(start, comma == std::string::npos
                                                      ? std::string::npos
                                                      : comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError(what + ": expected a number, got '" + text + "'");
  }
  return value;
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError(what + ": expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

}  // namespace surrograph
