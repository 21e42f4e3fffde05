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

#include "surrograph/cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "surrograph/error.h"
#include "surrograph/format.h"

namespace surrograph {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "n_t",           "m_t",
      "seed",          "grid",
      "tolerance",     "tune_mode",
      "community_algo", "linchpin_bins",
      "linchpin_attribute", "retry_budget",
      "seeds_per_eval", "replicates",
      "keep_aug_labels", "allocation",
      "jobs",          "report",
      "regression_attribute", "regression_targets",
  };
  return keys;
}

AllocationMode parse_allocation(const std::string& text) {
  if (text == "deterministic") return AllocationMode::kDeterministic;
  if (text == "multinomial") return AllocationMode::kMultinomial;
  throw InputError("allocation must be deterministic or multinomial, got '" + text + "'");
}

std::uint32_t to_u32(std::uint64_t value, const char* what) {
  if (value > 0xffffffffu) throw InputError(std::string(what) + " is too large");
  return static_cast<std::uint32_t>(value);
}

// Options shared by every subcommand. Each maps onto a config key so that
// flags and config files go through one code path.
struct Flags {
  std::string nodes, edges, config, out;
  std::string source_nodes, source_edges, target_nodes, target_edges;
  std::map<std::string, std::string> overrides;
  bool keep_aug_labels = false;
};

struct FlagBinding {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr FlagBinding kBindings[] = {
    {"--seed", "seed", "Run seed (required for generate, tune, validate-regression)"},
    {"--n-vertices", "n_t", "Target vertex count (default: source size)"},
    {"--n-edges", "m_t", "Target edge count (default: source size)"},
    {"--community-algo", "community_algo", "edge-betweenness, fast-greedy or none"},
    {"--linchpin-bins", "linchpin_bins", "Linchpin cut points, e.g. 0.2 (none disables)"},
    {"--grid", "grid", "Degree-bin grid, e.g. 3,5,7,10,15"},
    {"--tolerance", "tolerance", "Degree NRMSE tolerance"},
    {"--seeds-per-eval", "seeds_per_eval", "Generation seeds per tuning evaluation"},
    {"--replicates", "replicates", "Number of surrogates"},
    {"--report", "report", "Report format: csv or jsonl"},
    {"--jobs", "jobs", "Worker threads"},
    {"--attribute", "regression_attribute", "Regression label"},
    {"--targets", "regression_targets", "Regression outcome values, comma separated"},
};

void add_flags(CLI::App& app, Flags& flags) {
  app.add_option("--nodes", flags.nodes, "Nodes CSV");
  app.add_option("--edges", flags.edges, "Edges CSV");
  app.add_option("--config", flags.config, "key = value config file");
  app.add_option("--out", flags.out, "Output directory")->required();
  for (const auto& b : kBindings) {
    app.add_option_function<std::string>(
        b.flag, [&flags, key = b.key](const std::string& v) { flags.overrides[key] = v; },
        b.help);
  }
  app.add_flag("--keep-aug-labels", flags.keep_aug_labels,
               "Keep augmentation labels in released node tables");
}

RunConfig resolve_config(const Flags& flags) {
  RunConfig config = flags.config.empty() ? RunConfig() : RunConfig::load(flags.config);
  for (const auto& [key, value] : flags.overrides) config.set(key, value);
  if (flags.keep_aug_labels) config.set("keep_aug_labels", "true");
  return config;
}

std::uint64_t require_seed(const RunConfig& config) {
  auto seed = config.get_uint("seed");
  if (!seed) throw InputError("a seed is required (--seed or `seed` in the config)");
  return *seed;
}

IngestResult load_graph(const std::string& nodes, const std::string& edges, const char* role) {
  if (nodes.empty() || edges.empty()) {
    throw InputError(std::string(role) + " nodes and edges files are required");
  }
  IngestResult in = read_property_graph(nodes, edges);
  if (in.warnings.self_loops || in.warnings.duplicate_edges) {
    std::cerr << "warning: " << role << " edges: dropped " << in.warnings.self_loops
              << " self-loops and " << in.warnings.duplicate_edges << " duplicate edges\n";
  }
  return in;
}

bool jsonl_reports(const RunConfig& config) {
  const std::string format = config.get("report").value_or("csv");
  if (format != "csv" && format != "jsonl") {
    throw InputError("report must be csv or jsonl, got '" + format + "'");
  }
  return format == "jsonl";
}

// Collects output files and writes them under one directory.
class OutputDir {
 public:
  explicit OutputDir(const std::string& path) : root_(path) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec) throw InputError("cannot create output directory " + root_.string());
  }

  template <typename Fn>
  void write(const std::string& name, Fn&& fn) {
    std::ofstream out(root_ / name, std::ios::binary);
    if (!out) throw InputError("cannot write " + (root_ / name).string());
    fn(out);
    out.flush();
    if (!out) throw InputError("write failure on " + (root_ / name).string());
    files_.push_back(name);
  }

  void graph(const std::string& nodes, const std::string& edges, const PropertyGraph& g) {
    write_property_graph(g, root_ / nodes, root_ / edges);
    files_.push_back(nodes);
    files_.push_back(edges);
  }

  void manifest(ordered_json body) {
    std::vector<std::string> sorted = files_;
    sorted.push_back("manifest.json");
    std::sort(sorted.begin(), sorted.end());
    body["outputs"] = sorted;
    write("manifest.json", [&](std::ostream& out) { out << body.dump(2) << '\n'; });
  }

 private:
  fs::path root_;
  std::vector<std::string> files_;
};

ordered_json manifest_header(const char* command, const Flags& flags, const RunConfig& config) {
  ordered_json m;
  m["command"] = command;
  ordered_json inputs = ordered_json::object();
  auto add = [&](const char* key, const std::string& value) {
    if (!value.empty()) inputs[key] = value;
  };
  add("nodes", flags.nodes);
  add("edges", flags.edges);
  add("config", flags.config);
  add("source_nodes", flags.source_nodes);
  add("source_edges", flags.source_edges);
  add("target_nodes", flags.target_nodes);
  add("target_edges", flags.target_edges);
  m["inputs"] = inputs;
  ordered_json settings = ordered_json::object();
  for (const auto& [key, value] : config.values()) settings[key] = value;
  m["config"] = settings;
  return m;
}

ordered_json regression_json(const RegressionResult& r) {
  return ordered_json{{"intercept", r.intercept},   {"slope", r.slope},
                      {"intercept_se", r.intercept_se}, {"slope_se", r.slope_se},
                      {"odds_ratio", r.odds_ratio}, {"ci_low", r.ci_low},
                      {"ci_high", r.ci_high},       {"converged", r.converged},
                      {"diagnostic", r.diagnostic}};
}

void write_regression_row(std::ostream& out, const std::string& role, std::uint64_t seed,
                          const RegressionResult& r, bool excluded) {
  out << role << ',' << seed << ',' << format_double(r.intercept) << ','
      << format_double(r.slope) << ',' << format_double(r.intercept_se) << ','
      << format_double(r.slope_se) << ',' << format_double(r.odds_ratio) << ','
      << format_double(r.ci_low) << ',' << format_double(r.ci_high) << ','
      << (r.converged ? 1 : 0) << ',' << (excluded ? 1 : 0) << ','
      << csv_escape(r.diagnostic) << '\n';
}

int cmd_generate(const Flags& flags) {
  const RunConfig config = resolve_config(flags);
  PipelineSpec spec = spec_from_config(config);
  spec.generation.seed = require_seed(config);
  const bool jsonl = jsonl_reports(config);
  const IngestResult in = load_graph(flags.nodes, flags.edges, "source");
  const PipelineResult result = run_pipeline(in.graph, spec);

  OutputDir out(flags.out);
  const std::string ext = jsonl ? ".jsonl" : ".csv";
  for (std::size_t i = 0; i < result.generated.size(); ++i) {
    const std::string suffix = result.generated.size() == 1 ? "" : "_" + std::to_string(i);
    out.graph("nodes" + suffix + ".csv", "edges" + suffix + ".csv", result.generated[i].graph);
    out.write("report" + suffix + ext, [&](std::ostream& os) {
      if (jsonl) {
        write_report_jsonl(os, result.generated[i].report);
      } else {
        write_report_csv(os, result.generated[i].report);
      }
    });
  }
  out.write("fidelity" + ext, [&](std::ostream& os) {
    if (jsonl) {
      write_fidelity_jsonl(os, result.report);
    } else {
      write_fidelity_csv(os, result.report);
    }
  });
  out.write("ccdf.csv", [&](std::ostream& os) { write_ccdf_csv(os, result.report); });
  if (result.tune) {
    out.write("tune.csv", [&](std::ostream& os) { write_tune_csv(os, *result.tune); });
  }

  ordered_json m = manifest_header("generate", flags, config);
  m["seeds"] = result.seeds;
  m["selected_bins"] = result.selected_bins;
  m["degree_augmentation_skipped"] = result.degree_augmentation_skipped;
  m["nrmse"] = result.report.nrmse;
  m["converged"] = result.converged();
  m["log"] = result.log;
  out.manifest(std::move(m));

  if (!result.converged()) {
    std::cerr << "not converged: outputs written to " << flags.out << " and flagged\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

int cmd_tune(const Flags& flags) {
  const RunConfig config = resolve_config(flags);
  PipelineSpec spec = spec_from_config(config);
  spec.generation.seed = require_seed(config);
  if (spec.degree_grid.empty()) spec.degree_grid = TuneOptions().grid;
  const IngestResult in = load_graph(flags.nodes, flags.edges, "source");
  spec.validate(in.graph);
  const StructuralAugmentation structural = augment_structure(in.graph, spec);
  const TuneResult tune = tune_degree_bins(structural.graph, tune_options(in.graph, spec));

  OutputDir out(flags.out);
  out.write("tune.csv", [&](std::ostream& os) { write_tune_csv(os, tune); });
  ordered_json m = manifest_header("tune", flags, config);
  m["selected_bins"] = tune.selected_bins;
  m["achieved_error"] = tune.achieved_error;
  m["converged"] = tune.converged;
  m["log"] = structural.log;
  out.manifest(std::move(m));
  if (!tune.converged) {
    std::cerr << "tolerance not met: best NRMSE " << format_double(tune.achieved_error)
              << " at n_b=" << tune.selected_bins << '\n';
    return kExitNotConverged;
  }
  return kExitOk;
}

int cmd_compare(const Flags& flags) {
  const RunConfig config = resolve_config(flags);
  const PipelineSpec spec = spec_from_config(config);
  const bool jsonl = jsonl_reports(config);
  const IngestResult source = load_graph(flags.source_nodes, flags.source_edges, "source");
  const IngestResult target = load_graph(flags.target_nodes, flags.target_edges, "target");
  FidelityReport report = compute_fidelity(source.graph, target.graph, spec.community);
  if (spec.regression) {
    report.source_regression = fit_homophily(source.graph, *spec.regression);
    report.generated_regression = fit_homophily(target.graph, *spec.regression);
  }

  OutputDir out(flags.out);
  out.write(jsonl ? "fidelity.jsonl" : "fidelity.csv", [&](std::ostream& os) {
    if (jsonl) {
      write_fidelity_jsonl(os, report);
    } else {
      write_fidelity_csv(os, report);
    }
  });
  out.write("ccdf.csv", [&](std::ostream& os) { write_ccdf_csv(os, report); });
  ordered_json m = manifest_header("compare", flags, config);
  m["nrmse"] = report.nrmse;
  if (report.concordance) {
    m["community_count_difference"] = report.concordance->count_difference;
    m["community_size_l1"] = report.concordance->size_l1;
  }
  const bool converged = !report.source_regression || (report.source_regression->converged &&
                                                       report.generated_regression->converged);
  m["converged"] = converged;
  out.manifest(std::move(m));
  return converged ? kExitOk : kExitNotConverged;
}

int cmd_communities(const Flags& flags) {
  const RunConfig config = resolve_config(flags);
  const CommunityAlgorithm algorithm =
      parse_community_algorithm(config.get("community_algo").value_or("fast-greedy"));
  const IngestResult in = load_graph(flags.nodes, flags.edges, "input");
  const CommunityAssignment assignment = detect_communities(in.graph, algorithm);

  OutputDir out(flags.out);
  out.write("communities.csv",
            [&](std::ostream& os) { write_communities_csv(os, in.graph, assignment); });
  ordered_json m = manifest_header("communities", flags, config);
  m["algorithm"] = std::string(to_string(algorithm));
  m["count"] = assignment.count();
  m["sizes"] = assignment.sizes();
  if (in.graph.num_edges() > 0) m["modularity"] = modularity(in.graph, assignment);
  out.manifest(std::move(m));
  return kExitOk;
}

int cmd_validate_regression(const Flags& flags) {
  RunConfig config = resolve_config(flags);
  if (!config.has("replicates")) config.set("replicates", "10");
  PipelineSpec spec = spec_from_config(config);
  spec.generation.seed = require_seed(config);
  if (!spec.regression) {
    throw InputError("validate-regression needs --attribute and --targets");
  }
  const IngestResult in = load_graph(flags.nodes, flags.edges, "source");
  const PipelineResult result = run_pipeline(in.graph, spec);
  const ReplicationResult reps = replicate_regression(
      in.graph,
      [&](const PropertyGraph&, std::uint64_t seed) {
        return result.generated[seed - result.seeds.front()].graph;
      },
      *spec.regression, spec.replicates, result.seeds.front(), spec.jobs);
  const RegressionResult& source_fit = *result.report.source_regression;

  OutputDir out(flags.out);
  out.write("regression.csv", [&](std::ostream& os) {
    os << "role,seed,intercept,slope,intercept_se,slope_se,odds_ratio,ci_low,ci_high,"
          "converged,excluded,diagnostic\n";
    write_regression_row(os, "source", spec.generation.seed, source_fit, false);
    for (std::size_t i = 0; i < reps.fits.size(); ++i) {
      write_regression_row(os, "surrogate", reps.seeds[i], reps.fits[i], reps.excluded[i]);
    }
    os << "summary,mean_odds_ratio," << format_double(reps.mean_odds_ratio) << '\n';
    os << "summary,sd_odds_ratio," << format_double(reps.sd_odds_ratio) << '\n';
    os << "summary,used," << reps.used << '\n';
  });
  ordered_json m = manifest_header("validate-regression", flags, config);
  m["source"] = regression_json(source_fit);
  m["mean_odds_ratio"] = reps.mean_odds_ratio;
  m["sd_odds_ratio"] = reps.sd_odds_ratio;
  m["replicates_used"] = reps.used;
  const bool converged = source_fit.converged && !reps.any_excluded && result.converged();
  m["converged"] = converged;
  m["log"] = result.log;
  out.manifest(std::move(m));
  if (!converged) {
    std::cerr << "regression did not converge on every graph; see regression.csv\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

}  // namespace

PipelineSpec spec_from_config(const RunConfig& config) {
  for (const auto& [key, value] : config.values()) {
    if (!known_keys().contains(key)) throw InputError("unknown config key '" + key + "'");
  }
  PipelineSpec spec;
  spec.community = parse_community_algorithm(config.get("community_algo").value_or("none"));
  if (auto bins = config.get("linchpin_bins"); bins && *bins != "none" && *bins != "off") {
    spec.centrality = true;
    spec.centrality_bins.cuts.clear();
    for (const auto& cut : split_list(*bins)) {
      spec.centrality_bins.cuts.push_back(parse_double(cut, "linchpin_bins"));
    }
  }
  if (auto attr = config.get("linchpin_attribute")) spec.centrality_attribute = *attr;
  if (auto grid = config.get_list("grid")) {
    for (const auto& v : *grid) spec.degree_grid.push_back(to_u32(parse_uint(v, "grid"), "grid"));
  }
  if (auto tol = config.get("tolerance"); tol && *tol != "none") {
    spec.tolerance = parse_double(*tol, "tolerance");
  }
  if (auto mode = config.get("tune_mode")) {
    if (*mode == "first-meeting") {
      spec.tune_mode = TuneMode::kFirstMeeting;
    } else if (*mode == "minimize") {
      spec.tune_mode = TuneMode::kMinimize;
    } else {
      throw InputError("tune_mode must be first-meeting or minimize, got '" + *mode + "'");
    }
  }
  if (auto v = config.get_uint("seeds_per_eval")) spec.seeds_per_eval = to_u32(*v, "seeds_per_eval");
  if (auto v = config.get_uint("n_t")) spec.generation.n_vertices = *v;
  if (auto v = config.get_uint("m_t")) spec.generation.n_edges = *v;
  if (auto v = config.get_uint("seed")) spec.generation.seed = *v;
  if (auto v = config.get_uint("retry_budget")) spec.generation.retry_budget = to_u32(*v, "retry_budget");
  if (auto v = config.get("allocation")) {
    spec.generation.vertex_allocation = parse_allocation(*v);
    spec.generation.edge_allocation = spec.generation.vertex_allocation;
  }
  if (auto v = config.get_uint("replicates")) spec.replicates = to_u32(*v, "replicates");
  if (auto v = config.get_bool("keep_aug_labels")) spec.keep_augmentation_labels = *v;
  if (auto v = config.get_uint("jobs")) spec.jobs = to_u32(*v, "jobs");
  const auto attribute = config.get("regression_attribute");
  const auto targets = config.get_list("regression_targets");
  if (attribute.has_value() != targets.has_value()) {
    throw InputError("regression needs both an attribute and target values");
  }
  if (attribute) spec.regression = HomophilyModel{*attribute, *targets};
  return spec;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Attribute-preserving surrogate graph generator"};
  app.require_subcommand(1);
  Flags flags;

  auto* generate = app.add_subcommand("generate", "Generate surrogate graphs");
  auto* tune = app.add_subcommand("tune", "Tune the degree-bin count");
  auto* compare = app.add_subcommand("compare", "Compare two graphs");
  auto* communities = app.add_subcommand("communities", "Detect communities");
  auto* regression =
      app.add_subcommand("validate-regression", "Check a homophily regression on surrogates");
  for (auto* sub : {generate, tune, compare, communities, regression}) add_flags(*sub, flags);
  compare->add_option("--source-nodes", flags.source_nodes, "Source nodes CSV")->required();
  compare->add_option("--source-edges", flags.source_edges, "Source edges CSV")->required();
  compare->add_option("--target-nodes", flags.target_nodes, "Target nodes CSV")->required();
  compare->add_option("--target-edges", flags.target_edges, "Target edges CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (generate->parsed()) return cmd_generate(flags);
    if (tune->parsed()) return cmd_tune(flags);
    if (compare->parsed()) return cmd_compare(flags);
    if (communities->parsed()) return cmd_communities(flags);
    return cmd_validate_regression(flags);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace surrograph
