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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_runner.h"
#include "surrograph/cli.h"
#include "surrograph/error.h"

using namespace surrograph;
namespace fs = std::filesystem;
using test::karate_nodes;
using test::karate_edges;
using test::read_file;
using test::run;
using test::scratch;

TEST_CASE("generate happy path") {
  const fs::path out = scratch("generate");
  CHECK(run({"generate", "--nodes", karate_nodes(), "--edges", karate_edges(), "--seed", "7",
             "--out", out.string()}) == kExitOk);
  for (const char* f : {"nodes.csv", "edges.csv", "report.csv", "fidelity.csv", "ccdf.csv",
                        "manifest.json"}) {
    CHECK(fs::exists(out / f));
  }
  const std::string nodes = read_file(out / "nodes.csv");
  CHECK(nodes.rfind("node_id,label_label1,label_label2\nn0,", 0) == 0);
  // 34 rows plus the header.
  CHECK(std::count(nodes.begin(), nodes.end(), '\n') == 35);
  CHECK(read_file(out / "manifest.json").find("\"converged\": true") != std::string::npos);
}

TEST_CASE("generate with augmentation drops augmentation columns and ids") {
  const fs::path out = scratch("generate_aug");
  CHECK(run({"generate", "--nodes", karate_nodes(), "--edges", karate_edges(), "--seed", "3",
             "--community-algo", "edge-betweenness", "--grid", "3,5,7,10,15", "--report",
             "jsonl", "--replicates", "2", "--out", out.string()}) == kExitOk);
  for (const char* f : {"nodes_0.csv", "edges_1.csv", "report_1.jsonl", "fidelity.jsonl",
                        "tune.csv"}) {
    CHECK(fs::exists(out / f));
  }
  const std::string nodes = read_file(out / "nodes_0.csv");
  CHECK(nodes.find("community") == std::string::npos);
  CHECK(nodes.find("degbin") == std::string::npos);
  std::istringstream rows(nodes);
  std::string line;
  std::getline(rows, line);
  while (std::getline(rows, line)) CHECK(line[0] == 'n');

  const fs::path kept = scratch("generate_keep");
  CHECK(run({"generate", "--nodes", karate_nodes(), "--edges", karate_edges(), "--seed", "3",
             "--community-algo", "fast-greedy", "--grid", "3", "--keep-aug-labels", "--out",
             kept.string()}) == kExitOk);
  CHECK(read_file(kept / "nodes.csv").find("label_community") != std::string::npos);
}

TEST_CASE("seed is mandatory for randomized subcommands") {
  const fs::path out = scratch("noseed");
  CHECK(run({"generate", "--nodes", karate_nodes(), "--edges", karate_edges(), "--out",
             out.string()}) == kExitInputError);
  CHECK(run({"tune", "--nodes", karate_nodes(), "--edges", karate_edges(), "--out",
             out.string()}) == kExitInputError);
  CHECK(run({"validate-regression", "--nodes", karate_nodes(), "--edges", karate_edges(),
             "--attribute", "label1", "--targets", "1", "--out", out.string()}) ==
        kExitInputError);
}

TEST_CASE("seed from the config file counts") {
  const fs::path out = scratch("cfgseed");
  const fs::path cfg = out / "run.cfg";
  std::ofstream(cfg) << "seed = 5\ngrid = 3,5\n";
  CHECK(run({"generate", "--nodes", karate_nodes(), "--edges", karate_edges(), "--config",
             cfg.string(), "--out", out.string()}) == kExitOk);
  CHECK(fs::exists(out / "tune.csv"));
  std::ofstream(cfg) << "seed = 5\ngrdi = 3\n";
  CHECK(run({"generate", "--nodes", karate_nodes(), "--edges", karate_edges(), "--config",
             cfg.string(), "--out", out.string()}) == kExitInputError);
}

TEST_CASE("flags override the config file") {
  const fs::path out = scratch("override");
  const fs::path cfg = out / "run.cfg";
  std::ofstream(cfg) << "seed = 5\ngrid = 3\n";
  CHECK(run({"tune", "--nodes", karate_nodes(), "--edges", karate_edges(), "--config",
             cfg.string(), "--grid", "5,7", "--out", out.string()}) == kExitOk);
  const std::string tune = read_file(out / "tune.csv");
  CHECK(tune.find("\n3,") == std::string::npos);
  CHECK(tune.find("\n5,5,") != std::string::npos);
}

TEST_CASE("tune: exit 2 when the tolerance is unmet, outputs still written") {
  const fs::path out = scratch("tune");
  CHECK(run({"tune", "--nodes", karate_nodes(), "--edges", karate_edges(), "--seed", "1",
             "--grid", "3,5,7,10,15", "--tolerance", "0", "--seeds-per-eval", "2", "--out",
             out.string()}) == kExitNotConverged);
  const std::string tune = read_file(out / "tune.csv");
  CHECK(tune.rfind("n_b,seed,nrmse\n", 0) == 0);
  CHECK(read_file(out / "manifest.json").find("\"converged\": false") != std::string::npos);
  CHECK(run({"tune", "--nodes", karate_nodes(), "--edges", karate_edges(), "--seed", "1",
             "--grid", "3,5,7,10,15", "--tolerance", "0.15", "--seeds-per-eval", "5", "--out",
             out.string()}) == kExitOk);
}

TEST_CASE("compare reports NRMSE and concordance") {
  const fs::path gen = scratch("compare_src");
  REQUIRE(run({"generate", "--nodes", karate_nodes(), "--edges", karate_edges(), "--seed", "2",
               "--out", gen.string()}) == kExitOk);
  const fs::path out = scratch("compare");
  CHECK(run({"compare", "--source-nodes", karate_nodes(), "--source-edges", karate_edges(),
             "--target-nodes", (gen / "nodes.csv").string(), "--target-edges",
             (gen / "edges.csv").string(), "--community-algo", "edge-betweenness", "--out",
             out.string()}) == kExitOk);
  const std::string fidelity = read_file(out / "fidelity.csv");
  CHECK(fidelity.find("nrmse,") != std::string::npos);
  CHECK(fidelity.find("community_count_source,5") != std::string::npos);
  CHECK(fs::exists(out / "ccdf.csv"));
}

TEST_CASE("communities subcommand") {
  const fs::path out = scratch("communities");
  CHECK(run({"communities", "--nodes", karate_nodes(), "--edges", karate_edges(),
             "--community-algo", "edge-betweenness", "--out", out.string()}) == kExitOk);
  const std::string csv = read_file(out / "communities.csv");
  CHECK(csv.rfind("node_id,community\n1,0\n", 0) == 0);
  CHECK(read_file(out / "manifest.json").find("\"count\": 5") != std::string::npos);
}

TEST_CASE("validate-regression") {
  const fs::path out = scratch("regression");
  const int code = run({"validate-regression", "--nodes", karate_nodes(), "--edges",
                        karate_edges(), "--seed", "4", "--attribute", "label1", "--targets",
                        "3", "--replicates", "3", "--out", out.string()});
  CHECK((code == kExitOk || code == kExitNotConverged));
  const std::string csv = read_file(out / "regression.csv");
  CHECK(csv.find("\nsource,4,") != std::string::npos);
  CHECK(csv.find("\nsurrogate,6,") != std::string::npos);
  CHECK(csv.find("summary,mean_odds_ratio,") != std::string::npos);
}

TEST_CASE("bad input exits 1") {
  const fs::path out = scratch("bad");
  CHECK(run({"generate", "--nodes", "/nonexistent.csv", "--edges", karate_edges(), "--seed",
             "1", "--out", out.string()}) == kExitInputError);
  CHECK(run({"generate", "--nodes", karate_nodes(), "--edges", karate_edges(), "--seed", "x",
             "--out", out.string()}) == kExitInputError);
  CHECK(run({"generate", "--nodes", karate_nodes(), "--edges", karate_edges(), "--seed", "1",
             "--community-algo", "louvain", "--out", out.string()}) == kExitInputError);
  CHECK(run({"frobnicate"}) == kExitInputError);
  CHECK(run({"generate", "--nodes", karate_nodes()}) == kExitInputError);
}

TEST_CASE("reruns are byte-identical") {
  const fs::path a = scratch("rerun_a");
  const fs::path b = scratch("rerun_b");
  const std::vector<std::string> args{"generate",      "--nodes", karate_nodes(), "--edges",
                                      karate_edges(), "--seed",  "11",           "--grid",
                                      "3,5",          "--community-algo", "fast-greedy",
                                      "--jobs",       "2"};
  auto with_out = [&](const fs::path& p) {
    auto v = args;
    v.push_back("--out");
    v.push_back(p.string());
    return v;
  };
  REQUIRE(run(with_out(a)) == kExitOk);
  REQUIRE(run(with_out(b)) == kExitOk);
  for (const auto& entry : fs::directory_iterator(a)) {
    CHECK(read_file(entry.path()) == read_file(b / entry.path().filename()));
  }
}
