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

#ifndef SURROGRAPH_PIPELINE_H_
#define SURROGRAPH_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surrograph/augmentation.h"
#include "surrograph/community.h"
#include "surrograph/generator.h"
#include "surrograph/metrics.h"

namespace surrograph {

// Full augmented-generation run. Stages run in a fixed order and append
// labels in that order: community, linchpin-centrality bins, degree bins.
struct PipelineSpec {
  CommunityAlgorithm community = CommunityAlgorithm::kNone;

  bool centrality = false;
  // Attribute whose value uniqueness defines linchpin centrality; the
  // community label by default.
  std::string centrality_attribute = kCommunityLabel;
  CentralityBins centrality_bins;

  // Empty grid disables degree augmentation.
  std::vector<std::uint32_t> degree_grid;
  std::optional<double> tolerance;
  // Unset: first-meeting when a tolerance is given, otherwise minimize.
  std::optional<TuneMode> tune_mode;
  std::uint32_t seeds_per_eval = 1;

  // n_vertices / n_edges of 0 mean "same as source".
  GenerationConfig generation{.n_vertices = 0};
  std::uint32_t replicates = 1;
  bool keep_augmentation_labels = false;

  // Community algorithm used to profile graphs in the fidelity report;
  // defaults to `community` when unset.
  std::optional<CommunityAlgorithm> report_communities;
  std::optional<HomophilyModel> regression;
  unsigned jobs = 1;

  // Throws InputError on inconsistent settings.
  void validate(const PropertyGraph& source) const;
};

struct PipelineResult {
  // Released surrogates, seeds generation.seed + i. Augmentation labels are
  // stripped unless keep_augmentation_labels is set.
  std::vector<GeneratedGraph> generated;
  std::vector<std::uint64_t> seeds;
  // Source with every appended structural label.
  PropertyGraph augmented_source;
  std::optional<CommunityAssignment> source_communities;
  std::optional<TuneResult> tune;
  // Error of the community (and centrality) labels alone, when checked
  // against the tolerance before degree augmentation.
  std::optional<double> pre_degree_error;
  bool degree_augmentation_skipped = false;
  std::uint32_t selected_bins = 0;
  FidelityReport report;
  std::vector<std::string> log;

  // False when tuning missed its tolerance or the source regression failed.
  bool converged() const;
};

// Community and centrality stages only, on the anonymized source.
struct StructuralAugmentation {
  PropertyGraph graph;
  std::optional<CommunityAssignment> communities;
  std::vector<std::string> log;
};
StructuralAugmentation augment_structure(const PropertyGraph& source, const PipelineSpec& spec);

// Tuning options the pipeline derives from the spec.
TuneOptions tune_options(const PropertyGraph& source, const PipelineSpec& spec);

PipelineResult run_pipeline(const PropertyGraph& source, const PipelineSpec& spec);

// Augmentation labels present in g, in schema order.
std::vector<std::string> augmentation_labels(const PropertyGraph& g);

}  // namespace surrograph

#endif  // SURROGRAPH_PIPELINE_H_
