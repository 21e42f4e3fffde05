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

#ifndef SURROGRAPH_CLI_H_
#define SURROGRAPH_CLI_H_

#include "surrograph/io.h"
#include "surrograph/pipeline.h"

namespace surrograph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotConverged = 2;

// Builds a pipeline spec from config keys (see RunConfig). Unknown keys
// raise InputError.
PipelineSpec spec_from_config(const RunConfig& config);

// Subcommands: generate, tune, compare, communities, validate-regression.
int run_cli(int argc, char** argv);

}  // namespace surrograph

#endif  // SURROGRAPH_CLI_H_
