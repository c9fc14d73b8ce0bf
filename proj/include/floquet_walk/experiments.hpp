// Copyright 2026 The floquet-walk Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace floquet_walk {

/// triangle-sweep, switch, chain, nnn-1d, star-cbg, waveguides, error-scaling
const std::vector<std::string>& experiment_kinds();

struct ExperimentOutput {
  std::vector<std::filesystem::path> files;  // CSV tables, then run_manifest.json
  std::vector<std::string> notes;
};

/// Runs one experiment from a JSON config document (see README for the
/// schema). A non-empty out_dir overrides output.directory. Config problems
/// throw kConfigInvalid before any computation starts.
ExperimentOutput run_experiment(const std::string& kind, std::string_view config_text,
                                const std::filesystem::path& out_dir = {});

/// FLOQUET_WALK_THREADS, else the hardware concurrency.
int worker_threads();

/// Printed next to every period bound.
const char* period_bound_note();

}  // namespace floquet_walk
