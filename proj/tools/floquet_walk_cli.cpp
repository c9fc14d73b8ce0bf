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


// floquet-walk <experiment> --config <path> [--out <dir>]
// floquet-walk bound --epsilon E --t-evol T --h-max H [--order 0|1]
//
// Exit codes: 0 success, 1 I/O or internal failure, 2 configuration or usage
// error, 3 numerical failure.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "floquet_walk/floquet_walk.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int exit_code(fw_status status) {
  if (status == FW_OK) return 0;
  if (fw_status_is_numerical(status)) return kExitNumerical;
  if (status == FW_CONFIG_INVALID || status == FW_INVALID_ARGUMENT ||
      status == FW_INVALID_PARTITION || status == FW_CENTER_OUT_OF_RANGE) {
    return kExitConfig;
  }
  return kExitFailure;
}

int report(fw_status status) {
  if (status != FW_OK) {
    std::fprintf(stderr, "floquet-walk: %s: %s\n", fw_status_name(status), fw_last_error());
  }
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Floquet engineering of quantum walks"};
  app.set_version_flag("--version", std::string(fw_version()));
  app.require_subcommand(1);

  std::string config;
  std::string out_dir;
  std::vector<std::pair<std::string, CLI::App*>> experiments;
  for (const char* const* kind = fw_experiment_kinds(); *kind != nullptr; ++kind) {
    CLI::App* sub = app.add_subcommand(*kind, std::string("run the ") + *kind + " experiment");
    sub->add_option("--config", config, "JSON config file")->required();
    sub->add_option("--out", out_dir, "output directory (overrides output.directory)");
    experiments.emplace_back(*kind, sub);
  }

  double epsilon = 0.0, t_evol = 0.0, h_max = 0.0;
  int order = 0;
  CLI::App* bound = app.add_subcommand("bound", "largest period for a target accuracy");
  bound->add_option("--epsilon", epsilon, "accumulated error target")->required();
  bound->add_option("--t-evol", t_evol, "effective evolution time")->required();
  bound->add_option("--h-max", h_max, "max_t ||H(t)||")->required();
  bound->add_option("--order", order, "Magnus truncation order (0 or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (bound->parsed()) {
    double period = 0.0;
    const fw_status status = fw_period_bound(epsilon, t_evol, h_max, order, &period);
    if (status != FW_OK) return report(status);
    std::printf("T_max = %.15g\nnote: %s\n", period, fw_period_bound_note());
    return 0;
  }
  for (const auto& [kind, sub] : experiments) {
    if (sub->parsed()) {
      return report(fw_run_experiment(kind.c_str(), config.c_str(),
                                      out_dir.empty() ? nullptr : out_dir.c_str()));
    }
  }
  return kExitConfig;
}
