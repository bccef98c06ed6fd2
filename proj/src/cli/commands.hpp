// Copyright 2026 The qlocal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLOCAL_CLI_COMMANDS_HPP
#define QLOCAL_CLI_COMMANDS_HPP

#include "qlocal/cli.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qlocal::cli {

using Json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags of every subcommand; each subcommand reads the fields it exposes.
struct RunConfig {
  std::string command;
  double beta_h = 0.5;
  double beta_c = 1.0;
  double j_min = -5.0;
  double j_max = 5.0;
  double j_step = 0.1;
  int n_sites = 2;
  double coupling_j = 1.0;
  double field_h = 0.0;
  std::vector<double> epsilons;
  std::vector<double> betas;
  std::string mode = "paper";
  double h_a = 2.0;
  double h_b = 1.0;
  double h_c = 1.0;
  double h_d = 2.0;
  std::string unitary_class = "identity";
  int steps = 1000;
  std::string model = "heisenberg-chain";
  std::vector<std::string> controls;
  std::uint64_t seed = 1;
  std::string output;
  int threads = 0;
};

RunConfig defaults_for(const std::string &command);

// Each command validates its config (ConfigError), writes its result and
// returns the exit code; I/O failures throw IoError.
int cmd_sweep_j(const RunConfig &cfg, std::ostream &out);
int cmd_precision(const RunConfig &cfg, std::ostream &out);
int cmd_optimal_field(const RunConfig &cfg, std::ostream &out);
int cmd_bound(const RunConfig &cfg, std::ostream &out);
int cmd_cycle(const RunConfig &cfg, std::ostream &out);
int cmd_gs_deg(const RunConfig &cfg, std::ostream &out);
int cmd_control(const RunConfig &cfg, std::ostream &out);

// Output helpers.
Json json_number(double x); // null for non-finite values
void write_csv(const RunConfig &cfg, const Json &params, const std::string &header,
               const std::vector<std::string> &rows, std::ostream &out);

} // namespace qlocal::cli

#endif
