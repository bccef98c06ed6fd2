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

#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <ostream>

namespace qlocal::cli {

namespace {

struct Subcommand {
  CLI::App *app = nullptr;
  RunConfig config;
  std::function<int(const RunConfig &, std::ostream &)> handler;
};

void add_betas(CLI::App *s, RunConfig &c) {
  s->add_option("--beta-h", c.beta_h, "Hot-bath inverse temperature")->capture_default_str();
  s->add_option("--beta-c", c.beta_c, "Cold-bath inverse temperature")->capture_default_str();
}

void add_range(CLI::App *s, RunConfig &c) {
  s->add_option("--j-min", c.j_min, "First coupling J of the grid")->capture_default_str();
  s->add_option("--j-max", c.j_max, "Last coupling J of the grid")->capture_default_str();
  s->add_option("--j-step", c.j_step, "Grid spacing in J")->capture_default_str();
}

void add_output(CLI::App *s, RunConfig &c) {
  s->add_option("-o", c.output, "CSV output path (stdout if omitted)");
}

void add_corners(CLI::App *s, RunConfig &c) {
  add_betas(s, c);
  s->add_option("-N", c.n_sites, "Number of spins")->capture_default_str();
  s->add_option("-J", c.coupling_j, "Ising coupling")->capture_default_str();
  s->add_option("--h-a", c.h_a, "Field at corner A")->capture_default_str();
  s->add_option("--h-b", c.h_b, "Field at corner B")->capture_default_str();
  s->add_option("--h-c", c.h_c, "Field at corner C")->capture_default_str();
  s->add_option("--h-d", c.h_d, "Field at corner D")->capture_default_str();
}

std::string json_scalar(const Json &v) {
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_number_float())
    return format_double(v.get<double>());
  if (v.is_number() || v.is_boolean())
    return v.dump();
  throw ConfigError("--config: unsupported value " + v.dump());
}

// Fills options that were not given on the command line from a JSON object
// whose keys are flag names without leading dashes.
void merge_config(const std::string &path, CLI::App &root, CLI::App &sub) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot read config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw ConfigError("--config: invalid JSON: " + std::string(e.what()));
  }
  if (!j.is_object())
    throw ConfigError("--config: top level must be an object");
  for (const auto &[key, value] : j.items()) {
    if (key == "command") {
      if (!value.is_string() || value.get<std::string>() != sub.get_name())
        throw ConfigError("--config: command " + value.dump() +
                          " does not match subcommand '" + sub.get_name() + "'");
      continue;
    }
    const std::string flag = (key.size() == 1 ? "-" : "--") + key;
    CLI::Option *opt = sub.get_option_no_throw(flag);
    if (opt == nullptr && key != "config")
      opt = root.get_option_no_throw(flag);
    if (opt == nullptr)
      throw ConfigError("--config: unknown key '" + key + "' for " + sub.get_name());
    if (opt->count() > 0)
      continue;
    if (value.is_array()) {
      for (const auto &v : value)
        opt->add_result(json_scalar(v));
    } else {
      opt->add_result(json_scalar(value));
    }
    try {
      opt->run_callback();
    } catch (const CLI::Error &e) {
      throw ConfigError("--config: key '" + key + "': " + e.what());
    }
  }
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Local-control quantum heat engines: sweeps, bounds and cycles"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  int threads = 0;
  app.add_option("--config", config_path, "JSON file with flag values; explicit flags win");
  app.add_option("--threads", threads, "Worker threads for sweeps (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  std::map<std::string, Subcommand> subs;
  auto add = [&](const std::string &name, const std::string &help,
                 std::function<int(const RunConfig &, std::ostream &)> handler) {
    Subcommand &s = subs[name];
    s.config = defaults_for(name);
    s.app = app.add_subcommand(name, help);
    s.handler = std::move(handler);
    return std::pair<CLI::App *, RunConfig *>{s.app, &s.config};
  };

  {
    auto [s, c] = add("sweep-j", "Efficiency at maximum work density versus J (CSV)",
                      cmd_sweep_j);
    add_betas(s, *c);
    add_range(s, *c);
    s->add_option("--mode", c->mode, "Field protocol: paper, free or fixed")
        ->capture_default_str();
    s->add_option("--h-b", c->h_b, "Hot-isotherm end field for --mode fixed")
        ->capture_default_str();
    s->add_option("--h-c", c->h_c, "Cold-isotherm start field for --mode fixed")
        ->capture_default_str();
    add_output(s, *c);
  }
  {
    auto [s, c] = add("precision", "Finite-N efficiency with field imprecision (CSV)",
                      cmd_precision);
    add_betas(s, *c);
    s->add_option("-N", c->n_sites, "Number of spins (<= 12)")->capture_default_str();
    add_range(s, *c);
    s->add_option("--epsilon", c->epsilons, "Minimum |h| at B and C (repeatable)")
        ->delimiter(',');
    s->add_option("--mode", c->mode, "Field protocol: paper or free")->capture_default_str();
    add_output(s, *c);
  }
  {
    auto [s, c] = add("optimal-field", "Entropy-maximising field versus J (CSV)",
                      cmd_optimal_field);
    s->add_option("--beta", c->betas, "Inverse temperature (repeatable)")
        ->delimiter(',')
        ->capture_default_str();
    add_range(s, *c);
    add_output(s, *c);
  }
  {
    auto [s, c] = add("bound", "Efficiency bound for an Ising Carnot-like cycle (JSON)",
                      cmd_bound);
    add_corners(s, *c);
    s->add_option("--class", c->unitary_class, "Unitary class: full, commuting, identity")
        ->capture_default_str();
  }
  {
    auto [s, c] = add("cycle", "Simulate an Ising Carnot-like cycle (JSON)", cmd_cycle);
    add_corners(s, *c);
    s->add_option("--steps", c->steps, "Micro-steps per isotherm")->capture_default_str();
  }
  {
    auto [s, c] = add("gs-deg", "Ground-state degeneracy of the Ising ring (JSON)",
                      cmd_gs_deg);
    s->add_option("-N", c->n_sites, "Number of spins (<= 24)")->capture_default_str();
    s->add_option("-J", c->coupling_j, "Ising coupling")->capture_default_str();
    s->add_option("-h", c->field_h, "Longitudinal field")->capture_default_str();
  }
  {
    auto [s, c] = add("control", "Dynamical Lie algebra of drift plus local controls (JSON)",
                      cmd_control);
    s->add_option("--model", c->model, "heisenberg-chain, ising-chain or random-2local")
        ->capture_default_str();
    s->add_option("-N", c->n_sites, "Number of spins (<= 6)")->capture_default_str();
    s->add_option("-J", c->coupling_j, "Drift coupling")->capture_default_str();
    s->add_option("--controls", c->controls, "Controls such as site0:x,z or all:z");
    s->add_option("--seed", c->seed, "Seed for random-2local")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  CLI::App *chosen = app.get_subcommands().front();
  Subcommand &sub = subs.at(chosen->get_name());
  try {
    if (!config_path.empty())
      merge_config(config_path, app, *chosen);
    sub.config.threads = threads;
    return sub.handler(sub.config, out);
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace qlocal::cli
