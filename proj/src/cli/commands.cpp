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

#include "qlocal/control.hpp"
#include "qlocal/engine.hpp"
#include "qlocal/ising.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace qlocal::cli {

namespace {

// Evaluates row(i) for i < n on a small thread pool; output order is the
// index order regardless of scheduling.
template <class F>
std::vector<std::string> parallel_rows(std::size_t n, int threads, F row) {
  std::vector<std::string> out(n);
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = n;
  std::exception_ptr error;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = row(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w)
      pool.emplace_back(work);
    work();
  }
  if (error)
    std::rethrow_exception(error);
  return out;
}

std::string join(std::initializer_list<std::string> cells) {
  std::string s;
  for (const auto &c : cells) {
    if (!s.empty())
      s += ',';
    s += c;
  }
  return s;
}

InverseTemperaturePair betas_of(const RunConfig &cfg) {
  InverseTemperaturePair b{cfg.beta_h, cfg.beta_c};
  if (!std::isfinite(b.beta_h) || !(b.beta_h > 0.0))
    throw ConfigError("--beta-h must be finite and > 0");
  if (!std::isfinite(b.beta_c) || !(b.beta_h < b.beta_c))
    throw ConfigError("--beta-h must be < --beta-c (hot bath hotter)");
  return b;
}

ising::FieldMode mode_of(const RunConfig &cfg) {
  if (cfg.mode == "paper")
    return ising::FieldMode::PaperProtocol;
  if (cfg.mode == "free")
    return ising::FieldMode::FreeFields;
  throw ConfigError("--mode must be 'paper', 'free' or 'fixed'");
}

void check_sites(const RunConfig &cfg, int lo, int hi) {
  if (cfg.n_sites < lo || cfg.n_sites > hi)
    throw ConfigError("-N must be in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
}

void check_finite(double x, const char *flag) {
  if (!std::isfinite(x))
    throw ConfigError(std::string(flag) + " must be finite");
}

Json range_params(const RunConfig &cfg) {
  Json p;
  p["j-min"] = cfg.j_min;
  p["j-max"] = cfg.j_max;
  p["j-step"] = cfg.j_step;
  return p;
}

void emit_json(const Json &j, std::ostream &out) {
  out << j.dump() << '\n';
  out.flush();
}

struct Corners {
  Hamiltonian a, b, c, d;
};

Corners ising_corners(const RunConfig &cfg) {
  check_sites(cfg, 2, 12);
  check_finite(cfg.coupling_j, "-J");
  check_finite(cfg.h_a, "--h-a");
  check_finite(cfg.h_b, "--h-b");
  check_finite(cfg.h_c, "--h-c");
  check_finite(cfg.h_d, "--h-d");
  auto make = [&](double h) {
    return ising_diagonal(IsingParams{cfg.n_sites, cfg.coupling_j, h}).hamiltonian();
  };
  return {make(cfg.h_a), make(cfg.h_b), make(cfg.h_c), make(cfg.h_d)};
}

Json corner_inputs(const RunConfig &cfg) {
  Json in;
  in["beta-h"] = cfg.beta_h;
  in["beta-c"] = cfg.beta_c;
  in["N"] = cfg.n_sites;
  in["J"] = cfg.coupling_j;
  in["h-a"] = cfg.h_a;
  in["h-b"] = cfg.h_b;
  in["h-c"] = cfg.h_c;
  in["h-d"] = cfg.h_d;
  return in;
}

} // namespace

RunConfig defaults_for(const std::string &command) {
  RunConfig c;
  c.command = command;
  if (command == "precision") {
    c.n_sites = 6;
    c.j_min = 0.0;
    c.j_max = 20.0;
    c.j_step = 0.5;
  } else if (command == "optimal-field") {
    c.betas = {1.0, 2.0, 3.0};
    c.j_min = -3.0;
    c.j_max = 0.0;
    c.j_step = 0.01;
  } else if (command == "gs-deg") {
    c.n_sites = 8;
    c.coupling_j = -1.0;
    c.field_h = 2.0;
  } else if (command == "control") {
    c.controls = {"site0:x,z"};
  }
  return c;
}

int cmd_sweep_j(const RunConfig &cfg, std::ostream &out) {
  const InverseTemperaturePair betas = betas_of(cfg);
  // "fixed" evaluates one J-independent protocol (h_A = h_D = inf).
  const bool fixed = cfg.mode == "fixed";
  const ising::FieldMode mode = fixed ? ising::FieldMode::PaperProtocol : mode_of(cfg);
  if (fixed) {
    check_finite(cfg.h_b, "--h-b");
    check_finite(cfg.h_c, "--h-c");
  }
  const std::vector<double> grid = linear_grid(cfg.j_min, cfg.j_max, cfg.j_step);

  Json params;
  params["command"] = cfg.command;
  params["beta-h"] = cfg.beta_h;
  params["beta-c"] = cfg.beta_c;
  params.update(range_params(cfg));
  params["mode"] = cfg.mode;
  if (fixed) {
    params["h-b"] = cfg.h_b;
    params["h-c"] = cfg.h_c;
  }

  const auto rows = parallel_rows(grid.size(), cfg.threads, [&](std::size_t i) {
    ising::SweepPoint p;
    if (fixed) {
      ising::ProtocolFields f;
      f.h_b = cfg.h_b;
      f.h_c = cfg.h_c;
      p.h_opt = cfg.h_b;
      p.work_density = ising::work_density(grid[i], f, betas);
      p.efficiency = ising::efficiency_thermo_limit(grid[i], f, betas)
                         .value_or(std::numeric_limits<double>::quiet_NaN());
    } else {
      p = ising::efficiency_at_max_work(grid[i], betas, mode);
    }
    return join({format_double(grid[i]), format_double(p.h_opt),
                 format_double(p.work_density), format_double(p.efficiency),
                 cfg.mode});
  });
  write_csv(cfg, params, "J,h_opt,work_density,efficiency,mode", rows, out);
  return kOk;
}

int cmd_precision(const RunConfig &cfg, std::ostream &out) {
  const InverseTemperaturePair betas = betas_of(cfg);
  const ising::FieldMode mode = mode_of(cfg);
  check_sites(cfg, 2, 12);
  if (cfg.epsilons.empty())
    throw ConfigError("--epsilon: at least one value is required");
  for (double e : cfg.epsilons)
    if (!std::isfinite(e) || e < 0.0)
      throw ConfigError("--epsilon values must be finite and >= 0");
  const std::vector<double> grid = linear_grid(cfg.j_min, cfg.j_max, cfg.j_step);

  Json params;
  params["command"] = cfg.command;
  params["beta-h"] = cfg.beta_h;
  params["beta-c"] = cfg.beta_c;
  params["N"] = cfg.n_sites;
  params.update(range_params(cfg));
  params["epsilon"] = cfg.epsilons;
  params["mode"] = cfg.mode;

  const std::size_t n = grid.size() * cfg.epsilons.size();
  const auto rows = parallel_rows(n, cfg.threads, [&](std::size_t i) {
    const double eps = cfg.epsilons[i / grid.size()];
    const double j = grid[i % grid.size()];
    const auto p = ising::finite_efficiency_at_max_work(cfg.n_sites, j, eps, betas, mode);
    return join({format_double(j), format_double(eps), format_double(p.efficiency)});
  });
  write_csv(cfg, params, "J,epsilon,efficiency", rows, out);
  return kOk;
}

int cmd_optimal_field(const RunConfig &cfg, std::ostream &out) {
  if (cfg.betas.empty())
    throw ConfigError("--beta: at least one value is required");
  for (double b : cfg.betas)
    if (!std::isfinite(b) || !(b > 0.0))
      throw ConfigError("--beta values must be finite and > 0");
  const std::vector<double> grid = linear_grid(cfg.j_min, cfg.j_max, cfg.j_step);

  Json params;
  params["command"] = cfg.command;
  params["beta"] = cfg.betas;
  params.update(range_params(cfg));

  const std::size_t n = grid.size() * cfg.betas.size();
  const auto rows = parallel_rows(n, cfg.threads, [&](std::size_t i) {
    const double beta = cfg.betas[i / grid.size()];
    const double j = grid[i % grid.size()];
    return join({format_double(beta), format_double(j),
                 format_double(ising::optimal_field(beta, j))});
  });
  write_csv(cfg, params, "beta,J,h_opt", rows, out);
  return kOk;
}

int cmd_bound(const RunConfig &cfg, std::ostream &out) {
  const InverseTemperaturePair betas = betas_of(cfg);
  UnitaryClass cls;
  if (cfg.unitary_class == "full")
    cls = UnitaryClass::Full;
  else if (cfg.unitary_class == "commuting")
    cls = UnitaryClass::Commuting;
  else if (cfg.unitary_class == "identity")
    cls = UnitaryClass::Identity;
  else
    throw ConfigError("--class must be 'full', 'commuting' or 'identity'");
  const Corners h = ising_corners(cfg);

  const BoundResult b = efficiency_bound(BoundInputs{h.a, h.b, h.c, h.d, betas, cls, cls});
  const CarnotLikeWork w = carnot_like_work_bound(h.d, h.a, h.b, betas, cls);

  Json j;
  j["command"] = cfg.command;
  j["status"] = b.status == BoundStatus::Ok          ? "ok"
                : b.status == BoundStatus::Undefined ? "undefined"
                                                     : "useless";
  j["efficiency_bound"] = json_number(b.value);
  j["carnot"] = betas.carnot();
  j["delta_s"] = json_number(b.delta_s);
  j["penalty_u"] = json_number(b.penalty_u);
  j["penalty_v"] = json_number(b.penalty_v);
  j["work_max"] = json_number(w.work_max);
  j["heat_min"] = json_number(w.heat_min);
  Json in = corner_inputs(cfg);
  in["class"] = cfg.unitary_class;
  j["inputs"] = in;
  emit_json(j, out);
  return b.status == BoundStatus::Undefined ? kUndefinedResult : kOk;
}

int cmd_cycle(const RunConfig &cfg, std::ostream &out) {
  const InverseTemperaturePair betas = betas_of(cfg);
  if (cfg.steps < 1 || cfg.steps > 100000)
    throw ConfigError("--steps must be in [1, 100000]");
  const Corners h = ising_corners(cfg);
  const auto protocol = carnot_like_protocol(h.a, h.b, h.c, h.d, cfg.steps);
  const CycleReport r = run_cycle(h.d, protocol, betas);

  Json j;
  j["command"] = cfg.command;
  j["work"] = r.total_work;
  j["heat_hot"] = r.heat_hot;
  j["heat_cold"] = r.heat_cold;
  j["efficiency"] = json_number(r.efficiency);
  j["bound"] = r.bound_value ? json_number(*r.bound_value) : Json(nullptr);
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["first_law_residual"] = r.first_law_residual;
  Json in = corner_inputs(cfg);
  in["steps"] = cfg.steps;
  j["inputs"] = in;
  emit_json(j, out);
  return std::isfinite(r.efficiency) ? kOk : kUndefinedResult;
}

int cmd_gs_deg(const RunConfig &cfg, std::ostream &out) {
  check_sites(cfg, 2, 24);
  check_finite(cfg.coupling_j, "-J");
  check_finite(cfg.field_h, "-h");
  const ising::Degeneracy g =
      ising::ground_state_degeneracy(cfg.n_sites, cfg.coupling_j, cfg.field_h);
  Json j;
  j["command"] = cfg.command;
  j["g0"] = g.g0;
  j["e0"] = g.e0;
  j["inputs"] = {{"N", cfg.n_sites}, {"J", cfg.coupling_j}, {"h", cfg.field_h}};
  emit_json(j, out);
  return kOk;
}

namespace {

Matrix site_pauli(char axis) {
  switch (axis) {
  case 'x':
    return pauli_x();
  case 'y':
    return pauli_y();
  case 'z':
    return pauli_z();
  }
  throw ConfigError(std::string("--controls: unknown axis '") + axis + "'");
}

// "site0:x,z" or "all:z"; several groups may be separated by ';'.
std::vector<Matrix> parse_controls(const std::vector<std::string> &specs, int n) {
  std::vector<Matrix> out;
  for (const auto &spec : specs) {
    std::stringstream groups(spec);
    std::string group;
    while (std::getline(groups, group, ';')) {
      if (group.empty())
        continue;
      const auto colon = group.find(':');
      if (colon == std::string::npos)
        throw ConfigError("--controls: expected 'site<k>:<axes>', got '" + group + "'");
      const std::string where = group.substr(0, colon);
      std::vector<int> sites;
      if (where == "all") {
        for (int s = 0; s < n; ++s)
          sites.push_back(s);
      } else {
        int s = -1;
        try {
          if (where.rfind("site", 0) != 0)
            throw std::invalid_argument(where);
          std::size_t used = 0;
          s = std::stoi(where.substr(4), &used);
          if (used != where.size() - 4)
            throw std::invalid_argument(where);
        } catch (const std::exception &) {
          throw ConfigError("--controls: bad site '" + where + "'");
        }
        if (s < 0 || s >= n)
          throw ConfigError("--controls: site out of range in '" + group + "'");
        sites.push_back(s);
      }
      std::stringstream axes(group.substr(colon + 1));
      std::string axis;
      while (std::getline(axes, axis, ',')) {
        if (axis.size() != 1)
          throw ConfigError("--controls: bad axis '" + axis + "'");
        for (int s : sites)
          out.push_back(embed(site_pauli(axis[0]), s, n));
      }
    }
  }
  return out;
}

Matrix random_two_local(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const Index d = Index{1} << n;
  Matrix h = Matrix::Zero(d, d);
  for (int j = 0; j + 1 < n; ++j) {
    Matrix g(4, 4);
    for (Index r = 0; r < 4; ++r)
      for (Index c = 0; c < 4; ++c)
        g(r, c) = Complex(normal(rng), normal(rng));
    const Matrix bond = 0.5 * (g + g.adjoint());
    h += kron(kron(identity(Index{1} << j), bond), identity(Index{1} << (n - j - 2)));
  }
  return h;
}

} // namespace

int cmd_control(const RunConfig &cfg, std::ostream &out) {
  check_sites(cfg, 1, 6);
  check_finite(cfg.coupling_j, "-J");
  Matrix drift;
  if (cfg.model == "heisenberg-chain") {
    check_sites(cfg, 2, 6);
    drift = heisenberg_chain(cfg.n_sites, cfg.coupling_j);
  } else if (cfg.model == "ising-chain") {
    check_sites(cfg, 2, 6);
    drift = ring_interaction(pauli_z(), pauli_z(), cfg.n_sites, -cfg.coupling_j);
  } else if (cfg.model == "random-2local") {
    check_sites(cfg, 2, 6);
    drift = random_two_local(cfg.n_sites, cfg.seed);
  } else {
    throw ConfigError("--model must be heisenberg-chain, ising-chain or random-2local");
  }
  const GeneratorSet gens(drift, parse_controls(cfg.controls, cfg.n_sites));
  const Classification c = classify_unitary_class(gens);

  Json j;
  j["command"] = cfg.command;
  j["class"] = to_string(c.cls);
  j["dim"] = c.dim;
  j["partial"] = c.partial;
  j["max_dim"] = gens.dim() * gens.dim() - 1;
  Json in;
  in["model"] = cfg.model;
  in["N"] = cfg.n_sites;
  in["J"] = cfg.coupling_j;
  in["controls"] = cfg.controls;
  if (cfg.model == "random-2local")
    in["seed"] = cfg.seed;
  j["inputs"] = in;
  emit_json(j, out);
  return kOk;
}

} // namespace qlocal::cli
