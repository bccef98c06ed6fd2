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

#include "qlocal/engine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qlocal {

namespace {

double beta_of(Bath bath, const InverseTemperaturePair &betas) {
  return bath == Bath::Hot ? betas.beta_h : betas.beta_c;
}

void check_next(const Hamiltonian &current, const Hamiltonian &next) {
  if (next.dim() != current.dim())
    throw std::invalid_argument("protocol step: dimension mismatch");
  if (!current.shares_interaction_with(next))
    throw std::invalid_argument(
        "protocol step: H_next does not share the fixed interaction");
}

} // namespace

StepOutcome apply_step(const DensityState &state, const Hamiltonian &current,
                       const ProtocolStep &step,
                       const InverseTemperaturePair &betas) {
  if (state.dim() != current.dim())
    throw std::invalid_argument("apply_step: state/Hamiltonian dimension mismatch");

  if (const auto *u = std::get_if<UnitaryStep>(&step)) {
    check_next(current, u->next);
    if (u->unitary.rows() != state.dim() || !is_unitary(u->unitary))
      throw std::invalid_argument("apply_step: U is not unitary");
    DensityState next_state = state.transformed(u->unitary);
    const double w =
        mean_energy(state, current) - mean_energy(next_state, u->next);
    return {std::move(next_state), u->next, w, 0.0};
  }
  if (const auto *q = std::get_if<QuenchStep>(&step)) {
    check_next(current, q->next);
    const double w = mean_energy(state, current) - mean_energy(state, q->next);
    return {state, q->next, w, 0.0};
  }
  const auto &contact = std::get<ThermalContact>(step);
  DensityState omega = gibbs(current, beta_of(contact.bath, betas));
  const double q = mean_energy(omega, current) - mean_energy(state, current);
  return {std::move(omega), current, 0.0, q};
}

// ---------------------------------------------------------------------------

namespace {

const Hamiltonian *next_hamiltonian(const ProtocolStep &step) {
  if (const auto *u = std::get_if<UnitaryStep>(&step))
    return &u->next;
  if (const auto *q = std::get_if<QuenchStep>(&step))
    return &q->next;
  return nullptr;
}

bool has_hot_contact(std::span<const ProtocolStep> steps) {
  for (const auto &s : steps)
    if (const auto *c = std::get_if<ThermalContact>(&s); c && c->bath == Bath::Hot)
      return true;
  return false;
}

} // namespace

CycleReport run_cycle(const Hamiltonian &h0, std::span<const ProtocolStep> steps,
                      const InverseTemperaturePair &betas,
                      const CycleOptions &options) {
  betas.validate();
  if (!has_hot_contact(steps))
    throw std::invalid_argument(
        "run_cycle: no hot contact, efficiency is undefined");

  {
    const Hamiltonian *h = &h0;
    for (const auto &s : steps) {
      if (const Hamiltonian *n = next_hamiltonian(s)) {
        check_next(*h, *n);
        h = n;
      }
    }
    if (max_abs_difference(*h, h0) > 1e-10)
      throw std::invalid_argument(
          "run_cycle: Hamiltonian sequence does not return to H_0");
  }

  DensityState state =
      options.initial_state ? *options.initial_state : gibbs(h0, betas.beta_c);
  if (state.dim() != h0.dim())
    throw std::invalid_argument("run_cycle: initial state dimension mismatch");

  CycleReport report;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    const DensityState start = state;
    Hamiltonian h = h0;
    CycleReport pass;
    pass.per_step.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
      StepOutcome out = apply_step(state, h, steps[i], betas);
      pass.total_work += out.work;
      if (const auto *c = std::get_if<ThermalContact>(&steps[i])) {
        (c->bath == Bath::Hot ? pass.heat_hot : pass.heat_cold) += out.heat;
      }
      pass.per_step.push_back({i, out.work, out.heat});
      state = std::move(out.state);
      h = std::move(out.hamiltonian);
    }
    pass.iterations = iter;
    report = std::move(pass);
    if (trace_distance(state, start) < options.tolerance) {
      report.converged = true;
      break;
    }
  }

  report.first_law_residual =
      report.total_work - (report.heat_hot + report.heat_cold);
  report.efficiency = report.heat_hot == 0.0
                          ? std::numeric_limits<double>::quiet_NaN()
                          : report.total_work / std::abs(report.heat_hot);

  if (auto inputs = bound_inputs_for_cycle(h0, steps, betas)) {
    const BoundResult b = efficiency_bound(*inputs);
    if (b.status != BoundStatus::Undefined)
      report.bound_value = b.value;
  }
  return report;
}

std::vector<ProtocolStep> isothermal_staircase(const Hamiltonian &from,
                                               const Hamiltonian &to, Bath bath,
                                               int micro_steps) {
  if (micro_steps < 1)
    throw std::invalid_argument("isothermal_staircase: micro_steps must be >= 1");
  std::vector<ProtocolStep> out;
  out.reserve(2 * static_cast<std::size_t>(micro_steps) + 1);
  out.emplace_back(ThermalContact{bath});
  for (int k = 1; k <= micro_steps; ++k) {
    const double t = static_cast<double>(k) / micro_steps;
    out.emplace_back(QuenchStep{k == micro_steps ? to : from.interpolate(to, t)});
    out.emplace_back(ThermalContact{bath});
  }
  return out;
}

std::vector<ProtocolStep>
carnot_like_protocol(const Hamiltonian &h_a, const Hamiltonian &h_b,
                     const Hamiltonian &h_c, const Hamiltonian &h_d,
                     int micro_steps, const std::optional<Matrix> &u,
                     const std::optional<Matrix> &v) {
  std::vector<ProtocolStep> out;
  auto adiabatic = [&out](const std::optional<Matrix> &w, const Hamiltonian &to) {
    if (w)
      out.emplace_back(UnitaryStep{*w, to});
    else
      out.emplace_back(QuenchStep{to});
  };
  adiabatic(v, h_a);
  for (auto &s : isothermal_staircase(h_a, h_b, Bath::Hot, micro_steps))
    out.push_back(std::move(s));
  adiabatic(u, h_c);
  for (auto &s : isothermal_staircase(h_c, h_d, Bath::Cold, micro_steps))
    out.push_back(std::move(s));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_shared(const Hamiltonian &a, const Hamiltonian &b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("bound: Hamiltonians differ in dimension");
  if (!a.shares_interaction_with(b))
    throw std::invalid_argument("bound: Hamiltonians do not share H_int");
}

// D(W rho W^dagger || sigma) for the given unitary choice.
double penalty(const DensityState &rho, const DensityState &sigma,
               const UnitaryChoice &choice) {
  if (const auto *cls = std::get_if<UnitaryClass>(&choice))
    return min_relative_entropy_over_unitaries(rho, sigma, *cls);
  return relative_entropy(rho.transformed(std::get<Matrix>(choice)), sigma);
}

} // namespace

BoundResult efficiency_bound(const BoundInputs &in) {
  in.betas.validate();
  check_shared(in.h_a, in.h_b);
  check_shared(in.h_a, in.h_c);
  check_shared(in.h_a, in.h_d);

  const DensityState omega_hb = gibbs(in.h_b, in.betas.beta_h);
  const DensityState omega_cc = gibbs(in.h_c, in.betas.beta_c);
  const DensityState omega_cd = gibbs(in.h_d, in.betas.beta_c);
  const DensityState omega_ha = gibbs(in.h_a, in.betas.beta_h);

  BoundResult r;
  r.delta_s = von_neumann_entropy(omega_hb) - von_neumann_entropy(omega_cd);
  r.penalty_u = penalty(omega_hb, omega_cc, in.u);
  r.penalty_v = penalty(omega_cd, omega_ha, in.v);

  if (std::isinf(r.penalty_u) || std::isinf(r.penalty_v)) {
    r.status = BoundStatus::Useless;
    r.value = -kInfinity;
    return r;
  }
  const double denominator = r.delta_s - r.penalty_v;
  if (!(denominator > 0.0)) {
    r.status = BoundStatus::Undefined;
    r.value = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  const double t_ratio = in.betas.beta_h / in.betas.beta_c;
  r.value = 1.0 - t_ratio * (r.delta_s + r.penalty_u) / denominator;
  return r;
}

CarnotLikeWork carnot_like_work_bound(const Hamiltonian &h_d,
                                      const Hamiltonian &h_a,
                                      const Hamiltonian &h_b,
                                      const InverseTemperaturePair &betas,
                                      const UnitaryChoice &v) {
  // Equal temperatures are allowed here: the hot half alone is well defined.
  if (!std::isfinite(betas.beta_h) || !std::isfinite(betas.beta_c) ||
      !(betas.beta_h > 0.0) || !(betas.beta_h <= betas.beta_c))
    throw std::invalid_argument("carnot_like_work_bound: need 0 < beta_h <= beta_c");
  check_shared(h_d, h_a);
  check_shared(h_d, h_b);
  const double t_h = betas.t_hot();

  const DensityState rho_d = gibbs(h_d, betas.beta_c);
  const DensityState omega_ha = gibbs(h_a, betas.beta_h);
  const DensityState omega_hb = gibbs(h_b, betas.beta_h);
  const double d_v = penalty(rho_d, omega_ha, v);
  if (std::isinf(d_v))
    return {-kInfinity, -kInfinity};

  const double s_d = von_neumann_entropy(rho_d);
  const double s_b = von_neumann_entropy(omega_hb);
  const double free_b = -t_h * log_partition(h_b, betas.beta_h);
  CarnotLikeWork out;
  out.work_max = mean_energy(rho_d, h_d) - t_h * s_d - free_b - t_h * d_v;
  out.heat_min = t_h * (s_b - s_d - d_v);
  return out;
}

std::optional<BoundInputs>
bound_inputs_for_cycle(const Hamiltonian &h0, std::span<const ProtocolStep> steps,
                       const InverseTemperaturePair &betas) {
  struct Contact {
    std::size_t step;
    Bath bath;
    const Hamiltonian *h;
  };
  std::vector<Contact> contacts;
  const Hamiltonian *h = &h0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (const auto *c = std::get_if<ThermalContact>(&steps[i]))
      contacts.push_back({i, c->bath, h});
    else
      h = next_hamiltonian(steps[i]);
  }
  const std::size_t n = contacts.size();
  if (n < 2)
    return std::nullopt;

  std::size_t switches = 0;
  std::size_t first_hot = n;
  for (std::size_t k = 0; k < n; ++k) {
    const Contact &prev = contacts[(k + n - 1) % n];
    if (prev.bath != contacts[k].bath) {
      ++switches;
      if (contacts[k].bath == Bath::Hot)
        first_hot = k;
    }
  }
  if (switches != 2 || first_hot == n)
    return std::nullopt;

  std::size_t last_hot = first_hot;
  while (contacts[(last_hot + 1) % n].bath == Bath::Hot)
    last_hot = (last_hot + 1) % n;
  const std::size_t first_cold = (last_hot + 1) % n;
  const std::size_t last_cold = (first_hot + n - 1) % n;

  // Product of the unitary steps strictly between two contacts, in cyclic
  // step order. Identity class when only quenches occur.
  auto between = [&](std::size_t from_contact, std::size_t to_contact) {
    const std::size_t m = steps.size();
    std::size_t i = (contacts[from_contact].step + 1) % m;
    const std::size_t stop = contacts[to_contact].step;
    std::optional<Matrix> product;
    while (i != stop) {
      if (const auto *u = std::get_if<UnitaryStep>(&steps[i]))
        product = product ? Matrix(u->unitary * *product) : u->unitary;
      i = (i + 1) % m;
    }
    return product ? UnitaryChoice(*product) : UnitaryChoice(UnitaryClass::Identity);
  };

  return BoundInputs{*contacts[first_hot].h,  *contacts[last_hot].h,
                     *contacts[first_cold].h, *contacts[last_cold].h,
                     betas,
                     between(last_hot, first_cold),
                     between(last_cold, first_hot)};
}

} // namespace qlocal
