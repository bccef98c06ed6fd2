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

#ifndef QLOCAL_ENGINE_HPP
#define QLOCAL_ENGINE_HPP

#include "qlocal/hamiltonians.hpp"
#include "qlocal/thermo.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace qlocal {

enum class Bath { Hot, Cold };

/// (rho, H) -> (U rho U^dagger, H_next)
struct UnitaryStep {
  Matrix unitary;
  Hamiltonian next;
};

/// Unitary step with U = identity.
struct QuenchStep {
  Hamiltonian next;
};

/// (rho, H) -> (gibbs(H, beta_bath), H)
struct ThermalContact {
  Bath bath = Bath::Hot;
};

using ProtocolStep = std::variant<UnitaryStep, QuenchStep, ThermalContact>;

struct StepOutcome {
  DensityState state;
  Hamiltonian hamiltonian;
  double work = 0.0; // extracted: E_before - E_after
  double heat = 0.0; // drawn from the bath
};

/// Throws std::invalid_argument on dimension mismatch, a non-unitary U, or
/// an H_next whose interaction part differs from the current one.
StepOutcome apply_step(const DensityState &state, const Hamiltonian &current,
                       const ProtocolStep &step,
                       const InverseTemperaturePair &betas);

struct StepRecord {
  std::size_t index = 0;
  double work = 0.0;
  double heat = 0.0;
};

struct CycleReport {
  double total_work = 0.0;
  double heat_hot = 0.0;
  double heat_cold = 0.0;
  double efficiency = 0.0; // total_work / |heat_hot|; NaN if heat_hot == 0
  std::vector<StepRecord> per_step;
  std::optional<double> bound_value;
  bool converged = false;
  int iterations = 0;
  double first_law_residual = 0.0;
};

struct CycleOptions {
  std::optional<DensityState> initial_state; // default: gibbs(H_0, beta_c)
  int max_iterations = 100;
  double tolerance = 1e-10; // trace distance between successive cycle starts
};

/**
  Runs the step sequence repeatedly from H_0 until the state at the start
  of the cycle stops changing, then reports the work and heat of the last
  pass.

  Throws std::invalid_argument when the Hamiltonian sequence does not
  return to H_0 (1e-10) or when there is no hot contact. A cycle that does
  not settle within max_iterations is reported with converged = false.
*/
CycleReport run_cycle(const Hamiltonian &h0, std::span<const ProtocolStep> steps,
                      const InverseTemperaturePair &betas,
                      const CycleOptions &options = {});

/// Contact at `from`, then `micro_steps` alternations of a quench along the
/// straight line from -> to and a contact with the same bath.
std::vector<ProtocolStep> isothermal_staircase(const Hamiltonian &from,
                                               const Hamiltonian &to, Bath bath,
                                               int micro_steps = 1000);

/// Either one of the supported unitary classes or an explicit unitary.
using UnitaryChoice = std::variant<UnitaryClass, Matrix>;

/// D -> A (adiabatic V) -> hot isotherm A -> B -> C (adiabatic U) -> cold
/// isotherm C -> D, starting and ending at H_D. Explicit unitaries are
/// inserted as UnitaryStep, classes as quenches.
std::vector<ProtocolStep>
carnot_like_protocol(const Hamiltonian &h_a, const Hamiltonian &h_b,
                     const Hamiltonian &h_c, const Hamiltonian &h_d,
                     int micro_steps = 1000,
                     const std::optional<Matrix> &u = {},
                     const std::optional<Matrix> &v = {});

struct BoundInputs {
  Hamiltonian h_a;
  Hamiltonian h_b;
  Hamiltonian h_c;
  Hamiltonian h_d;
  InverseTemperaturePair betas;
  UnitaryChoice u = UnitaryClass::Identity;
  UnitaryChoice v = UnitaryClass::Identity;
};

enum class BoundStatus {
  Ok,
  Undefined, // Delta S - D_V <= 0
  Useless,   // an infinite correction: value is -infinity
};

struct BoundResult {
  BoundStatus status = BoundStatus::Ok;
  double value = 0.0;
  double delta_s = 0.0;   // S(omega_h^B) - S(omega_c^D)
  double penalty_u = 0.0; // D(U omega_h^B U^dagger || omega_c^C)
  double penalty_v = 0.0; // D(V omega_c^D V^dagger || omega_h^A)
};

/// 1 - (T_c/T_h) (dS + D_U) / (dS - D_V).
BoundResult efficiency_bound(const BoundInputs &inputs);

struct CarnotLikeWork {
  double work_max = 0.0;
  double heat_min = 0.0; // heat drawn along the work-optimal path
};

/**
  Work and heat of the hot half of a Carnot-like cycle: start from
  (omega_c^D, H_D), apply V while switching to H_A, then follow the hot
  isotherm A -> B.

  work_max = T_h [D(omega_c^D || omega_h^D) - D(V omega_c^D V^dag || omega_h^A)]
             + F_h(H_D) - F_h(H_B)
  heat_min = T_h [Delta S^{B,D} - D(V omega_c^D V^dag || omega_h^A)]

  Infinite penalties propagate as -infinity. Requires 0 < beta_h <= beta_c.
*/
CarnotLikeWork carnot_like_work_bound(const Hamiltonian &h_d,
                                      const Hamiltonian &h_a,
                                      const Hamiltonian &h_b,
                                      const InverseTemperaturePair &betas,
                                      const UnitaryChoice &v);

/// Reads off (H_A, H_B, H_C, H_D, U, V) from a cycle with one block of hot
/// contacts and one block of cold contacts. Returns nullopt for protocols
/// alternating between baths more than once.
std::optional<BoundInputs>
bound_inputs_for_cycle(const Hamiltonian &h0, std::span<const ProtocolStep> steps,
                       const InverseTemperaturePair &betas);

} // namespace qlocal

#endif
