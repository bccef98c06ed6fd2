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

#ifndef QLOCAL_ISING_HPP
#define QLOCAL_ISING_HPP

#include "qlocal/hamiltonians.hpp"
#include "qlocal/thermo.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Periodic 1D Ising chain H = -h sum sz_j - J sum sz_j sz_{j+1}: exact
// finite-N and thermodynamic-limit thermodynamics, and the work/efficiency
// analysis of Carnot-like engines using it as working medium.
//
// Densities are per site. Fields of +-infinity denote fully polarised
// corners (zero entropy).

namespace qlocal::ising {

/// log(lambda_+^N + lambda_-^N) for the 2x2 transfer matrix, in log domain.
double transfer_matrix_log_z(int n_sites, double coupling_j, double field_h,
                             double beta);

/// Brute-force log sum_c exp(-beta E(c)) over all 2^N configurations.
double enumerated_log_z(int n_sites, double coupling_j, double field_h,
                        double beta);

struct ThermoDensities {
  double f = 0.0; // free energy
  double s = 0.0; // entropy (nats)
  double u = 0.0; // internal energy
  double m = 0.0; // magnetisation <sz>
};

/// All densities at once. Throws std::invalid_argument for beta <= 0.
ThermoDensities densities(double beta, double coupling_j, double field_h);

double free_energy_density(double beta, double coupling_j, double field_h);
double entropy_density(double beta, double coupling_j, double field_h);
double internal_energy_density(double beta, double coupling_j, double field_h);
double magnetization_density(double beta, double coupling_j, double field_h);

/// ds/dh, closed form:
///   -beta^2 e^{bJ} (h cosh(bh) + 2J sinh(bh))
///   / ( sqrt(e^{-2bJ} + e^{2bJ} sinh^2(bh)) (1 + e^{4bJ} sinh^2(bh)) )
/// evaluated with the common exponential scale factored out.
double entropy_density_dh(double beta, double coupling_j, double field_h);

/// Entropy-maximising field: 0 for J >= 0 or 2|J| beta <= 1, otherwise the
/// positive root of h = 2|J| tanh(beta h).
double optimal_field(double beta, double coupling_j);

/// Per-site D(omega_{beta_state}(h_state) || omega_{beta_ref}(h_ref)).
/// +infinity when the reference is polarised (infinite field) and the state
/// is not the same polarised state.
double relative_entropy_density(double beta_state, double beta_ref,
                                double coupling_j, double h_state,
                                double h_ref);

struct ProtocolFields {
  double h_a = kInfinity;
  double h_b = 0.0;
  double h_c = 0.0;
  double h_d = kInfinity;

  /// Throws std::invalid_argument for NaN, or infinite h_b / h_c.
  void validate() const;
};

/// (T_h - T_c)(s_h^B - s_c^D) - T_h d(D -> A) - T_c d(B -> C).
double work_density(double coupling_j, const ProtocolFields &fields,
                    const InverseTemperaturePair &betas);

/// 1 - (T_c/T_h)(ds + d(B->C)) / (ds - d(D->A)); nullopt when the
/// denominator is not positive.
std::optional<double> efficiency_thermo_limit(double coupling_j,
                                              const ProtocolFields &fields,
                                              const InverseTemperaturePair &betas);

enum class FieldMode {
  PaperProtocol, // h_C = h_B, h_A = h_D = infinity
  FreeFields,    // h_A = h_D = infinity, h_C minimises d(B -> C)
};

struct SweepPoint {
  double coupling_j = 0.0;
  double h_opt = 0.0; // h_B at maximum work density
  double work_density = 0.0;
  double efficiency = 0.0; // NaN when undefined
  ProtocolFields fields;
};

/// Field h_C minimising d(B -> C) for a given h_B; matches the cold
/// magnetisation to the hot one.
double best_cold_field(double coupling_j, double h_b,
                       const InverseTemperaturePair &betas);

/// Maximises work density over h_B >= 0: grid 0..4 max(1,|J|) with step
/// 1e-2, then golden-section refinement to 1e-8.
SweepPoint efficiency_at_max_work(double coupling_j,
                                  const InverseTemperaturePair &betas,
                                  FieldMode mode);

/// Scanning from the ferromagnetic side (largest J first), the first grid
/// point whose h_opt exceeds 1e-6. nullopt if none does.
std::optional<double> locate_j_star(std::span<const SweepPoint> sweep);

struct Degeneracy {
  std::uint64_t g0 = 0;
  double e0 = 0.0;
};

/// Exhaustive enumeration, N <= 24.
Degeneracy ground_state_degeneracy(int n_sites, double coupling_j,
                                   double field_h);

/// (dT/T_h) log(1 + e^{-beta_c eps N}) / log(1 + e^{-beta_h eps N})
double ferro_efficiency_limit(double epsilon, int n_sites,
                              const InverseTemperaturePair &betas);

struct EntropyRatioRow {
  double scale = 0.0;
  std::optional<double> ratio; // nullopt when S(omega_h) = 0
};

/// S(omega_{beta_c}(J H)) / S(omega_{beta_h}(J H)) along the grid of J.
/// Requires at least two distinct levels and beta_c > beta_h >= 0.
std::vector<EntropyRatioRow>
entropy_ratio_limit_check(const Hamiltonian &h, double beta_h, double beta_c,
                          std::span<const double> j_grid);

struct FiniteChainPoint {
  double coupling_j = 0.0;
  double h_b = 0.0;
  double h_c = 0.0;
  double work = 0.0; // per cycle, whole chain
  double efficiency = 0.0;
};

/**
  Efficiency at maximum work for an N-site chain (exact, N <= 20) with
  polarised A/D corners and |h_B|, |h_C| >= epsilon. PaperProtocol ties
  h_C = h_B; FreeFields picks h_C >= epsilon minimising the cold penalty.
*/
FiniteChainPoint finite_efficiency_at_max_work(int n_sites, double coupling_j,
                                               double epsilon,
                                               const InverseTemperaturePair &betas,
                                               FieldMode mode);

} // namespace qlocal::ising

#endif
