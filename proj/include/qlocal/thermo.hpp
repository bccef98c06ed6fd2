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

#ifndef QLOCAL_THERMO_HPP
#define QLOCAL_THERMO_HPP

#include "qlocal/hamiltonians.hpp"

#include <limits>
#include <optional>
#include <span>
#include <string>

// Entropic quantities are in nats; k_B = 1, T = 1 / beta.

namespace qlocal {

/// Populations below this are treated as outside the support.
inline constexpr double kSupportTol = 1e-14;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Spectrum {
  RealVector eigenvalues; // ascending
  Matrix eigenvectors;    // columns
};

/// Throws std::invalid_argument for non-Hermitian or non-finite input.
Spectrum eigendecompose(const Matrix &h);

/**
  Mixed state in spectral form: rho = sum_i p_i |b_i><b_i|.

  `basis` is empty for states diagonal in the computational basis, in which
  case populations are indexed by computational basis state. This keeps
  Gibbs states of classical (diagonal) Hamiltonians free of a d x d basis.
*/
class DensityState {
public:
  struct Provenance {
    double beta = 0.0;
    bool diagonal_hamiltonian = false;
  };

  /// Validates p >= 0, sum p = 1 (1e-12) and basis unitarity (1e-10).
  DensityState(RealVector populations, std::optional<Matrix> basis = {},
               std::optional<Provenance> provenance = {});

  static DensityState maximally_mixed(Index dim);
  /// Pure computational basis state |index>.
  static DensityState basis_state(Index dim, Index index);

  Index dim() const { return populations_.size(); }
  const RealVector &populations() const { return populations_; }
  const std::optional<Matrix> &basis() const { return basis_; }
  bool computational_basis() const { return !basis_.has_value(); }
  const std::optional<Provenance> &provenance() const { return provenance_; }

  Matrix to_matrix() const;
  /// Populations sorted non-increasing (stable on ties).
  RealVector sorted_populations() const;

  /// U rho U^dagger.
  DensityState transformed(const Matrix &unitary) const;

private:
  RealVector populations_;
  std::optional<Matrix> basis_;
  std::optional<Provenance> provenance_;
};

struct InverseTemperaturePair {
  double beta_h = 0.0;
  double beta_c = 0.0;

  /// Throws std::invalid_argument unless 0 < beta_h < beta_c (finite).
  void validate() const;
  double t_hot() const { return 1.0 / beta_h; }
  double t_cold() const { return 1.0 / beta_c; }
  double carnot() const { return 1.0 - beta_h / beta_c; }
};

bool is_unitary(const Matrix &u, double tol = 1e-10);

/// Gibbs state exp(-beta H)/Z, via shifted exponentials.
/// Throws std::invalid_argument for beta < 0 or non-finite beta.
DensityState gibbs(const Hamiltonian &h, double beta);

/// log Tr exp(-beta H) via log-sum-exp.
double log_partition(const Hamiltonian &h, double beta);
double log_sum_exp(std::span<const double> values);

/// Tr(rho H).
double mean_energy(const DensityState &rho, const Hamiltonian &h);

double von_neumann_entropy(const DensityState &rho);

/// S(omega_beta(H)) from the spectrum measured from the ground level:
/// beta <E - E_0> + log sum exp(-beta (E - E_0)). Keeps relative precision
/// when excited populations are tiny.
double thermal_entropy(const Hamiltonian &h, double beta);

/// Tr rho (log rho - log sigma). Returns +infinity when supp(rho) is not
/// contained in supp(sigma).
double relative_entropy(const DensityState &rho, const DensityState &sigma);

/// sum_m rho_m log(rho_m / sigma_m) on spectra sorted non-increasing;
/// +infinity on support violation.
double relative_entropy_down(const DensityState &rho, const DensityState &sigma);
double relative_entropy_down(std::span<const double> rho_spectrum,
                             std::span<const double> sigma_spectrum);

enum class UnitaryClass { Full, Commuting, Identity };

/// min_U D(U rho U^dagger || sigma) over the reachable class: D-down for
/// Full, plain D (U = identity) for Commuting and Identity.
double min_relative_entropy_over_unitaries(const DensityState &rho,
                                           const DensityState &sigma,
                                           UnitaryClass unitary_class);

/// (1/2) || rho - sigma ||_1
double trace_distance(const DensityState &rho, const DensityState &sigma);

} // namespace qlocal

#endif
