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

#include "qlocal/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qlocal {

Spectrum eigendecompose(const Matrix &h) {
  if (!h.allFinite())
    throw std::invalid_argument("eigendecompose: non-finite entries");
  if (!is_hermitian(h))
    throw std::invalid_argument("eigendecompose: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose: solver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

bool is_unitary(const Matrix &u, double tol) {
  if (u.rows() != u.cols() || !u.allFinite())
    return false;
  return max_abs(u.adjoint() * u - identity(u.rows())) <= tol;
}

// ---------------------------------------------------------------------------

DensityState::DensityState(RealVector populations, std::optional<Matrix> basis,
                           std::optional<Provenance> provenance)
    : populations_(std::move(populations)), basis_(std::move(basis)),
      provenance_(provenance) {
  if (populations_.size() == 0)
    throw std::invalid_argument("DensityState: empty population vector");
  if (!populations_.allFinite() || populations_.minCoeff() < 0.0)
    throw std::invalid_argument("DensityState: populations must be >= 0");
  if (std::abs(populations_.sum() - 1.0) > 1e-12)
    throw std::invalid_argument("DensityState: populations must sum to 1");
  if (basis_) {
    if (basis_->rows() != populations_.size())
      throw std::invalid_argument("DensityState: basis dimension mismatch");
    if (!is_unitary(*basis_))
      throw std::invalid_argument("DensityState: basis is not unitary");
  }
}

DensityState DensityState::maximally_mixed(Index dim) {
  return DensityState(RealVector::Constant(dim, 1.0 / static_cast<double>(dim)));
}

DensityState DensityState::basis_state(Index dim, Index index) {
  RealVector p = RealVector::Zero(dim);
  p[index] = 1.0;
  return DensityState(std::move(p));
}

Matrix DensityState::to_matrix() const {
  const Matrix diag = populations_.cast<Complex>().asDiagonal();
  if (!basis_)
    return diag;
  return *basis_ * diag * basis_->adjoint();
}

namespace {

std::vector<Index> descending_order(const RealVector &v) {
  std::vector<Index> idx(static_cast<std::size_t>(v.size()));
  std::iota(idx.begin(), idx.end(), Index{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&v](Index a, Index b) { return v[a] > v[b]; });
  return idx;
}

} // namespace

RealVector DensityState::sorted_populations() const {
  const auto order = descending_order(populations_);
  RealVector out(populations_.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    out[static_cast<Index>(k)] = populations_[order[k]];
  return out;
}

DensityState DensityState::transformed(const Matrix &unitary) const {
  if (unitary.rows() != dim())
    throw std::invalid_argument("DensityState::transformed: dimension mismatch");
  if (!is_unitary(unitary))
    throw std::invalid_argument("DensityState::transformed: not unitary");
  Matrix b = basis_ ? Matrix(unitary * *basis_) : unitary;
  return DensityState(populations_, std::move(b));
}

void InverseTemperaturePair::validate() const {
  if (!std::isfinite(beta_h) || !std::isfinite(beta_c))
    throw std::invalid_argument("inverse temperatures must be finite");
  if (!(beta_h > 0.0))
    throw std::invalid_argument("beta_h must be > 0");
  if (!(beta_h < beta_c))
    throw std::invalid_argument("beta_h must be < beta_c (hot bath hotter)");
}

// ---------------------------------------------------------------------------

double log_sum_exp(std::span<const double> values) {
  if (values.empty())
    return -kInfinity;
  const double top = *std::max_element(values.begin(), values.end());
  if (!std::isfinite(top))
    return top;
  double acc = 0.0;
  for (double v : values)
    acc += std::exp(v - top);
  return top + std::log(acc);
}

namespace {

void check_beta(double beta) {
  if (!std::isfinite(beta) || beta < 0.0)
    throw std::invalid_argument("beta must be finite and >= 0");
}

struct Levels {
  RealVector energies;
  std::optional<Matrix> basis;
};

Levels levels_of(const Hamiltonian &h) {
  if (h.is_diagonal())
    return {h.energies(), std::nullopt};
  Spectrum s = eigendecompose(h.matrix());
  return {std::move(s.eigenvalues), std::move(s.eigenvectors)};
}

} // namespace

DensityState gibbs(const Hamiltonian &h, double beta) {
  check_beta(beta);
  Levels lv = levels_of(h);
  const double e_min = lv.energies.minCoeff();
  RealVector p = (-beta * (lv.energies.array() - e_min)).exp().matrix();
  p /= p.sum();
  return DensityState(std::move(p), std::move(lv.basis),
                      DensityState::Provenance{beta, h.is_diagonal()});
}

double log_partition(const Hamiltonian &h, double beta) {
  check_beta(beta);
  const RealVector e = levels_of(h).energies;
  std::vector<double> exponents(static_cast<std::size_t>(e.size()));
  for (Index i = 0; i < e.size(); ++i)
    exponents[static_cast<std::size_t>(i)] = -beta * e[i];
  return log_sum_exp(exponents);
}

double mean_energy(const DensityState &rho, const Hamiltonian &h) {
  if (rho.dim() != h.dim())
    throw std::invalid_argument("mean_energy: dimension mismatch");
  const RealVector &p = rho.populations();
  if (h.is_diagonal()) {
    const RealVector &e = h.energies();
    if (rho.computational_basis())
      return p.dot(e);
    const Matrix &b = *rho.basis();
    // sum_i p_i sum_k |b_ki|^2 e_k
    return e.dot(b.cwiseAbs2() * p);
  }
  const Matrix &m = h.matrix();
  if (rho.computational_basis())
    return p.dot(m.diagonal().real());
  const Matrix &b = *rho.basis();
  const Matrix hb = m * b;
  double acc = 0.0;
  for (Index i = 0; i < p.size(); ++i)
    acc += p[i] * b.col(i).dot(hb.col(i)).real();
  return acc;
}

double von_neumann_entropy(const DensityState &rho) {
  double s = 0.0;
  for (double p : rho.populations())
    if (p > 0.0)
      s -= p * std::log(p);
  return s;
}

double thermal_entropy(const Hamiltonian &h, double beta) {
  check_beta(beta);
  const RealVector e = levels_of(h).energies;
  Index ground = 0;
  const double e0 = e.minCoeff(&ground);
  double rest = 0.0;   // sum of Boltzmann weights except one ground level
  double excess = 0.0; // sum w (E - E0)
  for (Index i = 0; i < e.size(); ++i) {
    const double w = std::exp(-beta * (e[i] - e0));
    excess += w * (e[i] - e0);
    if (i != ground)
      rest += w;
  }
  const double z = 1.0 + rest;
  return beta * excess / z + std::log1p(rest);
}

namespace {

// Weight of rho on each eigenvector of sigma: w_j = <s_j| rho |s_j>.
RealVector weights_in_basis_of(const DensityState &rho,
                               const DensityState &sigma) {
  const RealVector &p = rho.populations();
  if (rho.computational_basis() && sigma.computational_basis())
    return p;
  if (rho.computational_basis())
    return sigma.basis()->cwiseAbs2().transpose() * p;
  if (sigma.computational_basis())
    return rho.basis()->cwiseAbs2() * p;
  const Matrix overlap = rho.basis()->adjoint() * *sigma.basis();
  return overlap.cwiseAbs2().transpose() * p;
}

} // namespace

double relative_entropy(const DensityState &rho, const DensityState &sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  const RealVector w = weights_in_basis_of(rho, sigma);
  const RealVector &q = sigma.populations();
  double cross = 0.0;
  for (Index j = 0; j < q.size(); ++j) {
    if (q[j] <= kSupportTol) {
      if (w[j] > kSupportTol)
        return kInfinity;
      continue;
    }
    cross += w[j] * std::log(q[j]);
  }
  const double value = -von_neumann_entropy(rho) - cross;
  return std::max(0.0, value);
}

double relative_entropy_down(std::span<const double> rho_spectrum,
                             std::span<const double> sigma_spectrum) {
  if (rho_spectrum.size() != sigma_spectrum.size())
    throw std::invalid_argument("relative_entropy_down: dimension mismatch");
  std::vector<double> r(rho_spectrum.begin(), rho_spectrum.end());
  std::vector<double> s(sigma_spectrum.begin(), sigma_spectrum.end());
  std::stable_sort(r.begin(), r.end(), std::greater<>());
  std::stable_sort(s.begin(), s.end(), std::greater<>());
  double value = 0.0;
  for (std::size_t m = 0; m < r.size(); ++m) {
    if (r[m] <= 0.0)
      continue;
    if (s[m] <= kSupportTol) {
      if (r[m] > kSupportTol)
        return kInfinity;
      continue;
    }
    value += r[m] * std::log(r[m] / s[m]);
  }
  return std::max(0.0, value);
}

double relative_entropy_down(const DensityState &rho,
                             const DensityState &sigma) {
  const RealVector &p = rho.populations();
  const RealVector &q = sigma.populations();
  return relative_entropy_down(std::span<const double>(p.data(), p.size()),
                               std::span<const double>(q.data(), q.size()));
}

double min_relative_entropy_over_unitaries(const DensityState &rho,
                                           const DensityState &sigma,
                                           UnitaryClass unitary_class) {
  switch (unitary_class) {
  case UnitaryClass::Full:
    return relative_entropy_down(rho, sigma);
  case UnitaryClass::Commuting:
  case UnitaryClass::Identity:
    return relative_entropy(rho, sigma);
  }
  throw std::logic_error("unknown unitary class");
}

double trace_distance(const DensityState &rho, const DensityState &sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  if (rho.computational_basis() && sigma.computational_basis())
    return 0.5 * (rho.populations() - sigma.populations()).cwiseAbs().sum();
  const Matrix diff = rho.to_matrix() - sigma.to_matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

} // namespace qlocal
