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

#include "qlocal/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

namespace qlocal {

bool is_hermitian(const Matrix &m, double tol) {
  if (m.rows() != m.cols())
    return false;
  if (!m.allFinite())
    return false;
  return max_abs(m - m.adjoint()) <= tol;
}

double max_abs(const Matrix &m) {
  if (m.size() == 0)
    return 0.0;
  return m.cwiseAbs().maxCoeff();
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix identity(Index dim) { return Matrix::Identity(dim, dim); }

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix embed(const Matrix &op, int site, int n_sites) {
  if (site < 0 || site >= n_sites)
    throw std::invalid_argument("embed: site out of range");
  const Index d = op.rows();
  Matrix out = Matrix::Identity(1, 1);
  for (int j = 0; j < n_sites; ++j)
    out = kron(out, j == site ? op : identity(d));
  return out;
}

// ---------------------------------------------------------------------------

Hamiltonian Hamiltonian::dense(Matrix h, std::optional<Matrix> interaction) {
  if (!is_hermitian(h))
    throw std::invalid_argument("Hamiltonian: matrix is not Hermitian");
  if (interaction) {
    if (!is_hermitian(*interaction))
      throw std::invalid_argument("Hamiltonian: interaction is not Hermitian");
    if (interaction->rows() != h.rows())
      throw std::invalid_argument("Hamiltonian: interaction dimension mismatch");
  }
  std::optional<Operator> inter;
  if (interaction)
    inter = Operator(std::move(*interaction));
  return Hamiltonian(Operator(std::move(h)), std::move(inter));
}

Hamiltonian Hamiltonian::diagonal(RealVector energies,
                                  std::optional<RealVector> interaction) {
  if (!energies.allFinite())
    throw std::invalid_argument("Hamiltonian: non-finite energy");
  if (interaction && interaction->size() != energies.size())
    throw std::invalid_argument("Hamiltonian: interaction dimension mismatch");
  std::optional<Operator> inter;
  if (interaction)
    inter = Operator(std::move(*interaction));
  return Hamiltonian(Operator(std::move(energies)), std::move(inter));
}

Index Hamiltonian::dim() const {
  return std::visit([](const auto &op) -> Index { return op.rows(); }, op_);
}

const RealVector &Hamiltonian::energies() const {
  if (!is_diagonal())
    throw std::logic_error("Hamiltonian::energies on a dense Hamiltonian");
  return std::get<RealVector>(op_);
}

const Matrix &Hamiltonian::matrix() const {
  if (is_diagonal())
    throw std::logic_error("Hamiltonian::matrix on a diagonal Hamiltonian");
  return std::get<Matrix>(op_);
}

namespace {

Matrix as_matrix(const Hamiltonian::Operator &op) {
  if (const auto *d = std::get_if<RealVector>(&op))
    return d->cast<Complex>().asDiagonal();
  return std::get<Matrix>(op);
}

double op_distance(const Hamiltonian::Operator &a,
                   const Hamiltonian::Operator &b) {
  const auto *da = std::get_if<RealVector>(&a);
  const auto *db = std::get_if<RealVector>(&b);
  if (da && db) {
    if (da->size() != db->size())
      throw std::invalid_argument("Hamiltonian: dimension mismatch");
    return da->size() == 0 ? 0.0 : (*da - *db).cwiseAbs().maxCoeff();
  }
  const Matrix ma = as_matrix(a);
  const Matrix mb = as_matrix(b);
  if (ma.rows() != mb.rows())
    throw std::invalid_argument("Hamiltonian: dimension mismatch");
  return max_abs(ma - mb);
}

} // namespace

Matrix Hamiltonian::to_matrix() const { return as_matrix(op_); }

bool Hamiltonian::shares_interaction_with(const Hamiltonian &other,
                                          double tol) const {
  if (!interaction_ && !other.interaction_)
    return true;
  if (!interaction_ || !other.interaction_)
    return false;
  return op_distance(*interaction_, *other.interaction_) <= tol;
}

Hamiltonian Hamiltonian::interpolate(const Hamiltonian &other, double t) const {
  if (dim() != other.dim())
    throw std::invalid_argument("Hamiltonian::interpolate: dimension mismatch");
  if (is_diagonal() && other.is_diagonal()) {
    RealVector e = (1.0 - t) * energies() + t * other.energies();
    return Hamiltonian(Operator(std::move(e)), interaction_);
  }
  Matrix m = (1.0 - t) * to_matrix() + t * other.to_matrix();
  // Re-symmetrise away rounding so the result passes the Hermitian check.
  m = 0.5 * (m + m.adjoint()).eval();
  return Hamiltonian(Operator(std::move(m)), interaction_);
}

Hamiltonian Hamiltonian::scaled(double factor) const {
  auto scale = [factor](const Operator &op) -> Operator {
    return std::visit([factor](const auto &x) -> Operator { using T = std::decay_t<decltype(x)>; return T(x * factor); },
                      op);
  };
  std::optional<Operator> inter;
  if (interaction_)
    inter = scale(*interaction_);
  return Hamiltonian(scale(op_), std::move(inter));
}

double max_abs_difference(const Hamiltonian &a, const Hamiltonian &b) {
  if (a.is_diagonal() && b.is_diagonal())
    return op_distance(a.energies(), b.energies());
  return op_distance(a.to_matrix(), b.to_matrix());
}

// ---------------------------------------------------------------------------

CompositeHamiltonian compose(const std::vector<LocalField> &locals,
                             const Matrix &interaction, int n_sites) {
  if (n_sites < 1)
    throw std::invalid_argument("compose: need at least one site");
  if (!is_hermitian(interaction))
    throw std::invalid_argument("compose: interaction is not Hermitian");

  Index local_dim = 0;
  if (!locals.empty()) {
    local_dim = locals.front().op.rows();
  } else {
    // Infer d from d^n = dim(H_int).
    const double d = std::round(
        std::pow(static_cast<double>(interaction.rows()), 1.0 / n_sites));
    local_dim = static_cast<Index>(d);
  }
  Index full_dim = 1;
  for (int j = 0; j < n_sites; ++j)
    full_dim *= local_dim;
  if (interaction.rows() != full_dim)
    throw std::invalid_argument("compose: interaction dimension mismatch");

  CompositeHamiltonian out;
  out.n_sites = n_sites;
  out.local_dim = local_dim;
  out.external = locals;
  out.interaction = interaction;
  out.dense = interaction;
  for (const auto &f : locals) {
    if (f.op.rows() != local_dim || f.op.cols() != local_dim)
      throw std::invalid_argument("compose: inconsistent local dimension");
    if (f.site < 0 || f.site >= n_sites)
      throw std::invalid_argument("compose: site out of range");
    if (!is_hermitian(f.op))
      throw std::invalid_argument("compose: local field is not Hermitian");
    out.dense += embed(f.op, f.site, n_sites);
  }
  return out;
}

DiagonalHamiltonian ising_diagonal(const IsingParams &params) {
  if (params.thermo_limit())
    throw std::invalid_argument(
        "ising_diagonal: thermodynamic limit has no finite energy table");
  const int n = params.n_sites;
  if (n < 2)
    throw std::invalid_argument("ising_diagonal: need n_sites >= 2");
  if (n > 30)
    throw std::invalid_argument("ising_diagonal: n_sites too large");
  if (!std::isfinite(params.coupling_j) || !std::isfinite(params.field_h))
    throw std::invalid_argument("ising_diagonal: non-finite J or h");

  const std::uint64_t dim = std::uint64_t{1} << n;
  DiagonalHamiltonian out;
  out.n_sites = n;
  out.energies.resize(static_cast<Index>(dim));
  out.interaction.resize(static_cast<Index>(dim));
  for (std::uint64_t c = 0; c < dim; ++c) {
    int magnet = 0;
    int bonds = 0;
    for (int j = 0; j < n; ++j) {
      magnet += spin_of(c, j);
      bonds += spin_of(c, j) * spin_of(c, (j + 1) % n);
    }
    const double e_int = -params.coupling_j * bonds;
    out.interaction[static_cast<Index>(c)] = e_int;
    out.energies[static_cast<Index>(c)] = -params.field_h * magnet + e_int;
  }
  return out;
}

Matrix ring_interaction(const Matrix &site_op_a, const Matrix &site_op_b,
                        int n_sites, double coupling) {
  const Index d = site_op_a.rows();
  Index full = 1;
  for (int j = 0; j < n_sites; ++j)
    full *= d;
  Matrix out = Matrix::Zero(full, full);
  // A two-site ring has a single bond; counting it twice would double J.
  const int n_bonds = n_sites == 2 ? 1 : n_sites;
  for (int j = 0; j < n_bonds; ++j) {
    const int k = (j + 1) % n_sites;
    out += coupling * embed(site_op_a, j, n_sites) * embed(site_op_b, k, n_sites);
  }
  return out;
}

CompositeHamiltonian ising_dense(const IsingParams &params) {
  if (params.thermo_limit() || params.n_sites < 2)
    throw std::invalid_argument("ising_dense: need finite n_sites >= 2");
  const int n = params.n_sites;
  // The periodic sum over j = 1..N counts the 2-site bond twice.
  Matrix zz = Matrix::Zero(Index{1} << n, Index{1} << n);
  for (int j = 0; j < n; ++j)
    zz += embed(pauli_z(), j, n) * embed(pauli_z(), (j + 1) % n, n);
  std::vector<LocalField> fields;
  for (int j = 0; j < n; ++j)
    fields.push_back({j, -params.field_h * pauli_z()});
  return compose(fields, -params.coupling_j * zz, n);
}

Matrix heisenberg_chain(int n_sites, double coupling) {
  return ring_interaction(pauli_x(), pauli_x(), n_sites, coupling) +
         ring_interaction(pauli_y(), pauli_y(), n_sites, coupling) +
         ring_interaction(pauli_z(), pauli_z(), n_sites, coupling);
}

} // namespace qlocal
