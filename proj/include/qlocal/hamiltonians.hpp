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

#ifndef QLOCAL_HAMILTONIANS_HPP
#define QLOCAL_HAMILTONIANS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qlocal {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Max-norm tolerance for Hermiticity checks on assembled operators.
inline constexpr double kHermitianTol = 1e-12;

bool is_hermitian(const Matrix &m, double tol = kHermitianTol);
double max_abs(const Matrix &m);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix identity(Index dim);
Matrix kron(const Matrix &a, const Matrix &b);

/// Places `op` on slot `site` of an n_sites chain of local dimension
/// op.rows(), with identities elsewhere. Site 0 is the leftmost factor.
Matrix embed(const Matrix &op, int site, int n_sites);

/**
  Working-medium Hamiltonian H = H_ext + H_int.

  Stored either as a dense Hermitian matrix or, for classical models, as a
  table of energies on the computational basis. The interaction part is kept
  alongside when known so that protocol code can check that every
  Hamiltonian of a cycle shares the same fixed H_int.
*/
class Hamiltonian {
public:
  using Operator = std::variant<RealVector, Matrix>;

  /// Throws std::invalid_argument if `h` or `interaction` is not Hermitian.
  static Hamiltonian dense(Matrix h, std::optional<Matrix> interaction = {});
  static Hamiltonian diagonal(RealVector energies,
                              std::optional<RealVector> interaction = {});

  Index dim() const;
  bool is_diagonal() const { return std::holds_alternative<RealVector>(op_); }

  /// Diagonal entries. Throws std::logic_error for dense Hamiltonians.
  const RealVector &energies() const;
  /// Dense matrix. Throws std::logic_error for diagonal Hamiltonians.
  const Matrix &matrix() const;
  Matrix to_matrix() const;

  const std::optional<Operator> &interaction() const { return interaction_; }

  /// True when both carry an interaction part and the parts agree to `tol`,
  /// or when neither carries one.
  bool shares_interaction_with(const Hamiltonian &other,
                               double tol = 1e-10) const;

  /// (1 - t) * this + t * other. Representation is kept diagonal when both
  /// inputs are diagonal. The interaction part is taken from `this`.
  Hamiltonian interpolate(const Hamiltonian &other, double t) const;

  Hamiltonian scaled(double factor) const;

private:
  Hamiltonian(Operator op, std::optional<Operator> interaction)
      : op_(std::move(op)), interaction_(std::move(interaction)) {}

  Operator op_;
  std::optional<Operator> interaction_;
};

/// Max-norm distance between two Hamiltonians of equal dimension.
double max_abs_difference(const Hamiltonian &a, const Hamiltonian &b);

struct LocalField {
  int site = 0;
  Matrix op;
};

struct CompositeHamiltonian {
  int n_sites = 0;
  Index local_dim = 0;
  std::vector<LocalField> external;
  Matrix interaction;
  Matrix dense;

  Hamiltonian hamiltonian() const {
    return Hamiltonian::dense(dense, interaction);
  }
};

/// Assembles sum_j embed(h^(j)) + H_int. `n_sites` and `local_dim` are
/// inferred from the interaction dimension and the local operators.
CompositeHamiltonian compose(const std::vector<LocalField> &locals,
                             const Matrix &interaction, int n_sites);

/// Marker for the thermodynamic limit in IsingParams::n_sites.
inline constexpr int kThermoLimit = -1;

/// H = -h sum_j sz_j - J sum_j sz_j sz_{j+1}, periodic.
/// J > 0 ferromagnetic, J < 0 anti-ferromagnetic.
struct IsingParams {
  int n_sites = kThermoLimit;
  double coupling_j = 0.0;
  double field_h = 0.0;

  bool thermo_limit() const { return n_sites == kThermoLimit; }
};

/// Energies indexed by configuration bitmask; bit j set means spin j is -1,
/// so configuration 0 is all-up.
struct DiagonalHamiltonian {
  int n_sites = 0;
  RealVector energies;
  RealVector interaction;

  Hamiltonian hamiltonian() const {
    return Hamiltonian::diagonal(energies, interaction);
  }
};

inline int spin_of(std::uint64_t config, int site) {
  return ((config >> site) & 1U) ? -1 : 1;
}

DiagonalHamiltonian ising_diagonal(const IsingParams &params);

/// Same model assembled as a dense operator from sz fields and the ZZ ring.
CompositeHamiltonian ising_dense(const IsingParams &params);

/// Periodic ring interaction sum_j J * (op_j op_{j+1}) for the given
/// two-site term, e.g. sz sz, or the Heisenberg exchange.
Matrix ring_interaction(const Matrix &site_op_a, const Matrix &site_op_b,
                        int n_sites, double coupling);

/// J * sum_j (sx sx + sy sy + sz sz). For n_sites == 2 the single bond is
/// counted once.
Matrix heisenberg_chain(int n_sites, double coupling);

} // namespace qlocal

#endif
