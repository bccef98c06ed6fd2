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

#ifndef QLOCAL_CONTROL_HPP
#define QLOCAL_CONTROL_HPP

#include "qlocal/hamiltonians.hpp"

#include <optional>
#include <vector>

// Dynamical Lie algebra of a fixed drift plus tunable local controls.
// Hamiltonians H stand for the skew-Hermitian directions iH; brackets are
// taken as i[A, B] so everything stays Hermitian.

namespace qlocal {

class GeneratorSet {
public:
  /// Validates Hermiticity (1e-12) and equal dimensions, then removes the
  /// trace part of every generator. A zero drift means "no drift".
  GeneratorSet(Matrix drift, std::vector<Matrix> controls);

  const Matrix &drift() const { return drift_; }
  const std::vector<Matrix> &controls() const { return controls_; }
  Index dim() const { return dim_; }

  /// Drift (if nonzero) followed by the controls.
  std::vector<Matrix> all() const;

private:
  Matrix drift_;
  std::vector<Matrix> controls_;
  Index dim_ = 0;
};

struct LieDimension {
  int dim = 0;
  bool partial = false; // closure still growing when max_depth was reached
};

/// Breadth-first commutator closure. max_depth defaults to 2 d^2.
/// Throws std::invalid_argument for d > 64.
LieDimension lie_algebra_dimension(const GeneratorSet &gens,
                                   std::optional<int> max_depth = {},
                                   double tol = 1e-9);

enum class ControlClass { Full, Commuting, Intermediate };

struct Classification {
  ControlClass cls = ControlClass::Intermediate;
  int dim = 0;
  bool partial = false;
};

/// Full when the closure is su(d). Commuting when there is at least one
/// control and all generators pairwise commute. Otherwise Intermediate.
Classification classify_unitary_class(const GeneratorSet &gens,
                                      double tol = 1e-9);

const char *to_string(ControlClass cls);

} // namespace qlocal

#endif
