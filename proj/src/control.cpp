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

#include "qlocal/control.hpp"

#include <cmath>
#include <stdexcept>

namespace qlocal {

namespace {

Matrix traceless(const Matrix &m) {
  const Complex tr = m.trace() / static_cast<double>(m.rows());
  Matrix out = m;
  out.diagonal().array() -= tr;
  return out;
}

// Hermitian d x d matrix as d^2 real coordinates, orthonormal with respect
// to Re Tr(A B): diagonal entries, then sqrt(2) Re / Im of the upper part.
Eigen::VectorXd coordinates(const Matrix &h) {
  const Index d = h.rows();
  Eigen::VectorXd v(d * d);
  Index k = 0;
  for (Index i = 0; i < d; ++i)
    v[k++] = h(i, i).real();
  const double r2 = std::sqrt(2.0);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      v[k++] = r2 * h(i, j).real();
      v[k++] = r2 * h(i, j).imag();
    }
  return v;
}

Matrix bracket(const Matrix &a, const Matrix &b) {
  return Complex(0.0, 1.0) * (a * b - b * a);
}

class Basis {
public:
  Basis(Index dim, double tol) : tol_(tol), q_(dim * dim, 0) {}

  // Adds the direction of h if it is independent of the current span.
  bool try_add(const Matrix &h) {
    Eigen::VectorXd v = coordinates(h);
    const double norm = v.norm();
    if (norm <= tol_)
      return false;
    v /= norm;
    for (int pass = 0; pass < 2; ++pass)
      if (q_.cols() > 0)
        v -= q_ * (q_.transpose() * v);
    const double residual = v.norm();
    if (residual <= tol_)
      return false;
    q_.conservativeResize(Eigen::NoChange, q_.cols() + 1);
    q_.col(q_.cols() - 1) = v / residual;
    return true;
  }

  int size() const { return static_cast<int>(q_.cols()); }

private:
  double tol_;
  Eigen::MatrixXd q_;
};

} // namespace

GeneratorSet::GeneratorSet(Matrix drift, std::vector<Matrix> controls) {
  dim_ = drift.rows();
  if (dim_ == 0 || drift.cols() != dim_)
    throw std::invalid_argument("GeneratorSet: drift must be square and nonempty");
  if (!is_hermitian(drift))
    throw std::invalid_argument("GeneratorSet: drift is not Hermitian");
  drift_ = traceless(drift);
  for (auto &c : controls) {
    if (c.rows() != dim_ || c.cols() != dim_)
      throw std::invalid_argument("GeneratorSet: control dimension mismatch");
    if (!is_hermitian(c))
      throw std::invalid_argument("GeneratorSet: control is not Hermitian");
    controls_.push_back(traceless(c));
  }
}

std::vector<Matrix> GeneratorSet::all() const {
  std::vector<Matrix> out;
  if (max_abs(drift_) > 0.0)
    out.push_back(drift_);
  out.insert(out.end(), controls_.begin(), controls_.end());
  return out;
}

LieDimension lie_algebra_dimension(const GeneratorSet &gens,
                                   std::optional<int> max_depth, double tol) {
  const Index d = gens.dim();
  if (d > 64)
    throw std::invalid_argument("lie_algebra_dimension: need d <= 64");
  const int depth_limit = max_depth.value_or(static_cast<int>(2 * d * d));
  const int full = static_cast<int>(d * d - 1);

  const std::vector<Matrix> g = gens.all();
  Basis basis(d, tol);
  std::vector<Matrix> frontier;
  for (const auto &x : g)
    if (basis.try_add(x))
      frontier.push_back(x);

  // Right-nested brackets [g_i, [g_j, ...]] span the closure, so only
  // brackets of generators with newly added elements are needed.
  int depth = 0;
  while (!frontier.empty() && basis.size() < full && depth < depth_limit) {
    ++depth;
    std::vector<Matrix> next;
    for (const auto &x : frontier)
      for (const auto &a : g) {
        Matrix c = bracket(a, x);
        if (basis.try_add(c))
          next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  LieDimension out;
  out.dim = basis.size();
  out.partial = !frontier.empty() && out.dim < full;
  return out;
}

Classification classify_unitary_class(const GeneratorSet &gens, double tol) {
  const LieDimension ld = lie_algebra_dimension(gens, std::nullopt, tol);
  Classification out;
  out.dim = ld.dim;
  out.partial = ld.partial;
  if (ld.dim == static_cast<int>(gens.dim() * gens.dim() - 1)) {
    out.cls = ControlClass::Full;
    return out;
  }
  const std::vector<Matrix> g = gens.all();
  bool commuting = !gens.controls().empty();
  for (std::size_t i = 0; commuting && i < g.size(); ++i)
    for (std::size_t j = i + 1; commuting && j < g.size(); ++j) {
      const double scale = std::max(1.0, max_abs(g[i]) * max_abs(g[j]));
      if (max_abs(bracket(g[i], g[j])) > tol * scale)
        commuting = false;
    }
  out.cls = commuting ? ControlClass::Commuting : ControlClass::Intermediate;
  return out;
}

const char *to_string(ControlClass cls) {
  switch (cls) {
  case ControlClass::Full:
    return "FULL";
  case ControlClass::Commuting:
    return "COMMUTING";
  case ControlClass::Intermediate:
    return "INTERMEDIATE";
  }
  return "";
}

} // namespace qlocal
