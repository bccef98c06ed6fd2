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

#include "qlocal/ising.hpp"
#include "qlocal/optimize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace qlocal::ising {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_positive_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("beta must be finite and > 0");
}

/*
  Largest transfer-matrix eigenvalue with the ground-state scale factored out:

    lambda_+ = e^{a} cosh b + sqrt(e^{2a} sinh^2 b + e^{-2a}),  a = beta J,
                                                              b = beta |h|
    lambda_+ = e^{-beta e0} (1 + delta),  e0 = -max(J + |h|, -J)

  so that f = e0 - log1p(delta)/beta. Scaled quantities (all <= 1):

    cch = e^{a - M} cosh b,  ssh = e^{a - M} sinh b,  x3 = e^{-2a - 2M},
    rs  = sqrt(ssh^2 + x3),  M = -beta e0.

  Two regimes, picked by which term sets M:
    polarised  (2J + |h| >= 0): cch = (1 + p)/2, ssh = k = (1 - p)/2,
                                p = e^{-2b}, rs = g, delta = x3 / (g + k)
    staggered  (2J + |h| <  0): x3 = 1, delta = cch + (rs - 1)

  `excess` is u - e0 >= 0 and `kappa` is 1 - |m|, both evaluated without
  subtracting nearly equal numbers in the regime where they are tiny.
*/
struct Core {
  double e0 = 0.0;
  double log1p_delta = 0.0;
  double excess = 0.0;
  double abs_m = 0.0;
  double kappa = 1.0;
  double cch = 0.0;
  double ssh = 0.0;
  double x3 = 0.0;
  double rs = 0.0;
  bool polarised = true;
};

Core core(double beta, double j, double h) {
  const double hh = std::abs(h);
  const double a = beta * j;
  const double b = beta * hh;
  Core c;
  c.polarised = 2.0 * j + hh >= 0.0;
  if (c.polarised) {
    c.e0 = -(j + hh);
    const double p = std::exp(-2.0 * b);
    const double k = -0.5 * std::expm1(-2.0 * b);
    const double x3 = std::exp(-2.0 * beta * (2.0 * j + hh));
    const double g = std::sqrt(k * k + x3);
    const double delta = g > 0.0 ? x3 / (g + k) : 0.0;
    c.log1p_delta = std::log1p(delta);
    // d(delta)/d(beta) = -((2J + |h|) x3 + |h| p delta) / g
    c.excess = g > 0.0 ? ((2.0 * j + hh) * x3 + hh * p * delta) / (g * (1.0 + delta))
                       : 0.0;
    if (hh == 0.0) {
      c.abs_m = 0.0;
      c.kappa = 1.0;
    } else {
      c.abs_m = g > 0.0 ? k / g : 1.0;
      c.kappa = g > 0.0 ? delta / g : 0.0;
    }
    c.cch = 0.5 * (1.0 + p);
    c.ssh = k;
    c.x3 = x3;
    c.rs = g;
  } else {
    c.e0 = j;
    // e^{2a} cosh b with the exponents combined, so huge |a| and b cannot meet
    // as 0 * inf.
    const double up = std::exp(2.0 * a + b);
    const double down = std::exp(2.0 * a - b);
    const double cch = 0.5 * (up + down);
    const double ssh = b < 1.0 ? std::exp(2.0 * a) * std::sinh(b) : 0.5 * (up - down);
    const double r = std::sqrt(1.0 + ssh * ssh);
    const double delta = cch + ssh * ssh / (r + 1.0);
    c.log1p_delta = std::log1p(delta);
    const double dcch = 2.0 * j * cch + hh * ssh;
    const double dssh = 2.0 * j * ssh + hh * cch;
    const double ddelta = dcch + ssh * dssh / r;
    c.excess = -ddelta / (1.0 + delta);
    c.abs_m = ssh / r;
    c.kappa = 1.0 - c.abs_m;
    c.cch = cch;
    c.ssh = ssh;
    c.x3 = 1.0;
    c.rs = r;
  }
  return c;
}

double sign_of(double h) { return h < 0.0 ? -1.0 : 1.0; }

} // namespace

// ---------------------------------------------------------------------------

double transfer_matrix_log_z(int n_sites, double coupling_j, double field_h,
                             double beta) {
  if (n_sites < 2)
    throw std::invalid_argument("transfer_matrix_log_z: need N >= 2");
  if (!std::isfinite(coupling_j) || !std::isfinite(field_h) ||
      !std::isfinite(beta) || beta < 0.0)
    throw std::invalid_argument("transfer_matrix_log_z: non-finite input");
  if (beta == 0.0)
    return n_sites * std::log(2.0);

  const Core c = core(beta, coupling_j, field_h);
  const double log_lambda_plus = -beta * c.e0 + c.log1p_delta;
  const double plus = c.cch + c.rs; // lambda_+ / e^M
  const double a = beta * coupling_j;
  const double m_scale = -beta * c.e0;
  // det / e^{2M} = e^{2a-2M} - e^{-2a-2M}
  const double det = std::abs(a) < 1.0
                         ? 2.0 * std::sinh(2.0 * a) * std::exp(-2.0 * m_scale)
                         : std::exp(2.0 * a - 2.0 * m_scale) -
                               std::exp(-2.0 * a - 2.0 * m_scale);
  const double ratio = det / (plus * plus); // lambda_- / lambda_+
  double tail = 0.0;                        // log(1 + ratio^N)
  if (ratio >= 0.0) {
    tail = std::log1p(std::pow(ratio, n_sites));
  } else if (n_sites % 2 == 0) {
    tail = std::log1p(std::pow(-ratio, n_sites));
  } else {
    // 1 - |r|^N with 1 - |r| = (lambda_+ + lambda_-)/lambda_+ = 2 cch / plus
    const double gap = 2.0 * c.cch / plus;
    tail = std::log(-std::expm1(n_sites * std::log1p(-gap)));
  }
  return n_sites * log_lambda_plus + tail;
}

double enumerated_log_z(int n_sites, double coupling_j, double field_h,
                        double beta) {
  const DiagonalHamiltonian dh =
      ising_diagonal(IsingParams{n_sites, coupling_j, field_h});
  std::vector<double> exponents(static_cast<std::size_t>(dh.energies.size()));
  for (Index i = 0; i < dh.energies.size(); ++i)
    exponents[static_cast<std::size_t>(i)] = -beta * dh.energies[i];
  return log_sum_exp(exponents);
}

ThermoDensities densities(double beta, double coupling_j, double field_h) {
  check_positive_beta(beta);
  if (std::isinf(field_h)) {
    // Fully polarised along the field.
    return {-kInfinity, 0.0, -kInfinity, sign_of(field_h)};
  }
  const Core c = core(beta, coupling_j, field_h);
  ThermoDensities d;
  d.f = c.e0 - c.log1p_delta / beta;
  d.s = c.log1p_delta + beta * c.excess;
  d.u = c.e0 + c.excess;
  d.m = sign_of(field_h) * c.abs_m;
  return d;
}

double free_energy_density(double beta, double coupling_j, double field_h) {
  return densities(beta, coupling_j, field_h).f;
}

double entropy_density(double beta, double coupling_j, double field_h) {
  return densities(beta, coupling_j, field_h).s;
}

double internal_energy_density(double beta, double coupling_j, double field_h) {
  return densities(beta, coupling_j, field_h).u;
}

double magnetization_density(double beta, double coupling_j, double field_h) {
  return densities(beta, coupling_j, field_h).m;
}

double entropy_density_dh(double beta, double coupling_j, double field_h) {
  check_positive_beta(beta);
  if (field_h == 0.0)
    return 0.0;
  const Core c = core(beta, coupling_j, field_h);
  const double hh = std::abs(field_h);
  const double num = hh * c.cch + 2.0 * coupling_j * c.ssh;
  return -sign_of(field_h) * beta * beta * c.x3 * num / (c.rs * c.rs * c.rs);
}

double optimal_field(double beta, double coupling_j) {
  check_positive_beta(beta);
  const double two_j = 2.0 * std::abs(coupling_j);
  if (coupling_j >= 0.0 || two_j * beta <= 1.0)
    return 0.0;
  // h - 2|J| tanh(beta h) is negative just above 0 and positive at 2|J|.
  auto below = [&](double h) { return h - two_j * std::tanh(beta * h) < 0.0; };
  return bisect_boundary(below, 1e-12, two_j, 1e-13 * std::max(1.0, two_j));
}

double relative_entropy_density(double beta_state, double beta_ref,
                                double coupling_j, double h_state,
                                double h_ref) {
  check_positive_beta(beta_state);
  check_positive_beta(beta_ref);
  if (std::isnan(h_state) || std::isnan(h_ref))
    throw std::invalid_argument("relative_entropy_density: NaN field");

  if (std::isinf(h_ref)) {
    if (std::isinf(h_state) && sign_of(h_state) == sign_of(h_ref))
      return 0.0;
    return kInfinity;
  }
  const Core cr = core(beta_ref, coupling_j, h_ref);
  if (std::isinf(h_state)) {
    // Polarised state: energy density under H_ref is -J - sign * h_ref.
    const double x = -coupling_j - sign_of(h_state) * h_ref - cr.e0;
    return std::max(0.0, beta_ref * x + cr.log1p_delta);
  }

  const Core cs = core(beta_state, coupling_j, h_state);
  // x = <H_ref>_state / N - e0_ref - excess_state
  double x = 0.0;
  if (cs.polarised && cr.polarised) {
    const double sigma = sign_of(h_state);
    x = (std::abs(h_ref) - sigma * h_ref) -
        (std::abs(h_state) - sigma * h_ref) * cs.kappa;
  } else {
    const double m_state = sign_of(h_state) * cs.abs_m;
    x = cs.e0 - cr.e0 + (h_state - h_ref) * m_state;
  }
  const double d = beta_ref * x + (beta_ref - beta_state) * cs.excess +
                   cr.log1p_delta - cs.log1p_delta;
  return std::max(0.0, d);
}

// ---------------------------------------------------------------------------

void ProtocolFields::validate() const {
  if (std::isnan(h_a) || std::isnan(h_b) || std::isnan(h_c) || std::isnan(h_d))
    throw std::invalid_argument("protocol fields: NaN");
  if (std::isinf(h_b) || std::isinf(h_c))
    throw std::invalid_argument(
        "protocol fields: only h_A and h_D may be infinite");
}

namespace {

struct CornerTerms {
  double delta_s = 0.0;
  double penalty_u = 0.0; // d(B -> C)
  double penalty_v = 0.0; // d(D -> A)
};

CornerTerms corner_terms(double j, const ProtocolFields &f,
                         const InverseTemperaturePair &betas) {
  f.validate();
  betas.validate();
  CornerTerms t;
  const double s_b = entropy_density(betas.beta_h, j, f.h_b);
  const double s_d = std::isinf(f.h_d) ? 0.0 : entropy_density(betas.beta_c, j, f.h_d);
  t.delta_s = s_b - s_d;
  t.penalty_u = relative_entropy_density(betas.beta_h, betas.beta_c, j, f.h_b, f.h_c);
  t.penalty_v = relative_entropy_density(betas.beta_c, betas.beta_h, j, f.h_d, f.h_a);
  return t;
}

double work_from(const CornerTerms &t, const InverseTemperaturePair &betas) {
  const double t_h = betas.t_hot();
  const double t_c = betas.t_cold();
  if (std::isinf(t.penalty_u) || std::isinf(t.penalty_v))
    return -kInfinity;
  return (t_h - t_c) * t.delta_s - t_h * t.penalty_v - t_c * t.penalty_u;
}

std::optional<double> efficiency_from(const CornerTerms &t,
                                      const InverseTemperaturePair &betas) {
  const double denominator = t.delta_s - t.penalty_v;
  if (!(denominator > 0.0) || std::isinf(t.penalty_u))
    return std::nullopt;
  return 1.0 - (betas.beta_h / betas.beta_c) * (t.delta_s + t.penalty_u) / denominator;
}

} // namespace

double work_density(double coupling_j, const ProtocolFields &fields,
                    const InverseTemperaturePair &betas) {
  return work_from(corner_terms(coupling_j, fields, betas), betas);
}

std::optional<double> efficiency_thermo_limit(double coupling_j,
                                              const ProtocolFields &fields,
                                              const InverseTemperaturePair &betas) {
  return efficiency_from(corner_terms(coupling_j, fields, betas), betas);
}

double best_cold_field(double coupling_j, double h_b,
                       const InverseTemperaturePair &betas) {
  betas.validate();
  if (h_b == 0.0)
    return 0.0;
  const double sigma = sign_of(h_b);
  const Core hot = core(betas.beta_h, coupling_j, h_b);
  // d(B -> C) is convex in h_C with stationary point where the cold
  // magnetisation equals the hot one; compare 1 - |m| for precision.
  auto below = [&](double h) {
    return core(betas.beta_c, coupling_j, h).kappa > hot.kappa;
  };
  double hi = std::max(std::abs(h_b), 1e-3);
  for (int it = 0; it < 200 && below(hi); ++it)
    hi *= 2.0;
  return sigma * bisect_boundary(below, 0.0, hi, 1e-13 * std::max(1.0, hi));
}

SweepPoint efficiency_at_max_work(double coupling_j,
                                  const InverseTemperaturePair &betas,
                                  FieldMode mode) {
  betas.validate();
  auto fields_for = [&](double h_b) {
    ProtocolFields f;
    f.h_a = kInfinity;
    f.h_d = kInfinity;
    f.h_b = h_b;
    f.h_c = mode == FieldMode::PaperProtocol
                ? h_b
                : best_cold_field(coupling_j, h_b, betas);
    return f;
  };
  auto objective = [&](double h_b) {
    return work_from(corner_terms(coupling_j, fields_for(h_b), betas), betas);
  };

  constexpr double step = 1e-2;
  const double h_max = 4.0 * std::max(1.0, std::abs(coupling_j));
  const int n_grid = static_cast<int>(std::lround(h_max / step));
  int best = 0;
  double best_value = -kInfinity;
  for (int k = 0; k <= n_grid; ++k) {
    const double v = objective(k * step);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  const double lo = std::max(0.0, (best - 1) * step);
  const double hi = std::min(h_max, (best + 1) * step);
  ScalarOptimum opt = golden_section_maximize(objective, lo, hi, 1e-8);
  // Ignore rounding-level gains so a flat optimum at h = 0 stays exactly 0.
  const double noise = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(best_value);
  if (!(opt.value > best_value + noise)) {
    opt.x = best * step;
    opt.value = best_value;
  }

  SweepPoint point;
  point.coupling_j = coupling_j;
  point.h_opt = opt.x;
  point.fields = fields_for(opt.x);
  const CornerTerms terms = corner_terms(coupling_j, point.fields, betas);
  point.work_density = work_from(terms, betas);
  point.efficiency = efficiency_from(terms, betas).value_or(kNaN);
  return point;
}

std::optional<double> locate_j_star(std::span<const SweepPoint> sweep) {
  std::vector<SweepPoint> sorted(sweep.begin(), sweep.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SweepPoint &a, const SweepPoint &b) {
                     return a.coupling_j > b.coupling_j;
                   });
  for (const auto &p : sorted)
    if (p.h_opt > 1e-6)
      return p.coupling_j;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Degeneracy ground_state_degeneracy(int n_sites, double coupling_j,
                                   double field_h) {
  if (n_sites < 2 || n_sites > 24)
    throw std::invalid_argument("ground_state_degeneracy: need 2 <= N <= 24");
  const double tol =
      1e-9 * std::max({1.0, std::abs(coupling_j), std::abs(field_h)});
  const std::uint64_t dim = std::uint64_t{1} << n_sites;
  const std::uint64_t mask = dim - 1;
  Degeneracy out;
  out.e0 = kInfinity;
  for (std::uint64_t c = 0; c < dim; ++c) {
    const std::uint64_t rotated = ((c >> 1) | (c << (n_sites - 1))) & mask;
    const int magnet = n_sites - 2 * std::popcount(c);
    const int bonds = n_sites - 2 * std::popcount(c ^ rotated);
    const double e = -field_h * magnet - coupling_j * bonds;
    if (e < out.e0 - tol) {
      out.e0 = e;
      out.g0 = 1;
    } else if (std::abs(e - out.e0) <= tol) {
      ++out.g0;
    }
  }
  return out;
}

double ferro_efficiency_limit(double epsilon, int n_sites,
                              const InverseTemperaturePair &betas) {
  betas.validate();
  if (!(epsilon >= 0.0) || n_sites < 1)
    throw std::invalid_argument("ferro_efficiency_limit: need eps >= 0, N >= 1");
  const double x_c = betas.beta_c * epsilon * n_sites;
  const double x_h = betas.beta_h * epsilon * n_sites;
  double ratio = 0.0;
  if (x_h > 700.0)
    ratio = std::exp(-(x_c - x_h)); // log1p(e^-x) ~ e^-x
  else
    ratio = std::log1p(std::exp(-x_c)) / std::log1p(std::exp(-x_h));
  return betas.carnot() * ratio;
}

std::vector<EntropyRatioRow>
entropy_ratio_limit_check(const Hamiltonian &h, double beta_h, double beta_c,
                          std::span<const double> j_grid) {
  if (!(beta_h >= 0.0) || !(beta_c > beta_h) || !std::isfinite(beta_c))
    throw std::invalid_argument("entropy_ratio_limit_check: need beta_c > beta_h >= 0");
  const RealVector levels =
      h.is_diagonal() ? h.energies() : eigendecompose(h.matrix()).eigenvalues;
  if (levels.maxCoeff() - levels.minCoeff() <= 1e-12)
    throw std::invalid_argument(
        "entropy_ratio_limit_check: need at least two energy levels");
  std::vector<EntropyRatioRow> rows;
  rows.reserve(j_grid.size());
  for (double scale : j_grid) {
    const Hamiltonian scaled = h.scaled(scale);
    const double s_h = thermal_entropy(scaled, beta_h);
    EntropyRatioRow row;
    row.scale = scale;
    if (s_h > 0.0)
      row.ratio = thermal_entropy(scaled, beta_c) / s_h;
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------

namespace {

// Ising chain spectrum grouped by (magnetisation, bond sum).
struct ChainLevels {
  struct Level {
    int magnet;
    int bonds;
    double count;
  };
  std::vector<Level> levels;
};

ChainLevels chain_levels(int n_sites) {
  std::map<std::pair<int, int>, double> counts;
  const std::uint64_t dim = std::uint64_t{1} << n_sites;
  const std::uint64_t mask = dim - 1;
  for (std::uint64_t c = 0; c < dim; ++c) {
    const std::uint64_t rotated = ((c >> 1) | (c << (n_sites - 1))) & mask;
    const int magnet = n_sites - 2 * std::popcount(c);
    const int bonds = n_sites - 2 * std::popcount(c ^ rotated);
    counts[{magnet, bonds}] += 1.0;
  }
  ChainLevels out;
  for (const auto &[key, n] : counts)
    out.levels.push_back({key.first, key.second, n});
  return out;
}

struct ChainThermo {
  double e0 = 0.0;
  double log_z_excess = 0.0; // log sum g e^{-beta (E - E0)}
  double excess = 0.0;       // <E> - E0
  double magnet = 0.0;       // <sum sz>
  double entropy = 0.0;
  double free_energy = 0.0;
};

ChainThermo chain_thermo(const ChainLevels &cl, double j, double h, double beta) {
  ChainThermo t;
  t.e0 = kInfinity;
  for (const auto &l : cl.levels)
    t.e0 = std::min(t.e0, -h * l.magnet - j * l.bonds);
  const double tol = 1e-12 * std::max({1.0, std::abs(j), std::abs(h)});
  double z_ground = 0.0;
  double z_rest = 0.0;
  double e_acc = 0.0;
  double m_acc = 0.0;
  for (const auto &l : cl.levels) {
    const double de = -h * l.magnet - j * l.bonds - t.e0;
    const double w = l.count * std::exp(-beta * de);
    if (de <= tol)
      z_ground += w;
    else
      z_rest += w;
    e_acc += w * de;
    m_acc += w * l.magnet;
  }
  const double z = z_ground + z_rest;
  t.log_z_excess = std::log(z_ground) + std::log1p(z_rest / z_ground);
  t.excess = e_acc / z;
  t.magnet = m_acc / z;
  t.entropy = beta * t.excess + t.log_z_excess;
  t.free_energy = t.e0 - t.log_z_excess / beta;
  return t;
}

} // namespace

FiniteChainPoint finite_efficiency_at_max_work(int n_sites, double coupling_j,
                                               double epsilon,
                                               const InverseTemperaturePair &betas,
                                               FieldMode mode) {
  betas.validate();
  if (n_sites < 2 || n_sites > 20)
    throw std::invalid_argument("finite_efficiency_at_max_work: need 2 <= N <= 20");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("finite_efficiency_at_max_work: need eps >= 0");
  const ChainLevels cl = chain_levels(n_sites);
  const double j = coupling_j;
  const double t_h = betas.t_hot();
  const double t_c = betas.t_cold();

  // Polarised D/A corners: zero entropy, zero D -> A penalty.
  struct Eval {
    double h_c;
    double work;
    double heat;
  };
  auto cold_penalty = [&](const ChainThermo &hot, double h_b, double h_c) {
    // D(omega_h(h_b) || omega_c(h_c)) via energies relative to E0(h_c).
    const ChainThermo cold = chain_thermo(cl, j, h_c, betas.beta_c);
    const double e_hot_under_c =
        (hot.e0 - cold.e0) + hot.excess - (h_c - h_b) * hot.magnet;
    return betas.beta_c * e_hot_under_c + cold.log_z_excess - hot.entropy;
  };
  auto evaluate = [&](double h_b) -> Eval {
    const ChainThermo hot = chain_thermo(cl, j, h_b, betas.beta_h);
    if (mode == FieldMode::PaperProtocol) {
      const ChainThermo cold = chain_thermo(cl, j, h_b, betas.beta_c);
      return {h_b, cold.free_energy - hot.free_energy, t_h * hot.entropy};
    }
    // Cold penalty is convex in h_C; its minimum matches magnetisations.
    auto below = [&](double h) {
      return chain_thermo(cl, j, h, betas.beta_c).magnet < hot.magnet;
    };
    double hi = std::max(h_b, epsilon + 1e-3);
    for (int it = 0; it < 200 && below(hi); ++it)
      hi *= 2.0;
    double h_c = bisect_boundary(below, 0.0, hi, 1e-12 * std::max(1.0, hi));
    h_c = std::max(h_c, epsilon);
    const double d = std::max(0.0, cold_penalty(hot, h_b, h_c));
    return {h_c, (t_h - t_c) * hot.entropy - t_c * d, t_h * hot.entropy};
  };

  constexpr double step = 1e-2;
  const double span = 4.0 * std::max(1.0, std::abs(j));
  const int n_grid = static_cast<int>(std::lround(span / step));
  int best = 0;
  double best_value = -kInfinity;
  for (int k = 0; k <= n_grid; ++k) {
    const double v = evaluate(epsilon + k * step).work;
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  const double lo = epsilon + std::max(0, best - 1) * step;
  const double hi = epsilon + std::min(n_grid, best + 1) * step;
  ScalarOptimum opt = golden_section_maximize(
      [&](double h) { return evaluate(h).work; }, lo, hi, 1e-8);
  if (!(opt.value > best_value))
    opt.x = epsilon + best * step;

  const Eval e = evaluate(opt.x);
  FiniteChainPoint out;
  out.coupling_j = j;
  out.h_b = opt.x;
  out.h_c = e.h_c;
  out.work = e.work;
  out.efficiency = e.heat > 0.0 ? e.work / e.heat : kNaN;
  return out;
}

} // namespace qlocal::ising
