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

#include "doctest.h"

#include "oracles.hpp"
#include "qlocal/ising.hpp"

#include <cmath>

using namespace qlocal;
using namespace qlocal::ising;
using doctest::Approx;

namespace {

const InverseTemperaturePair kBetas{0.5, 1.0};
const double kLogPhi = 0.48121182505960347;

// Per-site relative entropy of finite-N Gibbs states.
double finite_relative_entropy(int n, double beta_s, double beta_r, double j, double h_s,
                               double h_r) {
  const DensityState s = gibbs(ising_diagonal({n, j, h_s}).hamiltonian(), beta_s);
  const DensityState r = gibbs(ising_diagonal({n, j, h_r}).hamiltonian(), beta_r);
  return relative_entropy(s, r) / n;
}

ProtocolFields tied_fields(double h) {
  ProtocolFields f;
  f.h_b = h;
  f.h_c = h;
  return f;
}

} // namespace

TEST_CASE("transfer_matrix_log_z examples") {
  CHECK(transfer_matrix_log_z(2, 0, 0, 1) == Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(transfer_matrix_log_z(8, 1, 0.5, 1) ==
        Approx(oracle::ising_log_z(8, 1, 0.5, 1)).epsilon(1e-10));
  const double big = transfer_matrix_log_z(10, -40, 80, 1);
  CHECK(std::isfinite(big));
  CHECK(big == Approx(oracle::ising_log_z(10, -40, 80, 1)).epsilon(1e-12));
  CHECK(enumerated_log_z(10, -40, 80, 1) == Approx(big).epsilon(1e-12));
}

TEST_CASE("property: transfer matrix matches enumeration in hard regimes") {
  // Odd rings with strong antiferromagnetic coupling have lambda_- < 0 and
  // |lambda_-| close to lambda_+.
  for (int n : {3, 5, 7, 9, 11}) {
    for (double beta : {0.3, 2.0, 10.0}) {
      for (double h : {0.0, 0.1, 1.9, 2.0, 5.0}) {
        const double lz = transfer_matrix_log_z(n, -1.0, h, beta);
        CHECK(lz == Approx(oracle::ising_log_z(n, -1.0, h, beta)).epsilon(1e-10));
      }
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 11;
    const double j = oracle::uniform(-30, 30);
    const double h = oracle::uniform(-60, 60);
    const double beta = oracle::uniform(0.01, 5);
    CHECK(transfer_matrix_log_z(n, j, h, beta) ==
          Approx(oracle::ising_log_z(n, j, h, beta)).epsilon(1e-10));
  }
}

TEST_CASE("free energy density") {
  CHECK(free_energy_density(2.0, 0, 0) == Approx(-0.5 * std::log(2.0)));
  for (double j : {-3.0, -0.4, 0.7, 2.0})
    CHECK(free_energy_density(1.3, j, 0) ==
          Approx(-std::log(2.0 * std::cosh(1.3 * j)) / 1.3).epsilon(1e-13));
  for (int trial = 0; trial < 50; ++trial) {
    const double beta = oracle::uniform(0.05, 3);
    const double j = oracle::uniform(-3, 3);
    const double h = oracle::uniform(-3, 3);
    CHECK(free_energy_density(beta, j, h) ==
          Approx(oracle::ising_free_energy(beta, j, h)).epsilon(1e-12));
  }
  SUBCASE("finite rings approach the limit monotonically") {
    const double f = free_energy_density(1, -1, 0.7);
    double prev = INFINITY;
    for (int n : {8, 10, 12}) {
      const double gap = std::abs(-transfer_matrix_log_z(n, -1, 0.7, 1) / n - f);
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(prev < 2e-3);
  }
  CHECK_THROWS_AS(free_energy_density(0.0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(entropy_density(-1.0, 1, 1), std::invalid_argument);
}

TEST_CASE("entropy and internal energy densities") {
  CHECK(entropy_density(1e-6, -1, 1) == Approx(std::log(2.0)).epsilon(1e-5));
  auto f_of_t = [](double t) { return free_energy_density(1.0 / t, -1, 1); };
  CHECK(entropy_density(1, -1, 1) == Approx(-oracle::central_difference(f_of_t, 1.0, 1e-5)).epsilon(1e-6));
  CHECK(entropy_density(1, -1, 1) == Approx(0.42579068666561428).epsilon(1e-13));
  CHECK(std::abs(entropy_density(40, -1, 2) - kLogPhi) < 1e-3);

  for (int trial = 0; trial < 200; ++trial) {
    const double beta = std::exp(oracle::uniform(-4, 4));
    const double j = oracle::uniform(-50, 50);
    const double h = oracle::uniform(-100, 100);
    const ThermoDensities d = densities(beta, j, h);
    CHECK(d.s >= 0.0);
    CHECK(d.s <= std::log(2.0) + 1e-12);
    CHECK(d.u == Approx(d.f + d.s / beta).epsilon(1e-9).scale(1.0));
    CHECK(std::abs(d.m) <= 1.0);
    CHECK(entropy_density(beta * 1.1, j, h) <= d.s + 1e-15);
  }
}

TEST_CASE("magnetisation is minus df/dh") {
  for (int trial = 0; trial < 30; ++trial) {
    const double beta = oracle::uniform(0.2, 3);
    const double j = oracle::uniform(-2, 2);
    const double h = oracle::uniform(-2, 2);
    auto f = [&](double x) { return free_energy_density(beta, j, x); };
    CHECK(magnetization_density(beta, j, h) ==
          Approx(-oracle::central_difference(f, h, 1e-5)).epsilon(1e-6).scale(1.0));
  }
  CHECK(magnetization_density(1, -1, 0.7) == Approx(0.10212635918731321).epsilon(1e-12));
}

TEST_CASE("entropy_density_dh") {
  CHECK(entropy_density_dh(1, -1, 0) == 0.0);
  auto s = [](double h) { return entropy_density(1, -1, h); };
  CHECK(entropy_density_dh(1, -1, 0.5) ==
        Approx(oracle::central_difference(s, 0.5, 1e-5)).epsilon(1e-6));
  CHECK(entropy_density_dh(1, -1, 0.5) == Approx(0.064261376647421365).epsilon(1e-12));
  CHECK(entropy_density_dh(1, -1, 1.0) > 0.0);
  CHECK(entropy_density_dh(1, -1, 2.5) < 0.0);
  // Odd in h.
  CHECK(entropy_density_dh(0.7, 1.3, -0.4) == Approx(-entropy_density_dh(0.7, 1.3, 0.4)));
  // The displayed closed form, evaluated directly where it cannot overflow.
  for (int trial = 0; trial < 30; ++trial) {
    const double b = oracle::uniform(0.1, 2), j = oracle::uniform(-2, 2), h = oracle::uniform(-2, 2);
    const double sh = std::sinh(b * h);
    const double direct = -b * b * std::exp(b * j) * (h * std::cosh(b * h) + 2 * j * sh) /
                          (std::sqrt(std::exp(-2 * b * j) + std::exp(2 * b * j) * sh * sh) *
                           (1 + std::exp(4 * b * j) * sh * sh));
    CHECK(entropy_density_dh(b, j, h) == Approx(direct).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("optimal_field") {
  CHECK(optimal_field(1, -0.4) == 0.0);
  CHECK(optimal_field(1, 2.0) == 0.0);
  const double h = optimal_field(1, -1);
  CHECK(h == Approx(1.9150080481545375).epsilon(1e-10));
  CHECK(std::abs(h - 2 * std::tanh(h)) < 1e-10);
  CHECK(std::abs(optimal_field(40, -1) - 2.0) < 1e-6);
  CHECK(optimal_field(0.5, -3) == Approx(5.9694091707157736).epsilon(1e-10));
  CHECK(optimal_field(1, -3) == Approx(5.9999262590301809).epsilon(1e-10));

  SUBCASE("global maximum of the entropy") {
    for (double beta : {1.0, 2.0, 3.0})
      for (double j : {-0.3, -0.6, -1.0, -2.5}) {
        const double best = optimal_field(beta, j);
        CHECK(std::abs(best - 2 * std::abs(j) * std::tanh(beta * best)) < 1e-9);
        const double s_best = entropy_density(beta, j, best);
        for (double x = 0.0; x <= 4 * std::abs(j) + 1; x += 1e-2)
          CHECK(s_best >= entropy_density(beta, j, x) - 1e-15);
      }
  }
  SUBCASE("kink at |J| = 1 / (2 beta)") {
    for (double beta : {1.0, 2.0, 3.0}) {
      const double jc = 1.0 / (2.0 * beta);
      const double left = (optimal_field(beta, -jc) - optimal_field(beta, -(jc - 1e-3))) / 1e-3;
      const double right =
          (optimal_field(beta, -(jc + 2e-3)) - optimal_field(beta, -(jc + 1e-3))) / 1e-3;
      CHECK(left == 0.0);
      CHECK(right > 0.5);
    }
  }
}

TEST_CASE("relative_entropy_density") {
  CHECK(relative_entropy_density(0.7, 0.7, -1.2, 0.4, 0.4) < 1e-15);
  const double d = relative_entropy_density(0.5, 1, -1, 0, 0);
  CHECK(d > 0);
  CHECK(std::abs(d - finite_relative_entropy(12, 0.5, 1, -1, 0, 0)) < 2e-2);
  CHECK(relative_entropy_density(0.5, 1, -40, 80, 80) < 1e-3);
  CHECK(relative_entropy_density(0.5, 1, -40, -80, -80) < 1e-3);

  SUBCASE("polarised corners") {
    CHECK(relative_entropy_density(1, 0.5, 2, kInfinity, kInfinity) == 0.0);
    CHECK(std::isinf(relative_entropy_density(1, 0.5, 2, -kInfinity, kInfinity)));
    CHECK(std::isinf(relative_entropy_density(1, 0.5, 2, 1.0, kInfinity)));
    // All-up state against a finite-field reference: beta (E_up - F) per site.
    const double j = 0.8, h = 0.6, b = 0.5;
    CHECK(relative_entropy_density(1, b, j, kInfinity, h) ==
          Approx(b * (-j - h - free_energy_density(b, j, h))).epsilon(1e-12));
  }
  SUBCASE("free-energy identity with an independent oracle") {
    for (int trial = 0; trial < 50; ++trial) {
      const double bs = oracle::uniform(0.2, 2), br = oracle::uniform(0.2, 2);
      const double j = oracle::uniform(-2, 2);
      const double hs = oracle::uniform(-2, 2), hr = oracle::uniform(-2, 2);
      auto f_s = [&](double b) { return b * oracle::ising_free_energy(b, j, hs); };
      auto f_h = [&](double x) { return oracle::ising_free_energy(bs, j, x); };
      const double u = oracle::central_difference(f_s, bs, 1e-5);
      const double m = -oracle::central_difference(f_h, hs, 1e-5);
      const double s = bs * (u - oracle::ising_free_energy(bs, j, hs));
      const double expected = br * (u + (hs - hr) * m - oracle::ising_free_energy(br, j, hr)) - s;
      CHECK(relative_entropy_density(bs, br, j, hs, hr) ==
            Approx(expected).epsilon(1e-6).scale(1.0));
    }
  }
  SUBCASE("finite rings converge to the density") {
    for (int trial = 0; trial < 5; ++trial) {
      const double j = oracle::uniform(-1, 1);
      const double hs = oracle::uniform(-1, 1), hr = oracle::uniform(-1, 1);
      CHECK(std::abs(relative_entropy_density(0.5, 1, j, hs, hr) -
                     finite_relative_entropy(12, 0.5, 1, j, hs, hr)) < 2e-2);
    }
  }
  SUBCASE("precision deep in the ordered phases") {
    // Tiny but positive values must not be swamped by cancellation.
    const double tiny = relative_entropy_density(0.5, 1, 30, 2, 2);
    CHECK(tiny >= 0.0);
    CHECK(tiny < 1e-20);
    CHECK(std::isfinite(relative_entropy_density(0.5, 1, -50, 100, 99)));
  }
}

TEST_CASE("work density and efficiency in the thermodynamic limit") {
  SUBCASE("free spins with scaled fields") {
    ProtocolFields f;
    f.h_b = 1.3;
    f.h_c = 1.3 * kBetas.beta_h / kBetas.beta_c;
    const double ds = entropy_density(kBetas.beta_h, 0, 1.3);
    CHECK(work_density(0, f, kBetas) == Approx((2.0 - 1.0) * ds).epsilon(1e-12));
    CHECK(efficiency_thermo_limit(0, f, kBetas).value() == Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("strong antiferromagnet at the saturation field") {
    for (double h : {80.0, -80.0}) {
      const double w = work_density(-40, tied_fields(h), kBetas);
      CHECK(w >= 0.5 * std::log(2.0) - 1e-3);
      CHECK(efficiency_thermo_limit(-40, tied_fields(h), kBetas).value() >= 0.49);
    }
  }
  SUBCASE("strong ferromagnet collapses") {
    const SweepPoint p = efficiency_at_max_work(40, kBetas, FieldMode::PaperProtocol);
    CHECK(p.work_density < 1e-3);
    CHECK(p.efficiency < 0.05);
  }
  SUBCASE("undefined efficiency") {
    ProtocolFields f;
    f.h_a = 0.0; // opening penalty log 2 per site from the polarised D corner
    f.h_b = 50.0;
    f.h_c = 50.0;
    CHECK_FALSE(efficiency_thermo_limit(1, f, kBetas).has_value());
  }
  SUBCASE("validation") {
    ProtocolFields f;
    f.h_b = kInfinity;
    CHECK_THROWS_AS(work_density(1, f, kBetas), std::invalid_argument);
    f.h_b = NAN;
    CHECK_THROWS_AS(work_density(1, f, kBetas), std::invalid_argument);
    CHECK_THROWS_AS(work_density(1, tied_fields(1), InverseTemperaturePair{1, 0.5}),
                    std::invalid_argument);
  }
}

TEST_CASE("efficiency at maximum work") {
  const SweepPoint zero = efficiency_at_max_work(0, kBetas, FieldMode::PaperProtocol);
  CHECK(zero.efficiency == Approx(0.5).epsilon(1e-6));
  CHECK(zero.h_opt == 0.0);

  const SweepPoint afm = efficiency_at_max_work(-3, kBetas, FieldMode::PaperProtocol);
  CHECK(afm.h_opt >= optimal_field(0.5, -3) - 1e-2);
  CHECK(afm.h_opt <= optimal_field(1.0, -3) + 1e-2);

  SUBCASE("sweep shape") {
    std::vector<SweepPoint> sweep;
    for (int i = 0; i <= 100; ++i)
      sweep.push_back(efficiency_at_max_work(-5 + 0.1 * i, kBetas, FieldMode::PaperProtocol));
    for (const auto &p : sweep) {
      CHECK(p.efficiency <= kBetas.carnot() + 1e-9);
      CHECK(p.efficiency >= 0.0);
      CHECK(p.work_density >= 0.0);
    }
    // Ferromagnetic side decays, far antiferromagnetic side climbs to Carnot.
    for (int i = 51; i <= 100; ++i)
      CHECK(sweep[i].efficiency < sweep[i - 1].efficiency);
    for (int i = 1; i <= 30; ++i)
      CHECK(sweep[i].efficiency < sweep[i - 1].efficiency);
    CHECK(sweep[0].efficiency > 0.4999);
    const auto j_star = locate_j_star(sweep);
    REQUIRE(j_star);
    CHECK(*j_star < -0.5);
    CHECK(*j_star > -1.0);
    // The optimal field switches on abruptly at J*.
    for (const auto &p : sweep)
      CHECK((p.coupling_j <= *j_star + 1e-9 ? p.h_opt > 1e-6 : p.h_opt == 0.0));
  }
  SUBCASE("free cold field never does worse") {
    for (double j : {-4.0, -1.3, -0.6, 0.3, 2.0}) {
      const SweepPoint tied = efficiency_at_max_work(j, kBetas, FieldMode::PaperProtocol);
      const SweepPoint free = efficiency_at_max_work(j, kBetas, FieldMode::FreeFields);
      CHECK(free.work_density >= tied.work_density - 1e-9);
    }
  }
  SUBCASE("best cold field minimises the penalty") {
    for (double hb : {0.3, 1.0, 3.0}) {
      const double hc = best_cold_field(-1, hb, kBetas);
      const double d0 = relative_entropy_density(0.5, 1, -1, hb, hc);
      for (double dh : {-1e-2, 1e-2})
        CHECK(d0 <= relative_entropy_density(0.5, 1, -1, hb, hc + dh));
      CHECK(magnetization_density(1, -1, hc) ==
            Approx(magnetization_density(0.5, -1, hb)).epsilon(1e-9));
    }
  }
}

TEST_CASE("ground_state_degeneracy") {
  CHECK(ground_state_degeneracy(4, -1, 0).g0 == 2);
  CHECK(ground_state_degeneracy(4, -1, 0).e0 == -4.0);
  CHECK(ground_state_degeneracy(5, -1, 0).g0 == 10);
  const Degeneracy sat = ground_state_degeneracy(8, -1, 2);
  CHECK(sat.g0 >= 16);
  CHECK(sat.g0 == 47); // Lucas number L_8: no two adjacent down spins
  for (int n = 2; n <= 16; n += 2)
    CHECK(ground_state_degeneracy(n, -1, 2).g0 >= (std::uint64_t{1} << (n / 2)));
  CHECK(ground_state_degeneracy(6, 1, 0.5).g0 == 1);
  CHECK(ground_state_degeneracy(6, 0.1, 0.0).g0 == 2);
  CHECK_THROWS_AS(ground_state_degeneracy(25, -1, 0), std::invalid_argument);
}

TEST_CASE("ferro_efficiency_limit") {
  CHECK(ferro_efficiency_limit(0, 6, kBetas) == 0.5);
  CHECK(ferro_efficiency_limit(0.1, 6, kBetas) == Approx(0.39459169445155624).epsilon(1e-14));
  double prev = 1.0;
  for (int n : {6, 12, 24, 48, 96}) {
    const double v = ferro_efficiency_limit(0.1, n, kBetas);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 0.01);
  // Continuity across the switch to the asymptotic form.
  const double below = ferro_efficiency_limit(699.999 / 6.0 / 0.5, 6, kBetas);
  const double above = ferro_efficiency_limit(700.001 / 6.0 / 0.5, 6, kBetas);
  CHECK(above == Approx(below).epsilon(1e-2));
  CHECK(above > 0.0);
}

TEST_CASE("entropy_ratio_limit_check") {
  const double grid[] = {1, 5, 10, 50};
  RealVector two(2), three(3);
  two << 0, 1;
  three << 0, 0, 1;
  const auto unique = entropy_ratio_limit_check(Hamiltonian::diagonal(two), 0.5, 1, grid);
  REQUIRE(unique.back().ratio);
  CHECK(*unique.back().ratio < 1e-5);
  const auto pair = entropy_ratio_limit_check(Hamiltonian::diagonal(three), 0.5, 1, grid);
  REQUIRE(pair.back().ratio);
  CHECK(*pair.back().ratio > 1 - 1e-6);

  SUBCASE("perturbed ground pair tends to the two-level ratio") {
    // J H + B V with H = diag(0, 0, 1) and V splitting the pair by n.
    const double b = 0.1, n = 6;
    RealVector v(3);
    v << 0, n, 0;
    const double scale[] = {1.0};
    double ratio = 0.0;
    for (double j : {50.0, 100.0}) {
      const RealVector e = j * three + b * v;
      ratio = *entropy_ratio_limit_check(Hamiltonian::diagonal(e), 0.5, 1, scale)[0].ratio;
    }
    const double expected =
        oracle::two_level_entropy(1.0 * b * n) / oracle::two_level_entropy(0.5 * b * n);
    CHECK(ratio == Approx(expected).epsilon(1e-4));
  }
  SUBCASE("undefined ratio and errors") {
    const double huge[] = {1e5};
    CHECK_FALSE(entropy_ratio_limit_check(Hamiltonian::diagonal(two), 0.5, 1, huge)[0].ratio);
    RealVector flat = RealVector::Zero(3);
    CHECK_THROWS_AS(entropy_ratio_limit_check(Hamiltonian::diagonal(flat), 0.5, 1, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(entropy_ratio_limit_check(Hamiltonian::diagonal(two), 1, 0.5, grid),
                    std::invalid_argument);
  }
}

TEST_CASE("finite chain efficiency at maximum work") {
  SUBCASE("agrees with an independent evaluation at the reported field") {
    for (double j : {-1.0, 0.0, 1.5, 4.0}) {
      const FiniteChainPoint p =
          finite_efficiency_at_max_work(6, j, 0.1, kBetas, FieldMode::PaperProtocol);
      const Hamiltonian h = ising_diagonal({6, j, p.h_b}).hamiltonian();
      const double w = -log_partition(h, 1.0) + 2.0 * log_partition(h, 0.5);
      const double q = 2.0 * von_neumann_entropy(gibbs(h, 0.5));
      CHECK(p.work == Approx(w).epsilon(1e-9));
      CHECK(p.efficiency == Approx(w / q).epsilon(1e-9));
      CHECK(p.h_b >= 0.1);
      // Maximum over the allowed fields.
      for (double x = 0.1; x < 0.1 + 4 * std::max(1.0, std::abs(j)); x += 0.05) {
        const Hamiltonian hx = ising_diagonal({6, j, x}).hamiltonian();
        CHECK(-log_partition(hx, 1.0) + 2.0 * log_partition(hx, 0.5) <= p.work + 1e-9);
      }
    }
  }
  SUBCASE("imprecision curves") {
    const double eps[] = {0.05, 0.1, 0.25, 0.5};
    std::vector<double> at_large_j;
    for (double e : eps) {
      std::vector<double> curve;
      for (int j = 0; j <= 20; ++j)
        curve.push_back(
            finite_efficiency_at_max_work(6, j, e, kBetas, FieldMode::PaperProtocol).efficiency);
      bool local_min = false;
      for (std::size_t k = 1; k + 1 < curve.size(); ++k)
        local_min |= curve[k] < curve[k - 1] && curve[k] < curve[k + 1];
      CHECK(local_min);
      at_large_j.push_back(curve.back());
    }
    for (std::size_t k = 1; k < at_large_j.size(); ++k)
      CHECK(at_large_j[k] < at_large_j[k - 1]);
    const double exact = finite_efficiency_at_max_work(6, 30, 0, kBetas,
                                                       FieldMode::PaperProtocol).efficiency;
    CHECK(std::abs(exact - ferro_efficiency_limit(0, 6, kBetas)) < 5e-2);
  }
  SUBCASE("free cold field") {
    for (double j : {-1.0, 2.0, 6.0}) {
      const auto tied = finite_efficiency_at_max_work(6, j, 0.25, kBetas, FieldMode::PaperProtocol);
      const auto free = finite_efficiency_at_max_work(6, j, 0.25, kBetas, FieldMode::FreeFields);
      CHECK(free.work >= tied.work - 1e-9);
      CHECK(free.h_c >= 0.25);
      CHECK(free.efficiency <= kBetas.carnot() + 1e-9);
    }
  }
  CHECK_THROWS_AS(finite_efficiency_at_max_work(21, 1, 0.1, kBetas, FieldMode::PaperProtocol),
                  std::invalid_argument);
}
