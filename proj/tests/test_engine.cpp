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
#include "random_protocols.hpp"
#include "qlocal/engine.hpp"

#include <cmath>

using namespace qlocal;
using doctest::Approx;

namespace {

const InverseTemperaturePair kBetas{0.5, 1.0};

// Single spin H = -h sz as a diagonal Hamiltonian with zero interaction.
Hamiltonian spin(double h) {
  RealVector e(2);
  e << -h, h;
  return Hamiltonian::diagonal(e, RealVector::Zero(2));
}

Hamiltonian two_spins(double j, double h) {
  return ising_diagonal({2, j, h}).hamiltonian();
}

struct HalfCycle {
  double work = 0.0;
  double heat = 0.0;
};

// (omega_c^D, H_D) -> quench to H_A -> hot staircase to H_B.
HalfCycle simulate_hot_half(const Hamiltonian &h_d, const Hamiltonian &h_a,
                            const Hamiltonian &h_b, int micro) {
  DensityState state = gibbs(h_d, kBetas.beta_c);
  Hamiltonian h = h_d;
  HalfCycle out;
  std::vector<ProtocolStep> steps{QuenchStep{h_a}};
  for (auto &s : isothermal_staircase(h_a, h_b, Bath::Hot, micro))
    steps.push_back(std::move(s));
  for (const auto &s : steps) {
    StepOutcome o = apply_step(state, h, s, kBetas);
    out.work += o.work;
    out.heat += o.heat;
    state = std::move(o.state);
    h = std::move(o.hamiltonian);
  }
  return out;
}

std::vector<ProtocolStep> otto(const Hamiltonian &h_b, const Hamiltonian &h_c) {
  return {ThermalContact{Bath::Hot}, QuenchStep{h_c}, ThermalContact{Bath::Cold},
          QuenchStep{h_b}};
}

} // namespace

TEST_CASE("apply_step") {
  SUBCASE("contact with a state already at equilibrium") {
    const Hamiltonian h = two_spins(0.7, 0.3);
    const DensityState g = gibbs(h, kBetas.beta_h);
    const StepOutcome o = apply_step(g, h, ThermalContact{Bath::Hot}, kBetas);
    CHECK(std::abs(o.heat) < 1e-15);
    CHECK(o.work == 0.0);
    CHECK(trace_distance(o.state, g) < 1e-15);
  }
  SUBCASE("quench to half the field") {
    const Hamiltonian h = spin(1.0);
    const StepOutcome o =
        apply_step(gibbs(h, 1.0), h, QuenchStep{h.scaled(0.5)}, kBetas);
    // Raising the ground level costs work: W = -tanh(1) / 2.
    CHECK(o.work == Approx(-0.3807970779778824).epsilon(1e-14));
    CHECK(o.heat == 0.0);
  }
  SUBCASE("identity unitary onto the same Hamiltonian") {
    const Hamiltonian h = Hamiltonian::dense(oracle::random_hermitian(4));
    const DensityState g = gibbs(h, 0.8);
    const StepOutcome o =
        apply_step(g, h, UnitaryStep{Matrix::Identity(4, 4), h}, kBetas);
    CHECK(std::abs(o.work) < 1e-14);
  }
  SUBCASE("errors") {
    const Hamiltonian h = two_spins(1.0, 0.0);
    const DensityState g = gibbs(h, 1.0);
    CHECK_THROWS_AS(apply_step(g, h, UnitaryStep{2.0 * Matrix::Identity(4, 4), h}, kBetas),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_step(g, h, QuenchStep{two_spins(2.0, 0.0)}, kBetas),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_step(gibbs(spin(1.0), 1.0), h, ThermalContact{}, kBetas),
                    std::invalid_argument);
  }
}

TEST_CASE("run_cycle errors") {
  const Hamiltonian h = two_spins(0.0, 1.0);
  CHECK_THROWS_AS(run_cycle(h, {}, kBetas), std::invalid_argument);
  const std::vector<ProtocolStep> cold_only{ThermalContact{Bath::Cold}};
  CHECK_THROWS_AS(run_cycle(h, cold_only, kBetas), std::invalid_argument);
  const std::vector<ProtocolStep> open{ThermalContact{Bath::Hot}, QuenchStep{two_spins(0.0, 2.0)}};
  CHECK_THROWS_AS(run_cycle(h, open, kBetas), std::invalid_argument);
  CHECK_THROWS_AS(run_cycle(h, otto(h, two_spins(0.0, 0.5)), InverseTemperaturePair{1.0, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("Otto cycle of free spins approaches Carnot") {
  // For non-interacting spins eta = 1 - h_C / h_B exactly; at the Carnot
  // ratio h_C / h_B = beta_h / beta_c both W and Q_h vanish.
  const Hamiltonian h_b = two_spins(0.0, 2.0);
  for (double ratio : {0.9, 0.7, 0.55, 0.51, 0.501}) {
    const Hamiltonian h_c = two_spins(0.0, 2.0 * ratio);
    const CycleReport r = run_cycle(h_b, otto(h_b, h_c), kBetas);
    CHECK(r.converged);
    CHECK(r.total_work > 0.0);
    CHECK(r.efficiency == Approx(1.0 - ratio).epsilon(1e-9));
    CHECK(std::abs(r.first_law_residual) < 1e-12);
  }
  const CycleReport at_carnot = run_cycle(h_b, otto(h_b, two_spins(0.0, 1.0)), kBetas);
  CHECK(std::abs(at_carnot.total_work) < 1e-15);
  CHECK(std::abs(at_carnot.heat_hot) < 1e-15);
}

TEST_CASE("Otto cycle with interaction stays below Carnot and the bound") {
  const Hamiltonian h_b = two_spins(1.0, 2.0);
  const Hamiltonian h_c = two_spins(1.0, 1.4);
  const CycleReport r = run_cycle(h_b, otto(h_b, h_c), kBetas);
  REQUIRE(r.total_work > 0.0);
  CHECK(r.efficiency < 0.5);
  const BoundResult b =
      efficiency_bound({h_b, h_b, h_c, h_c, kBetas, UnitaryClass::Commuting,
                        UnitaryClass::Commuting});
  REQUIRE(b.status == BoundStatus::Ok);
  CHECK(r.efficiency <= b.value + 1e-9);
  REQUIRE(r.bound_value);
  CHECK(*r.bound_value == Approx(b.value).epsilon(1e-12));
}

TEST_CASE("run_cycle iterates to the steady cycle") {
  const Hamiltonian h_b = two_spins(0.5, 1.0);
  const Hamiltonian h_c = two_spins(0.5, 0.8);
  CycleOptions opts;
  opts.initial_state = DensityState::basis_state(4, 3);
  const CycleReport r = run_cycle(h_b, otto(h_b, h_c), kBetas, opts);
  CHECK(r.converged);
  CHECK(r.iterations >= 2);
  CHECK(r.per_step.size() == 4);
  const CycleReport steady = run_cycle(h_b, otto(h_b, h_c), kBetas);
  CHECK(r.total_work == Approx(steady.total_work).epsilon(1e-12));
}

TEST_CASE("carnot_like_work_bound") {
  SUBCASE("no temperature difference, single Hamiltonian") {
    const Hamiltonian h = spin(0.8);
    const CarnotLikeWork w =
        carnot_like_work_bound(h, h, h, InverseTemperaturePair{1.0, 1.0}, UnitaryClass::Identity);
    CHECK(std::abs(w.work_max) < 1e-14);
  }
  SUBCASE("matched corner: no opening dissipation") {
    // beta_c h_D = beta_h h_A, so omega_c^D = omega_h^A.
    const Hamiltonian h_d = spin(1.0);
    const Hamiltonian h_a = spin(2.0);
    const Hamiltonian h_b = spin(1.0);
    const CarnotLikeWork w = carnot_like_work_bound(h_d, h_a, h_b, kBetas, UnitaryClass::Identity);
    const double d_v = relative_entropy(gibbs(h_d, 1.0), gibbs(h_a, 0.5));
    CHECK(d_v < 1e-14);
    // With H_D = H_B the first term is T_h D(omega_c^D || omega_h^B).
    const double first = kBetas.t_hot() * relative_entropy(gibbs(h_d, 1.0), gibbs(h_b, 0.5));
    CHECK(w.work_max == Approx(first).epsilon(1e-12));
    const HalfCycle sim = simulate_hot_half(h_d, h_a, h_b, 10000);
    CHECK(std::abs(sim.work - w.work_max) < 1e-3);
    CHECK(std::abs(sim.heat - w.heat_min) < 1e-3);
  }
  SUBCASE("staircase simulation") {
    for (auto [hd, ha, hb] : {std::tuple{2.0, 1.0, 1.0}, std::tuple{2.0, 1.0, 0.3},
                              std::tuple{0.5, 3.0, 1.5}}) {
      const CarnotLikeWork w =
          carnot_like_work_bound(spin(hd), spin(ha), spin(hb), kBetas, UnitaryClass::Identity);
      const HalfCycle sim = simulate_hot_half(spin(hd), spin(ha), spin(hb), 10000);
      CHECK(std::abs(sim.work - w.work_max) < 1e-3);
      CHECK(std::abs(sim.heat - w.heat_min) < 1e-3);
      // Finer staircases only get closer to the reversible value.
      CHECK(sim.work <= w.work_max + 1e-12);
    }
  }
  SUBCASE("infinite penalty propagates") {
    const CarnotLikeWork w =
        carnot_like_work_bound(spin(1.0), spin(1e4), spin(1.0), kBetas, UnitaryClass::Identity);
    CHECK(w.work_max == -kInfinity);
  }
}

TEST_CASE("efficiency_bound examples") {
  SUBCASE("free spins with scaled fields reach Carnot") {
    const BoundResult b = efficiency_bound({two_spins(0, 2.0), two_spins(0, 1.0),
                                            two_spins(0, 0.5), two_spins(0, 1.0), kBetas,
                                            UnitaryClass::Identity, UnitaryClass::Identity});
    REQUIRE(b.status == BoundStatus::Ok);
    CHECK(b.value == Approx(0.5).epsilon(1e-12));
    CHECK(b.penalty_u < 1e-14);
    CHECK(b.penalty_v < 1e-14);
  }
  SUBCASE("full and commuting classes agree when orderings agree") {
    // All fields exceed |J|, so every corner orders the levels identically.
    const BoundInputs base{two_spins(0.5, 2.5), two_spins(0.5, 1.5), two_spins(0.5, 1.2),
                           two_spins(0.5, 2.0), kBetas};
    BoundInputs full = base, comm = base;
    full.u = full.v = UnitaryClass::Full;
    comm.u = comm.v = UnitaryClass::Commuting;
    CHECK(efficiency_bound(full).value == Approx(efficiency_bound(comm).value).epsilon(1e-12));
  }
  SUBCASE("interacting pair stays strictly below Carnot") {
    const double grid[] = {0.25, 0.5, 1.0, 2.0, 4.0};
    double best = -kInfinity;
    for (double a : grid)
      for (double b : grid)
        for (double c : grid)
          for (double d : grid) {
            const BoundResult r =
                efficiency_bound({two_spins(1, a), two_spins(1, b), two_spins(1, c),
                                  two_spins(1, d), kBetas, UnitaryClass::Commuting,
                                  UnitaryClass::Commuting});
            if (r.status == BoundStatus::Ok)
              best = std::max(best, r.value);
          }
    CHECK(best > 0.0);
    CHECK(best < 0.5 - 1e-6);
  }
  SUBCASE("undefined and useless signals") {
    const BoundResult undefined = efficiency_bound(
        {two_spins(0, 1), two_spins(0, 50), two_spins(0, 1), two_spins(0, 0), kBetas});
    CHECK(undefined.status == BoundStatus::Undefined);
    CHECK(std::isnan(undefined.value));
    const BoundResult useless =
        efficiency_bound({spin(1e4), spin(0.5), spin(0.3), spin(1.0), kBetas});
    CHECK(useless.status == BoundStatus::Useless);
    CHECK(useless.value == -kInfinity);
  }
  SUBCASE("shared interaction is enforced") {
    CHECK_THROWS_AS(efficiency_bound({two_spins(1, 1), two_spins(2, 1), two_spins(1, 1),
                                      two_spins(1, 1), kBetas}),
                    std::invalid_argument);
  }
}

TEST_CASE("property: class monotonicity and the Carnot ceiling") {
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix inter = oracle::random_hermitian(4);
    auto make = [&] {
      const Matrix local = kron(oracle::random_hermitian(2), identity(2)) +
                           kron(identity(2), oracle::random_hermitian(2));
      return Hamiltonian::dense(local + inter, inter);
    };
    BoundInputs in{make(), make(), make(), make(), kBetas};
    in.u = in.v = UnitaryClass::Full;
    const BoundResult full = efficiency_bound(in);
    in.u = in.v = UnitaryClass::Commuting;
    const BoundResult comm = efficiency_bound(in);
    in.u = in.v = Matrix(Matrix::Identity(4, 4));
    const BoundResult ident = efficiency_bound(in);
    CHECK(comm.status == ident.status);
    if (comm.status == BoundStatus::Ok)
      CHECK(comm.value == Approx(ident.value).epsilon(1e-12));
    if (full.status == BoundStatus::Ok)
      CHECK(full.value <= 0.5 + 1e-12);
    if (full.status == BoundStatus::Ok && comm.status == BoundStatus::Ok)
      CHECK(full.value >= comm.value - 1e-12);
    if (comm.status == BoundStatus::Ok)
      CHECK(comm.value <= 0.5 + 1e-12);
  }
}

TEST_CASE("explicit unitaries are used verbatim") {
  const Matrix u = oracle::random_unitary(4);
  const BoundInputs in{two_spins(1, 2), two_spins(1, 1), two_spins(1, 0.7), two_spins(1, 1.5),
                       kBetas, u, Matrix(Matrix::Identity(4, 4))};
  const BoundResult r = efficiency_bound(in);
  const DensityState hot_b = gibbs(in.h_b, 0.5);
  CHECK(r.penalty_u ==
        Approx(relative_entropy(hot_b.transformed(u), gibbs(in.h_c, 1.0))).epsilon(1e-12));
}

TEST_CASE("carnot_like_protocol reaches Carnot for free spins") {
  const auto steps = carnot_like_protocol(two_spins(0, 2.0), two_spins(0, 1.0),
                                          two_spins(0, 0.5), two_spins(0, 1.0), 1000);
  const CycleReport r = run_cycle(two_spins(0, 1.0), steps, kBetas);
  CHECK(r.converged);
  CHECK(std::abs(r.efficiency - 0.5) < 1e-3);
  REQUIRE(r.bound_value);
  CHECK(*r.bound_value == Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(r.first_law_residual) < 1e-9);
}

TEST_CASE("property: simulated cycles never beat their bound") {
  int engines = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const oracle::RandomCycle c =
        oracle::random_two_spin_cycle(0.15, 3, /*engine_like=*/trial % 3 != 0);
    const CycleReport r = run_cycle(c.h0, c.steps, kBetas);
    REQUIRE(r.converged);
    CHECK(std::abs(r.first_law_residual) < 1e-9);
    if (!(r.total_work > 1e-12))
      continue;
    ++engines;
    CHECK(r.efficiency <= 0.5 + 1e-9);
    if (r.bound_value)
      CHECK(r.efficiency <= *r.bound_value + 1e-9);
  }
  CHECK(engines > 25);
}

TEST_CASE("property: quench-only cycles respect the commuting bound") {
  for (int trial = 0; trial < 100; ++trial) {
    const oracle::RandomCycle c = oracle::random_two_spin_cycle(0.0);
    const CycleReport r = run_cycle(c.h0, c.steps, kBetas);
    const auto in = bound_inputs_for_cycle(c.h0, c.steps, kBetas);
    REQUIRE(in);
    BoundInputs comm = *in;
    comm.u = comm.v = UnitaryClass::Commuting;
    const BoundResult b = efficiency_bound(comm);
    if (r.total_work > 1e-12 && b.status != BoundStatus::Undefined)
      CHECK(r.efficiency <= b.value + 1e-9);
    if (b.status == BoundStatus::Undefined)
      CHECK(r.total_work <= 1e-9);
  }
}

TEST_CASE("bound_inputs_for_cycle needs a single bath alternation") {
  const Hamiltonian a = two_spins(1, 1), b = two_spins(1, 2);
  const std::vector<ProtocolStep> twice{ThermalContact{Bath::Hot}, QuenchStep{b},
                                        ThermalContact{Bath::Cold}, QuenchStep{a},
                                        ThermalContact{Bath::Hot}, QuenchStep{b},
                                        ThermalContact{Bath::Cold}, QuenchStep{a}};
  CHECK_FALSE(bound_inputs_for_cycle(a, twice, kBetas));
  const auto once = bound_inputs_for_cycle(a, otto(a, b), kBetas);
  REQUIRE(once);
  CHECK(max_abs_difference(once->h_a, a) == 0.0);
  CHECK(max_abs_difference(once->h_c, b) == 0.0);
}
