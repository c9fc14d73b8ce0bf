// Copyright 2026 The floquet-walk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>

#include <gtest/gtest.h>

#include "floquet_walk/analysis.hpp"
#include "floquet_walk/error.hpp"
#include "floquet_walk/propagate.hpp"
#include "floquet_walk/protocols.hpp"
#include "oracles.hpp"

namespace fw = floquet_walk;
using oracle::kPi;

namespace {

fw::StaticHamiltonian path(int n) {
  fw::StaticHamiltonian s(n);
  for (int j = 1; j < n; ++j) s.set_coupling(j - 1, j, 1.0);
  return s;
}

void expect_error(fw::ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << fw::to_string(code);
  } catch (const fw::Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(PeriodPropagator, StaticIsExponential) {
  const fw::PeriodicHamiltonian h(path(4), 0.6);
  for (int steps : {1, 7, 100}) {
    EXPECT_LT(fw::operator_norm(fw::period_propagator(h, steps) -
                                fw::expm_hermitian(path(4).matrix(), 0.6)),
              1e-12);
  }
}

TEST(PeriodPropagator, StepTriangleExactAndStepIndependent) {
  const double period = 0.3, a = 20.0;
  const auto h = fw::triangle_hamiltonian(fw::DriveKind::kStep, 1.0, a, period);
  const auto u1 = fw::period_propagator(h, 1);
  EXPECT_EQ(u1, fw::period_propagator(h, 500));
  // RK4 piece by piece so no step straddles a jump.
  oracle::Matrix ref = oracle::Matrix::Identity(3, 3);
  for (int k = 0; k < 3; ++k) {
    const oracle::Matrix hk = h.evaluate_at((k + 0.5) * period / 3);
    ref = oracle::rk4_propagator([&](double) { return hk; }, 0.0, period / 3, 4000) * ref;
  }
  EXPECT_LT((u1 - ref).norm(), 1e-10);
}

TEST(PeriodPropagator, SineTriangleMatchesRk4) {
  const double period = 0.5, a = 20.0;
  const auto h = fw::triangle_hamiltonian(fw::DriveKind::kSine, 1.0, a, period);
  const auto u = fw::period_propagator(h, 6400);
  oracle::Matrix ref = oracle::Matrix::Identity(3, 3);
  for (int k = 0; k < 3; ++k) {
    const double t0 = k * period / 3, t1 = (k + 1) * period / 3;
    ref = oracle::rk4_propagator(
              [&](double t) { return h.evaluate_at(std::clamp(t, t0 + 1e-14, t1 - 1e-14)); }, t0,
              t1, 20000) *
          ref;
  }
  EXPECT_LT((u - ref).norm(), 1e-6);
}

TEST(PeriodPropagator, HarmonicChainStepHalving) {
  const auto plan = fw::build_1d_nnn_protocol(5, 1.0, 0.2, 0.05);
  EXPECT_LT(fw::operator_norm(fw::period_propagator(plan.drive, 400) -
                              fw::period_propagator(plan.drive, 800)),
            1e-8);
  const auto h = fw::build_1d_nnn_protocol(5, 1.0, 0.2, 0.5).drive;
  const auto ref = oracle::rk4_propagator([&](double t) { return h.evaluate_at(t); }, 0.0, 0.5, 20000);
  EXPECT_LT((fw::period_propagator(h, 6400) - ref).norm(), 1e-8);
}

TEST(PeriodPropagator, MidpointIsSecondOrder) {
  const auto h = fw::nnn_drive(5, 1.0, 1.0, 1.0);
  std::vector<double> deltas, errors;
  for (int steps : {100, 200, 400, 800, 1600}) {
    const auto err = fw::operator_norm(fw::period_propagator(h, steps) -
                                       fw::period_propagator(h, 4 * steps));
    deltas.push_back(1.0 / steps);
    errors.push_back(err);
  }
  EXPECT_NEAR(fw::loglog_slope(deltas, errors), 2.0, 0.2);
}

TEST(PeriodPropagator, UnitarityWithinStepBudget) {
  const auto h = fw::nnn_drive(6, 0.4, 0.9, 0.8);
  for (int steps : {1, 10, 300}) {
    EXPECT_LE(fw::unitarity_defect(fw::period_propagator(h, steps)), steps * 1e-12);
  }
  expect_error(fw::ErrorCode::kInvalidArgument, [&] { fw::period_propagator(h, 0); });
}

TEST(PeriodPropagator, ConvergedStopsAtTolerance) {
  const auto h = fw::build_1d_nnn_protocol(5, 1.0, 0.2, 0.05).drive;
  const auto c = fw::period_propagator_converged(h, 50);
  EXPECT_GT(c.steps_per_period, 50);
  EXPECT_LT(fw::operator_norm(c.unitary - fw::period_propagator(h, c.steps_per_period / 2)), 1e-9);
  fw::NumericsSettings tight;
  tight.convergence_tol = 1e-15;
  tight.max_steps_per_period = 400;
  expect_error(fw::ErrorCode::kConvergenceCap, [&] { fw::period_propagator_converged(h, 50, tight); });
}

TEST(Stroboscopic, ZeroPeriodsAndComposition) {
  const auto h = fw::nnn_drive(5, 1.0, 0.5, 0.4);
  const auto psi = fw::basis_state(5, 2);
  const auto rec0 = fw::stroboscopic_evolve(h, psi, 0, 100);
  ASSERT_EQ(rec0.states.size(), 1u);
  EXPECT_EQ(rec0.states[0], psi);
  EXPECT_EQ(rec0.times[0], 0.0);

  const auto rec = fw::stroboscopic_evolve(h, psi, 25, 100);
  ASSERT_TRUE(rec.period_unitary.has_value());
  fw::StateVector manual = psi;
  for (int k = 1; k <= 25; ++k) {
    manual = fw::period_propagator(h, 100) * manual;
    EXPECT_LT((rec.states[static_cast<std::size_t>(k)] - manual).norm(), 1e-10);
    EXPECT_NEAR(rec.times[static_cast<std::size_t>(k)], k * 0.4, 1e-14);
    EXPECT_NEAR(rec.probabilities[static_cast<std::size_t>(k)].sum(), 1.0, 1e-9);
  }
}

TEST(Stroboscopic, RejectsBadInitialState) {
  const auto u = fw::ComplexMatrix::Identity(3, 3);
  expect_error(fw::ErrorCode::kSizeMismatch, [&] { fw::stroboscopic_evolve(u, 1.0, fw::basis_state(4, 0), 2); });
  fw::StateVector psi = fw::StateVector::Ones(3);
  expect_error(fw::ErrorCode::kInvalidArgument, [&] { fw::stroboscopic_evolve(u, 1.0, psi, 2); });
  expect_error(fw::ErrorCode::kInvalidArgument, [&] { fw::stroboscopic_evolve(u, 1.0, fw::basis_state(3, 0), -1); });
}

TEST(EvolveStatic, ZeroHamiltonianKeepsState) {
  const auto psi = fw::basis_state(3, 1);
  const auto rec = fw::evolve_static(fw::ComplexMatrix::Zero(3, 3), psi, {0.0, 1.0, 10.0});
  for (const auto& s : rec.states) EXPECT_LT((s - psi).norm(), 1e-15);
}

TEST(EvolveStatic, RabiHalfPeriod) {
  const auto rec = fw::evolve_static(path(2), fw::basis_state(2, 0), {0.0, kPi / 2});
  EXPECT_NEAR(rec.probabilities[1](0), 0.0, 1e-14);
  EXPECT_NEAR(rec.probabilities[1](1), 1.0, 1e-14);
}

TEST(EvolveStatic, MatchesRk4AndConservesNorm) {
  std::mt19937_64 rng(31);
  const auto h = oracle::random_hermitian(6, rng, 2.0);
  const auto psi = fw::basis_state(6, 3);
  const auto rec = fw::evolve_static(h, psi, {0.0, 0.5, 1.5, 3.0});
  for (std::size_t k = 0; k < rec.times.size(); ++k) {
    const fw::StateVector ref = oracle::rk4_propagator([&](double) { return h; }, 0.0, rec.times[k], 3000) * psi;
    EXPECT_LT((rec.states[k] - ref).norm(), 1e-10);
    EXPECT_NEAR(rec.states[k].norm(), 1.0, 1e-12);
  }
}

TEST(EvolveStatic, ValidatesTimesAndHermiticity) {
  const auto psi = fw::basis_state(2, 0);
  expect_error(fw::ErrorCode::kInvalidArgument, [&] { fw::evolve_static(path(2), psi, {0.5, 1.0}); });
  expect_error(fw::ErrorCode::kInvalidArgument, [&] { fw::evolve_static(path(2), psi, {0.0, 1.0, 0.5}); });
  fw::ComplexMatrix bad = path(2).matrix();
  bad(0, 1) = 3.0;
  expect_error(fw::ErrorCode::kNonHermitianInput, [&] { fw::evolve_static(bad, psi, {0.0}); });
}

TEST(EvolveStatic, ChiralChainPeakMovesOneWay) {
  const auto h = fw::chain_with_nnn(50, 1.0, fw::Complex(0.0, 0.2));
  const auto rec = fw::evolve_static(h, fw::basis_state(50, 24), {0.0, 7.0});
  const auto& p = rec.probabilities[1];
  Eigen::Index peak = 0;
  p.maxCoeff(&peak);
  EXPECT_NE(peak, 24);
  EXPECT_GT(fw::reflection_asymmetry(p, 24), 0.3);
}
