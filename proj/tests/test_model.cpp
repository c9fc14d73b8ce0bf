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

#include "floquet_walk/error.hpp"
#include "floquet_walk/model.hpp"
#include "oracles.hpp"

namespace fw = floquet_walk;
using oracle::kPi;

namespace {

fw::StaticHamiltonian triangle_skeleton() {
  fw::StaticHamiltonian s(3);
  s.set_coupling(0, 1, 1.0);
  s.set_coupling(1, 2, 1.0);
  s.set_coupling(0, 2, 1.0);
  return s;
}

std::vector<fw::Fraction> thirds() { return {0, fw::Fraction(1, 3), fw::Fraction(2, 3), 1}; }

fw::PeriodicHamiltonian step_triangle(double a, double period) {
  fw::PeriodicHamiltonian h(triangle_skeleton(), period);
  h.set_onsite_drive(1, fw::Drive::piecewise_constant(thirds(), {a, -a, 0.0}));
  h.set_onsite_drive(2, fw::Drive::piecewise_constant(thirds(), {0.0, -a, a}));
  return h;
}

fw::PeriodicHamiltonian star(const std::vector<double>& phases, double j1, double period) {
  const int n = static_cast<int>(phases.size());
  fw::StaticHamiltonian s(n + 1);
  for (int j = 1; j <= n; ++j) s.set_coupling(0, j, 1.0);
  fw::PeriodicHamiltonian h(s, period);
  for (int j = 1; j <= n; ++j) {
    h.set_edge_drive(0, j, fw::Drive::harmonic(0.0, {{1, j1, phases[static_cast<std::size_t>(j - 1)]}}));
  }
  return h;
}

// Table-I style chain drive with phase step pi/2 per edge.
fw::PeriodicHamiltonian chain_drive(int n, double j0, double j1, double period) {
  fw::StaticHamiltonian s(n);
  for (int j = 1; j < n; ++j) s.set_coupling(j - 1, j, 1.0);
  fw::PeriodicHamiltonian h(s, period);
  for (int j = 1; j < n; ++j) {
    const double phi = -j * kPi / 2;
    h.set_edge_drive(j - 1, j, fw::Drive::harmonic(j0, {{1, j1, phi}, {2, 2 * j1, phi + kPi}}));
  }
  return h;
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

TEST(Fraction, ArithmeticAndParsing) {
  const fw::Fraction a(2, 6);
  EXPECT_EQ(a.num(), 1);
  EXPECT_EQ(a.den(), 3);
  EXPECT_EQ(a + fw::Fraction(1, 6), fw::Fraction(1, 2));
  EXPECT_EQ(a - fw::Fraction(1, 2), fw::Fraction(-1, 6));
  EXPECT_EQ(a * fw::Fraction(3, 4), fw::Fraction(1, 4));
  EXPECT_LT(a, fw::Fraction(1, 2));
  EXPECT_EQ(fw::Fraction::parse("2/3"), fw::Fraction(2, 3));
  EXPECT_EQ(fw::Fraction::parse("1"), fw::Fraction(1));
  EXPECT_EQ(fw::Fraction(-4, -8).to_string(), "1/2");
  expect_error(fw::ErrorCode::kInvalidArgument, [] { fw::Fraction(1, 0); });
  expect_error(fw::ErrorCode::kInvalidArgument, [] { fw::Fraction::parse("1/x"); });
}

TEST(StaticHamiltonian, HermitianCompletion) {
  fw::StaticHamiltonian h(3);
  h.set_coupling(2, 0, fw::Complex(0.0, 1.0));
  h.set_onsite(1, 0.5);
  EXPECT_EQ(h.coupling(0, 2), fw::Complex(0.0, -1.0));
  EXPECT_EQ(h.edges().size(), 1u);
  const auto m = h.matrix();
  EXPECT_EQ(fw::hermiticity_defect(m), 0.0);
  EXPECT_EQ(m(1, 1), fw::Complex(0.5));
  expect_error(fw::ErrorCode::kInvalidArgument, [&] { h.set_coupling(1, 1, 1.0); });
  expect_error(fw::ErrorCode::kInvalidArgument, [&] { h.set_coupling(0, 3, 1.0); });
}

TEST(StaticHamiltonian, FromMatrixRoundTrip) {
  std::mt19937_64 rng(21);
  const auto m = oracle::random_hermitian(5, rng);
  fw::ComplexMatrix real_diag = m;
  for (int i = 0; i < 5; ++i) real_diag(i, i) = real_diag(i, i).real();
  EXPECT_LT((fw::StaticHamiltonian::from_matrix(real_diag).matrix() - real_diag).norm(), 1e-15);
}

TEST(Drive, Validation) {
  expect_error(fw::ErrorCode::kInvalidArgument,
               [] { fw::Drive::piecewise_constant({0, fw::Fraction(1, 2)}, {1.0}); });
  expect_error(fw::ErrorCode::kInvalidArgument, [] {
    fw::Drive::piecewise_constant({0, fw::Fraction(1, 2), fw::Fraction(1, 2), 1}, {1, 2, 3});
  });
  expect_error(fw::ErrorCode::kInvalidArgument,
               [] { fw::Drive::harmonic(0.0, {{1, 1.0, 0.0}, {1, 2.0, 0.0}}); });
  expect_error(fw::ErrorCode::kInvalidArgument, [] { fw::Drive::harmonic(0.0, {{0, 1.0, 0.0}}); });
}

TEST(Drive, IntegralMatchesQuadrature) {
  const std::vector<fw::Drive> drives{
      fw::Drive::piecewise_constant(thirds(), {2.0, -1.0, 0.5}),
      fw::Drive::piecewise({0, fw::Fraction(2, 3), 1}, {{0.1, 1.5, 1.5, 0.3}, {-0.2, 0.0, 0.0, 0.0}}),
      fw::Drive::harmonic(0.4, {{1, 1.0, 0.2}, {3, -0.5, 1.1}}),
  };
  const double period = 1.7;
  for (const auto& d : drives) {
    for (double t : {0.1, 0.55, 1.13, 1.7}) {
      double ref = 0.0;
      const auto bp = d.breakpoints();
      for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const double a = bp[k].value() * period;
        const double b = std::min(bp[k + 1].value() * period, t);
        if (b <= a) break;
        ref += oracle::simpson(
            [&](double s) { return d.value(std::clamp(s, a + 1e-13, b - 1e-13), period); }, a, b,
            2000);
      }
      EXPECT_NEAR(d.integral(t, period), ref, 1e-11) << t;
    }
  }
}

TEST(Drive, FourierCoefficientsMatchQuadrature) {
  const std::vector<fw::Drive> drives{
      fw::Drive::piecewise_constant(thirds(), {2.0, -1.0, 0.5}),
      fw::Drive::piecewise({0, fw::Fraction(1, 3), 1}, {{0.0, 0.0, 0.0, 0.0}, {0.3, 1.0, 1.5, 0.0}}),
      fw::Drive::harmonic(0.4, {{1, 1.0, 0.2}, {3, -0.5, 1.1}}),
  };
  for (const auto& d : drives) {
    for (int l = -3; l <= 3; ++l) {
      fw::Complex ref = 0.0;
      const auto bp = d.breakpoints();
      for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const double a = bp[k].value(), b = bp[k + 1].value();
        ref += oracle::simpson(
            [&](double s) {
              const double v = d.value(std::clamp(s, a + 1e-15, b - 1e-15), 1.0);
              return v * std::exp(fw::Complex(0.0, -2.0 * kPi * l * s));
            },
            a, b, 4000);
      }
      EXPECT_LT(std::abs(d.fourier_coefficient(l) - ref), 1e-9) << "l=" << l;
    }
  }
}

TEST(Drive, CosineHarmonicCoefficient) {
  const auto d = fw::Drive::harmonic(0.0, {{1, 0.8, 0.6}});
  EXPECT_LT(std::abs(d.fourier_coefficient(1) - 0.4 * std::polar(1.0, 0.6)), 1e-15);
  EXPECT_LT(std::abs(d.fourier_coefficient(-1) - 0.4 * std::polar(1.0, -0.6)), 1e-15);
  EXPECT_EQ(d.max_harmonic(), 1);
  EXPECT_EQ(fw::Drive::constant(2.0).max_harmonic(), 0);
  EXPECT_EQ(fw::Drive::piecewise_constant(thirds(), {1, 2, 3}).max_harmonic(), -1);
}

TEST(PeriodicHamiltonian, EvaluateStepTriangle) {
  const auto h = step_triangle(1.0, 3.0);
  const auto m = h.evaluate_at(0.5);
  EXPECT_EQ(m(0, 0), fw::Complex(0.0));
  EXPECT_EQ(m(1, 1), fw::Complex(1.0));
  EXPECT_EQ(m(2, 2), fw::Complex(0.0));
  EXPECT_EQ(h.evaluate_at(1.5)(1, 1), fw::Complex(-1.0));
  EXPECT_EQ(h.evaluate_at(2.5)(2, 2), fw::Complex(1.0));
}

TEST(PeriodicHamiltonian, StaticWhenNoDrives) {
  const fw::PeriodicHamiltonian h(triangle_skeleton(), 0.7);
  EXPECT_TRUE(h.is_static());
  for (double t : {0.0, 0.3, 5.1}) EXPECT_EQ(h.evaluate_at(t), triangle_skeleton().matrix());
  EXPECT_NEAR(fw::h_max(h), 2.0, 1e-14);
  const auto coeffs = h.fourier_coefficients(2);
  EXPECT_EQ(coeffs[2], triangle_skeleton().matrix());
  EXPECT_EQ(coeffs[0].norm(), 0.0);
  EXPECT_EQ(coeffs[4].norm(), 0.0);
}

TEST(PeriodicHamiltonian, ChainDriveAtZero) {
  const double j0 = 0.7, j1 = 0.3;
  const auto h = chain_drive(6, j0, j1, 0.5);
  const auto m = h.evaluate_at(0.0);
  for (int j = 1; j < 6; ++j) {
    // J1 cos(-j pi/2) + 2 J1 cos(-j pi/2 + pi)
    EXPECT_NEAR(m(j - 1, j).real(), j0 - j1 * std::cos(j * kPi / 2), 1e-15);
  }
}

TEST(PeriodicHamiltonian, ExactlyPeriodic) {
  const auto h = chain_drive(5, 1.0, 1.0, 0.37);
  const auto s = step_triangle(3.0, 0.37);
  for (double t : {0.01, 0.2, 0.3}) {
    for (int k : {1, 2, 7}) {
      EXPECT_LT((h.evaluate_at(t) - h.evaluate_at(t + k * 0.37)).norm(), 1e-12);
      EXPECT_EQ(s.evaluate_at(t), s.evaluate_at(t + k * 0.37));
    }
  }
}

TEST(PeriodicHamiltonian, FourierResynthesis) {
  const double period = 0.8;
  const auto h = chain_drive(5, 0.9, 0.4, period);
  const auto coeffs = h.fourier_coefficients(3);
  for (int l = 1; l <= 3; ++l) {
    EXPECT_LT((coeffs[static_cast<std::size_t>(3 - l)] - coeffs[static_cast<std::size_t>(3 + l)].adjoint()).norm(), 1e-15);
  }
  for (double t : {0.0, 0.13, 0.5, 0.77}) {
    fw::ComplexMatrix sum = fw::ComplexMatrix::Zero(5, 5);
    for (int l = -3; l <= 3; ++l) {
      sum += coeffs[static_cast<std::size_t>(l + 3)] *
             std::exp(fw::Complex(0.0, l * h.frequency() * t));
    }
    EXPECT_LT((sum - h.evaluate_at(t)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(PeriodicHamiltonian, StepDriveMeanIsZero) {
  const auto h = step_triangle(5.0, 0.3);
  const auto h0 = h.fourier_coefficient(0);
  EXPECT_NEAR(std::abs(h0(1, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h0(2, 2)), 0.0, 1e-15);
}

TEST(PeriodicHamiltonian, IntegralIsAntiderivative) {
  const double period = 0.9;
  const auto h = chain_drive(4, 0.5, 0.7, period);
  for (double t : {0.2, 0.45, 0.9}) {
    const fw::ComplexMatrix ref = oracle::simpson(
        [&](double s) -> fw::ComplexMatrix { return h.evaluate_at(s); }, 0.0, t, 2000);
    EXPECT_LT((h.integral(t) - ref).norm(), 1e-11);
  }
}

TEST(PeriodicHamiltonian, DriveKeysValidated) {
  fw::PeriodicHamiltonian h(triangle_skeleton(), 1.0);
  expect_error(fw::ErrorCode::kInvalidArgument, [&] { h.set_onsite_drive(3, fw::Drive::constant(1)); });
  fw::StaticHamiltonian path(3);
  path.set_coupling(0, 1, 1.0);
  fw::PeriodicHamiltonian p(path, 1.0);
  expect_error(fw::ErrorCode::kInvalidArgument, [&] { p.set_edge_drive(0, 2, fw::Drive::constant(1)); });
  expect_error(fw::ErrorCode::kInvalidArgument, [] { fw::PeriodicHamiltonian(fw::StaticHamiltonian(2), 0.0); });
}

TEST(HMax, StepTriangleIsSegmentMaximum) {
  const auto h = step_triangle(10.0, 0.3);
  double expected = 0.0;
  for (double t : {0.05, 0.15, 0.25}) {
    const auto ev = Eigen::SelfAdjointEigenSolver<fw::ComplexMatrix>(h.evaluate_at(t)).eigenvalues();
    expected = std::max(expected, ev.cwiseAbs().maxCoeff());
  }
  EXPECT_NEAR(fw::h_max(h), expected, 1e-12);
}

TEST(HMax, HarmonicStarWithinGridError) {
  // |J_j(t)| alternate sin/cos, so ||H(t)|| = sqrt(2 sin^2 + 2 cos^2) = sqrt(2).
  const auto h = star({kPi / 2, kPi / 2, 0.0, 0.0}, 1.0, 0.4);
  const double v = fw::h_max(h);
  EXPECT_LE(v, std::sqrt(2.0) + 1e-12);
  EXPECT_NEAR(v, std::sqrt(2.0), 1e-3);
  // Aligned phases: peak 2 at t = 0, on the grid.
  EXPECT_NEAR(fw::h_max(star({0.3, 0.3, 0.3, 0.3}, 1.0, 0.4)), 2.0, 1e-3);
  EXPECT_LE(fw::h_max(star({0.3, 0.3, 0.3, 0.3}, 1.0, 0.4)), 2.0 + 1e-12);
}

TEST(Json, RoundTrip) {
  auto h = step_triangle(4.0, 0.3);
  h.set_onsite_drive(0, fw::Drive::harmonic(0.1, {{2, 0.5, 0.25}}));
  const auto back = fw::periodic_hamiltonian_from_json(fw::to_json(h));
  EXPECT_EQ(back.period(), h.period());
  for (double t : {0.0, 0.05, 0.11, 0.2, 0.29}) {
    EXPECT_LT((back.evaluate_at(t) - h.evaluate_at(t)).norm(), 1e-15);
  }
  fw::StaticHamiltonian s(3);
  s.set_coupling(0, 2, fw::Complex(0.25, -0.5));
  s.set_onsite(1, 2.0);
  EXPECT_EQ(fw::static_hamiltonian_from_json(fw::to_json(s)).matrix(), s.matrix());
}

TEST(Json, RejectsUnknownKeysAndMalformedInput) {
  expect_error(fw::ErrorCode::kConfigInvalid,
               [] { fw::static_hamiltonian_from_json(R"({"dim": 2, "colour": 1})"); });
  expect_error(fw::ErrorCode::kConfigInvalid, [] { fw::static_hamiltonian_from_json("{"); });
  expect_error(fw::ErrorCode::kConfigInvalid, [] {
    fw::periodic_hamiltonian_from_json(
        R"({"dim": 2, "period": 1, "edges": [{"i": 0, "j": 1, "re": 1}],
            "edge_drives": [{"i": 0, "j": 1, "drive": {"type": "constant", "value": 1, "x": 0}}]})");
  });
  expect_error(fw::ErrorCode::kConfigInvalid, [] {
    fw::periodic_hamiltonian_from_json(R"({"dim": 2, "period": -1})");
  });
}
