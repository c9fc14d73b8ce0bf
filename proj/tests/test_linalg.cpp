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


#include <gtest/gtest.h>

#include "floquet_walk/error.hpp"
#include "floquet_walk/linalg.hpp"
#include "oracles.hpp"

namespace fw = floquet_walk;
using oracle::kPi;

namespace {

fw::ComplexMatrix pair_coupling() {
  fw::ComplexMatrix h = fw::ComplexMatrix::Zero(2, 2);
  h(0, 1) = h(1, 0) = 1.0;
  return h;
}

fw::ComplexMatrix k3_adjacency() {
  fw::ComplexMatrix h = fw::ComplexMatrix::Ones(3, 3);
  h.diagonal().setZero();
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

TEST(Expm, ZeroGeneratorGivesIdentity) {
  const auto u = fw::expm_hermitian(fw::ComplexMatrix::Zero(3, 3), 5.0);
  EXPECT_LT((u - fw::ComplexMatrix::Identity(3, 3)).norm(), 1e-15);
}

TEST(Expm, DiagonalAtPiIsMinusIdentity) {
  fw::ComplexMatrix h = fw::ComplexMatrix::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = -1.0;
  const auto u = fw::expm_hermitian(h, kPi);
  EXPECT_LT((u + fw::ComplexMatrix::Identity(2, 2)).norm(), 1e-14);
}

TEST(Expm, PairTransferMatchesRk4) {
  const auto h = pair_coupling();
  const auto u = fw::expm_hermitian(h, kPi / 2);
  EXPECT_NEAR(std::abs(u(1, 0)), 1.0, 1e-14);
  const auto ref = oracle::rk4_propagator([&](double) { return h; }, 0.0, kPi / 2, 2000);
  EXPECT_LT((u - ref).norm(), 1e-11);
}

TEST(Expm, MatchesTaylorOnRandomHermitian) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = oracle::random_hermitian(6, rng, 3.0);
    EXPECT_LT((fw::expm_hermitian(h, 0.7) - oracle::taylor_expm(h, 0.7)).norm(), 1e-11);
  }
}

TEST(Expm, GroupProperty) {
  std::mt19937_64 rng(12);
  const auto h = oracle::random_hermitian(5, rng, 2.0);
  const fw::ComplexMatrix lhs = fw::expm_hermitian(h, 0.4) * fw::expm_hermitian(h, 1.3);
  EXPECT_LT(fw::operator_norm(lhs - fw::expm_hermitian(h, 1.7)), 1e-10);
}

TEST(Expm, RejectsNonHermitian) {
  fw::ComplexMatrix h = pair_coupling();
  h(0, 1) = 2.0;
  expect_error(fw::ErrorCode::kNonHermitianInput, [&] { fw::expm_hermitian(h, 1.0); });
}

TEST(Spectrum, EvolveMatchesPropagator) {
  std::mt19937_64 rng(13);
  const auto h = oracle::random_hermitian(7, rng, 2.0);
  const fw::HermitianSpectrum spec(h);
  fw::StateVector psi = fw::StateVector::Zero(7);
  psi(2) = 1.0;
  EXPECT_LT((spec.evolve(psi, 2.5) - spec.propagator(2.5) * psi).norm(), 1e-13);
}

TEST(Logm, IdentityGivesZero) {
  EXPECT_LT(fw::logm_unitary(fw::ComplexMatrix::Identity(4, 4)).norm(), 1e-15);
}

TEST(Logm, RoundTripBelowBranchCut) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::random_hermitian(5, rng, trial == 0 ? 0.5 : 3.0);
    const auto back = fw::logm_unitary(fw::expm_hermitian(h, 1.0));
    EXPECT_LT((back - h).norm(), 1e-9);
    EXPECT_LT(fw::hermiticity_defect(back), 1e-12);
  }
}

TEST(Logm, BranchCutDetected) {
  fw::ComplexMatrix u = fw::ComplexMatrix::Identity(2, 2);
  u(1, 1) = -1.0;
  expect_error(fw::ErrorCode::kBranchCut, [&] { fw::logm_unitary(u); });
  u(1, 1) = std::polar(1.0, kPi - 1e-7);
  expect_error(fw::ErrorCode::kBranchCut, [&] { fw::logm_unitary(u); });
  u(1, 1) = std::polar(1.0, kPi - 1e-4);
  EXPECT_NO_THROW(fw::logm_unitary(u));
}

TEST(Logm, RejectsNonUnitary) {
  fw::ComplexMatrix u = fw::ComplexMatrix::Identity(2, 2) * 1.01;
  expect_error(fw::ErrorCode::kNonUnitaryInput, [&] { fw::logm_unitary(u); });
}

TEST(Norm, Examples) {
  fw::ComplexMatrix d = fw::ComplexMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -5.0;
  EXPECT_NEAR(fw::operator_norm(d), 5.0, 1e-14);
  EXPECT_EQ(fw::operator_norm(fw::ComplexMatrix::Zero(3, 3)), 0.0);
  EXPECT_NEAR(fw::operator_norm(k3_adjacency()), 2.0, 1e-14);
}

TEST(Norm, MatchesPowerIteration) {
  std::mt19937_64 rng(15);
  std::normal_distribution<double> g;
  fw::ComplexMatrix m(4, 6);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 6; ++j) m(i, j) = fw::Complex(g(rng), g(rng));
  }
  EXPECT_NEAR(fw::operator_norm(m), oracle::spectral_norm(m), 1e-10);
}

TEST(Norm, UnitaryHasUnitNorm) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = fw::expm_hermitian(oracle::random_hermitian(6, rng, 4.0), 1.3);
    EXPECT_NEAR(fw::operator_norm(u), 1.0, 1e-10);
    EXPECT_TRUE(fw::is_unitary(u, 1e-10));
  }
}

TEST(MatrixPower, AgreesWithRepeatedProduct) {
  std::mt19937_64 rng(17);
  const auto u = oracle::random_unitary(4, rng);
  fw::ComplexMatrix ref = fw::ComplexMatrix::Identity(4, 4);
  for (int k = 0; k < 37; ++k) ref = u * ref;
  EXPECT_LT((fw::matrix_power(u, 37) - ref).norm(), 1e-12);
  EXPECT_LT((fw::matrix_power(u, 0) - fw::ComplexMatrix::Identity(4, 4)).norm(), 1e-15);
}

TEST(Hermitian, PartAndDefect) {
  fw::ComplexMatrix m(2, 2);
  m << 1.0, fw::Complex(0, 2), fw::Complex(0, 0), 3.0;
  EXPECT_NEAR(fw::hermiticity_defect(m), 2.0, 1e-15);
  EXPECT_FALSE(fw::is_hermitian(m, 1e-12));
  EXPECT_TRUE(fw::is_hermitian(fw::hermitian_part(m), 1e-15));
}
