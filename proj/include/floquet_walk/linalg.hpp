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

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

namespace floquet_walk {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Tolerances and grid sizes shared by every numerical routine. One record is
/// threaded through the whole pipeline so a run can report exactly what it used.
struct NumericsSettings {
  double hermitian_tol = 1e-12;   // max |M_ij - conj(M_ji)|
  double unitary_tol = 1e-10;     // ||U^dag U - I||_op
  double branch_margin = 1e-6;    // distance of eigenphases from +-pi
  double convergence_tol = 1e-9;  // step-halving stop criterion for U(T)
  int max_steps_per_period = 6400;
  int phase_quadrature_points = 10000;  // Simpson points per period
  int symmetry_tau_grid = 512;
  int h_max_grid = 1000;
};

double hermiticity_defect(const ComplexMatrix& m);
double unitarity_defect(const ComplexMatrix& u);

bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& u, double tol);

/// (M + M^dag) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Eigendecomposition H = V diag(w) V^dag of a Hermitian matrix. Kept around so
/// that several propagation times can reuse one factorization.
class HermitianSpectrum {
 public:
  explicit HermitianSpectrum(const ComplexMatrix& h,
                             const NumericsSettings& settings = {});

  const RealVector& eigenvalues() const { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

  /// e^{-iHt}
  ComplexMatrix propagator(double t) const;
  /// e^{-iHt} psi without forming the full propagator.
  StateVector evolve(const StateVector& psi, double t) const;

 private:
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
};

/// e^{-iHt} for Hermitian H. Throws kNonHermitianInput.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t,
                             const NumericsSettings& settings = {});

/// Principal i*log(U): the Hermitian H with e^{-iH} = U and eigenvalues in
/// (-pi, pi). Throws kNonUnitaryInput, or kBranchCut when an eigenphase sits
/// within settings.branch_margin of +-pi.
ComplexMatrix logm_unitary(const ComplexMatrix& u,
                           const NumericsSettings& settings = {});

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// M^k by repeated squaring.
ComplexMatrix matrix_power(const ComplexMatrix& m, std::uint64_t k);

}  // namespace floquet_walk
