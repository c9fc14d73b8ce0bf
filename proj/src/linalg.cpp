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

#include "floquet_walk/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "floquet_walk/error.hpp"

namespace floquet_walk {

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  const ComplexMatrix gram = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  return operator_norm(gram);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return hermiticity_defect(m) <= tol;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return unitarity_defect(u) <= tol;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

HermitianSpectrum::HermitianSpectrum(const ComplexMatrix& h,
                                     const NumericsSettings& settings) {
  if (h.rows() == 0 || h.rows() != h.cols()) {
    throw Error(ErrorCode::kInvalidArgument,
                "Hamiltonian must be a non-empty square matrix");
  }
  const double defect = hermiticity_defect(h);
  if (defect > settings.hermitian_tol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (max |H - H^dag| = " << defect << ")";
    throw Error(ErrorCode::kNonHermitianInput, msg.str());
  }
  // Solve on the exactly Hermitian part so tiny input asymmetries cannot leak in.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(h));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNonHermitianInput, "Hermitian eigensolver failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

ComplexMatrix HermitianSpectrum::propagator(double t) const {
  const Eigen::VectorXcd phases =
      (eigenvalues_.cast<Complex>() * Complex(0.0, -t)).array().exp();
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

StateVector HermitianSpectrum::evolve(const StateVector& psi, double t) const {
  const Eigen::VectorXcd phases =
      (eigenvalues_.cast<Complex>() * Complex(0.0, -t)).array().exp();
  StateVector coeffs = eigenvectors_.adjoint() * psi;
  coeffs.array() *= phases.array();
  return eigenvectors_ * coeffs;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t,
                             const NumericsSettings& settings) {
  return HermitianSpectrum(h, settings).propagator(t);
}

ComplexMatrix logm_unitary(const ComplexMatrix& u,
                           const NumericsSettings& settings) {
  if (u.rows() == 0 || u.rows() != u.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "logm_unitary needs a square matrix");
  }
  const double defect = unitarity_defect(u);
  if (defect > settings.unitary_tol) {
    std::ostringstream msg;
    msg << "matrix is not unitary (||U^dag U - I|| = " << defect << ")";
    throw Error(ErrorCode::kNonUnitaryInput, msg.str());
  }
  // A unitary is normal, so its Schur form is diagonal up to rounding and the
  // Schur vectors form an orthonormal eigenbasis even for degenerate spectra.
  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::kNonUnitaryInput, "Schur decomposition failed");
  }
  const ComplexMatrix& tri = schur.matrixT();
  const ComplexMatrix& basis = schur.matrixU();
  const Eigen::Index n = u.rows();
  RealVector energies(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double phase = std::arg(tri(k, k));
    if (std::numbers::pi - std::abs(phase) < settings.branch_margin) {
      std::ostringstream msg;
      msg << "eigenphase " << phase << " lies within " << settings.branch_margin
          << " of the branch cut at +-pi";
      throw Error(ErrorCode::kBranchCut, msg.str());
    }
    // U = e^{-iH}: eigenvalue e^{-i E} carries phase -E.
    energies(k) = -phase;
  }
  const ComplexMatrix h =
      basis * energies.cast<Complex>().asDiagonal() * basis.adjoint();
  return hermitian_part(h);
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

ComplexMatrix matrix_power(const ComplexMatrix& m, std::uint64_t k) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "matrix_power needs a square matrix");
  }
  ComplexMatrix result = ComplexMatrix::Identity(m.rows(), m.cols());
  ComplexMatrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace floquet_walk
