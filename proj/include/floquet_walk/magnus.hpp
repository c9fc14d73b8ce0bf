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

#include <map>
#include <string>

#include "floquet_walk/linalg.hpp"
#include "floquet_walk/model.hpp"

namespace floquet_walk {

enum class MagnusOrder {
  kZero,          // time average
  kFirstTerm,     // the order-1 correction on its own
  kZeroPlusOne,   // time average plus order-1 correction
  kRotatedFrame,  // on-site drives absorbed into coupling phases
  kNumeric,       // i log(U(T)) / T
};

const char* to_string(MagnusOrder order) noexcept;

struct EffectiveHamiltonian {
  ComplexMatrix matrix;
  MagnusOrder order = MagnusOrder::kZero;
  double period_used = 0.0;
  std::string provenance;
};

/// (1/T) int_0^T H(t) dt.
EffectiveHamiltonian heff_order0(const PeriodicHamiltonian& h);

/// Order-1 correction from the double integral (1/2iT) int_0^T [H(t), W(t)] dt
/// with W(t) = int_0^t H. Exact segment-pair sums when H is piecewise constant,
/// composite Gauss-Legendre otherwise.
EffectiveHamiltonian heff_order1_integral(const PeriodicHamiltonian& h);

/// Order-1 correction from the Fourier components,
/// (1/Omega) sum_{l=1}^{l_max} (1/l) ([H_l, H_-l] - [H_l, H_0] + [H_-l, H_0]).
/// Exact when no drive has harmonics above l_max.
EffectiveHamiltonian heff_order1_fourier(const PeriodicHamiltonian& h, int l_max);

/// Order 0 plus order 1; Fourier route for terminating series, integral route
/// otherwise.
EffectiveHamiltonian heff_order01(const PeriodicHamiltonian& h);

/// logm(U(T)) / T. Throws kBranchCut when U(T) has an eigenphase at +-pi.
EffectiveHamiltonian heff_numeric(const PeriodicHamiltonian& h, int steps_per_period,
                                  const NumericsSettings& settings = {});

/// <exp(i (V_i(t) - V_j(t)))>_T with V_k = int_0^t beta_k - <int_0^t beta_k>_T.
/// Pass nullptr for an undriven site (V = 0).
Complex phase_average(const Drive* beta_i, const Drive* beta_j, double period,
                      const NumericsSettings& settings = {});

/// J_ij <exp(i V_ij)>_T on every skeleton edge. Nodes without a drive keep
/// their skeleton on-site energy as a constant drive. Diagonal is zero.
/// Throws kComplexSkeleton for non-real couplings.
EffectiveHamiltonian rotated_effective_couplings(const StaticHamiltonian& skeleton,
                                                 const std::map<int, Drive>& onsite_drives,
                                                 double period,
                                                 const NumericsSettings& settings = {});
/// Same for a model with on-site drives only; throws kInvalidArgument when an
/// edge is driven.
EffectiveHamiltonian rotated_effective_couplings(const PeriodicHamiltonian& h,
                                                 const NumericsSettings& settings = {});

struct SymmetryReport {
  bool breaks_inversion = false;
  bool breaks_shift_inversion = false;
  double inversion_residual = 0.0;  // min_tau max_t |b(t - tau) - b(-t - tau)|
  double shift_residual = 0.0;      // max_t |b(t) + b(t - T/2)|
};

/// Symmetry tests on beta; a symmetry is broken when its residual exceeds
/// 1e-8 times the drive amplitude.
SymmetryReport drive_symmetry_check(const Drive& beta, double period, int tau_grid = 512);
/// Same for beta_i - beta_j.
SymmetryReport drive_symmetry_check(const Drive& beta_i, const Drive& beta_j, double period,
                                    int tau_grid = 512);

/// Largest period keeping the accumulated truncation error below epsilon after
/// t_evol, with the order-of-magnitude constant set to 1.
/// order 0: epsilon / (t_evol h_max^2); order 1: sqrt(epsilon / t_evol) / h_max^1.5.
double period_bound(double epsilon, double t_evol, double h_max, int order);

/// ||U(T) - exp(-i H_eff T)||_op for the order-0 or order-0+1 effective model.
double truncation_error(const PeriodicHamiltonian& h, int order, int steps_per_period,
                        const NumericsSettings& settings = {});

}  // namespace floquet_walk
