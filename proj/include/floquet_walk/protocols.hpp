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
#include <vector>

#include "floquet_walk/linalg.hpp"
#include "floquet_walk/magnus.hpp"
#include "floquet_walk/model.hpp"

namespace floquet_walk {

enum class DriveKind { kStep, kSine };

const char* to_string(DriveKind kind) noexcept;
DriveKind drive_kind_from_string(const std::string& name);

// ---------------------------------------------------------------------------
// Driven triangle. Node 0 is undriven, nodes 1 and 2 carry beta_2 and beta_3.

struct TriangleDrives {
  Drive beta2;
  Drive beta3;
};

/// step: beta_2 = (A, -A, 0), beta_3 = (0, -A, A) on the thirds of the period.
/// sine: beta_2 = A sin(3 pi t/T) on [0, 2T/3), beta_3 = A sin(3 pi t/T) on [T/3, T).
TriangleDrives triangle_drives(DriveKind kind, double amplitude);

PeriodicHamiltonian triangle_hamiltonian(DriveKind kind, double coupling, double amplitude,
                                         double period);

/// Closed-form effective coupling shared by the three triangle edges.
Complex triangle_effective_coupling(DriveKind kind, double coupling, double amplitude,
                                    double period);

/// 3 Arg(J) folded into [0, 2 pi). Throws kZeroCoupling for J = 0.
double effective_phase(Complex coupling);

/// Gauge-invariant loop phase Arg(H_ab H_bc H_ca) folded into [0, 2 pi).
double loop_phase(const ComplexMatrix& h, int a, int b, int c);

/// Skeleton with every coupling divided by |<exp(i V_ij)>_T| so that the
/// rotated-frame couplings keep the skeleton magnitudes.
StaticHamiltonian compensate_couplings(const StaticHamiltonian& skeleton,
                                       const std::map<int, Drive>& onsite_drives, double period,
                                       const NumericsSettings& settings = {});

// ---------------------------------------------------------------------------
// Switch: S - 1, triangle {1, 2, 3}, arms 2 - ... - U and 3 - ... - D.

struct LabelledProtocol {
  PeriodicHamiltonian drive;
  EffectiveHamiltonian effective;  // rotated-frame model of the drive
  std::vector<std::string> labels;
  int source = 0;
};

struct SwitchProtocol : LabelledProtocol {
  int up = 0;
  int down = 0;
};

/// arm_length = number of edges between triangle node 2 (3) and U (D).
SwitchProtocol build_switch(double amplitude, double period, int arm_length = 2,
                            const NumericsSettings& settings = {});

/// Ideal switch: unit couplings, <2|H|3> = exp(i phi).
StaticHamiltonian switch_target(double phi, int arm_length = 2);

// ---------------------------------------------------------------------------
// Chain of corner-sharing triangles x0 - (y1) - x1 - (y2) - ... - xn with
// S = x0 and E = xn. Node order: x0, y1, x1, y2, x2, ...

struct ChainProtocol : LabelledProtocol {
  int sink = 0;
};

ChainProtocol build_triangle_chain(int n_triangles, double amplitude, double period,
                                   const NumericsSettings& settings = {});

/// Ideal chain with exp(i phi/3) on x_{k-1} -> x_k -> y_k -> x_{k-1}.
StaticHamiltonian triangle_chain_target(int n_triangles, double phi);

// ---------------------------------------------------------------------------
// Drive, target and time map for a Floquet simulation: the effective
// Hamiltonian of `drive` approximates scale * target.

struct SimulationPlan {
  PeriodicHamiltonian drive;
  StaticHamiltonian target;
  double scale = 1.0;
  int steps_per_period = 200;

  /// Drive time needed to emulate target evolution over t_evol.
  double simulation_time(double t_evol) const { return t_evol / scale; }
};

/// Open chain with NN coupling k1 and NNN coupling k2 (<j|H|j+1>, <j|H|j+2>).
/// With periodic = true the pairs wrap around and coincident terms add up.
StaticHamiltonian chain_with_nnn(int n, Complex k1, Complex k2, bool periodic = false);

/// NN coupling on edge j (sites j-1, j; j = 1..N-1):
/// J0 + J1 (cos(Omega t - j pi/2) - 2 cos(2 Omega t - j pi/2)).
double nnn_protocol_coupling(int edge, double t, double j0, double j1, double omega);

/// Chain of n sites whose edges carry nnn_protocol_coupling.
PeriodicHamiltonian nnn_drive(int n, double j0, double j1, double period);

/// J0 = 3 K1 T / (4 pi), J1 = sqrt|K2|; target chain_with_nnn(N, K1, i|K2|),
/// scale 3T / (4 pi).
SimulationPlan build_1d_nnn_protocol(int n, double k1, double k2_abs, double period,
                                     const NumericsSettings& settings = {});

/// Star with centre 0 and leaves 1..N driven by J1 cos(Omega t + pi/2) for
/// leaves in `partition` and J1 cos(Omega t) otherwise. Target: complete
/// bipartite graph with <p|H|q> = i J1^2 / (2 Omega) for p in P, q not in P.
/// Throws kInvalidPartition.
SimulationPlan build_star_cbg_protocol(int n, const std::vector<int>& partition, double j1,
                                       double period, const NumericsSettings& settings = {});

struct WaveguideLayout {
  std::vector<double> z;
  std::vector<std::vector<double>> positions;  // positions[j][k] = x_{j+1}(z_k)
};

/// gamma x_1 = cos(Omega z); x_{j+1} = x_j + ln(J_{j,j+1}(z) / kappa) / gamma,
/// with J the 1D-protocol coupling. Throws kCouplingOutOfRange unless
/// 0 < J < kappa everywhere.
WaveguideLayout waveguide_positions(int n, double kappa, double gamma, double j0, double j1,
                                    double omega, const std::vector<double>& z_grid);

/// kappa exp(-gamma |x_a - x_b|)
double evanescent_coupling(double kappa, double gamma, double x_a, double x_b);

}  // namespace floquet_walk
