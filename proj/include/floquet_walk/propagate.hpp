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

#include <optional>
#include <vector>

#include "floquet_walk/linalg.hpp"
#include "floquet_walk/model.hpp"

namespace floquet_walk {

struct EvolutionRecord {
  std::vector<double> times;
  std::vector<StateVector> states;
  std::vector<RealVector> probabilities;  // |amplitude|^2 per site
  std::optional<ComplexMatrix> period_unitary;
};

RealVector site_probabilities(const StateVector& psi);

/// U(T), latest factor leftmost. Pieces on which H(t) is constant are exact
/// exponentials; the remaining pieces use midpoint exponentials with
/// ceil(steps_per_period * piece_length) steps each.
ComplexMatrix period_propagator(const PeriodicHamiltonian& h, int steps_per_period,
                                const NumericsSettings& settings = {});

struct ConvergedPropagator {
  ComplexMatrix unitary;
  int steps_per_period = 0;
};

/// Doubles steps_per_period from initial_steps until successive U(T) differ by
/// less than settings.convergence_tol. Throws kConvergenceCap past
/// settings.max_steps_per_period.
ConvergedPropagator period_propagator_converged(const PeriodicHamiltonian& h, int initial_steps,
                                                const NumericsSettings& settings = {});

/// psi_k = U(T)^k psi0 for k = 0..periods.
EvolutionRecord stroboscopic_evolve(const PeriodicHamiltonian& h, const StateVector& psi0,
                                    int periods, int steps_per_period,
                                    const NumericsSettings& settings = {});
EvolutionRecord stroboscopic_evolve(const ComplexMatrix& period_unitary, double period,
                                    const StateVector& psi0, int periods);

/// psi(t) = e^{-iHt} psi0 with one eigendecomposition for all times.
EvolutionRecord evolve_static(const ComplexMatrix& h, const StateVector& psi0,
                              const std::vector<double>& times,
                              const NumericsSettings& settings = {});
EvolutionRecord evolve_static(const StaticHamiltonian& h, const StateVector& psi0,
                              const std::vector<double>& times,
                              const NumericsSettings& settings = {});

/// |site><site|
StateVector basis_state(int dim, int site);

}  // namespace floquet_walk
