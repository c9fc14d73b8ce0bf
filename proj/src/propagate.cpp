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

#include "floquet_walk/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "floquet_walk/error.hpp"

namespace floquet_walk {

namespace {

void check_initial_state(const StateVector& psi0, Eigen::Index dim) {
  if (psi0.size() != dim) {
    throw Error(ErrorCode::kSizeMismatch, "initial state has dimension " +
                                              std::to_string(psi0.size()) + ", expected " +
                                              std::to_string(dim));
  }
  if (std::abs(psi0.norm() - 1.0) > 1e-10) {
    throw Error(ErrorCode::kInvalidArgument, "initial state is not normalized");
  }
}

void record(EvolutionRecord& rec, double t, const StateVector& psi) {
  rec.times.push_back(t);
  rec.states.push_back(psi);
  rec.probabilities.push_back(site_probabilities(psi));
}

}  // namespace

RealVector site_probabilities(const StateVector& psi) { return psi.cwiseAbs2(); }

StateVector basis_state(int dim, int site) {
  if (site < 0 || site >= dim) {
    throw Error(ErrorCode::kInvalidArgument, "site " + std::to_string(site) + " out of range");
  }
  StateVector psi = StateVector::Zero(dim);
  psi(site) = 1.0;
  return psi;
}

ComplexMatrix period_propagator(const PeriodicHamiltonian& h, int steps_per_period,
                                const NumericsSettings& settings) {
  if (steps_per_period < 1) {
    throw Error(ErrorCode::kInvalidArgument, "steps_per_period must be >= 1");
  }
  const double period = h.period();
  const auto bps = h.breakpoints();
  ComplexMatrix u = ComplexMatrix::Identity(h.dim(), h.dim());
  for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
    const double a = bps[k].value();
    const double b = bps[k + 1].value();
    const double mid = 0.5 * (a + b);
    if (h.is_constant_near(mid)) {
      u = expm_hermitian(h.evaluate_at(mid * period), (b - a) * period, settings) * u;
      continue;
    }
    const int n = std::max(1, static_cast<int>(std::ceil(steps_per_period * (b - a) - 1e-9)));
    const double delta = (b - a) * period / n;
    for (int s = 0; s < n; ++s) {
      const double t = a * period + (s + 0.5) * delta;
      u = expm_hermitian(h.evaluate_at(t), delta, settings) * u;
    }
  }
  return u;
}

namespace {

std::string format_tolerance(double tol) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", tol);
  return buf;
}

}  // namespace

ConvergedPropagator period_propagator_converged(const PeriodicHamiltonian& h, int initial_steps,
                                                const NumericsSettings& settings) {
  int steps = std::max(1, initial_steps);
  ComplexMatrix u = period_propagator(h, steps, settings);
  if (h.is_piecewise_constant()) return {u, steps};
  while (true) {
    const int next = steps * 2;
    if (next > settings.max_steps_per_period) {
      throw Error(ErrorCode::kConvergenceCap,
                  "period propagator not converged to " + format_tolerance(settings.convergence_tol) +
                      " within " + std::to_string(settings.max_steps_per_period) +
                      " steps per period");
    }
    ComplexMatrix refined = period_propagator(h, next, settings);
    const double change = operator_norm(refined - u);
    u = std::move(refined);
    steps = next;
    if (change < settings.convergence_tol) return {u, steps};
  }
}

EvolutionRecord stroboscopic_evolve(const ComplexMatrix& period_unitary, double period,
                                    const StateVector& psi0, int periods) {
  if (periods < 0) throw Error(ErrorCode::kInvalidArgument, "number of periods must be >= 0");
  check_initial_state(psi0, period_unitary.rows());
  EvolutionRecord rec;
  rec.period_unitary = period_unitary;
  StateVector psi = psi0;
  record(rec, 0.0, psi);
  for (int k = 1; k <= periods; ++k) {
    psi = period_unitary * psi;
    record(rec, k * period, psi);
  }
  return rec;
}

EvolutionRecord stroboscopic_evolve(const PeriodicHamiltonian& h, const StateVector& psi0,
                                    int periods, int steps_per_period,
                                    const NumericsSettings& settings) {
  check_initial_state(psi0, h.dim());
  return stroboscopic_evolve(period_propagator(h, steps_per_period, settings), h.period(), psi0,
                             periods);
}

EvolutionRecord evolve_static(const ComplexMatrix& h, const StateVector& psi0,
                              const std::vector<double>& times,
                              const NumericsSettings& settings) {
  if (times.empty() || times.front() != 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "times must start at 0");
  }
  if (!std::is_sorted(times.begin(), times.end())) {
    throw Error(ErrorCode::kInvalidArgument, "times must be ascending");
  }
  const HermitianSpectrum spectrum(h, settings);
  check_initial_state(psi0, h.rows());
  EvolutionRecord rec;
  for (double t : times) record(rec, t, t == 0.0 ? psi0 : spectrum.evolve(psi0, t));
  return rec;
}

EvolutionRecord evolve_static(const StaticHamiltonian& h, const StateVector& psi0,
                              const std::vector<double>& times,
                              const NumericsSettings& settings) {
  return evolve_static(h.matrix(), psi0, times, settings);
}

}  // namespace floquet_walk
