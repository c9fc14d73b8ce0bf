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

/// Per-node phases, applied as |i> -> exp(i phi_i) |i>.
using GaugePhases = std::vector<double>;

/// |<j| exp(-iHt) |i>|^2
double transition_probability(const StaticHamiltonian& h, int i, int j, double t);

/// max over node pairs and t of |P_{i->j}(t) - P_{j->i}(t)|.
double trs_asymmetry(const ComplexMatrix& h, const std::vector<double>& t_grid);
double trs_asymmetry(const StaticHamiltonian& h, const std::vector<double>& t_grid);
/// 50 points on (0, 5 / max|J|].
std::vector<double> default_trs_grid(const StaticHamiltonian& h);

/// J_ij -> exp(i (phi_i - phi_j)) J_ij; on-site energies untouched.
StaticHamiltonian gauge_transform(const StaticHamiltonian& h, const GaugePhases& phases);

struct GaugeReduction {
  bool reducible = false;
  std::optional<GaugePhases> witness;  // set when reducible
};

/// Breadth-first spanning forest from the lowest index of each component; tree
/// couplings are made real positive and every remaining edge must then carry a
/// phase of 0 or pi within 1e-8.
GaugeReduction gauge_real_reducible(const StaticHamiltonian& h);

/// sum_j |p(center + j) - p(center - j)| / 2; sites off the chain count as 0.
double reflection_asymmetry(const RealVector& p, int center);

/// 2|K1| cos(2 pi k/N) - 2|K2| sin(4 pi k/N)
double dispersion_1d(double k1_abs, double k2_abs, int n, int k);

/// (1/2) sum |p_i - q_i|. Throws kSizeMismatch.
double total_variation(const RealVector& p, const RealVector& q);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace floquet_walk
