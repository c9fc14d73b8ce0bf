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

#include "floquet_walk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include "floquet_walk/error.hpp"

namespace floquet_walk {

namespace {

constexpr double kEdgeFloor = 1e-12;

void check_node(const StaticHamiltonian& h, int i) {
  if (i < 0 || i >= h.dim()) {
    throw Error(ErrorCode::kInvalidArgument, "node index out of range: " + std::to_string(i));
  }
}

}  // namespace

double transition_probability(const StaticHamiltonian& h, int i, int j, double t) {
  check_node(h, i);
  check_node(h, j);
  const ComplexMatrix u = expm_hermitian(h.matrix(), t);
  return std::norm(u(j, i));
}

double trs_asymmetry(const ComplexMatrix& h, const std::vector<double>& t_grid) {
  const HermitianSpectrum spectrum(h);
  double worst = 0.0;
  for (double t : t_grid) {
    const Eigen::MatrixXd p = spectrum.propagator(t).cwiseAbs2();
    worst = std::max(worst, (p - p.transpose()).cwiseAbs().maxCoeff());
  }
  return worst;
}

double trs_asymmetry(const StaticHamiltonian& h, const std::vector<double>& t_grid) {
  return trs_asymmetry(h.matrix(), t_grid);
}

std::vector<double> default_trs_grid(const StaticHamiltonian& h) {
  double scale = 0.0;
  for (const auto& [key, j] : h.edges()) scale = std::max(scale, std::abs(j));
  if (scale == 0.0) scale = 1.0;
  std::vector<double> grid;
  for (int k = 1; k <= 50; ++k) grid.push_back(5.0 / scale * k / 50.0);
  return grid;
}

StaticHamiltonian gauge_transform(const StaticHamiltonian& h, const GaugePhases& phases) {
  if (static_cast<int>(phases.size()) != h.dim()) {
    throw Error(ErrorCode::kSizeMismatch, "gauge phases must have one entry per node");
  }
  StaticHamiltonian out = h;
  for (const auto& [key, j] : h.edges()) {
    const double shift = phases[static_cast<std::size_t>(key.first)] -
                         phases[static_cast<std::size_t>(key.second)];
    out.set_coupling(key.first, key.second, std::polar(1.0, shift) * j);
  }
  return out;
}

GaugeReduction gauge_real_reducible(const StaticHamiltonian& h) {
  const int n = h.dim();
  std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(n));
  for (const auto& [key, j] : h.edges()) {
    if (std::abs(j) <= kEdgeFloor) continue;
    neighbours[static_cast<std::size_t>(key.first)].push_back(key.second);
    neighbours[static_cast<std::size_t>(key.second)].push_back(key.first);
  }
  for (auto& list : neighbours) std::sort(list.begin(), list.end());

  // phi_i - phi_j + arg J_ij = 0 on tree edges.
  GaugePhases phases(static_cast<std::size_t>(n), 0.0);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop();
      for (int j : neighbours[static_cast<std::size_t>(i)]) {
        if (seen[static_cast<std::size_t>(j)]) continue;
        seen[static_cast<std::size_t>(j)] = true;
        phases[static_cast<std::size_t>(j)] =
            phases[static_cast<std::size_t>(i)] + std::arg(h.coupling(i, j));
        queue.push(j);
      }
    }
  }

  const StaticHamiltonian reduced = gauge_transform(h, phases);
  for (const auto& [key, j] : reduced.edges()) {
    if (std::abs(j) <= kEdgeFloor) continue;
    // Distance of arg J from {0, pi}.
    const double off = std::abs(std::sin(std::arg(j)));
    if (off > 1e-8) return {false, std::nullopt};
  }
  return {true, phases};
}

double reflection_asymmetry(const RealVector& p, int center) {
  const int n = static_cast<int>(p.size());
  if (center < 0 || center >= n) {
    throw Error(ErrorCode::kCenterOutOfRange, "centre " + std::to_string(center) +
                                                  " outside a chain of " + std::to_string(n));
  }
  auto at = [&](int j) { return (j < 0 || j >= n) ? 0.0 : p(j); };
  double total = 0.0;
  const int reach = std::max(center, n - 1 - center);
  for (int j = 1; j <= reach; ++j) total += std::abs(at(center + j) - at(center - j));
  return 0.5 * total;
}

double dispersion_1d(double k1_abs, double k2_abs, int n, int k) {
  if (n < 1 || k < 0 || k >= n) {
    throw Error(ErrorCode::kInvalidArgument, "momentum index must satisfy 0 <= k < N");
  }
  const double q = 2.0 * std::numbers::pi * k / n;
  return 2.0 * k1_abs * std::cos(q) - 2.0 * k2_abs * std::sin(2.0 * q);
}

double total_variation(const RealVector& p, const RealVector& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kSizeMismatch, "distributions have different support sizes");
  }
  return 0.5 * (p - q).cwiseAbs().sum();
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::kSizeMismatch, "x and y differ in length");
  if (x.size() < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] > 0.0) || !(y[k] > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "log-log fit needs positive data");
    }
    const double lx = std::log(x[k]);
    const double ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace floquet_walk
