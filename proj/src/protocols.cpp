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

#include "floquet_walk/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "floquet_walk/error.hpp"

namespace floquet_walk {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<Fraction>& thirds() {
  static const std::vector<Fraction> bps{Fraction(0), Fraction(1, 3), Fraction(2, 3), Fraction(1)};
  return bps;
}

// exp(iy) - 1 without cancellation for small y.
Complex expm1_i(double y) {
  const double s = std::sin(0.5 * y);
  return {-2.0 * s * s, std::sin(y)};
}

void require_positive_period(double period) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw Error(ErrorCode::kInvalidArgument, "period must be positive and finite");
  }
}

double fold_phase(double phi) {
  const double two_pi = 2.0 * kPi;
  double out = std::fmod(phi, two_pi);
  if (out < 0.0) out += two_pi;
  if (out >= two_pi) out = 0.0;
  return out;
}

}  // namespace

const char* to_string(DriveKind kind) noexcept {
  return kind == DriveKind::kStep ? "step" : "sine";
}

DriveKind drive_kind_from_string(const std::string& name) {
  if (name == "step") return DriveKind::kStep;
  if (name == "sine") return DriveKind::kSine;
  throw Error(ErrorCode::kInvalidArgument, "unknown drive kind '" + name + "'");
}

TriangleDrives triangle_drives(DriveKind kind, double amplitude) {
  if (kind == DriveKind::kStep) {
    return {Drive::piecewise_constant(thirds(), {amplitude, -amplitude, 0.0}),
            Drive::piecewise_constant(thirds(), {0.0, -amplitude, amplitude})};
  }
  const Segment wave{0.0, amplitude, 1.5, 0.0};
  const Segment rest{};
  return {Drive::piecewise(thirds(), {wave, wave, rest}),
          Drive::piecewise(thirds(), {rest, wave, wave})};
}

PeriodicHamiltonian triangle_hamiltonian(DriveKind kind, double coupling, double amplitude,
                                         double period) {
  StaticHamiltonian skeleton(3);
  skeleton.set_coupling(0, 1, coupling);
  skeleton.set_coupling(1, 2, coupling);
  skeleton.set_coupling(0, 2, coupling);
  PeriodicHamiltonian h(skeleton, period);
  auto drives = triangle_drives(kind, amplitude);
  h.set_onsite_drive(1, std::move(drives.beta2));
  h.set_onsite_drive(2, std::move(drives.beta3));
  return h;
}

Complex triangle_effective_coupling(DriveKind kind, double coupling, double amplitude,
                                    double period) {
  require_positive_period(period);
  if (amplitude == 0.0) return coupling;
  if (kind == DriveKind::kStep) {
    const double x = amplitude * period;
    return coupling * std::polar(1.0, x / 9.0) * (1.0 / 3.0 + (2.0 * kI / x) * expm1_i(-x / 3.0));
  }
  const double x = amplitude * period / (3.0 * kPi);
  return coupling * ((2.0 / 3.0) * std::cyl_bessel_j(0.0, x) * std::polar(1.0, -x / 3.0) +
                     (1.0 / 3.0) * std::polar(1.0, 2.0 * x / 3.0));
}

double effective_phase(Complex coupling) {
  if (std::abs(coupling) == 0.0) {
    throw Error(ErrorCode::kZeroCoupling, "effective phase of a vanishing coupling");
  }
  return fold_phase(3.0 * std::arg(coupling));
}

double loop_phase(const ComplexMatrix& h, int a, int b, int c) {
  const Complex loop = h(a, b) * h(b, c) * h(c, a);
  if (std::abs(loop) == 0.0) throw Error(ErrorCode::kZeroCoupling, "loop with a vanishing coupling");
  return fold_phase(std::arg(loop));
}

StaticHamiltonian compensate_couplings(const StaticHamiltonian& skeleton,
                                       const std::map<int, Drive>& onsite_drives, double period,
                                       const NumericsSettings& settings) {
  const EffectiveHamiltonian eff =
      rotated_effective_couplings(skeleton, onsite_drives, period, settings);
  StaticHamiltonian out = skeleton;
  for (const auto& [key, j] : skeleton.edges()) {
    const double ratio = std::abs(eff.matrix(key.first, key.second)) / std::abs(j);
    if (!(ratio > 1e-12)) {
      throw Error(ErrorCode::kZeroCoupling,
                  "drive suppresses coupling (" + std::to_string(key.first) + ", " +
                      std::to_string(key.second) + ") entirely");
    }
    out.set_coupling(key.first, key.second, j / ratio);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct SwitchGraph {
  StaticHamiltonian skeleton;
  std::vector<std::string> labels;
  int source, n2, n3, up, down;
};

SwitchGraph switch_graph(int arm_length) {
  if (arm_length < 1) throw Error(ErrorCode::kInvalidArgument, "arm_length must be >= 1");
  std::vector<std::string> labels{"S", "1", "2", "3"};
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {1, 3}};
  int tip2 = 2;
  int tip3 = 3;
  for (int k = 1; k < arm_length; ++k) {
    const std::string primes(static_cast<std::size_t>(k), '\'');
    labels.push_back("2" + primes);
    const int a = static_cast<int>(labels.size()) - 1;
    labels.push_back("3" + primes);
    const int b = static_cast<int>(labels.size()) - 1;
    edges.emplace_back(tip2, a);
    edges.emplace_back(tip3, b);
    tip2 = a;
    tip3 = b;
  }
  labels.push_back("U");
  const int up = static_cast<int>(labels.size()) - 1;
  labels.push_back("D");
  const int down = up + 1;
  edges.emplace_back(tip2, up);
  edges.emplace_back(tip3, down);

  StaticHamiltonian skeleton(static_cast<int>(labels.size()));
  for (const auto& [a, b] : edges) skeleton.set_coupling(a, b, 1.0);
  return {skeleton, labels, 0, 2, 3, up, down};
}

}  // namespace

SwitchProtocol build_switch(double amplitude, double period, int arm_length,
                            const NumericsSettings& settings) {
  require_positive_period(period);
  SwitchGraph g = switch_graph(arm_length);
  auto drives = triangle_drives(DriveKind::kStep, amplitude);
  std::map<int, Drive> onsite{{g.n2, drives.beta2}, {g.n3, drives.beta3}};
  const StaticHamiltonian compensated = compensate_couplings(g.skeleton, onsite, period, settings);
  PeriodicHamiltonian h(compensated, period);
  for (auto& [node, d] : onsite) h.set_onsite_drive(node, d);
  EffectiveHamiltonian eff = rotated_effective_couplings(h, settings);
  SwitchProtocol out{{std::move(h), std::move(eff), std::move(g.labels), g.source}, g.up, g.down};
  return out;
}

StaticHamiltonian switch_target(double phi, int arm_length) {
  SwitchGraph g = switch_graph(arm_length);
  g.skeleton.set_coupling(g.n2, g.n3, std::polar(1.0, phi));
  return g.skeleton;
}

// ---------------------------------------------------------------------------

namespace {

int chain_x(int k) { return 2 * k; }
int chain_y(int k) { return 2 * k - 1; }

std::vector<std::string> chain_labels(int n) {
  std::vector<std::string> labels{"S"};
  for (int k = 1; k <= n; ++k) {
    labels.push_back("y" + std::to_string(k));
    labels.push_back(k == n ? "E" : "x" + std::to_string(k));
  }
  return labels;
}

}  // namespace

ChainProtocol build_triangle_chain(int n_triangles, double amplitude, double period,
                                   const NumericsSettings& settings) {
  if (n_triangles < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one triangle");
  require_positive_period(period);
  const int dim = 2 * n_triangles + 1;
  StaticHamiltonian skeleton(dim);
  for (int k = 1; k <= n_triangles; ++k) {
    skeleton.set_coupling(chain_x(k - 1), chain_x(k), 1.0);
    skeleton.set_coupling(chain_x(k), chain_y(k), 1.0);
    skeleton.set_coupling(chain_y(k), chain_x(k - 1), 1.0);
  }
  // Roles (beta_1 = 0, beta_2, beta_3) cycle along the chain so that every
  // triangle (x_{k-1}, x_k, y_k) sees them in cyclic order.
  auto drives = triangle_drives(DriveKind::kStep, amplitude);
  std::map<int, Drive> onsite;
  auto assign = [&](int node, int role) {
    if (role == 1) onsite.insert_or_assign(node, drives.beta2);
    if (role == 2) onsite.insert_or_assign(node, drives.beta3);
  };
  assign(chain_x(0), 0);
  for (int k = 1; k <= n_triangles; ++k) {
    assign(chain_x(k), k % 3);
    assign(chain_y(k), (k + 1) % 3);
  }
  const StaticHamiltonian compensated = compensate_couplings(skeleton, onsite, period, settings);
  PeriodicHamiltonian h(compensated, period);
  for (auto& [node, d] : onsite) h.set_onsite_drive(node, d);
  EffectiveHamiltonian eff = rotated_effective_couplings(h, settings);
  ChainProtocol out{{std::move(h), std::move(eff), chain_labels(n_triangles), chain_x(0)},
                    chain_x(n_triangles)};
  return out;
}

StaticHamiltonian triangle_chain_target(int n_triangles, double phi) {
  if (n_triangles < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one triangle");
  StaticHamiltonian h(2 * n_triangles + 1);
  const Complex e = std::polar(1.0, phi / 3.0);
  for (int k = 1; k <= n_triangles; ++k) {
    h.set_coupling(chain_x(k - 1), chain_x(k), e);
    h.set_coupling(chain_x(k), chain_y(k), e);
    h.set_coupling(chain_y(k), chain_x(k - 1), e);
  }
  return h;
}

// ---------------------------------------------------------------------------

StaticHamiltonian chain_with_nnn(int n, Complex k1, Complex k2, bool periodic) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "chain needs at least two sites");
  if (periodic && n < 3) throw Error(ErrorCode::kInvalidArgument, "ring needs at least three sites");
  StaticHamiltonian h(n);
  const int last = periodic ? n : n - 1;
  for (int j = 0; j < last; ++j) h.add_coupling(j, (j + 1) % n, k1);
  if (k2 != Complex{}) {
    const int last2 = periodic ? n : n - 2;
    for (int j = 0; j < last2; ++j) {
      const int other = (j + 2) % n;
      if (other == j) continue;
      h.add_coupling(j, other, k2);
    }
  }
  return h;
}

double nnn_protocol_coupling(int edge, double t, double j0, double j1, double omega) {
  const double phase = -edge * kPi / 2.0;
  return j0 + j1 * (std::cos(omega * t + phase) - 2.0 * std::cos(2.0 * omega * t + phase));
}

namespace {

int default_steps(const PeriodicHamiltonian& h, const NumericsSettings& settings) {
  const double steps = std::max(200.0, 40.0 * h_max(h, settings) * h.period());
  return static_cast<int>(std::ceil(steps));
}

}  // namespace

PeriodicHamiltonian nnn_drive(int n, double j0, double j1, double period) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "1D protocol needs N >= 3");
  require_positive_period(period);
  StaticHamiltonian skeleton(n);
  for (int j = 1; j < n; ++j) skeleton.set_coupling(j - 1, j, j0);
  PeriodicHamiltonian h(skeleton, period);
  for (int j = 1; j < n; ++j) {
    const double phase = -j * kPi / 2.0;
    h.set_edge_drive(j - 1, j,
                     Drive::harmonic(j0, {Harmonic{1, j1, phase}, Harmonic{2, 2.0 * j1, phase + kPi}}));
  }
  return h;
}

SimulationPlan build_1d_nnn_protocol(int n, double k1, double k2_abs, double period,
                                     const NumericsSettings& settings) {
  if (!(k2_abs >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "|K2| must be >= 0");
  PeriodicHamiltonian h =
      nnn_drive(n, 3.0 * k1 * period / (4.0 * kPi), std::sqrt(k2_abs), period);
  const int steps = default_steps(h, settings);
  return {std::move(h), chain_with_nnn(n, k1, Complex(0.0, k2_abs)), 3.0 * period / (4.0 * kPi),
          steps};
}

SimulationPlan build_star_cbg_protocol(int n, const std::vector<int>& partition, double j1,
                                       double period, const NumericsSettings& settings) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "star needs at least two leaves");
  require_positive_period(period);
  const std::set<int> p(partition.begin(), partition.end());
  if (p.size() != partition.size()) {
    throw Error(ErrorCode::kInvalidPartition, "partition lists a leaf twice");
  }
  if (p.empty() || static_cast<int>(p.size()) >= n) {
    throw Error(ErrorCode::kInvalidPartition, "partition must be a proper nonempty subset");
  }
  if (*p.begin() < 1 || *p.rbegin() > n) {
    throw Error(ErrorCode::kInvalidPartition, "partition entries must be leaves 1..N");
  }
  StaticHamiltonian skeleton(n + 1);
  for (int j = 1; j <= n; ++j) skeleton.set_coupling(0, j, j1);
  PeriodicHamiltonian h(skeleton, period);
  for (int j = 1; j <= n; ++j) {
    const double phase = p.count(j) ? kPi / 2.0 : 0.0;
    h.set_edge_drive(0, j, Drive::harmonic(0.0, {Harmonic{1, j1, phase}}));
  }
  const Complex c(0.0, j1 * j1 / (2.0 * h.frequency()));
  StaticHamiltonian target(n + 1);
  for (int a : p) {
    for (int b = 1; b <= n; ++b) {
      if (!p.count(b)) target.set_coupling(a, b, c);
    }
  }
  const int steps = default_steps(h, settings);
  return {std::move(h), std::move(target), 1.0, steps};
}

// ---------------------------------------------------------------------------

WaveguideLayout waveguide_positions(int n, double kappa, double gamma, double j0, double j1,
                                    double omega, const std::vector<double>& z_grid) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two waveguides");
  if (!(gamma > 0.0) || !(kappa > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "kappa and gamma must be positive");
  }
  WaveguideLayout layout;
  layout.z = z_grid;
  layout.positions.assign(static_cast<std::size_t>(n), std::vector<double>(z_grid.size()));
  for (std::size_t k = 0; k < z_grid.size(); ++k) {
    const double z = z_grid[k];
    double x = std::cos(omega * z) / gamma;
    layout.positions[0][k] = x;
    for (int j = 1; j < n; ++j) {
      const double coupling = nnn_protocol_coupling(j, z, j0, j1, omega);
      if (!(coupling > 0.0) || !(coupling < kappa)) {
        throw Error(ErrorCode::kCouplingOutOfRange,
                    "coupling " + std::to_string(coupling) + " on edge " + std::to_string(j) +
                        " at z = " + std::to_string(z) + " outside (0, kappa)");
      }
      x += std::log(coupling / kappa) / gamma;
      layout.positions[static_cast<std::size_t>(j)][k] = x;
    }
  }
  return layout;
}

double evanescent_coupling(double kappa, double gamma, double x_a, double x_b) {
  return kappa * std::exp(-gamma * std::abs(x_a - x_b));
}

}  // namespace floquet_walk
