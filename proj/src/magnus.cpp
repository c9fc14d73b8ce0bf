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

#include "floquet_walk/magnus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "floquet_walk/error.hpp"
#include "floquet_walk/propagate.hpp"
#include "quadrature.hpp"

namespace floquet_walk {

namespace {

int panels_for(double length_fraction) {
  return std::max(4, static_cast<int>(std::ceil(64.0 * length_fraction)));
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

// (1/T) int_0^T W(t) dt for W(t) = int_0^t beta.
double mean_integral(const Drive& beta, double period) {
  const auto bps = beta.breakpoints();
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
    const double a = bps[k].value();
    const double b = bps[k + 1].value();
    const double mid = 0.5 * (a + b);
    const double width = (b - a) * period;
    if (beta.is_constant_near(mid)) {
      total += beta.integral(a * period, period) * width +
               0.5 * beta.value(mid * period, period) * width * width;
    } else {
      total += detail::gauss_legendre(
          [&](double t) { return beta.integral(t, period); }, a * period, b * period,
          panels_for(b - a), 0.0);
    }
  }
  return total / period;
}

std::vector<Fraction> merged_breakpoints(const Drive* bi, const Drive* bj) {
  std::set<Fraction> all{Fraction(0), Fraction(1)};
  for (const Drive* d : {bi, bj}) {
    if (d == nullptr) continue;
    for (const auto& f : d->breakpoints()) all.insert(f);
  }
  return {all.begin(), all.end()};
}

SymmetryReport symmetry_report(const std::function<double(double)>& beta,
                               const std::vector<Fraction>& bps, double amplitude,
                               double period, int tau_grid) {
  if (tau_grid < 100) throw Error(ErrorCode::kInvalidArgument, "tau grid must have >= 100 points");
  if (!(period > 0.0)) throw Error(ErrorCode::kInvalidArgument, "period must be positive");

  const int samples = 2 * tau_grid;
  std::vector<double> ts(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) ts[static_cast<std::size_t>(k)] = (k + 0.5) / samples * period;

  std::vector<double> taus;
  for (int k = 0; k < tau_grid; ++k) taus.push_back(period * k / tau_grid);
  // Reflection centres of a piecewise function sit at breakpoint half-sums.
  for (std::size_t a = 0; a < bps.size(); ++a) {
    for (std::size_t b = a; b < bps.size(); ++b) {
      const double centre = 0.5 * (bps[a].value() + bps[b].value());
      for (double c : {centre, centre + 0.5}) {
        taus.push_back(period_fraction(-c * period, period) * period);
      }
    }
  }

  SymmetryReport report;
  double best = std::numeric_limits<double>::infinity();
  for (double tau : taus) {
    double worst = 0.0;
    for (double t : ts) {
      worst = std::max(worst, std::abs(beta(t - tau) - beta(-t - tau)));
      if (worst >= best) break;
    }
    best = std::min(best, worst);
  }
  report.inversion_residual = best;

  double shift = 0.0;
  for (double t : ts) shift = std::max(shift, std::abs(beta(t) + beta(t - 0.5 * period)));
  report.shift_residual = shift;

  const double threshold = 1e-8 * amplitude;
  report.breaks_inversion = report.inversion_residual > threshold;
  report.breaks_shift_inversion = report.shift_residual > threshold;
  return report;
}

}  // namespace

const char* to_string(MagnusOrder order) noexcept {
  switch (order) {
    case MagnusOrder::kZero: return "order0";
    case MagnusOrder::kFirstTerm: return "order1-term";
    case MagnusOrder::kZeroPlusOne: return "order0+1";
    case MagnusOrder::kRotatedFrame: return "rotated-frame";
    case MagnusOrder::kNumeric: return "numeric";
  }
  return "unknown";
}

EffectiveHamiltonian heff_order0(const PeriodicHamiltonian& h) {
  return {h.fourier_coefficient(0), MagnusOrder::kZero, h.period(), "time average"};
}

EffectiveHamiltonian heff_order1_integral(const PeriodicHamiltonian& h) {
  const double period = h.period();
  const auto bps = h.breakpoints();
  const int n = h.dim();
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
    const double a = bps[k].value();
    const double b = bps[k + 1].value();
    const double mid = 0.5 * (a + b);
    if (h.is_constant_near(mid)) {
      // W(t) = W(a) + H_k (t - a) and H_k commutes with itself.
      acc += (b - a) * period * commutator(h.evaluate_at(mid * period), h.integral(a * period));
    } else {
      acc += detail::gauss_legendre(
          [&](double t) -> ComplexMatrix { return commutator(h.evaluate_at(t), h.integral(t)); },
          a * period, b * period, panels_for(b - a), ComplexMatrix(ComplexMatrix::Zero(n, n)));
    }
  }
  ComplexMatrix term = acc / (2.0 * kI * period);
  return {hermitian_part(term), MagnusOrder::kFirstTerm, period, "double integral"};
}

EffectiveHamiltonian heff_order1_fourier(const PeriodicHamiltonian& h, int l_max) {
  if (l_max < 1) throw Error(ErrorCode::kInvalidArgument, "l_max must be >= 1");
  const auto coeffs = h.fourier_coefficients(l_max);
  const ComplexMatrix& h0 = coeffs[static_cast<std::size_t>(l_max)];
  ComplexMatrix term = ComplexMatrix::Zero(h.dim(), h.dim());
  for (int l = 1; l <= l_max; ++l) {
    const ComplexMatrix& hp = coeffs[static_cast<std::size_t>(l_max + l)];
    const ComplexMatrix& hm = coeffs[static_cast<std::size_t>(l_max - l)];
    term += (commutator(hp, hm) - commutator(hp, h0) + commutator(hm, h0)) / static_cast<double>(l);
  }
  term /= h.frequency();
  return {hermitian_part(term), MagnusOrder::kFirstTerm, h.period(),
          "Fourier components up to l=" + std::to_string(l_max)};
}

EffectiveHamiltonian heff_order01(const PeriodicHamiltonian& h) {
  const int l_max = h.max_harmonic();
  EffectiveHamiltonian first =
      l_max >= 0 ? heff_order1_fourier(h, std::max(1, l_max)) : heff_order1_integral(h);
  EffectiveHamiltonian out = heff_order0(h);
  out.matrix += first.matrix;
  out.order = MagnusOrder::kZeroPlusOne;
  out.provenance = "time average + " + first.provenance;
  return out;
}

EffectiveHamiltonian heff_numeric(const PeriodicHamiltonian& h, int steps_per_period,
                                  const NumericsSettings& settings) {
  const ComplexMatrix u = period_propagator(h, steps_per_period, settings);
  return {logm_unitary(u, settings) / h.period(), MagnusOrder::kNumeric, h.period(),
          "i log U(T) / T, " + std::to_string(steps_per_period) + " steps per period"};
}

Complex phase_average(const Drive* beta_i, const Drive* beta_j, double period,
                      const NumericsSettings& settings) {
  if (!(period > 0.0)) throw Error(ErrorCode::kInvalidArgument, "period must be positive");
  const double mean_i = beta_i ? mean_integral(*beta_i, period) : 0.0;
  const double mean_j = beta_j ? mean_integral(*beta_j, period) : 0.0;
  auto w = [&](const Drive* d, double t) { return d ? d->integral(t, period) : 0.0; };
  auto b = [&](const Drive* d, double t) { return d ? d->value(t, period) : 0.0; };
  auto constant_near = [](const Drive* d, double s) { return d == nullptr || d->is_constant_near(s); };
  auto theta = [&](double t) { return (w(beta_i, t) - mean_i) - (w(beta_j, t) - mean_j); };

  const auto bps = merged_breakpoints(beta_i, beta_j);
  Complex total{};
  for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
    const double a = bps[k].value() * period;
    const double e = bps[k + 1].value() * period;
    const double mid = 0.5 * (a + e);
    if (constant_near(beta_i, mid / period) && constant_near(beta_j, mid / period)) {
      const double slope = b(beta_i, mid) - b(beta_j, mid);
      const double width = e - a;
      const Complex start = std::polar(1.0, theta(a));
      total += std::abs(slope * width) < 1e-12
                   ? start * width
                   : start * (std::polar(1.0, slope * width) - 1.0) / (kI * slope);
    } else {
      const int n = std::max(2, static_cast<int>(std::lround(
                                    settings.phase_quadrature_points * (e - a) / period)));
      total += detail::simpson([&](double t) { return std::polar(1.0, theta(t)); }, a, e, n,
                               Complex{});
    }
  }
  return total / period;
}

EffectiveHamiltonian rotated_effective_couplings(const StaticHamiltonian& skeleton,
                                                 const std::map<int, Drive>& onsite_drives,
                                                 double period,
                                                 const NumericsSettings& settings) {
  const int n = skeleton.dim();
  for (const auto& [node, d] : onsite_drives) {
    if (node < 0 || node >= n) {
      throw Error(ErrorCode::kInvalidArgument, "on-site drive on unknown node " + std::to_string(node));
    }
  }
  std::vector<Drive> constants;
  constants.reserve(static_cast<std::size_t>(n));
  std::vector<const Drive*> beta(static_cast<std::size_t>(n), nullptr);
  for (int i = 0; i < n; ++i) {
    auto it = onsite_drives.find(i);
    if (it != onsite_drives.end()) {
      beta[static_cast<std::size_t>(i)] = &it->second;
    } else if (skeleton.onsite(i) != 0.0) {
      constants.push_back(Drive::constant(skeleton.onsite(i)));
      beta[static_cast<std::size_t>(i)] = &constants.back();
    }
  }

  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (const auto& [key, j] : skeleton.edges()) {
    if (j.imag() != 0.0) {
      throw Error(ErrorCode::kComplexSkeleton,
                  "skeleton coupling (" + std::to_string(key.first) + ", " +
                      std::to_string(key.second) + ") is not real");
    }
    const Complex avg = phase_average(beta[static_cast<std::size_t>(key.first)],
                                      beta[static_cast<std::size_t>(key.second)], period, settings);
    m(key.first, key.second) = j.real() * avg;
    m(key.second, key.first) = std::conj(m(key.first, key.second));
  }
  return {m, MagnusOrder::kRotatedFrame, period, "rotated frame phase averages"};
}

EffectiveHamiltonian rotated_effective_couplings(const PeriodicHamiltonian& h,
                                                 const NumericsSettings& settings) {
  if (!h.edge_drives().empty()) {
    throw Error(ErrorCode::kInvalidArgument, "rotated frame reduction needs undriven couplings");
  }
  return rotated_effective_couplings(h.skeleton(), h.onsite_drives(), h.period(), settings);
}

SymmetryReport drive_symmetry_check(const Drive& beta, double period, int tau_grid) {
  return symmetry_report([&](double t) { return beta.value(t, period); }, beta.breakpoints(),
                         beta.peak(), period, tau_grid);
}

SymmetryReport drive_symmetry_check(const Drive& beta_i, const Drive& beta_j, double period,
                                    int tau_grid) {
  return symmetry_report(
      [&](double t) { return beta_i.value(t, period) - beta_j.value(t, period); },
      merged_breakpoints(&beta_i, &beta_j), beta_i.peak() + beta_j.peak(), period, tau_grid);
}

double period_bound(double epsilon, double t_evol, double h_max, int order) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1)");
  }
  if (!(t_evol > 0.0) || !(h_max > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "evolution time and h_max must be positive");
  }
  if (order == 0) return epsilon / (t_evol * h_max * h_max);
  if (order == 1) return std::sqrt(epsilon / t_evol) / std::pow(h_max, 1.5);
  throw Error(ErrorCode::kInvalidArgument, "order must be 0 or 1");
}

double truncation_error(const PeriodicHamiltonian& h, int order, int steps_per_period,
                        const NumericsSettings& settings) {
  if (order != 0 && order != 1) throw Error(ErrorCode::kInvalidArgument, "order must be 0 or 1");
  const ComplexMatrix u = period_propagator(h, steps_per_period, settings);
  const EffectiveHamiltonian eff = order == 0 ? heff_order0(h) : heff_order01(h);
  return operator_norm(u - expm_hermitian(eff.matrix, h.period(), settings));
}

}  // namespace floquet_walk
