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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "floquet_walk/linalg.hpp"

namespace floquet_walk {

/// Exact rational, used for drive breakpoints expressed as fractions of T.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q" or an integer literal.
  static Fraction parse(std::string_view text);
  std::string to_string() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend bool operator==(const Fraction& a, const Fraction& b) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using NodePair = std::pair<int, int>;

/// Tight-binding Hamiltonian on a weighted graph: Hermitian couplings stored
/// once per edge (i < j) plus real on-site energies.
class StaticHamiltonian {
 public:
  explicit StaticHamiltonian(int dim);

  /// Drops entries with |M_ij| <= drop_tol. M must be Hermitian.
  static StaticHamiltonian from_matrix(const ComplexMatrix& m, double drop_tol = 0.0);

  int dim() const { return dim_; }

  /// Sets <i|H|j> = value (and <j|H|i> = conj(value)).
  void set_coupling(int i, int j, Complex value);
  /// Adds to <i|H|j>; used for periodic chains where two terms hit one pair.
  void add_coupling(int i, int j, Complex value);
  void set_onsite(int i, double energy);

  /// <i|H|j>; zero when the pair is not an edge.
  Complex coupling(int i, int j) const;
  bool has_edge(int i, int j) const;
  double onsite(int i) const { return onsite_.at(static_cast<std::size_t>(i)); }

  /// Canonical storage: key (i, j) with i < j holds <i|H|j>.
  const std::map<NodePair, Complex>& edges() const { return edges_; }
  const std::vector<double>& onsite_energies() const { return onsite_; }

  ComplexMatrix matrix() const;

 private:
  void check_pair(int i, int j) const;

  int dim_;
  std::map<NodePair, Complex> edges_;
  std::vector<double> onsite_;
};

/// One piece of a piecewise drive. Inside the piece the value is
/// offset + sine_amplitude * sin(2 pi sine_cycles t/T + sine_phase), with t the
/// time since the start of the period.
struct Segment {
  double offset = 0.0;
  double sine_amplitude = 0.0;
  double sine_cycles = 0.0;
  double sine_phase = 0.0;

  bool is_constant() const { return sine_amplitude == 0.0; }
};

struct PiecewiseDrive {
  std::vector<Fraction> breakpoints;  // 0 = b_0 < b_1 < ... < b_n = 1
  std::vector<Segment> segments;      // n pieces, segment k on [b_k, b_{k+1})
};

struct Harmonic {
  int order = 1;  // l >= 1
  double amplitude = 0.0;
  double phase = 0.0;
};

/// dc + sum_l amplitude_l cos(l Omega t + phase_l)
struct HarmonicDrive {
  double dc = 0.0;
  std::vector<Harmonic> harmonics;
};

/// Real T-periodic scalar function used for a coupling or an on-site energy.
/// All time arguments are in physical units; the period is supplied per call so
/// the same drive shape can be reused for different periods.
class Drive {
 public:
  using Representation = std::variant<PiecewiseDrive, HarmonicDrive>;

  static Drive constant(double value);
  static Drive piecewise_constant(std::vector<Fraction> breakpoints,
                                  std::vector<double> values);
  static Drive piecewise(std::vector<Fraction> breakpoints,
                         std::vector<Segment> segments);
  static Drive harmonic(double dc, std::vector<Harmonic> harmonics);

  const Representation& representation() const { return rep_; }

  bool is_harmonic() const;
  bool is_piecewise_constant() const;
  /// True when the drive has no time dependence inside the piece containing
  /// the period fraction s.
  bool is_constant_near(double s) const;
  /// Breakpoints as period fractions; {0, 1} for harmonic drives.
  std::vector<Fraction> breakpoints() const;
  /// Highest harmonic present, 0 for a constant, -1 when the Fourier series
  /// does not terminate (any non-constant piecewise drive).
  int max_harmonic() const;

  double value(double t, double period) const;
  /// int_0^t value, for t in [0, period].
  double integral(double t, double period) const;
  /// (1/T) int_0^T value(t) e^{-i l Omega t} dt; independent of T.
  Complex fourier_coefficient(int l) const;
  double mean() const { return fourier_coefficient(0).real(); }
  /// Upper bound on max_t |value(t)|.
  double peak() const;

 private:
  explicit Drive(Representation rep) : rep_(std::move(rep)) {}

  Representation rep_;
};

/// Fraction of the period in [0, 1) for an arbitrary time.
double period_fraction(double t, double period);

/// Skeleton graph plus per-edge and per-site drives. A drive replaces the
/// skeleton value on its edge or site; the skeleton edge then only fixes
/// topology. Drives are real; complex couplings only appear undriven.
class PeriodicHamiltonian {
 public:
  PeriodicHamiltonian(StaticHamiltonian skeleton, double period);

  void set_edge_drive(int i, int j, Drive drive);
  void set_onsite_drive(int i, Drive drive);

  int dim() const { return skeleton_.dim(); }
  double period() const { return period_; }
  double frequency() const;
  const StaticHamiltonian& skeleton() const { return skeleton_; }
  const std::map<NodePair, Drive>& edge_drives() const { return edge_drives_; }
  const std::map<int, Drive>& onsite_drives() const { return onsite_drives_; }

  bool is_static() const { return edge_drives_.empty() && onsite_drives_.empty(); }
  bool is_piecewise_constant() const;
  /// Same convention as Drive::max_harmonic.
  int max_harmonic() const;

  /// Union of all drive breakpoints, sorted.
  std::vector<Fraction> breakpoints() const;
  /// True when H(t) is constant on the piece of the period containing s.
  bool is_constant_near(double s) const;

  /// H(t), periodically extended.
  ComplexMatrix evaluate_at(double t) const;
  /// int_0^t H(t') dt' for t in [0, T].
  ComplexMatrix integral(double t) const;

  /// H_l = (1/T) int_0^T H(t) e^{-i l Omega t} dt.
  ComplexMatrix fourier_coefficient(int l) const;
  /// {H_{-l_max}, ..., H_{l_max}}; H_l sits at index l + l_max.
  std::vector<ComplexMatrix> fourier_coefficients(int l_max) const;

 private:
  StaticHamiltonian skeleton_;
  double period_;
  std::map<NodePair, Drive> edge_drives_;
  std::map<int, Drive> onsite_drives_;
};

/// max_t ||H(t)||: exact per segment for piecewise-constant drives, otherwise a
/// uniform grid of settings.h_max_grid points plus every piece midpoint.
double h_max(const PeriodicHamiltonian& h, const NumericsSettings& settings = {});

/// JSON round trip. Parsing rejects unknown keys with kConfigInvalid.
std::string to_json(const StaticHamiltonian& h);
std::string to_json(const PeriodicHamiltonian& h);
StaticHamiltonian static_hamiltonian_from_json(std::string_view text);
PeriodicHamiltonian periodic_hamiltonian_from_json(std::string_view text);

}  // namespace floquet_walk
