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

#include "floquet_walk/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>

#include "floquet_walk/error.hpp"

namespace floquet_walk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

__extension__ using Int128 = __int128;

Fraction make_reduced(Int128 num, Int128 den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int128 a = num < 0 ? -num : num;
  Int128 b = den;
  while (b != 0) {
    const Int128 r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || -num > kMax || den > kMax) {
    throw Error(ErrorCode::kInvalidArgument, "fraction overflow");
  }
  return Fraction(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

// int_a^b exp(i (k s + theta)) ds
Complex phase_integral(double k, double theta, double a, double b) {
  const Complex base = std::polar(1.0, theta);
  if (std::abs(k) < 1e-14) return base * (b - a);
  return base * (std::polar(1.0, k * b) - std::polar(1.0, k * a)) / (kI * k);
}

std::size_t segment_index(const std::vector<Fraction>& breakpoints, double s) {
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), s,
                             [](double x, const Fraction& f) { return x < f.value(); });
  std::size_t k = static_cast<std::size_t>(it - breakpoints.begin());
  k = k == 0 ? 0 : k - 1;
  return std::min(k, breakpoints.size() - 2);
}

double segment_value(const Segment& seg, double s) {
  if (seg.is_constant()) return seg.offset;
  return seg.offset + seg.sine_amplitude * std::sin(kTwoPi * seg.sine_cycles * s + seg.sine_phase);
}

// int_a^b of the segment in period-fraction units.
double segment_integral(const Segment& seg, double a, double b) {
  double total = seg.offset * (b - a);
  if (seg.is_constant()) return total;
  const double k = kTwoPi * seg.sine_cycles;
  if (k == 0.0) return total + seg.sine_amplitude * std::sin(seg.sine_phase) * (b - a);
  return total + seg.sine_amplitude *
                     (std::cos(k * a + seg.sine_phase) - std::cos(k * b + seg.sine_phase)) / k;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Fraction Fraction::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, v);
    if (ec != std::errc() || ptr != end || part.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed fraction '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text));
  return Fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Fraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return make_reduced(static_cast<Int128>(a.num_) * b.den_ + static_cast<Int128>(b.num_) * a.den_,
                      static_cast<Int128>(a.den_) * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return make_reduced(static_cast<Int128>(a.num_) * b.den_ - static_cast<Int128>(b.num_) * a.den_,
                      static_cast<Int128>(a.den_) * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return make_reduced(static_cast<Int128>(a.num_) * b.num_,
                      static_cast<Int128>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  const Int128 lhs = static_cast<Int128>(a.num_) * b.den_;
  const Int128 rhs = static_cast<Int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// StaticHamiltonian

StaticHamiltonian::StaticHamiltonian(int dim) : dim_(dim) {
  if (dim < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  onsite_.assign(static_cast<std::size_t>(dim), 0.0);
}

StaticHamiltonian StaticHamiltonian::from_matrix(const ComplexMatrix& m, double drop_tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "matrix must be non-empty and square");
  }
  if (!is_hermitian(m, NumericsSettings{}.hermitian_tol)) {
    throw Error(ErrorCode::kNonHermitianInput, "matrix is not Hermitian");
  }
  const int n = static_cast<int>(m.rows());
  StaticHamiltonian h(n);
  for (int i = 0; i < n; ++i) {
    h.onsite_[static_cast<std::size_t>(i)] = m(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j)) > drop_tol) h.edges_[{i, j}] = m(i, j);
    }
  }
  return h;
}

void StaticHamiltonian::check_pair(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) {
    throw Error(ErrorCode::kInvalidArgument,
                "node index out of range: (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  if (i == j) {
    throw Error(ErrorCode::kInvalidArgument,
                "self-edge on node " + std::to_string(i) + "; use the on-site energy");
  }
}

void StaticHamiltonian::set_coupling(int i, int j, Complex value) {
  check_pair(i, j);
  if (i < j) {
    edges_[{i, j}] = value;
  } else {
    edges_[{j, i}] = std::conj(value);
  }
}

void StaticHamiltonian::add_coupling(int i, int j, Complex value) {
  set_coupling(i, j, coupling(i, j) + value);
}

void StaticHamiltonian::set_onsite(int i, double energy) {
  if (i < 0 || i >= dim_) {
    throw Error(ErrorCode::kInvalidArgument, "node index out of range: " + std::to_string(i));
  }
  onsite_[static_cast<std::size_t>(i)] = energy;
}

Complex StaticHamiltonian::coupling(int i, int j) const {
  check_pair(i, j);
  if (i < j) {
    auto it = edges_.find({i, j});
    return it == edges_.end() ? Complex{} : it->second;
  }
  auto it = edges_.find({j, i});
  return it == edges_.end() ? Complex{} : std::conj(it->second);
}

bool StaticHamiltonian::has_edge(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= dim_ || j >= dim_) return false;
  return edges_.count({std::min(i, j), std::max(i, j)}) > 0;
}

ComplexMatrix StaticHamiltonian::matrix() const {
  ComplexMatrix m = ComplexMatrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) m(i, i) = onsite_[static_cast<std::size_t>(i)];
  for (const auto& [key, value] : edges_) {
    m(key.first, key.second) = value;
    m(key.second, key.first) = std::conj(value);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Drive

Drive Drive::constant(double value) {
  return piecewise_constant({Fraction(0), Fraction(1)}, {value});
}

Drive Drive::piecewise_constant(std::vector<Fraction> breakpoints, std::vector<double> values) {
  std::vector<Segment> segments;
  segments.reserve(values.size());
  for (double v : values) segments.push_back(Segment{v, 0.0, 0.0, 0.0});
  return piecewise(std::move(breakpoints), std::move(segments));
}

Drive Drive::piecewise(std::vector<Fraction> breakpoints, std::vector<Segment> segments) {
  if (segments.empty() || breakpoints.size() != segments.size() + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "piecewise drive needs n segments and n+1 breakpoints");
  }
  if (breakpoints.front() != Fraction(0) || breakpoints.back() != Fraction(1)) {
    throw Error(ErrorCode::kInvalidArgument, "breakpoints must start at 0 and end at 1");
  }
  for (std::size_t k = 1; k < breakpoints.size(); ++k) {
    if (!(breakpoints[k - 1] < breakpoints[k])) {
      throw Error(ErrorCode::kInvalidArgument, "breakpoints must be strictly increasing");
    }
  }
  for (const auto& seg : segments) {
    if (!std::isfinite(seg.offset) || !std::isfinite(seg.sine_amplitude) ||
        !std::isfinite(seg.sine_cycles) || !std::isfinite(seg.sine_phase)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite drive segment");
    }
  }
  return Drive(PiecewiseDrive{std::move(breakpoints), std::move(segments)});
}

Drive Drive::harmonic(double dc, std::vector<Harmonic> harmonics) {
  std::set<int> seen;
  for (const auto& h : harmonics) {
    if (h.order < 1) throw Error(ErrorCode::kInvalidArgument, "harmonic order must be >= 1");
    if (!seen.insert(h.order).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate harmonic order " + std::to_string(h.order));
    }
    if (!std::isfinite(h.amplitude) || !std::isfinite(h.phase)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite harmonic");
    }
  }
  if (!std::isfinite(dc)) throw Error(ErrorCode::kInvalidArgument, "non-finite dc term");
  return Drive(HarmonicDrive{dc, std::move(harmonics)});
}

bool Drive::is_harmonic() const { return std::holds_alternative<HarmonicDrive>(rep_); }

bool Drive::is_piecewise_constant() const {
  return std::visit(
      Overloaded{[](const PiecewiseDrive& p) {
                   return std::all_of(p.segments.begin(), p.segments.end(),
                                      [](const Segment& s) { return s.is_constant(); });
                 },
                 [](const HarmonicDrive& h) {
                   return std::all_of(h.harmonics.begin(), h.harmonics.end(),
                                      [](const Harmonic& x) { return x.amplitude == 0.0; });
                 }},
      rep_);
}

bool Drive::is_constant_near(double s) const {
  return std::visit(Overloaded{[&](const PiecewiseDrive& p) {
                                 return p.segments[segment_index(p.breakpoints, s)].is_constant();
                               },
                               [&](const HarmonicDrive&) { return is_piecewise_constant(); }},
                    rep_);
}

std::vector<Fraction> Drive::breakpoints() const {
  if (const auto* p = std::get_if<PiecewiseDrive>(&rep_)) return p->breakpoints;
  return {Fraction(0), Fraction(1)};
}

int Drive::max_harmonic() const {
  return std::visit(Overloaded{[](const PiecewiseDrive& p) {
                                 if (p.segments.size() == 1 && p.segments[0].is_constant()) return 0;
                                 return -1;
                               },
                               [](const HarmonicDrive& h) {
                                 int l = 0;
                                 for (const auto& x : h.harmonics) l = std::max(l, x.order);
                                 return l;
                               }},
                    rep_);
}

double period_fraction(double t, double period) {
  double tau = std::fmod(t, period);
  if (tau < 0.0) tau += period;
  if (tau >= period) tau = 0.0;
  return tau / period;
}

double Drive::value(double t, double period) const {
  const double s = period_fraction(t, period);
  return std::visit(Overloaded{[&](const PiecewiseDrive& p) {
                                 return segment_value(p.segments[segment_index(p.breakpoints, s)], s);
                               },
                               [&](const HarmonicDrive& h) {
                                 double v = h.dc;
                                 for (const auto& x : h.harmonics) {
                                   v += x.amplitude * std::cos(kTwoPi * x.order * s + x.phase);
                                 }
                                 return v;
                               }},
                    rep_);
}

double Drive::integral(double t, double period) const {
  const double s_end = std::clamp(t / period, 0.0, 1.0);
  const double per_unit = std::visit(
      Overloaded{[&](const PiecewiseDrive& p) {
                   double total = 0.0;
                   for (std::size_t k = 0; k < p.segments.size(); ++k) {
                     const double a = p.breakpoints[k].value();
                     const double b = std::min(p.breakpoints[k + 1].value(), s_end);
                     if (b <= a) break;
                     total += segment_integral(p.segments[k], a, b);
                   }
                   return total;
                 },
                 [&](const HarmonicDrive& h) {
                   double total = h.dc * s_end;
                   for (const auto& x : h.harmonics) {
                     const double k = kTwoPi * x.order;
                     total += x.amplitude * (std::sin(k * s_end + x.phase) - std::sin(x.phase)) / k;
                   }
                   return total;
                 }},
      rep_);
  return per_unit * period;
}

Complex Drive::fourier_coefficient(int l) const {
  const double kl = -kTwoPi * l;
  return std::visit(
      Overloaded{[&](const PiecewiseDrive& p) {
                   Complex total{};
                   for (std::size_t k = 0; k < p.segments.size(); ++k) {
                     const Segment& seg = p.segments[k];
                     const double a = p.breakpoints[k].value();
                     const double b = p.breakpoints[k + 1].value();
                     total += seg.offset * phase_integral(kl, 0.0, a, b);
                     if (!seg.is_constant()) {
                       const double kc = kTwoPi * seg.sine_cycles;
                       total += seg.sine_amplitude / (2.0 * kI) *
                                (phase_integral(kc + kl, seg.sine_phase, a, b) -
                                 phase_integral(-kc + kl, -seg.sine_phase, a, b));
                     }
                   }
                   return total;
                 },
                 [&](const HarmonicDrive& h) {
                   if (l == 0) return Complex(h.dc, 0.0);
                   for (const auto& x : h.harmonics) {
                     if (x.order == l) return 0.5 * x.amplitude * std::polar(1.0, x.phase);
                     if (x.order == -l) return 0.5 * x.amplitude * std::polar(1.0, -x.phase);
                   }
                   return Complex{};
                 }},
      rep_);
}

double Drive::peak() const {
  return std::visit(Overloaded{[](const PiecewiseDrive& p) {
                                 double m = 0.0;
                                 for (const auto& s : p.segments) {
                                   m = std::max(m, std::abs(s.offset) + std::abs(s.sine_amplitude));
                                 }
                                 return m;
                               },
                               [](const HarmonicDrive& h) {
                                 double m = std::abs(h.dc);
                                 for (const auto& x : h.harmonics) m += std::abs(x.amplitude);
                                 return m;
                               }},
                    rep_);
}

// ---------------------------------------------------------------------------
// PeriodicHamiltonian

PeriodicHamiltonian::PeriodicHamiltonian(StaticHamiltonian skeleton, double period)
    : skeleton_(std::move(skeleton)), period_(period) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw Error(ErrorCode::kInvalidArgument, "period must be positive and finite");
  }
}

void PeriodicHamiltonian::set_edge_drive(int i, int j, Drive drive) {
  if (!skeleton_.has_edge(i, j)) {
    throw Error(ErrorCode::kInvalidArgument, "edge drive on (" + std::to_string(i) + ", " +
                                                 std::to_string(j) + ") which is not a skeleton edge");
  }
  edge_drives_.insert_or_assign(NodePair{std::min(i, j), std::max(i, j)}, std::move(drive));
}

void PeriodicHamiltonian::set_onsite_drive(int i, Drive drive) {
  if (i < 0 || i >= dim()) {
    throw Error(ErrorCode::kInvalidArgument, "on-site drive on unknown node " + std::to_string(i));
  }
  onsite_drives_.insert_or_assign(i, std::move(drive));
}

double PeriodicHamiltonian::frequency() const { return 2.0 * std::numbers::pi / period_; }

bool PeriodicHamiltonian::is_piecewise_constant() const {
  for (const auto& [k, d] : edge_drives_) {
    if (!d.is_piecewise_constant()) return false;
  }
  for (const auto& [k, d] : onsite_drives_) {
    if (!d.is_piecewise_constant()) return false;
  }
  return true;
}

int PeriodicHamiltonian::max_harmonic() const {
  int l = 0;
  auto update = [&](const Drive& d) {
    const int m = d.max_harmonic();
    l = (m < 0 || l < 0) ? -1 : std::max(l, m);
  };
  for (const auto& [k, d] : edge_drives_) update(d);
  for (const auto& [k, d] : onsite_drives_) update(d);
  return l;
}

std::vector<Fraction> PeriodicHamiltonian::breakpoints() const {
  std::set<Fraction> all{Fraction(0), Fraction(1)};
  for (const auto& [k, d] : edge_drives_) {
    for (const auto& f : d.breakpoints()) all.insert(f);
  }
  for (const auto& [k, d] : onsite_drives_) {
    for (const auto& f : d.breakpoints()) all.insert(f);
  }
  return {all.begin(), all.end()};
}

bool PeriodicHamiltonian::is_constant_near(double s) const {
  for (const auto& [k, d] : edge_drives_) {
    if (!d.is_constant_near(s)) return false;
  }
  for (const auto& [k, d] : onsite_drives_) {
    if (!d.is_constant_near(s)) return false;
  }
  return true;
}

ComplexMatrix PeriodicHamiltonian::evaluate_at(double t) const {
  ComplexMatrix m = skeleton_.matrix();
  for (const auto& [key, d] : edge_drives_) {
    const double v = d.value(t, period_);
    m(key.first, key.second) = v;
    m(key.second, key.first) = v;
  }
  for (const auto& [i, d] : onsite_drives_) m(i, i) = d.value(t, period_);
  return m;
}

ComplexMatrix PeriodicHamiltonian::integral(double t) const {
  ComplexMatrix m = skeleton_.matrix() * t;
  for (const auto& [key, d] : edge_drives_) {
    const double v = d.integral(t, period_);
    m(key.first, key.second) = v;
    m(key.second, key.first) = v;
  }
  for (const auto& [i, d] : onsite_drives_) m(i, i) = d.integral(t, period_);
  return m;
}

ComplexMatrix PeriodicHamiltonian::fourier_coefficient(int l) const {
  ComplexMatrix m = l == 0 ? skeleton_.matrix() : ComplexMatrix::Zero(dim(), dim());
  for (const auto& [key, d] : edge_drives_) {
    const Complex c = d.fourier_coefficient(l);
    m(key.first, key.second) = c;
    m(key.second, key.first) = c;
  }
  for (const auto& [i, d] : onsite_drives_) m(i, i) = d.fourier_coefficient(l);
  return m;
}

std::vector<ComplexMatrix> PeriodicHamiltonian::fourier_coefficients(int l_max) const {
  if (l_max < 0) throw Error(ErrorCode::kInvalidArgument, "l_max must be >= 0");
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(2 * l_max + 1));
  for (int l = -l_max; l <= l_max; ++l) out.push_back(fourier_coefficient(l));
  return out;
}

double h_max(const PeriodicHamiltonian& h, const NumericsSettings& settings) {
  const auto bps = h.breakpoints();
  const double period = h.period();
  double best = 0.0;
  for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
    const double mid = 0.5 * (bps[k].value() + bps[k + 1].value());
    best = std::max(best, operator_norm(h.evaluate_at(mid * period)));
  }
  if (h.is_piecewise_constant()) return best;
  const int n = std::max(1, settings.h_max_grid);
  for (int k = 0; k < n; ++k) {
    best = std::max(best, operator_norm(h.evaluate_at(period * k / n)));
  }
  return best;
}

}  // namespace floquet_walk
