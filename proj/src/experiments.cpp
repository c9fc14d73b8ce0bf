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

#include "floquet_walk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <thread>

#include "floquet_walk/analysis.hpp"
#include "floquet_walk/csv.hpp"
#include "floquet_walk/error.hpp"
#include "floquet_walk/magnus.hpp"
#include "floquet_walk/propagate.hpp"
#include "floquet_walk/protocols.hpp"
#include "json_util.hpp"
#include "parallel.hpp"

#ifndef FLOQUET_WALK_VERSION
#define FLOQUET_WALK_VERSION "unknown"
#endif

namespace floquet_walk {

namespace {

using detail::config_error;
using detail::Json;

constexpr double kPi = std::numbers::pi;

// Reads kind-specific parameters, filling defaults into `resolved` so the
// manifest records exactly what ran.
class Params {
 public:
  Params(const Json& j, std::initializer_list<std::string_view> allowed, std::string where)
      : source_(j), where_(std::move(where)) {
    detail::check_keys(source_, allowed, where_);
  }

  double number(const std::string& key, double fallback) {
    const double v = detail::get_number_or(source_, key, fallback, where_);
    if (!std::isfinite(v)) config_error(field(key), "must be finite");
    resolved[key] = v;
    return v;
  }

  double positive(const std::string& key, double fallback) {
    const double v = number(key, fallback);
    if (!(v > 0.0)) config_error(field(key), "must be positive");
    return v;
  }

  int integer(const std::string& key, int fallback, int min_value) {
    const long long v = detail::get_integer_or(source_, key, fallback, where_);
    if (v < min_value || v > 1'000'000) {
      config_error(field(key), "must be an integer >= " + std::to_string(min_value));
    }
    resolved[key] = v;
    return static_cast<int>(v);
  }

  std::string choice(const std::string& key, const std::string& fallback,
                     std::initializer_list<std::string_view> options) {
    std::string v = fallback;
    if (source_.contains(key)) v = detail::get_string(source_, key, where_);
    if (std::find(options.begin(), options.end(), v) == options.end()) {
      config_error(field(key), "unsupported value '" + v + "'");
    }
    resolved[key] = v;
    return v;
  }

  std::vector<double> positive_list(const std::string& key, std::vector<double> fallback) {
    if (source_.contains(key)) {
      const Json& arr = source_.at(key);
      if (!arr.is_array() || arr.empty()) config_error(field(key), "expected a non-empty array");
      fallback.clear();
      for (const auto& v : arr) {
        if (!v.is_number() || !(v.get<double>() > 0.0)) {
          config_error(field(key), "entries must be positive numbers");
        }
        fallback.push_back(v.get<double>());
      }
    }
    resolved[key] = fallback;
    return fallback;
  }

  std::vector<int> integer_list(const std::string& key, std::vector<int> fallback) {
    if (source_.contains(key)) {
      const Json& arr = source_.at(key);
      if (!arr.is_array()) config_error(field(key), "expected an array");
      fallback.clear();
      for (const auto& v : arr) {
        if (!v.is_number_integer()) config_error(field(key), "entries must be integers");
        fallback.push_back(v.get<int>());
      }
    }
    resolved[key] = fallback;
    return fallback;
  }

  std::string field(const std::string& key) const { return where_ + "." + key; }

  Json resolved = Json::object();

 private:
  Json source_;
  std::string where_;
};

struct Run {
  std::string kind;
  NumericsSettings settings;
  int steps = 0;  // 0: converge adaptively
  int threads = 1;
  std::filesystem::path out_dir;
  Json parameters = Json::object();
  Json numerics = Json::object();
  Json results = Json::object();
  std::vector<std::string> notes;
  std::vector<std::filesystem::path> files;

  // Created on first write so a rejected config leaves no trace.
  void ensure_out_dir() const {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorCode::kIoFailure, "cannot create " + out_dir.string() + ": " + ec.message());
  }

  void write(const std::string& name, const CsvTable& table) {
    ensure_out_dir();
    const auto path = out_dir / name;
    emit_csv(table, path);
    files.push_back(path);
  }

  // Steps actually used for one propagator.
  ConvergedPropagator propagator(const PeriodicHamiltonian& h, int initial = 200) const {
    if (h.is_piecewise_constant()) return {period_propagator(h, 1, settings), 1};
    if (steps > 0) return {period_propagator(h, steps, settings), steps};
    try {
      return period_propagator_converged(h, initial, settings);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kConvergenceCap) throw;
      throw Error(e.code(), std::string(e.what()) +
                                "; set numerics.steps_per_period or raise numerics.convergence_tol");
    }
  }
};

void parse_numerics(const Json& j, Run& run) {
  const std::string where = "numerics";
  Params p(j,
           {"steps_per_period", "hermitian_tol", "unitary_tol", "branch_margin", "convergence_tol",
            "max_steps_per_period", "phase_quadrature_points", "symmetry_tau_grid", "h_max_grid"},
           where);
  NumericsSettings& s = run.settings;
  s.hermitian_tol = p.positive("hermitian_tol", s.hermitian_tol);
  s.unitary_tol = p.positive("unitary_tol", s.unitary_tol);
  s.branch_margin = p.positive("branch_margin", s.branch_margin);
  s.convergence_tol = p.positive("convergence_tol", s.convergence_tol);
  s.max_steps_per_period = p.integer("max_steps_per_period", s.max_steps_per_period, 1);
  s.phase_quadrature_points = p.integer("phase_quadrature_points", s.phase_quadrature_points, 2);
  s.symmetry_tau_grid = p.integer("symmetry_tau_grid", s.symmetry_tau_grid, 100);
  s.h_max_grid = p.integer("h_max_grid", s.h_max_grid, 1);
  run.numerics = p.resolved;
  if (j.contains("steps_per_period")) {
    run.steps = p.integer("steps_per_period", 0, 1);
    run.numerics["steps_per_period"] = run.steps;
  } else {
    run.numerics["steps_per_period"] = "adaptive";
  }
}

std::vector<double> stroboscopic_times(double period, int periods) {
  std::vector<double> t;
  for (int k = 0; k <= periods; ++k) t.push_back(k * period);
  return t;
}

std::vector<double> column(const EvolutionRecord& rec, int site) {
  std::vector<double> out;
  for (const auto& p : rec.probabilities) out.push_back(p(site));
  return out;
}

double circular_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  return std::min(d, 2.0 * kPi - d);
}

double first_peak(const std::vector<double>& p) {
  for (std::size_t k = 1; k + 1 < p.size(); ++k) {
    if (p[k] >= p[k - 1] && p[k] >= p[k + 1] && p[k] > 1e-3) return p[k];
  }
  return *std::max_element(p.begin(), p.end());
}

// ---------------------------------------------------------------------------

void triangle_sweep(const Json& j, Run& run) {
  Params p(j, {"kind", "coupling", "periods", "amplitude_min", "amplitude_max", "amplitude_points"},
           "parameters");
  const DriveKind kind = drive_kind_from_string(p.choice("kind", "step", {"step", "sine"}));
  const double coupling = p.positive("coupling", 1.0);
  const auto periods = p.positive_list("periods", {0.3, 0.5});
  const double a_min = p.number("amplitude_min", 0.0);
  const double a_max = p.number("amplitude_max", 100.0);
  const int points = p.integer("amplitude_points", 50, 1);
  if (a_max < a_min) config_error(p.field("amplitude_max"), "must be >= amplitude_min");
  run.parameters = p.resolved;

  struct Row {
    double a, t, phi_closed, phi_numeric, abs_closed, abs_numeric;
    int steps;
  };
  std::vector<std::pair<double, double>> grid;
  for (double t : periods) {
    for (int k = 0; k < points; ++k) {
      grid.emplace_back(points == 1 ? a_min : a_min + (a_max - a_min) * k / (points - 1), t);
    }
  }
  const auto rows = detail::parallel_map(grid.size(), run.threads, [&](std::size_t i) {
    const auto [a, t] = grid[i];
    const PeriodicHamiltonian h = triangle_hamiltonian(kind, coupling, a, t);
    const ConvergedPropagator u = run.propagator(h);
    const ComplexMatrix heff = logm_unitary(u.unitary, run.settings) / t;
    const Complex closed = triangle_effective_coupling(kind, coupling, a, t);
    return Row{a, t, effective_phase(closed), loop_phase(heff, 0, 1, 2), std::abs(closed),
               std::abs(heff(0, 1)), u.steps_per_period};
  });

  CsvTable table;
  std::vector<double> cols[6];
  double worst_phase = 0.0, worst_abs = 0.0;
  int max_steps = 0;
  for (const auto& r : rows) {
    cols[0].push_back(r.a);
    cols[1].push_back(r.t);
    cols[2].push_back(r.phi_closed);
    cols[3].push_back(r.phi_numeric);
    cols[4].push_back(r.abs_closed);
    cols[5].push_back(r.abs_numeric);
    worst_phase = std::max(worst_phase, circular_distance(r.phi_closed, r.phi_numeric));
    worst_abs = std::max(worst_abs, std::abs(r.abs_closed - r.abs_numeric));
    max_steps = std::max(max_steps, r.steps);
  }
  const char* names[6] = {"A", "T", "phi_closed", "phi_numeric", "absJ_closed", "absJ_numeric"};
  for (int c = 0; c < 6; ++c) table.add_column(names[c], cols[c]);
  run.write("triangle_sweep.csv", table);
  run.results["max_phase_difference"] = worst_phase;
  run.results["max_abs_coupling_difference"] = worst_abs;
  run.results["max_steps_per_period_used"] = max_steps;
}

void switch_experiment(const Json& j, Run& run) {
  Params p(j, {"amplitude", "period", "arm_length", "t_max"}, "parameters");
  const double amplitude = p.number("amplitude", 63.12);
  const double period = p.positive("period", 0.2);
  const int arm = p.integer("arm_length", 2, 1);
  const double t_max = p.positive("t_max", 4.0);
  run.parameters = p.resolved;

  const SwitchProtocol sw = build_switch(amplitude, period, arm, run.settings);
  const int m = static_cast<int>(std::lround(t_max / period));
  const StateVector psi = basis_state(sw.drive.dim(), sw.source);
  const ConvergedPropagator u = run.propagator(sw.drive);
  const EvolutionRecord real = stroboscopic_evolve(u.unitary, period, psi, m);
  const EvolutionRecord eff =
      evolve_static(sw.effective.matrix, psi, stroboscopic_times(period, m), run.settings);

  std::vector<double> tv;
  for (std::size_t k = 0; k < real.probabilities.size(); ++k) {
    tv.push_back(total_variation(real.probabilities[k], eff.probabilities[k]));
  }
  CsvTable table;
  table.add_column("t", real.times);
  table.add_column("P_U_real", column(real, sw.up));
  table.add_column("P_D_real", column(real, sw.down));
  table.add_column("P_U_effective", column(eff, sw.up));
  table.add_column("P_D_effective", column(eff, sw.down));
  table.add_column("total_variation", tv);
  run.write("switch.csv", table);

  const auto pu = column(eff, sw.up);
  const auto pd = column(eff, sw.down);
  const double hmax = h_max(sw.drive, run.settings);
  run.results["effective_phase"] = loop_phase(sw.effective.matrix, 1, 2, 3);
  run.results["max_P_U_effective"] = *std::max_element(pu.begin(), pu.end());
  run.results["max_P_D_effective"] = *std::max_element(pd.begin(), pd.end());
  run.results["max_total_variation"] = *std::max_element(tv.begin(), tv.end());
  run.results["h_max"] = hmax;
  run.results["period_bound_order0_eps0.1"] = period_bound(0.1, t_max, hmax, 0);
  run.results["labels"] = sw.labels;
  run.notes.emplace_back(period_bound_note());
}

void chain_experiment(const Json& j, Run& run) {
  Params p(j, {"n_triangles", "amplitude", "period", "t_max"}, "parameters");
  const int n = p.integer("n_triangles", 3, 1);
  const double amplitude = p.number("amplitude", 63.12);
  const double period = p.positive("period", 0.2);
  const double t_max = p.positive("t_max", 15.0);
  run.parameters = p.resolved;

  const ChainProtocol chain = build_triangle_chain(n, amplitude, period, run.settings);
  const int m = static_cast<int>(std::lround(t_max / period));
  const StateVector psi = basis_state(chain.drive.dim(), chain.source);
  const auto times = stroboscopic_times(period, m);
  const EvolutionRecord real = stroboscopic_evolve(run.propagator(chain.drive).unitary, period, psi, m);
  const EvolutionRecord eff = evolve_static(chain.effective.matrix, psi, times, run.settings);
  const EvolutionRecord flat =
      evolve_static(triangle_chain_target(n, 0.0).matrix(), psi, times, run.settings);

  CsvTable table;
  table.add_column("t", times);
  table.add_column("P_E_real", column(real, chain.sink));
  table.add_column("P_E_effective", column(eff, chain.sink));
  table.add_column("P_E_phi0", column(flat, chain.sink));
  run.write("chain.csv", table);
  run.results["effective_phase"] = loop_phase(chain.effective.matrix, 0, 2, 1);
  run.results["first_peak_effective"] = first_peak(column(eff, chain.sink));
  run.results["first_peak_phi0"] = first_peak(column(flat, chain.sink));
  run.results["labels"] = chain.labels;
}

void nnn_1d(const Json& j, Run& run) {
  Params p(j, {"n", "start_site", "k1", "k2_abs", "period", "t_evol"}, "parameters");
  const int n = p.integer("n", 50, 3);
  const int start = p.integer("start_site", 24, 0);
  const double k1 = p.number("k1", 1.0);
  const double k2 = p.number("k2_abs", 0.2);
  const double period = p.positive("period", 0.5);
  const double t_evol = p.positive("t_evol", 7.0);
  if (start >= n) config_error(p.field("start_site"), "must be < n");
  if (k2 < 0.0) config_error(p.field("k2_abs"), "must be >= 0");
  run.parameters = p.resolved;

  const SimulationPlan plan = build_1d_nnn_protocol(n, k1, k2, period, run.settings);
  const int m = static_cast<int>(std::ceil(plan.simulation_time(t_evol) / period - 1e-9));
  const double matched = m * period * plan.scale;
  const StateVector psi = basis_state(n, start);
  // The plan's step count is the default here; numerics.steps_per_period overrides it.
  const int steps = run.steps > 0 ? run.steps : plan.steps_per_period;
  const ConvergedPropagator u{period_propagator(plan.drive, steps, run.settings), steps};
  const double step_change =
      operator_norm(period_propagator(plan.drive, 2 * steps, run.settings) - u.unitary);
  const EvolutionRecord proto = stroboscopic_evolve(u.unitary, period, psi, m);
  const RealVector p_proto = proto.probabilities.back();
  const HermitianSpectrum eff(plan.target.matrix(), run.settings);
  const RealVector p_eff = site_probabilities(eff.evolve(psi, matched));
  const RealVector p_eff_literal = site_probabilities(eff.evolve(psi, t_evol));
  const HermitianSpectrum ref(chain_with_nnn(n, k1, k2).matrix(), run.settings);
  const RealVector p_ref = site_probabilities(ref.evolve(psi, matched));

  CsvTable table;
  std::vector<double> site, a, b, c;
  for (int s = 0; s < n; ++s) {
    site.push_back(s);
    a.push_back(p_eff(s));
    b.push_back(p_proto(s));
    c.push_back(p_ref(s));
  }
  table.add_column("site", site);
  table.add_column("p_effective", a);
  table.add_column("p_protocol", b);
  table.add_column("p_real_reference", c);
  run.write("nnn_1d.csv", table);

  Eigen::Index peak = 0;
  p_eff.maxCoeff(&peak);
  run.results["periods"] = m;
  run.results["steps_per_period_used"] = u.steps_per_period;
  run.results["step_doubling_change"] = step_change;
  run.results["scale"] = plan.scale;
  run.results["simulation_time"] = m * period;
  run.results["matched_effective_time"] = matched;
  run.results["total_variation_protocol_effective"] = total_variation(p_proto, p_eff);
  run.results["total_variation_protocol_effective_at_t_evol"] = total_variation(p_proto, p_eff_literal);
  run.results["reflection_asymmetry_effective"] = reflection_asymmetry(p_eff, start);
  run.results["reflection_asymmetry_protocol"] = reflection_asymmetry(p_proto, start);
  run.results["reflection_asymmetry_real_reference"] = reflection_asymmetry(p_ref, start);
  run.results["effective_peak_site"] = static_cast<int>(peak);
}

void star_cbg(const Json& j, Run& run) {
  Params p(j, {"n", "partition", "j1", "period"}, "parameters");
  const int n = p.integer("n", 7, 2);
  const auto partition = p.integer_list("partition", {1, 2, 4, 6});
  const double j1 = p.number("j1", 1.0);
  const double period = p.positive("period", 0.1);
  run.parameters = p.resolved;

  SimulationPlan plan = [&] {
    try {
      return build_star_cbg_protocol(n, partition, j1, period, run.settings);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidPartition) config_error(p.field("partition"), e.what());
      throw;
    }
  }();
  const ComplexMatrix first = heff_order1_fourier(plan.drive, 1).matrix;
  const ComplexMatrix target = plan.target.matrix();
  CsvTable table;
  std::vector<double> rows, cols, hr, hi, tr, ti;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      rows.push_back(a);
      cols.push_back(b);
      hr.push_back(first(a, b).real());
      hi.push_back(first(a, b).imag());
      tr.push_back(target(a, b).real());
      ti.push_back(target(a, b).imag());
    }
  }
  table.add_column("row", rows);
  table.add_column("col", cols);
  table.add_column("heff1_re", hr);
  table.add_column("heff1_im", hi);
  table.add_column("target_re", tr);
  table.add_column("target_im", ti);
  run.write("star_cbg.csv", table);

  const auto reduction = gauge_real_reducible(plan.target);
  run.results["max_deviation_from_target"] = (first - target).cwiseAbs().maxCoeff();
  run.results["max_centre_entry"] =
      std::max(first.row(0).cwiseAbs().maxCoeff(), first.col(0).cwiseAbs().maxCoeff());
  run.results["order0_norm"] = operator_norm(heff_order0(plan.drive).matrix);
  run.results["gauge_real_reducible"] = reduction.reducible;
  run.results["trs_asymmetry_target"] = trs_asymmetry(plan.target, default_trs_grid(plan.target));
}

void waveguides(const Json& j, Run& run) {
  Params p(j, {"n", "kappa", "gamma", "j0", "j1", "omega", "z_max", "z_points"}, "parameters");
  const int n = p.integer("n", 5, 2);
  const double kappa = p.positive("kappa", 4.0);
  const double gamma = p.positive("gamma", 1.0);
  const double j0 = p.number("j0", 1.0);
  const double j1 = p.number("j1", 0.1);
  const double omega = p.positive("omega", 2.0 * kPi);
  const double z_max = p.positive("z_max", 2.0);
  const int z_points = p.integer("z_points", 401, 2);
  run.parameters = p.resolved;

  std::vector<double> z;
  for (int k = 0; k < z_points; ++k) z.push_back(z_max * k / (z_points - 1));
  const WaveguideLayout layout = waveguide_positions(n, kappa, gamma, j0, j1, omega, z);
  CsvTable table;
  table.add_column("z", z);
  for (int w = 0; w < n; ++w) table.add_column("x" + std::to_string(w + 1), layout.positions[static_cast<std::size_t>(w)]);
  run.write("waveguides.csv", table);

  double worst = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    for (int e = 1; e < n; ++e) {
      const double rebuilt = evanescent_coupling(kappa, gamma, layout.positions[static_cast<std::size_t>(e - 1)][k],
                                                 layout.positions[static_cast<std::size_t>(e)][k]);
      worst = std::max(worst, std::abs(rebuilt - nnn_protocol_coupling(e, z[k], j0, j1, omega)));
    }
  }
  run.results["max_coupling_roundtrip_error"] = worst;
}

void error_scaling(const Json& j, Run& run) {
  Params p(j, {"system", "periods", "amplitude", "coupling", "n", "j0", "j1"}, "parameters");
  const std::string system = p.choice("system", "triangle", {"triangle", "nnn-1d"});
  const auto periods = p.positive_list("periods", {0.4, 0.2, 0.1, 0.05, 0.025});
  double amplitude = 0.0, coupling = 0.0, j0 = 0.0, j1 = 0.0;
  int n = 0;
  if (system == "triangle") {
    amplitude = p.number("amplitude", 5.0);
    coupling = p.positive("coupling", 1.0);
  } else {
    n = p.integer("n", 5, 3);
    j0 = p.number("j0", 1.0);
    j1 = p.number("j1", 1.0);
  }
  if (periods.size() < 2) config_error(p.field("periods"), "need at least two periods");
  run.parameters = p.resolved;
  // Smooth drives default to the step cap; the 1e-9 halving target is out of reach at large T.
  int fixed_steps = run.steps;
  if (system == "nnn-1d" && fixed_steps == 0) {
    fixed_steps = run.settings.max_steps_per_period;
    run.numerics["steps_per_period"] = fixed_steps;
  }

  struct Row {
    double e0, e1;
    int steps;
  };
  const auto rows = detail::parallel_map(periods.size(), run.threads, [&](std::size_t i) {
    const double t = periods[i];
    const PeriodicHamiltonian h = system == "triangle"
                                      ? triangle_hamiltonian(DriveKind::kStep, coupling, amplitude, t)
                                      : nnn_drive(n, j0, j1, t);
    const ConvergedPropagator u =
        fixed_steps > 0 && !h.is_piecewise_constant()
            ? ConvergedPropagator{period_propagator(h, fixed_steps, run.settings), fixed_steps}
            : run.propagator(h);
    const ComplexMatrix e0 = expm_hermitian(heff_order0(h).matrix, t, run.settings);
    const ComplexMatrix e1 = expm_hermitian(heff_order01(h).matrix, t, run.settings);
    return Row{operator_norm(u.unitary - e0), operator_norm(u.unitary - e1), u.steps_per_period};
  });
  std::vector<double> e0, e1;
  int max_steps = 0;
  for (const auto& r : rows) {
    e0.push_back(r.e0);
    e1.push_back(r.e1);
    max_steps = std::max(max_steps, r.steps);
  }
  CsvTable table;
  table.add_column("T", periods);
  table.add_column("error_order0", e0);
  table.add_column("error_order1", e1);
  run.write("error_scaling.csv", table);
  run.results["slope_order0"] = loglog_slope(periods, e0);
  run.results["slope_order1"] = loglog_slope(periods, e1);
  run.results["max_steps_per_period_used"] = max_steps;
}

using Runner = std::function<void(const Json&, Run&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"triangle-sweep", triangle_sweep}, {"switch", switch_experiment},
      {"chain", chain_experiment},        {"nnn-1d", nnn_1d},
      {"star-cbg", star_cbg},             {"waveguides", waveguides},
      {"error-scaling", error_scaling},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kinds{"triangle-sweep", "switch",     "chain",
                                              "nnn-1d",         "star-cbg",   "waveguides",
                                              "error-scaling"};
  return kinds;
}

int worker_threads() {
  if (const char* env = std::getenv("FLOQUET_WALK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

const char* period_bound_note() {
  return "period bound uses an order-of-magnitude constant of 1; it is an estimate and in "
         "practice too conservative: larger periods usually still track the effective model";
}

ExperimentOutput run_experiment(const std::string& kind, std::string_view config_text,
                                const std::filesystem::path& out_dir) {
  auto runner = runners().find(kind);
  if (runner == runners().end()) {
    throw Error(ErrorCode::kConfigInvalid, "unknown experiment kind '" + kind + "'");
  }
  Json config;
  try {
    config = Json::parse(config_text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kConfigInvalid, std::string("malformed JSON config: ") + e.what());
  }
  detail::check_keys(config, {"experiment", "parameters", "numerics", "output"}, "config");
  if (config.contains("experiment") && detail::get_string(config, "experiment", "config") != kind) {
    config_error("config.experiment", "does not match requested experiment '" + kind + "'");
  }

  Run run;
  run.kind = kind;
  run.threads = worker_threads();
  parse_numerics(config.value("numerics", Json::object()), run);
  const Json output = config.value("output", Json::object());
  detail::check_keys(output, {"directory"}, "output");
  run.out_dir = out_dir.empty()
                    ? std::filesystem::path(output.contains("directory")
                                                ? detail::get_string(output, "directory", "output")
                                                : ".")
                    : out_dir;
  const Json parameters = config.value("parameters", Json::object());
  detail::require_object(parameters, "parameters");

  try {
    runner->second(parameters, run);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfigInvalid || e.code() == ErrorCode::kIoFailure) throw;
    if (!is_numerical(e.code())) {
      // Domain errors from the builders mean the parameters were unusable.
      throw Error(ErrorCode::kConfigInvalid, kind + ": " + e.what());
    }
    throw Error(e.code(), kind + ": " + e.what());
  }

  Json manifest = {
      {"experiment", kind},
      {"library_version", FLOQUET_WALK_VERSION},
      {"parameters", run.parameters},
      {"numerics", run.numerics},
      {"results", run.results},
      {"notes", run.notes},
  };
  Json outputs = Json::array();
  for (const auto& f : run.files) outputs.push_back(f.filename().string());
  manifest["outputs"] = outputs;
  run.ensure_out_dir();
  const auto manifest_path = run.out_dir / "run_manifest.json";
  std::ofstream file(manifest_path, std::ios::binary | std::ios::trunc);
  const std::string text = manifest.dump(2) + "\n";
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw Error(ErrorCode::kIoFailure, "failed writing " + manifest_path.string());
  run.files.push_back(manifest_path);
  return {run.files, run.notes};
}

}  // namespace floquet_walk
