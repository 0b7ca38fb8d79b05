// Copyright 2026 The smqsl Authors
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

#include "smqsl/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "smqsl/verification.hpp"

namespace smqsl {

namespace {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_atomically(const std::string& path, const std::string& content) {
  if (path.empty()) {
    throw std::invalid_argument("csv: empty output path");
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("csv: cannot open '" + tmp + "' for writing");
    }
    out << content;
    if (!out.good()) {
      throw std::runtime_error("csv: write to '" + tmp + "' failed");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("csv: cannot move temp file onto '" + path + "'");
  }
}

int steps_for(double tau, double step_hint) {
  return TimeGrid::with_step(tau, step_hint).steps;
}

// Fills one q-column of cells for a fixed trajectory and bound weights.
void fill_cells(GridReport& grid, int itau, const Trajectory& traj,
                double prefactor, const std::vector<double>& weight) {
  for (size_t iq = 0; iq < grid.q_values.size(); ++iq) {
    const EntropyParams params = grid.zspec.params_for(grid.q_values[iq]);
    grid.at(static_cast<int>(iq), itau).report =
        bound_report(traj, params, prefactor, weight);
  }
}

GridReport make_grid(const ScenarioConfig& config) {
  GridReport grid;
  grid.q_values = config.q_grid;
  grid.tau_values = config.tau_grid;
  grid.zspec = config.entropy;
  grid.cells.resize(config.q_grid.size() * config.tau_grid.size());
  return grid;
}

GridReport ad_grid(const ScenarioConfig& config) {
  const BlochVector bloch(config.r, config.theta, config.phi);
  const DensityMatrix rho0 = DensityMatrix::from_bloch(bloch);
  const KrausChannel channel = amplitude_damping_channel(config.gamma);
  const double step = config.grid_step > 0.0 ? config.grid_step
                                             : default_grid_step(config);
  GridReport grid = make_grid(config);
  for (size_t itau = 0; itau < config.tau_grid.size(); ++itau) {
    const double tau = config.tau_grid[itau];
    const TimeGrid tg = TimeGrid::uniform(tau, steps_for(tau, step));
    const Trajectory traj = amplitude_damping(bloch, config.gamma, tg);
    std::vector<double> kraus_speed(traj.size());
    for (int k = 0; k < traj.size(); ++k) {
      kraus_speed[k] = ad_kraus_speed(bloch, config.gamma, traj.times[k]);
    }
    fill_cells(grid, static_cast<int>(itau), traj, 2.0, kraus_speed);
  }
  return grid;
}

GridReport pt_grid(const ScenarioConfig& config) {
  const BlochVector bloch(config.r, config.theta, config.phi);
  const DensityMatrix rho0 = DensityMatrix::from_bloch(bloch);
  const NonHermitianModel model = pt_symmetric_model(config.omega, config.eta);
  const double hre_term =
      config.refined ? std::sqrt(variance(rho0, Observable(model.h_re)))
                     : operator_norm(model.h_re);
  const double prefactor = 2.0 * (hre_term + trace_norm(model.upsilon_im) +
                                  operator_norm(model.upsilon_im));
  const double step = config.grid_step > 0.0 ? config.grid_step
                                             : default_grid_step(config);
  GridReport grid = make_grid(config);
  for (size_t itau = 0; itau < config.tau_grid.size(); ++itau) {
    const double tau = config.tau_grid[itau];
    const TimeGrid tg = TimeGrid::uniform(tau, steps_for(tau, step));
    const Trajectory traj = non_hermitian_evolution(model, rho0, tg);
    const std::vector<double> ones(traj.size(), 1.0);
    fill_cells(grid, static_cast<int>(itau), traj, prefactor, ones);
  }
  return grid;
}

GridReport xxz_grid(const ScenarioConfig& config) {
  const BipartiteModel model =
      xxz_bipartite(config.sites, config.coupling, config.anisotropy);
  const DensityMatrix rho0 = neel_mixed_state(config.sites, config.mix_p);
  const double prefactor =
      2.0 * std::sqrt(variance(rho0, Observable(model.h_sys)));
  const double step = config.grid_step > 0.0 ? config.grid_step
                                             : default_grid_step(config);
  GridReport grid = make_grid(config);
  for (size_t itau = 0; itau < config.tau_grid.size(); ++itau) {
    const double tau = config.tau_grid[itau];
    const TimeGrid tg = TimeGrid::uniform(tau, steps_for(tau, step));
    const Trajectory traj = bipartite_reduced(model, rho0, Subsystem::A, tg);
    const std::vector<double> ones(traj.size(), 1.0);
    fill_cells(grid, static_cast<int>(itau), traj, prefactor, ones);
  }
  return grid;
}

}  // namespace

std::vector<double> parse_grid_triple(const std::string& text) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char trailing = 0;
  const int matched = std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start,
                                  &stop, &step, &trailing);
  if (matched != 3) {
    throw std::invalid_argument("grid: expected start:stop:step, got '" +
                                text + "'");
  }
  if (!(step > 0.0)) {
    throw std::invalid_argument("grid: step must be positive in '" + text +
                                "'");
  }
  if (stop < start - 0.5 * step) {
    throw std::invalid_argument("grid: empty range in '" + text + "'");
  }
  const int count =
      static_cast<int>(std::floor((stop - start) / step + 0.5 + 1e-12));
  std::vector<double> values;
  values.reserve(count + 1);
  for (int k = 0; k <= count; ++k) {
    values.push_back(start + k * step);
  }
  return values;
}

double default_grid_step(const ScenarioConfig& config) {
  switch (config.kind) {
    case ScenarioKind::Ad:
    case ScenarioKind::AdDiagnostics:
      return 0.01 / config.gamma;
    case ScenarioKind::Pt: {
      const NonHermitianModel model =
          pt_symmetric_model(config.omega, config.eta);
      return std::min(0.01, 0.1 / operator_norm(model.h_sys));
    }
    case ScenarioKind::Xxz: {
      const Observable h =
          xxz_hamiltonian(config.sites, config.coupling, config.anisotropy);
      return std::min(0.01, 0.1 / operator_norm(h.matrix()));
    }
    case ScenarioKind::Verify:
      return 0.01;
  }
  return 0.01;
}

void validate_config(const ScenarioConfig& config) {
  if (config.kind == ScenarioKind::Verify) return;
  if (config.tau_grid.empty()) {
    throw std::invalid_argument("config: tau grid is empty");
  }
  for (size_t i = 1; i < config.tau_grid.size(); ++i) {
    if (!(config.tau_grid[i] > config.tau_grid[i - 1])) {
      throw std::invalid_argument("config: tau grid must increase");
    }
  }
  const bool needs_positive_tau = config.kind != ScenarioKind::AdDiagnostics;
  if (needs_positive_tau && !(config.tau_grid.front() > 0.0)) {
    throw std::invalid_argument("config: tau values must be positive");
  }
  if (config.kind != ScenarioKind::AdDiagnostics) {
    if (config.q_grid.empty()) {
      throw std::invalid_argument("config: q grid is empty");
    }
    for (size_t i = 0; i < config.q_grid.size(); ++i) {
      const double q = config.q_grid[i];
      if (!(q > 0.0 && q < 1.0)) {
        std::ostringstream msg;
        msg << "config: q value " << q << " outside (0, 1)";
        throw std::invalid_argument(msg.str());
      }
      if (i > 0 && !(q > config.q_grid[i - 1])) {
        throw std::invalid_argument("config: q grid must increase");
      }
    }
  }
  if (config.kind == ScenarioKind::Ad ||
      config.kind == ScenarioKind::AdDiagnostics) {
    if (!(config.gamma > 0.0)) {
      throw std::invalid_argument("config: gamma must be positive");
    }
  }
  if (config.kind == ScenarioKind::Xxz) {
    if (config.sites < 2 || config.sites > 6) {
      throw std::invalid_argument("config: L must lie in [2, 6]");
    }
    if (!(config.mix_p >= 0.0 && config.mix_p <= 1.0)) {
      throw std::invalid_argument("config: p must lie in [0, 1]");
    }
  }
  // Bloch parameters are validated by BlochVector itself.
  if (config.kind != ScenarioKind::Xxz) {
    BlochVector probe(config.r, config.theta, config.phi);
    (void)probe;
  }
}

GridReport run_grid_scenario(const ScenarioConfig& config) {
  validate_config(config);
  GridReport grid;
  switch (config.kind) {
    case ScenarioKind::Ad:
      grid = ad_grid(config);
      break;
    case ScenarioKind::Pt:
      grid = pt_grid(config);
      break;
    case ScenarioKind::Xxz:
      grid = xxz_grid(config);
      break;
    default:
      throw std::invalid_argument("run_grid_scenario: not a grid scenario");
  }
  normalize_grid_errors(grid);
  return grid;
}

std::vector<DiagnosticsRow> ad_diagnostics(const ScenarioConfig& config) {
  validate_config(config);
  const BlochVector bloch(config.r, config.theta, config.phi);
  const DensityMatrix rho0 = DensityMatrix::from_bloch(bloch);
  const KrausChannel channel = amplitude_damping_channel(config.gamma);
  std::vector<DiagnosticsRow> rows;
  rows.reserve(config.tau_grid.size());
  for (double t : config.tau_grid) {
    const DensityMatrix rho_t(apply_channel(channel, rho0.matrix(), t));
    DiagnosticsRow row;
    row.t = t;
    row.sx = real_expectation(rho_t, pauli_x());
    row.sz = real_expectation(rho_t, pauli_z());
    row.fidelity = fidelity(rho0, rho_t);
    row.lambda_min = rho_t.lambda_min();
    rows.push_back(row);
  }
  return rows;
}

void write_grid_csv(const std::string& path, const GridReport& grid) {
  std::ostringstream out;
  out << "# schema=1\n";
  out << "q,tau,delta_S,Gamma,tau_qsl,varsigma,varsigma_norm,trivial_flag\n";
  // Rows ordered by (q, tau); cells are stored q-major already.
  for (size_t iq = 0; iq < grid.q_values.size(); ++iq) {
    for (size_t itau = 0; itau < grid.tau_values.size(); ++itau) {
      const GridCell& cell =
          grid.at(static_cast<int>(iq), static_cast<int>(itau));
      const QslReport& rep = cell.report;
      out << format_value(grid.q_values[iq]) << ','
          << format_value(grid.tau_values[itau]) << ','
          << format_value(rep.delta_s) << ',' << format_value(rep.gamma)
          << ',' << format_value(rep.tau_qsl) << ','
          << format_value(rep.varsigma) << ','
          << format_value(cell.varsigma_norm) << ',' << (rep.trivial ? 1 : 0)
          << '\n';
    }
  }
  write_atomically(path, out.str());
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRow>& rows) {
  std::ostringstream out;
  out << "# schema=1\n";
  out << "t,sx,sz,fidelity,lambda_min\n";
  for (const DiagnosticsRow& row : rows) {
    out << format_value(row.t) << ',' << format_value(row.sx) << ','
        << format_value(row.sz) << ',' << format_value(row.fidelity) << ','
        << format_value(row.lambda_min) << '\n';
  }
  write_atomically(path, out.str());
}

int run_scenario(const ScenarioConfig& config) {
  if (config.kind == ScenarioKind::Verify) {
    const auto results = run_acceptance_criteria();
    return print_criteria_table(results, std::cout) ? 0 : 1;
  }
  if (config.kind == ScenarioKind::AdDiagnostics) {
    write_diagnostics_csv(config.out_path, ad_diagnostics(config));
    return 0;
  }
  write_grid_csv(config.out_path, run_grid_scenario(config));
  return 0;
}

}  // namespace smqsl
