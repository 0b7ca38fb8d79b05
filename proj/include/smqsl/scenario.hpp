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

#pragma once

#include <string>
#include <vector>

#include "smqsl/qsl.hpp"

namespace smqsl {

enum class ScenarioKind { Ad, Pt, Xxz, AdDiagnostics, Verify };

/// One CSV-producing run: a dynamics model, an entropy spec and the
/// (q, tau) sweep axes.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::Ad;

  // Qubit initial state.
  double r = 0.5;
  double theta = 0.0;
  double phi = 0.0;

  double gamma = 1.0;  // amplitude damping rate

  double omega = 1.0;  // non-Hermitian coupling
  double eta = 2.0;    // non-Hermitian dissipation
  bool refined = false;

  int sites = 2;  // XXZ chain
  double coupling = 0.5;
  double anisotropy = 1.0;
  double mix_p = 0.25;

  ZSpec entropy;
  std::vector<double> q_grid;
  std::vector<double> tau_grid;
  std::string out_path;
  double grid_step = 0.0;  // 0 selects the per-model default
};

/// "start:stop:step" with inclusive start and stop admitted within a
/// half-step tolerance.
std::vector<double> parse_grid_triple(const std::string& text);

/// Per-model default step: min(0.01, 0.1/||H||_inf) scaled by the model rate.
double default_grid_step(const ScenarioConfig& config);

void validate_config(const ScenarioConfig& config);

/// Sweeps the configured grid. Cells with invalid (q, z) are emitted with
/// the trivial flag set instead of being skipped.
GridReport run_grid_scenario(const ScenarioConfig& config);

struct DiagnosticsRow {
  double t = 0.0;
  double sx = 0.0;
  double sz = 0.0;
  double fidelity = 0.0;
  double lambda_min = 0.0;
};

std::vector<DiagnosticsRow> ad_diagnostics(const ScenarioConfig& config);

/// CSV emission: "# schema=1" header line, fixed column order, 12
/// significant digits, LF endings, atomic replace via temp file + rename.
void write_grid_csv(const std::string& path, const GridReport& grid);
void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRow>& rows);

/// Runs the configured scenario end to end, writing the CSV for data
/// scenarios. Returns a process exit status.
int run_scenario(const ScenarioConfig& config);

}  // namespace smqsl
