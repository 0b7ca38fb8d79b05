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

#include "smqsl/dynamics.hpp"
#include "smqsl/entropy.hpp"

namespace smqsl {

enum class TrivialCause { None, InvalidParams, WeightDivergence, ZeroBound };

/// One (q, z, tau) cell: entropy change, integrated bound, speed-limit time
/// and tightness. Trivial cells (invalid parameters, divergent weight or a
/// vanishing bound) report tau_qsl = 0 and varsigma = 1.
struct QslReport {
  double q = 0.0;
  double z = 0.0;
  double tau = 0.0;
  double delta_s = 0.0;
  double gamma = 0.0;
  double tau_qsl = 0.0;
  double varsigma = 1.0;
  bool trivial = false;
  TrivialCause cause = TrivialCause::None;
  bool weakly_conditioned = false;
};

/// Composite-trapezoid quadrature of g_q[lambda(t)] w(t) with one Richardson
/// refinement when the interval count is even.
struct WeightedIntegral {
  double value = 0.0;
  double refine_delta = 0.0;  // |T(h) - T(2h)| / T(h)
  bool trivial = false;       // some lambda at or below the weight floor
  bool weakly_conditioned = false;
};

WeightedIntegral weighted_speed_integral(const std::vector<double>& lambda,
                                         const std::vector<double>& weight,
                                         double h, double q);

/// Integral of g_q[lambda_min(rho_t)] ||d rho/dt||_1 over the trajectory;
/// +infinity if the weight diverged somewhere.
double integrated_bound(const Trajectory& traj, double q);

/// Core evaluator: Gamma = prefactor * integral(g_q[lambda] * weight) and
/// the derived report fields.
QslReport bound_report(const Trajectory& traj, const EntropyParams& params,
                       double prefactor, const std::vector<double>& weight);

/// Generic entropy speed limit over the trajectory's own Schatten speeds.
QslReport qsl_time(const Trajectory& traj, const EntropyParams& params);

/// Kraus-channel bound: Gamma = 2 integral(g_q sum_l ||V_l rho0 dV_l^dag||_1).
QslReport cptp_qsl(const KrausChannel& channel, const DensityMatrix& rho0,
                   const EntropyParams& params, double tau, int steps);

/// Non-Hermitian bound with the constant speed cap
/// 2 (||H_Re||_inf + ||Y||_1 + ||Y||_inf); `refined` swaps ||H_Re||_inf for
/// sqrt(Var(H_Re)) at the initial state.
QslReport nh_qsl(const NonHermitianModel& model, const DensityMatrix& rho0,
                 const EntropyParams& params, double tau, bool refined,
                 int steps);

/// Reduced-dynamics bound: Gamma = 2 sqrt(Var(H)) integral(g_q[lambda^A]).
QslReport manybody_qsl(const BipartiteModel& model, const DensityMatrix& rho0,
                       Subsystem keep, const EntropyParams& params, double tau,
                       int steps);

/// Per-node margins |dS/dt| - g_q[lambda] ||d rho/dt||_1 with the entropy
/// derivative taken by finite differences; nonpositive up to O(h^2).
std::vector<double> entropy_rate_bound_check(const Trajectory& traj,
                                             const EntropyParams& params);

/// How z is tied to the q axis in a sweep: the Renyi line, the Tsallis line,
/// or a fixed z across all q.
struct ZSpec {
  enum class Mode { Renyi, Tsallis, FixedZ };
  Mode mode = Mode::Renyi;
  double z = 0.0;

  static ZSpec parse(const std::string& text);
  EntropyParams params_for(double q) const;
  std::string label() const;
};

struct GridCell {
  QslReport report;
  double varsigma_norm = 0.0;
};

/// Cell matrix over a (q, tau) grid, q-major. varsigma_norm rescales the
/// relative errors to [0, 1] over the grid's min/max.
struct GridReport {
  std::vector<double> q_values;
  std::vector<double> tau_values;
  ZSpec zspec;
  std::vector<GridCell> cells;

  const GridCell& at(int iq, int itau) const {
    return cells[static_cast<size_t>(iq) * tau_values.size() + itau];
  }
  GridCell& at(int iq, int itau) {
    return cells[static_cast<size_t>(iq) * tau_values.size() + itau];
  }
};

/// Fills varsigma_norm from the grid-wide min/max of varsigma.
void normalize_grid_errors(GridReport& grid);

}  // namespace smqsl
