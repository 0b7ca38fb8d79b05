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

#include <array>
#include <functional>
#include <vector>

#include "smqsl/matrix_core.hpp"

namespace smqsl {

inline constexpr int kMaxGridSteps = 100000;

/// Uniform time grid t_k = tau * k / steps, k = 0..steps.
struct TimeGrid {
  double tau = 1.0;
  int steps = 100;

  static TimeGrid uniform(double tau, int steps);
  /// Rounds tau/step_hint up to an even interval count, capped at
  /// kMaxGridSteps (kept even so Richardson refinement applies).
  static TimeGrid with_step(double tau, double step_hint);

  double h() const { return tau / steps; }
  int nodes() const { return steps + 1; }
  double t(int k) const { return tau * k / steps; }
};

enum class SpeedProvenance { Analytic, FiniteDifference };

/// States, Schatten speeds ||d rho/dt||_1 and minimal eigenvalues sampled
/// on a uniform grid for one dynamics model. Immutable after construction.
struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<double> speeds;
  std::vector<double> lambda_min;
  SpeedProvenance provenance = SpeedProvenance::Analytic;

  int size() const { return static_cast<int>(times.size()); }
  double h() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
  double tau() const { return times.empty() ? 0.0 : times.back(); }
  const DensityMatrix& initial() const { return states.front(); }
  const DensityMatrix& final_state() const { return states.back(); }
};

/// Time-dependent Kraus family V_l(t) with analytic derivatives.
/// derivative_time_floor handles families with a removable derivative
/// singularity at t = 0: speed terms are evaluated at max(t, floor).
struct KrausChannel {
  int dim = 2;
  std::function<std::vector<Matrix>(double)> operators;
  std::function<std::vector<Matrix>(double)> derivatives;
  double derivative_time_floor = 0.0;
};

/// Amplitude damping: V0 = |0><0| + e^{-gamma t/2}|1><1|,
/// V1 = sqrt(1 - e^{-gamma t}) |0><1|, gamma > 0.
KrausChannel amplitude_damping_channel(double gamma);

/// || sum_l V_l(t)^dag V_l(t) - I ||_max.
double kraus_completeness_defect(const KrausChannel& channel, double t);

Matrix apply_channel(const KrausChannel& channel, const Matrix& rho0,
                     double t);

/// sum_l || V_l rho_0 dV_l^dag/dt ||_1 evaluated by SVD.
double kraus_speed_sum(const KrausChannel& channel, const DensityMatrix& rho0,
                       double t);

/// States via the channel, speeds from the exact derivative
/// sum_l (dV_l rho0 V_l^dag + V_l rho0 dV_l^dag).
Trajectory kraus_trajectory(const KrausChannel& channel,
                            const DensityMatrix& rho0, const TimeGrid& grid);

// Closed forms for the amplitude-damping qubit dynamics.
double ad_xi(const BlochVector& b, double gamma, double t);
double ad_lambda_min(const BlochVector& b, double gamma, double t);
std::array<double, 3> ad_bloch_at(const BlochVector& b, double gamma,
                                  double t);
/// Kraus speed sum (gamma/4) e^{-gamma t} (1 - r cos t +
/// sqrt((1 - r cos t)^2 + e^{gamma t} r^2 sin^2 t)).
double ad_kraus_speed(const BlochVector& b, double gamma, double t);
/// Exact Schatten speed ||d rho/dt||_1 = |d r_t/dt|.
double ad_schatten_speed(const BlochVector& b, double gamma, double t);
/// Qubit fidelity from two Bloch vectors.
double bloch_fidelity(const std::array<double, 3>& a,
                      const std::array<double, 3>& b);

/// Amplitude-damping trajectory with analytic speeds.
Trajectory amplitude_damping(const BlochVector& b, double gamma,
                             const TimeGrid& grid);

enum class PtRegime { Unbroken, Exceptional, Broken };

/// Effective non-Hermitian generator split H = H_Re + i Upsilon_Im.
struct NonHermitianModel {
  Matrix h_sys;
  Matrix h_re;
  Matrix upsilon_im;
  explicit NonHermitianModel(Matrix h);
  bool hermitian() const;
};

/// H = omega sigma_x + i eta sigma_z.
NonHermitianModel pt_symmetric_model(double omega, double eta);
PtRegime pt_regime(double omega, double eta);

/// Closed-form propagator exp(-i t (omega sigma_x + i eta sigma_z)):
/// cos/sin of sqrt(omega^2 - eta^2) below the exceptional point,
/// cosh/sinh above it, and the degenerate linear form at eta = omega.
Matrix pt_propagator(double omega, double eta, double t);

/// Right-hand side of the trace-normalized master equation
/// d rho/dt = -i[H_Re, rho] + {Upsilon_Im, rho} - 2 tr(Upsilon_Im rho) rho.
Matrix nh_state_derivative(const NonHermitianModel& model, const Matrix& rho);

/// rho_t = K_t rho_0 K_t^dag / tr(...), K_t = exp(-i t H_sys); speeds from
/// the master equation. Throws if the normalization trace vanishes.
Trajectory non_hermitian_evolution(const NonHermitianModel& model,
                                   const DensityMatrix& rho0,
                                   const TimeGrid& grid);

/// Closed bipartite system H = H_A x I + I x H_B + H_AB, A-slow ordering.
struct BipartiteModel {
  int dim_a = 2;
  int dim_b = 2;
  Matrix h_a;
  Matrix h_b;
  Matrix h_ab;
  Matrix h_sys;
  BipartiteModel(int dim_a, int dim_b, Matrix h_a, Matrix h_b, Matrix h_ab);
};

/// Open-boundary XXZ chain
/// H = J sum_j (sx_j sx_{j+1} + sy_j sy_{j+1} + Delta sz_j sz_{j+1}),
/// 2 <= sites <= 6.
Observable xxz_hamiltonian(int sites, double coupling, double anisotropy);

/// XXZ chain split as site 1 (A) against sites 2..L (B).
BipartiteModel xxz_bipartite(int sites, double coupling, double anisotropy);

/// (1-p)/d I + p |Neel><Neel| with |Neel> = |1,0,1,0,...>. Odd chain
/// lengths keep the alternating pattern with a trailing |1>.
DensityMatrix neel_mixed_state(int sites, double p);

/// Reduced states of exp(-i H t) rho_0 exp(i H t); speeds are
/// || tr_{B or A}(-i [H, rho_t^global]) ||_1.
Trajectory bipartite_reduced(const BipartiteModel& model,
                             const DensityMatrix& rho0, Subsystem keep,
                             const TimeGrid& grid);

/// Trace norms of difference quotients: central interior, second-order
/// one-sided at the ends. Needs at least 3 states.
std::vector<double> finite_difference_speed(const std::vector<Matrix>& states,
                                            double h);
std::vector<double> finite_difference_speed(const Trajectory& traj);

}  // namespace smqsl
