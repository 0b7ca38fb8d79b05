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

#include "smqsl/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace smqsl {

namespace {

const Complex kI(0.0, 1.0);

Trajectory assemble_trajectory(std::vector<double> times,
                               std::vector<Matrix> raw_states,
                               std::vector<double> speeds,
                               SpeedProvenance provenance) {
  Trajectory traj;
  traj.times = std::move(times);
  traj.speeds = std::move(speeds);
  traj.provenance = provenance;
  traj.states.reserve(raw_states.size());
  traj.lambda_min.reserve(raw_states.size());
  for (auto& m : raw_states) {
    traj.states.emplace_back(std::move(m));
    traj.lambda_min.push_back(traj.states.back().lambda_min());
  }
  return traj;
}

}  // namespace

TimeGrid TimeGrid::uniform(double tau, int steps) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("TimeGrid: tau must be positive");
  }
  if (steps < 1 || steps > kMaxGridSteps) {
    throw std::invalid_argument("TimeGrid: steps out of range");
  }
  return TimeGrid{tau, steps};
}

TimeGrid TimeGrid::with_step(double tau, double step_hint) {
  if (!(tau > 0.0) || !(step_hint > 0.0)) {
    throw std::invalid_argument("TimeGrid: tau and step must be positive");
  }
  const double wanted = std::ceil(tau / step_hint);
  int steps = wanted >= kMaxGridSteps ? kMaxGridSteps
                                      : std::max(static_cast<int>(wanted), 2);
  if (steps % 2 != 0) ++steps;
  return TimeGrid{tau, steps};
}

KrausChannel amplitude_damping_channel(double gamma) {
  if (!(gamma > 0.0)) {
    throw std::invalid_argument(
        "amplitude_damping_channel: gamma must be positive");
  }
  KrausChannel channel;
  channel.dim = 2;
  channel.operators = [gamma](double t) {
    const double w = -std::expm1(-gamma * t);  // 1 - e^{-gamma t}
    Matrix v0 = Matrix::Zero(2, 2);
    v0(0, 0) = 1.0;
    v0(1, 1) = std::exp(-0.5 * gamma * t);
    Matrix v1 = Matrix::Zero(2, 2);
    v1(0, 1) = std::sqrt(std::max(w, 0.0));
    return std::vector<Matrix>{v0, v1};
  };
  channel.derivatives = [gamma](double t) {
    const double w = -std::expm1(-gamma * t);
    Matrix d0 = Matrix::Zero(2, 2);
    d0(1, 1) = -0.5 * gamma * std::exp(-0.5 * gamma * t);
    Matrix d1 = Matrix::Zero(2, 2);
    d1(0, 1) = 0.5 * gamma * std::exp(-gamma * t) / std::sqrt(w);
    return std::vector<Matrix>{d0, d1};
  };
  // dV1/dt diverges at t -> 0 while V1 rho V1dot^dag stays finite; speed
  // terms are sampled just off zero instead.
  channel.derivative_time_floor = 1e-11 / gamma;
  return channel;
}

double kraus_completeness_defect(const KrausChannel& channel, double t) {
  Matrix sum = Matrix::Zero(channel.dim, channel.dim);
  for (const Matrix& v : channel.operators(t)) {
    sum += v.adjoint() * v;
  }
  return (sum - Matrix::Identity(channel.dim, channel.dim))
      .cwiseAbs()
      .maxCoeff();
}

Matrix apply_channel(const KrausChannel& channel, const Matrix& rho0,
                     double t) {
  Matrix out = Matrix::Zero(channel.dim, channel.dim);
  for (const Matrix& v : channel.operators(t)) {
    out += v * rho0 * v.adjoint();
  }
  return out;
}

double kraus_speed_sum(const KrausChannel& channel, const DensityMatrix& rho0,
                       double t) {
  const double te = std::max(t, channel.derivative_time_floor);
  const auto ops = channel.operators(te);
  const auto dots = channel.derivatives(te);
  double sum = 0.0;
  for (size_t l = 0; l < ops.size(); ++l) {
    sum += trace_norm(ops[l] * rho0.matrix() * dots[l].adjoint());
  }
  return sum;
}

Trajectory kraus_trajectory(const KrausChannel& channel,
                            const DensityMatrix& rho0, const TimeGrid& grid) {
  std::vector<double> times(grid.nodes());
  std::vector<Matrix> states(grid.nodes());
  std::vector<double> speeds(grid.nodes());
  for (int k = 0; k < grid.nodes(); ++k) {
    const double t = grid.t(k);
    const double defect = kraus_completeness_defect(channel, t);
    if (defect > 1e-10) {
      std::ostringstream msg;
      msg << "kraus_trajectory: completeness defect " << defect << " at t = "
          << t;
      throw std::invalid_argument(msg.str());
    }
    times[k] = t;
    states[k] = apply_channel(channel, rho0.matrix(), t);
    const double te = std::max(t, channel.derivative_time_floor);
    const auto ops = channel.operators(te);
    const auto dots = channel.derivatives(te);
    Matrix deriv = Matrix::Zero(channel.dim, channel.dim);
    for (size_t l = 0; l < ops.size(); ++l) {
      deriv += dots[l] * rho0.matrix() * ops[l].adjoint() +
               ops[l] * rho0.matrix() * dots[l].adjoint();
    }
    speeds[k] = trace_norm(deriv);
  }
  return assemble_trajectory(std::move(times), std::move(states),
                             std::move(speeds), SpeedProvenance::Analytic);
}

double ad_xi(const BlochVector& b, double gamma, double t) {
  const double w = -std::expm1(-gamma * t);
  const double margin = 1.0 - b.r * std::cos(b.theta);
  return 1.0 - b.r * b.r + w * margin * margin;
}

double ad_lambda_min(const BlochVector& b, double gamma, double t) {
  const double decay = std::exp(-gamma * t);
  return 0.5 * (1.0 - std::sqrt(1.0 - decay * ad_xi(b, gamma, t)));
}

std::array<double, 3> ad_bloch_at(const BlochVector& b, double gamma,
                                  double t) {
  const double s = gamma * t;
  const auto r0 = b.cartesian();
  return {std::exp(-0.5 * s) * r0[0], std::exp(-0.5 * s) * r0[1],
          std::exp(-s) * r0[2] - std::expm1(-s)};
}

double ad_kraus_speed(const BlochVector& b, double gamma, double t) {
  const double margin = 1.0 - b.r * std::cos(b.theta);
  const double transverse = b.r * std::sin(b.theta);
  return 0.25 * gamma * std::exp(-gamma * t) *
         (margin + std::sqrt(margin * margin + std::exp(gamma * t) *
                                                   transverse * transverse));
}

double ad_schatten_speed(const BlochVector& b, double gamma, double t) {
  // d rho/dt = (1/2) (d r_t/dt).sigma, so the trace norm is |d r_t/dt|.
  const double s = gamma * t;
  const auto r0 = b.cartesian();
  const double dx = -0.5 * gamma * std::exp(-0.5 * s) * r0[0];
  const double dy = -0.5 * gamma * std::exp(-0.5 * s) * r0[1];
  const double dz = gamma * std::exp(-s) * (1.0 - r0[2]);
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double bloch_fidelity(const std::array<double, 3>& a,
                      const std::array<double, 3>& b) {
  const double na = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
  const double nb = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
  const double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  return 0.5 * (1.0 + dot + std::sqrt(std::max(1.0 - na, 0.0)) *
                                std::sqrt(std::max(1.0 - nb, 0.0)));
}

Trajectory amplitude_damping(const BlochVector& b, double gamma,
                             const TimeGrid& grid) {
  const KrausChannel channel = amplitude_damping_channel(gamma);
  const DensityMatrix rho0 = DensityMatrix::from_bloch(b);
  Trajectory traj = kraus_trajectory(channel, rho0, grid);
  for (int k = 0; k < traj.size(); ++k) {
    traj.speeds[k] = ad_schatten_speed(b, gamma, traj.times[k]);
  }
  return traj;
}

NonHermitianModel::NonHermitianModel(Matrix h) : h_sys(std::move(h)) {
  if (h_sys.rows() != h_sys.cols() || h_sys.rows() < 1) {
    throw std::invalid_argument("NonHermitianModel: H must be square");
  }
  if (!h_sys.allFinite()) {
    throw std::invalid_argument("NonHermitianModel: non-finite entries");
  }
  h_re = 0.5 * (h_sys + h_sys.adjoint());
  upsilon_im = (h_sys - h_sys.adjoint()) / (2.0 * kI);
}

bool NonHermitianModel::hermitian() const {
  return upsilon_im.cwiseAbs().maxCoeff() <= kHermitianTol;
}

NonHermitianModel pt_symmetric_model(double omega, double eta) {
  return NonHermitianModel(omega * pauli_x() + kI * eta * pauli_z());
}

PtRegime pt_regime(double omega, double eta) {
  const double ratio = std::abs(eta) - std::abs(omega);
  if (ratio > 0.0) return PtRegime::Broken;
  if (ratio < 0.0) return PtRegime::Unbroken;
  return PtRegime::Exceptional;
}

Matrix pt_propagator(double omega, double eta, double t) {
  const Matrix h = omega * pauli_x() + kI * eta * pauli_z();
  const Matrix identity = Matrix::Identity(2, 2);
  switch (pt_regime(omega, eta)) {
    case PtRegime::Unbroken: {
      const double freq = std::sqrt(omega * omega - eta * eta);
      // K = cos(f t) I - i sin(f t) (u.sigma), u = (omega, 0, i eta)/f.
      return std::cos(freq * t) * identity -
             kI * std::sin(freq * t) / freq * h;
    }
    case PtRegime::Broken: {
      const double rate = std::sqrt(eta * eta - omega * omega);
      // K = cosh(g t) I - i sinh(g t)/g (omega sigma_x + i eta sigma_z).
      return std::cosh(rate * t) * identity -
             kI * std::sinh(rate * t) / rate * h;
    }
    case PtRegime::Exceptional:
      // Degenerate limit of both branches.
      return identity - kI * t * h;
  }
  throw std::logic_error("pt_propagator: unreachable");
}

Matrix nh_state_derivative(const NonHermitianModel& model, const Matrix& rho) {
  const Matrix commutator = model.h_re * rho - rho * model.h_re;
  const Matrix anticommutator =
      model.upsilon_im * rho + rho * model.upsilon_im;
  const double expectation = (model.upsilon_im * rho).trace().real();
  return -kI * commutator + anticommutator - 2.0 * expectation * rho;
}

Trajectory non_hermitian_evolution(const NonHermitianModel& model,
                                   const DensityMatrix& rho0,
                                   const TimeGrid& grid) {
  if (rho0.dim() != model.h_sys.rows()) {
    throw std::invalid_argument("non_hermitian_evolution: dimension mismatch");
  }
  std::vector<double> times(grid.nodes());
  std::vector<Matrix> states(grid.nodes());
  std::vector<double> speeds(grid.nodes());
  for (int k = 0; k < grid.nodes(); ++k) {
    const double t = grid.t(k);
    const Matrix propagator = mat_exp(model.h_sys, t);
    const Matrix unnormalized =
        propagator * rho0.matrix() * propagator.adjoint();
    const double norm = unnormalized.trace().real();
    if (!(norm > 1e-14)) {
      std::ostringstream msg;
      msg << "non_hermitian_evolution: normalization trace " << norm
          << " vanished at t = " << t;
      throw std::runtime_error(msg.str());
    }
    times[k] = t;
    states[k] = unnormalized / norm;
    speeds[k] = trace_norm(nh_state_derivative(model, states[k]));
  }
  return assemble_trajectory(std::move(times), std::move(states),
                             std::move(speeds), SpeedProvenance::Analytic);
}

BipartiteModel::BipartiteModel(int dim_a_in, int dim_b_in, Matrix h_a_in,
                               Matrix h_b_in, Matrix h_ab_in)
    : dim_a(dim_a_in),
      dim_b(dim_b_in),
      h_a(std::move(h_a_in)),
      h_b(std::move(h_b_in)),
      h_ab(std::move(h_ab_in)) {
  if (dim_a < 1 || dim_b < 1 || h_a.rows() != dim_a || h_a.cols() != dim_a ||
      h_b.rows() != dim_b || h_b.cols() != dim_b ||
      h_ab.rows() != static_cast<Eigen::Index>(dim_a) * dim_b ||
      h_ab.cols() != h_ab.rows()) {
    throw std::invalid_argument("BipartiteModel: inconsistent dimensions");
  }
  h_sys = kron(h_a, Matrix::Identity(dim_b, dim_b)) +
          kron(Matrix::Identity(dim_a, dim_a), h_b) + h_ab;
  if (hermitian_defect(h_sys) > kHermitianTol) {
    throw std::invalid_argument("BipartiteModel: H is not Hermitian");
  }
}

namespace {

// sx_j sx_{j+1} + sy_j sy_{j+1} + Delta sz_j sz_{j+1} embedded in L sites,
// bond between j and j+1 (0-based), site 0 slowest.
Matrix xxz_bond(int sites, int j, double anisotropy) {
  auto embed = [&](const Matrix& op_j, const Matrix& op_j1) {
    Matrix out(1, 1);
    out(0, 0) = 1.0;
    for (int site = 0; site < sites; ++site) {
      if (site == j) {
        out = kron(out, op_j);
      } else if (site == j + 1) {
        out = kron(out, op_j1);
      } else {
        out = kron(out, Matrix::Identity(2, 2));
      }
    }
    return out;
  };
  return embed(pauli_x(), pauli_x()) + embed(pauli_y(), pauli_y()) +
         anisotropy * embed(pauli_z(), pauli_z());
}

}  // namespace

Observable xxz_hamiltonian(int sites, double coupling, double anisotropy) {
  if (sites < 2 || sites > 6) {
    throw std::invalid_argument("xxz_hamiltonian: sites must lie in [2, 6]");
  }
  const int dim = 1 << sites;
  Matrix h = Matrix::Zero(dim, dim);
  for (int j = 0; j + 1 < sites; ++j) {
    h += coupling * xxz_bond(sites, j, anisotropy);
  }
  return Observable(std::move(h));
}

BipartiteModel xxz_bipartite(int sites, double coupling, double anisotropy) {
  if (sites < 2 || sites > 6) {
    throw std::invalid_argument("xxz_bipartite: sites must lie in [2, 6]");
  }
  const int dim_b = 1 << (sites - 1);
  const Matrix h_a = Matrix::Zero(2, 2);
  Matrix h_b = Matrix::Zero(dim_b, dim_b);
  if (sites > 2) {
    h_b = xxz_hamiltonian(sites - 1, coupling, anisotropy).matrix();
  }
  const Matrix h_ab = coupling * xxz_bond(sites, 0, anisotropy);
  return BipartiteModel(2, dim_b, h_a, h_b, h_ab);
}

DensityMatrix neel_mixed_state(int sites, double p) {
  if (sites < 1 || sites > 6) {
    throw std::invalid_argument("neel_mixed_state: sites must lie in [1, 6]");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("neel_mixed_state: p must lie in [0, 1]");
  }
  const int dim = 1 << sites;
  // |1,0,1,0,...> with site 0 the slowest index.
  int index = 0;
  for (int site = 0; site < sites; ++site) {
    index = (index << 1) | (site % 2 == 0 ? 1 : 0);
  }
  Matrix m = (1.0 - p) / dim * Matrix::Identity(dim, dim);
  m(index, index) += p;
  return DensityMatrix(std::move(m));
}

Trajectory bipartite_reduced(const BipartiteModel& model,
                             const DensityMatrix& rho0, Subsystem keep,
                             const TimeGrid& grid) {
  if (rho0.dim() != model.dim_a * model.dim_b) {
    throw std::invalid_argument("bipartite_reduced: dimension mismatch");
  }
  // H is Hermitian and time-invariant: propagate in its eigenbasis.
  const EighResult er = eigh(model.h_sys);
  const Matrix rho0_eig =
      er.eigenvectors.adjoint() * rho0.matrix() * er.eigenvectors;
  std::vector<double> times(grid.nodes());
  std::vector<Matrix> states(grid.nodes());
  std::vector<double> speeds(grid.nodes());
  const int dim = rho0.dim();
  for (int k = 0; k < grid.nodes(); ++k) {
    const double t = grid.t(k);
    Vector phases(dim);
    for (int i = 0; i < dim; ++i) {
      phases(i) = std::exp(-kI * er.eigenvalues(i) * t);
    }
    Matrix rotated = rho0_eig;
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        rotated(i, j) *= phases(i) * std::conj(phases(j));
      }
    }
    const Matrix global = er.eigenvectors * rotated * er.eigenvectors.adjoint();
    const Matrix commutator =
        -kI * (model.h_sys * global - global * model.h_sys);
    times[k] = t;
    states[k] = partial_trace_raw(global, model.dim_a, model.dim_b, keep);
    speeds[k] = trace_norm(
        partial_trace_raw(commutator, model.dim_a, model.dim_b, keep));
  }
  return assemble_trajectory(std::move(times), std::move(states),
                             std::move(speeds), SpeedProvenance::Analytic);
}

std::vector<double> finite_difference_speed(const std::vector<Matrix>& states,
                                            double h) {
  const int n = static_cast<int>(states.size());
  if (n < 3) {
    throw std::invalid_argument(
        "finite_difference_speed: need at least 3 states");
  }
  if (!(h > 0.0)) {
    throw std::invalid_argument("finite_difference_speed: step must be > 0");
  }
  std::vector<double> out(n);
  out[0] = trace_norm((-3.0 * states[0] + 4.0 * states[1] - states[2]) /
                      (2.0 * h));
  for (int k = 1; k + 1 < n; ++k) {
    out[k] = trace_norm((states[k + 1] - states[k - 1]) / (2.0 * h));
  }
  out[n - 1] = trace_norm(
      (3.0 * states[n - 1] - 4.0 * states[n - 2] + states[n - 3]) / (2.0 * h));
  return out;
}

std::vector<double> finite_difference_speed(const Trajectory& traj) {
  std::vector<Matrix> raw;
  raw.reserve(traj.states.size());
  for (const auto& s : traj.states) raw.push_back(s.matrix());
  return finite_difference_speed(raw, traj.h());
}

}  // namespace smqsl
