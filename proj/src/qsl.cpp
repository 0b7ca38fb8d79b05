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

#include "smqsl/qsl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace smqsl {

namespace {

constexpr double kZeroBound = 1e-14;

double trapezoid(const std::vector<double>& f, double h, int stride) {
  double sum = 0.0;
  for (size_t k = 0; k + stride < f.size(); k += stride) {
    sum += f[k] + f[k + stride];
  }
  return 0.5 * h * stride * sum;
}

}  // namespace

WeightedIntegral weighted_speed_integral(const std::vector<double>& lambda,
                                         const std::vector<double>& weight,
                                         double h, double q) {
  if (lambda.size() != weight.size() || lambda.size() < 2) {
    throw std::invalid_argument(
        "weighted_speed_integral: series sizes mismatch");
  }
  WeightedIntegral out;
  std::vector<double> integrand(lambda.size());
  for (size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] <= kWeightFloor) {
      out.trivial = true;
      return out;
    }
    if (lambda[k] < kWeakLambda) out.weakly_conditioned = true;
    integrand[k] = g_weight(lambda[k], q) * weight[k];
  }
  const double fine = trapezoid(integrand, h, 1);
  const int intervals = static_cast<int>(lambda.size()) - 1;
  if (intervals % 2 == 0 && intervals >= 2) {
    const double coarse = trapezoid(integrand, h, 2);
    out.value = fine + (fine - coarse) / 3.0;
    out.refine_delta =
        std::abs(fine - coarse) / std::max(std::abs(fine), 1e-300);
  } else {
    out.value = fine;
  }
  return out;
}

double integrated_bound(const Trajectory& traj, double q) {
  const WeightedIntegral wi =
      weighted_speed_integral(traj.lambda_min, traj.speeds, traj.h(), q);
  return wi.trivial ? std::numeric_limits<double>::infinity() : wi.value;
}

QslReport bound_report(const Trajectory& traj, const EntropyParams& params,
                       double prefactor, const std::vector<double>& weight) {
  QslReport rep;
  rep.q = params.q;
  rep.z = params.z;
  rep.tau = traj.tau();
  if (!params.qsl_valid()) {
    rep.trivial = true;
    rep.cause = TrivialCause::InvalidParams;
    return rep;
  }
  rep.delta_s = std::abs(entropy_auto(traj.final_state().spectrum(), params) -
                         entropy_auto(traj.initial().spectrum(), params));
  const WeightedIntegral wi =
      weighted_speed_integral(traj.lambda_min, weight, traj.h(), params.q);
  rep.weakly_conditioned = wi.weakly_conditioned;
  if (wi.trivial) {
    rep.gamma = std::numeric_limits<double>::infinity();
    rep.trivial = true;
    rep.cause = TrivialCause::WeightDivergence;
    return rep;
  }
  rep.gamma = prefactor * wi.value;
  if (rep.gamma <= kZeroBound) {
    rep.trivial = true;
    rep.cause = TrivialCause::ZeroBound;
    return rep;
  }
  rep.tau_qsl = rep.delta_s * rep.tau / rep.gamma;
  rep.varsigma = 1.0 - rep.delta_s / rep.gamma;
  return rep;
}

QslReport qsl_time(const Trajectory& traj, const EntropyParams& params) {
  return bound_report(traj, params, 1.0, traj.speeds);
}

QslReport cptp_qsl(const KrausChannel& channel, const DensityMatrix& rho0,
                   const EntropyParams& params, double tau, int steps) {
  const TimeGrid grid = TimeGrid::uniform(tau, steps);
  const Trajectory traj = kraus_trajectory(channel, rho0, grid);
  std::vector<double> kraus_speed(traj.size());
  for (int k = 0; k < traj.size(); ++k) {
    kraus_speed[k] = kraus_speed_sum(channel, rho0, traj.times[k]);
  }
  return bound_report(traj, params, 2.0, kraus_speed);
}

QslReport nh_qsl(const NonHermitianModel& model, const DensityMatrix& rho0,
                 const EntropyParams& params, double tau, bool refined,
                 int steps) {
  const TimeGrid grid = TimeGrid::uniform(tau, steps);
  const Trajectory traj = non_hermitian_evolution(model, rho0, grid);
  const double hre_term =
      refined ? std::sqrt(variance(rho0, Observable(model.h_re)))
              : operator_norm(model.h_re);
  const double prefactor = 2.0 * (hre_term + trace_norm(model.upsilon_im) +
                                  operator_norm(model.upsilon_im));
  const std::vector<double> ones(traj.size(), 1.0);
  return bound_report(traj, params, prefactor, ones);
}

QslReport manybody_qsl(const BipartiteModel& model, const DensityMatrix& rho0,
                       Subsystem keep, const EntropyParams& params, double tau,
                       int steps) {
  const TimeGrid grid = TimeGrid::uniform(tau, steps);
  const Trajectory traj = bipartite_reduced(model, rho0, keep, grid);
  const double prefactor =
      2.0 * std::sqrt(variance(rho0, Observable(model.h_sys)));
  const std::vector<double> ones(traj.size(), 1.0);
  return bound_report(traj, params, prefactor, ones);
}

std::vector<double> entropy_rate_bound_check(const Trajectory& traj,
                                             const EntropyParams& params) {
  const int n = traj.size();
  if (n < 3) {
    throw std::invalid_argument("entropy_rate_bound_check: need >= 3 nodes");
  }
  const double h = traj.h();
  std::vector<double> entropy(n);
  for (int k = 0; k < n; ++k) {
    entropy[k] = entropy_auto(traj.states[k].spectrum(), params);
  }
  auto bound_at = [&](int k) {
    if (traj.lambda_min[k] <= kWeightFloor) {
      return std::numeric_limits<double>::infinity();
    }
    return g_weight(traj.lambda_min[k], params.q) * traj.speeds[k];
  };
  std::vector<double> margins(n);
  for (int k = 0; k < n; ++k) {
    double derivative;
    if (k == 0) {
      derivative = (-3.0 * entropy[0] + 4.0 * entropy[1] - entropy[2]) /
                   (2.0 * h);
    } else if (k == n - 1) {
      derivative = (3.0 * entropy[n - 1] - 4.0 * entropy[n - 2] +
                    entropy[n - 3]) /
                   (2.0 * h);
    } else {
      derivative = (entropy[k + 1] - entropy[k - 1]) / (2.0 * h);
    }
    margins[k] = std::abs(derivative) - bound_at(k);
  }
  return margins;
}

ZSpec ZSpec::parse(const std::string& text) {
  if (text == "renyi") return ZSpec{Mode::Renyi, 1.0};
  if (text == "tsallis") return ZSpec{Mode::Tsallis, 0.0};
  if (text.rfind("sme:", 0) == 0) {
    size_t consumed = 0;
    double z = 0.0;
    const std::string value = text.substr(4);
    try {
      z = std::stod(value, &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("entropy spec: bad z value in '" + text +
                                  "'");
    }
    if (consumed != value.size()) {
      throw std::invalid_argument("entropy spec: bad z value in '" + text +
                                  "'");
    }
    if (!(z > 0.0 && z < 1.0)) {
      throw std::invalid_argument(
          "entropy spec: z must lie in (0, 1); use 'renyi' for the z -> 1 "
          "limit");
    }
    return ZSpec{Mode::FixedZ, z};
  }
  throw std::invalid_argument(
      "entropy spec: expected 'renyi', 'tsallis' or 'sme:<z>', got '" + text +
      "'");
}

EntropyParams ZSpec::params_for(double q) const {
  switch (mode) {
    case Mode::Renyi:
      return EntropyParams::renyi(q);
    case Mode::Tsallis:
      return EntropyParams::tsallis(q);
    case Mode::FixedZ:
      return EntropyParams::sharma_mittal(q, z);
  }
  throw std::logic_error("ZSpec: unreachable");
}

std::string ZSpec::label() const {
  switch (mode) {
    case Mode::Renyi:
      return "renyi";
    case Mode::Tsallis:
      return "tsallis";
    case Mode::FixedZ:
      return "sme:" + std::to_string(z);
  }
  return "";
}

void normalize_grid_errors(GridReport& grid) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const GridCell& cell : grid.cells) {
    lo = std::min(lo, cell.report.varsigma);
    hi = std::max(hi, cell.report.varsigma);
  }
  const double span = hi - lo;
  for (GridCell& cell : grid.cells) {
    if (!(span > 0.0)) {
      cell.varsigma_norm = 0.0;
    } else {
      cell.varsigma_norm =
          std::clamp((cell.report.varsigma - lo) / span, 0.0, 1.0);
    }
  }
}

}  // namespace smqsl
