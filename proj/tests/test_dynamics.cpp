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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "smqsl/dynamics.hpp"

using namespace smqsl;

namespace {

constexpr double kPi = std::numbers::pi;

const BlochVector& figure_bloch() {
  static const BlochVector b(0.5, kPi / 4, kPi / 4);
  return b;
}

}  // namespace

TEST_CASE("time grid") {
  const TimeGrid g = TimeGrid::uniform(2.0, 4);
  CHECK(g.nodes() == 5);
  CHECK(g.h() == doctest::Approx(0.5));
  CHECK(g.t(4) == doctest::Approx(2.0));
  CHECK_THROWS_AS(TimeGrid::uniform(-1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(TimeGrid::uniform(1.0, 0), std::invalid_argument);

  const TimeGrid auto_grid = TimeGrid::with_step(1.0, 0.0301);
  CHECK(auto_grid.steps % 2 == 0);
  CHECK(auto_grid.steps >= 34);
  CHECK(TimeGrid::with_step(1e6, 1e-9).steps == kMaxGridSteps);
}

TEST_CASE("kraus channel completeness and endpoints") {
  const KrausChannel channel = amplitude_damping_channel(1.0);
  for (double t : {0.0, 0.3, 1.0, 5.0, 20.0}) {
    CHECK(kraus_completeness_defect(channel, t) <= 1e-10);
  }
  CHECK_THROWS_AS(amplitude_damping_channel(0.0), std::invalid_argument);
  CHECK_THROWS_AS(amplitude_damping_channel(-1.0), std::invalid_argument);
}

TEST_CASE("amplitude damping trajectory endpoints") {
  const BlochVector& b = figure_bloch();
  const double gamma = 1.0;
  const Trajectory traj =
      amplitude_damping(b, gamma, TimeGrid::uniform(40.0, 400));

  // t = 0 is the initial state with lambda_min (1 - r)/2.
  CHECK((traj.states[0].matrix() -
         DensityMatrix::from_bloch(b).matrix())
            .cwiseAbs()
            .maxCoeff() <= 1e-14);
  CHECK(traj.lambda_min[0] == doctest::Approx(0.25).epsilon(1e-12));

  // Long times squeeze onto |0><0|.
  Matrix ground = Matrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  CHECK((traj.final_state().matrix() - ground).cwiseAbs().maxCoeff() <= 1e-8);

  // Every lambda_min matches the closed form.
  for (int k = 0; k < traj.size(); ++k) {
    CHECK(std::abs(traj.lambda_min[k] -
                   ad_lambda_min(b, gamma, traj.times[k])) <= 1e-10);
  }
}

TEST_CASE("amplitude damping lambda_min at gamma t = ln 2") {
  const double t = std::log(2.0);
  CHECK(ad_xi(figure_bloch(), 1.0, t) ==
        doctest::Approx(0.9589466094067262).epsilon(1e-9));
  CHECK(ad_lambda_min(figure_bloch(), 1.0, t) ==
        doctest::Approx(0.1392623199274032).epsilon(1e-9));
}

TEST_CASE("kraus speed closed form against the SVD route") {
  const BlochVector& b = figure_bloch();
  const double gamma = 1.0;
  const KrausChannel channel = amplitude_damping_channel(gamma);
  const DensityMatrix rho0 = DensityMatrix::from_bloch(b);
  // Frozen from (gamma/4)(1 - r cos t + sqrt((1 - r cos t)^2 + r^2 sin^2 t)).
  CHECK(ad_kraus_speed(b, gamma, 0.0) ==
        doctest::Approx(0.3458148721276691).epsilon(1e-9));
  for (double t : {0.0, 0.1, 0.5, 1.0, 3.0, 8.0}) {
    CHECK(std::abs(ad_kraus_speed(b, gamma, t) -
                   kraus_speed_sum(channel, rho0, t)) <= 1e-10);
  }
  // Maximally mixed input at t = 0 gives gamma/2; long times decay to zero.
  const BlochVector mixed(0.0, 0.0, 0.0);
  CHECK(ad_kraus_speed(mixed, gamma, 0.0) ==
        doctest::Approx(0.5 * gamma).epsilon(1e-12));
  CHECK(ad_kraus_speed(b, gamma, 40.0) <= 1e-8);
}

TEST_CASE("bloch closed form matches propagated expectations") {
  const BlochVector& b = figure_bloch();
  const KrausChannel channel = amplitude_damping_channel(1.0);
  const DensityMatrix rho0 = DensityMatrix::from_bloch(b);
  for (double t : {0.0, 0.5, 2.0, 10.0}) {
    const DensityMatrix rho_t(apply_channel(channel, rho0.matrix(), t));
    const auto r = ad_bloch_at(b, 1.0, t);
    CHECK(real_expectation(rho_t, pauli_x()) ==
          doctest::Approx(r[0]).epsilon(1e-12));
    CHECK(real_expectation(rho_t, pauli_y()) ==
          doctest::Approx(r[1]).epsilon(1e-12));
    CHECK(real_expectation(rho_t, pauli_z()) ==
          doctest::Approx(r[2]).epsilon(1e-12));
  }
}

TEST_CASE("amplitude damping fidelity floor") {
  const BlochVector& b = figure_bloch();
  const DensityMatrix rho0 = DensityMatrix::from_bloch(b);
  const KrausChannel channel = amplitude_damping_channel(1.0);
  const double target = 0.5 * (1.0 + 0.5 * std::cos(kPi / 4));
  for (double t : {0.1, 1.0, 5.0, 15.0}) {
    const DensityMatrix rho_t(apply_channel(channel, rho0.matrix(), t));
    CHECK(fidelity(rho0, rho_t) > 0.0);
  }
  const DensityMatrix late(apply_channel(channel, rho0.matrix(), 30.0));
  CHECK(std::abs(fidelity(rho0, late) - target) <= 1e-4);
  // Bloch-form route agrees with the Uhlmann evaluation.
  const double bloch_route =
      bloch_fidelity(b.cartesian(), ad_bloch_at(b, 1.0, 30.0));
  CHECK(fidelity(rho0, late) == doctest::Approx(bloch_route).epsilon(1e-10));
}

TEST_CASE("non-hermitian model split and regimes") {
  const NonHermitianModel model = pt_symmetric_model(1.0, 2.0);
  CHECK((model.h_re - pauli_x()).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((model.upsilon_im - 2.0 * pauli_z()).cwiseAbs().maxCoeff() <= 1e-14);
  const Matrix rebuilt = model.h_re + Complex(0, 1) * model.upsilon_im;
  CHECK((rebuilt - model.h_sys).cwiseAbs().maxCoeff() <= 1e-14);

  CHECK(pt_regime(1.0, 0.5) == PtRegime::Unbroken);
  CHECK(pt_regime(1.0, 2.0) == PtRegime::Broken);
  CHECK(pt_regime(1.0, 1.0) == PtRegime::Exceptional);
  CHECK_FALSE(model.hermitian());
  CHECK(pt_symmetric_model(1.0, 0.0).hermitian());
}

TEST_CASE("pt propagator closed forms match the series route") {
  for (double eta : {0.5, 1.0, 2.0}) {
    const NonHermitianModel model = pt_symmetric_model(1.0, eta);
    for (double t : {0.0, 0.4, 1.3, 3.0}) {
      CHECK((pt_propagator(1.0, eta, t) - mat_exp_series(model.h_sys, t))
                .cwiseAbs()
                .maxCoeff() <= 1e-10 * std::max(1.0, std::cosh(2.0 * t)));
    }
  }
}

TEST_CASE("hermitian limit keeps the spectrum constant") {
  const NonHermitianModel model = pt_symmetric_model(1.0, 0.0);
  const DensityMatrix rho0 = DensityMatrix::from_bloch(figure_bloch());
  const Trajectory traj =
      non_hermitian_evolution(model, rho0, TimeGrid::uniform(4.0, 200));
  for (int k = 0; k < traj.size(); ++k) {
    CHECK((traj.states[k].spectrum() - rho0.spectrum()).cwiseAbs().maxCoeff() <=
          1e-13);
  }
}

TEST_CASE("master equation is trace free and matches finite differences") {
  const DensityMatrix rho0 = DensityMatrix::from_bloch(figure_bloch());
  for (double eta : {2.0, 0.5}) {
    const NonHermitianModel model = pt_symmetric_model(1.0, eta);
    // Step below 1e-3 / ||H||_inf so differencing resolves the speeds.
    const TimeGrid grid = TimeGrid::uniform(2.0, 20000);
    const Trajectory traj = non_hermitian_evolution(model, rho0, grid);
    for (int k = 0; k < traj.size(); k += 500) {
      CHECK(std::abs(
                nh_state_derivative(model, traj.states[k].matrix()).trace()) <=
            1e-12);
    }
    const std::vector<double> fd = finite_difference_speed(traj);
    for (int k = 0; k < traj.size(); k += 250) {
      CHECK(std::abs(fd[k] - traj.speeds[k]) <= 1e-6);
    }
  }
}

TEST_CASE("vanishing normalization trace is reported") {
  // Strong pure decay underflows the trace within the horizon.
  const NonHermitianModel model(Complex(0, 30.0) * pauli_z());
  Vector one(2);
  one << 0, 1;
  const DensityMatrix rho0 = DensityMatrix::pure(one);
  CHECK_THROWS_AS(
      non_hermitian_evolution(model, rho0, TimeGrid::uniform(1.0, 10)),
      std::runtime_error);
}

TEST_CASE("xxz hamiltonian spectrum and matrix elements") {
  const Observable h = xxz_hamiltonian(2, 0.5, 1.0);
  const auto eg = eigh(h.matrix());
  CHECK(eg.eigenvalues(0) == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(eg.eigenvalues(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eg.eigenvalues(2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eg.eigenvalues(3) == doctest::Approx(0.5).epsilon(1e-12));

  // |10> has index 2, |01> index 1 under the site-0-slow convention.
  for (double coupling : {0.25, 0.5}) {
    for (double anisotropy : {0.7, 1.3}) {
      const Observable ham = xxz_hamiltonian(2, coupling, anisotropy);
      CHECK(ham.matrix()(2, 2).real() ==
            doctest::Approx(-coupling * anisotropy).epsilon(1e-12));
      CHECK(ham.matrix()(2, 1).real() ==
            doctest::Approx(2.0 * coupling).epsilon(1e-12));
    }
  }
  for (int sites : {2, 3, 4}) {
    CHECK(std::abs(xxz_hamiltonian(sites, 0.7, 1.3).matrix().trace()) <=
          1e-12);
  }
  CHECK_THROWS_AS(xxz_hamiltonian(1, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(xxz_hamiltonian(7, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("xxz bipartite split reassembles the chain") {
  for (int sites : {2, 3, 4}) {
    const BipartiteModel model = xxz_bipartite(sites, 0.5, 1.2);
    const Observable whole = xxz_hamiltonian(sites, 0.5, 1.2);
    CHECK((model.h_sys - whole.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("neel mixed state spectra") {
  const DensityMatrix uniform = neel_mixed_state(2, 0.0);
  CHECK((uniform.matrix() - 0.25 * Matrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() <= 1e-14);

  const DensityMatrix pure = neel_mixed_state(2, 1.0);
  CHECK(pure.spectrum()(3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pure.spectrum()(2) == doctest::Approx(0.0).epsilon(1e-12));
  // The Neel projector |10><10| sits at index 2.
  CHECK(pure.matrix()(2, 2).real() == doctest::Approx(1.0).epsilon(1e-12));

  const DensityMatrix mixed = neel_mixed_state(2, 0.25);
  CHECK(mixed.spectrum()(0) == doctest::Approx(3.0 / 16).epsilon(1e-12));
  CHECK(mixed.spectrum()(2) == doctest::Approx(3.0 / 16).epsilon(1e-12));
  CHECK(mixed.spectrum()(3) == doctest::Approx(7.0 / 16).epsilon(1e-12));

  // Tracing out the second site leaves diag(3/8, 5/8) in the (|0>, |1>)
  // basis: (3/16) tr_B I_4 plus 1/4 of the |1><1| projector on A.
  const DensityMatrix site = partial_trace(mixed, 2, 2, Subsystem::A);
  CHECK(site.matrix()(0, 0).real() == doctest::Approx(3.0 / 8).epsilon(1e-12));
  CHECK(site.matrix()(1, 1).real() == doctest::Approx(5.0 / 8).epsilon(1e-12));
  CHECK(std::abs(site.matrix()(0, 1)) <= 1e-14);

  // Odd chains keep the alternating pattern: |101> has index 5.
  const DensityMatrix odd = neel_mixed_state(3, 1.0);
  CHECK(odd.matrix()(5, 5).real() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(neel_mixed_state(2, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(neel_mixed_state(2, 1.1), std::invalid_argument);
}

TEST_CASE("uncoupled bipartite reduced dynamics is unitary") {
  Matrix h_a = 0.8 * pauli_z();
  Matrix h_b = 0.3 * pauli_x();
  const BipartiteModel model(2, 2, h_a, h_b, Matrix::Zero(4, 4));
  const DensityMatrix rho_a =
      DensityMatrix::from_bloch(BlochVector(0.7, 1.1, 2.0));
  const DensityMatrix rho_b =
      DensityMatrix::from_bloch(BlochVector(0.4, 0.4, 0.9));
  const DensityMatrix rho0(kron(rho_a.matrix(), rho_b.matrix()));
  const Trajectory traj =
      bipartite_reduced(model, rho0, Subsystem::A, TimeGrid::uniform(3.0, 150));
  for (int k = 0; k < traj.size(); k += 25) {
    CHECK((traj.states[k].spectrum() - rho_a.spectrum()).cwiseAbs().maxCoeff() <=
          1e-12);
    const Matrix u = mat_exp(h_a, traj.times[k]);
    CHECK((traj.states[k].matrix() - u * rho_a.matrix() * u.adjoint())
              .cwiseAbs()
              .maxCoeff() <= 1e-11);
  }
}

TEST_CASE("xxz reduced closed form checkpoints") {
  const double coupling = 0.5;
  const BipartiteModel model = xxz_bipartite(2, coupling, 1.0);
  const DensityMatrix rho0 = neel_mixed_state(2, 0.25);
  // 2Jt = pi/4 turns the reduced state maximally mixed.
  const double t_star = kPi / (8.0 * coupling);
  const TimeGrid grid = TimeGrid::uniform(t_star, 128);
  const Trajectory traj = bipartite_reduced(model, rho0, Subsystem::A, grid);
  CHECK((traj.final_state().matrix() - 0.5 * Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
  // Speeds agree with a differencing oracle.
  const std::vector<double> fd = finite_difference_speed(traj);
  for (int k = 0; k < traj.size(); ++k) {
    CHECK(std::abs(fd[k] - traj.speeds[k]) <= 1e-4);
  }
}

TEST_CASE("finite difference speeds") {
  // Constant trajectory differences vanish.
  const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
  std::vector<Matrix> constant(5, rho.matrix());
  for (double v : finite_difference_speed(constant, 0.1)) {
    CHECK(v == doctest::Approx(0.0).epsilon(1e-14));
  }

  // Linear interpolation gives exactly the endpoint difference norm.
  const DensityMatrix rho_a =
      DensityMatrix::from_bloch(BlochVector(0.6, 0.9, 0.3));
  const DensityMatrix rho_b =
      DensityMatrix::from_bloch(BlochVector(0.2, 2.1, 4.0));
  std::vector<Matrix> line;
  const int n = 11;
  for (int k = 0; k < n; ++k) {
    const double w = static_cast<double>(k) / (n - 1);
    line.push_back((1.0 - w) * rho_a.matrix() + w * rho_b.matrix());
  }
  const double expected = trace_norm(rho_b.matrix() - rho_a.matrix());
  for (double v : finite_difference_speed(line, 1.0 / (n - 1))) {
    CHECK(v == doctest::Approx(expected).epsilon(1e-12));
  }

  // Amplitude-damping differencing reproduces the analytic speeds.
  const Trajectory traj =
      amplitude_damping(figure_bloch(), 1.0, TimeGrid::uniform(0.1, 1000));
  const std::vector<double> fd = finite_difference_speed(traj);
  for (int k = 0; k < traj.size(); k += 100) {
    CHECK(std::abs(fd[k] - traj.speeds[k]) <= 1e-6);
  }

  std::vector<Matrix> too_short(2, rho.matrix());
  CHECK_THROWS_AS(finite_difference_speed(too_short, 0.1),
                  std::invalid_argument);
}

TEST_CASE("generic kraus derivative speeds match the analytic route") {
  const KrausChannel channel = amplitude_damping_channel(1.0);
  const DensityMatrix rho0 = DensityMatrix::from_bloch(figure_bloch());
  const TimeGrid grid = TimeGrid::uniform(4.0, 200);
  const Trajectory generic = kraus_trajectory(channel, rho0, grid);
  const Trajectory analytic = amplitude_damping(figure_bloch(), 1.0, grid);
  for (int k = 0; k < generic.size(); ++k) {
    CHECK(std::abs(generic.speeds[k] - analytic.speeds[k]) <= 1e-9);
  }
}

TEST_CASE("trajectory lambda series matches state spectra") {
  const Trajectory traj =
      amplitude_damping(figure_bloch(), 1.0, TimeGrid::uniform(5.0, 100));
  for (int k = 0; k < traj.size(); ++k) {
    CHECK(traj.lambda_min[k] ==
          doctest::Approx(traj.states[k].spectrum()(0)).epsilon(1e-12));
  }
}
