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

#include <numbers>
#include <random>

#include "smqsl/matrix_core.hpp"

using namespace smqsl;

namespace {

constexpr double kPi = std::numbers::pi;

std::mt19937_64& rng() {
  static std::mt19937_64 gen(314159);
  return gen;
}

Complex random_complex() {
  static std::normal_distribution<double> gauss(0.0, 1.0);
  return {gauss(rng()), gauss(rng())};
}

Matrix random_matrix(int dim) {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = random_complex();
  return m;
}

DensityMatrix random_state(int dim) {
  const Matrix g = random_matrix(dim);
  Matrix raw = g * g.adjoint();
  return DensityMatrix(raw / raw.trace().real());
}

Matrix random_unitary(int dim) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(dim));
  return Matrix(qr.householderQ());
}

Observable random_qubit_observable() {
  static std::normal_distribution<double> gauss(0.0, 1.0);
  return Observable(gauss(rng()) * Matrix::Identity(2, 2) +
                    gauss(rng()) * pauli_x() + gauss(rng()) * pauli_y() +
                    gauss(rng()) * pauli_z());
}

}  // namespace

TEST_CASE("eigh of reference matrices") {
  auto sz = eigh(pauli_z());
  CHECK(sz.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(sz.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));

  auto mixed = eigh(0.5 * Matrix::Identity(2, 2));
  CHECK(mixed.eigenvalues(0) == doctest::Approx(0.5));
  CHECK(mixed.eigenvalues(1) == doctest::Approx(0.5));

  // Any Bloch direction gives eigenvalues (1 -/+ r)/2.
  const DensityMatrix rho =
      DensityMatrix::from_bloch(BlochVector(0.5, kPi / 4, kPi / 4));
  CHECK(rho.spectrum()(0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rho.spectrum()(1) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("eigh reconstruction and orthonormality") {
  for (int dim : {2, 3, 5}) {
    Matrix m = random_matrix(dim);
    m = (m + m.adjoint()).eval();
    const auto r = eigh(m);
    const Matrix rebuilt = r.eigenvectors *
                           r.eigenvalues.cast<Complex>().asDiagonal() *
                           r.eigenvectors.adjoint();
    CHECK((rebuilt - m).cwiseAbs().maxCoeff() <= 1e-10);
    const Matrix gram = r.eigenvectors.adjoint() * r.eigenvectors;
    CHECK((gram - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() <= 1e-10);
    for (int i = 1; i < dim; ++i) {
      CHECK(r.eigenvalues(i) >= r.eigenvalues(i - 1));
    }
  }
}

TEST_CASE("eigh rejects non-Hermitian input with measured asymmetry") {
  Matrix m(2, 2);
  m << 1.0, Complex(0.0, 1e-6), 0.0, -1.0;
  CHECK_THROWS_WITH_AS(eigh(m), doctest::Contains("asymmetry"),
                       std::invalid_argument);
}

TEST_CASE("trace norm basics") {
  CHECK(trace_norm(pauli_z()) == doctest::Approx(2.0).epsilon(1e-12));
  for (int dim : {2, 3, 4}) {
    CHECK(trace_norm(random_state(dim).matrix()) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  Matrix bad(1, 1);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(trace_norm(bad), std::invalid_argument);
}

TEST_CASE("pure-state commutator norm equals twice the spread") {
  // ||[sx, rho]||_1 = 2 sqrt(Var(sx)) for pure qubit states.
  for (int i = 0; i < 50; ++i) {
    Vector psi(2);
    psi << random_complex(), random_complex();
    const DensityMatrix rho = DensityMatrix::pure(psi);
    const Matrix sx = pauli_x();
    const double lhs = trace_norm(sx * rho.matrix() - rho.matrix() * sx);
    const double rhs = 2.0 * std::sqrt(variance(rho, Observable(sx)));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("trace norm triangle inequality and unitary invariance") {
  for (int i = 0; i < 50; ++i) {
    const int dim = 2 + (i % 3);
    const Matrix a = random_matrix(dim);
    const Matrix b = random_matrix(dim);
    CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-10);
    CHECK(trace_norm(a.adjoint()) ==
          doctest::Approx(trace_norm(a)).epsilon(1e-10));
    const Matrix u = random_unitary(dim);
    CHECK(trace_norm(u * a * u.adjoint()) ==
          doctest::Approx(trace_norm(a)).epsilon(1e-10));
  }
}

TEST_CASE("operator norm") {
  CHECK(operator_norm(pauli_x()) == doctest::Approx(1.0));
  CHECK(operator_norm(3.0 * Matrix::Identity(2, 2)) == doctest::Approx(3.0));
  // Non-Hermitian case sx + 2i sz: M^dag M has eigenvalues {1, 9}.
  const Matrix m = pauli_x() + Complex(0, 2) * pauli_z();
  CHECK(operator_norm(m) == doctest::Approx(3.0).epsilon(1e-12));
  for (int i = 0; i < 20; ++i) {
    const Matrix a = random_matrix(3);
    const double oracle = std::sqrt(eigh(a.adjoint() * a).eigenvalues(2));
    CHECK(operator_norm(a) == doctest::Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("partial trace reference cases") {
  Vector bell(4);
  bell << 1, 0, 0, 1;
  const DensityMatrix bell_state = DensityMatrix::pure(bell);
  const DensityMatrix reduced = partial_trace(bell_state, 2, 2, Subsystem::A);
  CHECK((reduced.matrix() - 0.5 * Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);

  const DensityMatrix rho_a = random_state(2);
  const DensityMatrix rho_b = random_state(3);
  const DensityMatrix product(kron(rho_a.matrix(), rho_b.matrix()));
  CHECK((partial_trace(product, 2, 3, Subsystem::A).matrix() - rho_a.matrix())
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
  CHECK((partial_trace(product, 2, 3, Subsystem::B).matrix() - rho_b.matrix())
            .cwiseAbs()
            .maxCoeff() <= 1e-12);

  CHECK_THROWS_AS(partial_trace(product, 2, 2, Subsystem::A),
                  std::invalid_argument);
}

TEST_CASE("partial trace preserves trace and positivity") {
  for (int i = 0; i < 30; ++i) {
    const DensityMatrix rho = random_state(6);
    // Constructor revalidates Hermiticity, trace and positivity.
    const DensityMatrix a = partial_trace(rho, 2, 3, Subsystem::A);
    const DensityMatrix b = partial_trace(rho, 2, 3, Subsystem::B);
    CHECK(a.dim() == 2);
    CHECK(b.dim() == 3);
  }
}

TEST_CASE("fidelity reference values and symmetry") {
  const DensityMatrix rho =
      DensityMatrix::from_bloch(BlochVector(0.5, kPi / 4, kPi / 4));
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-12));

  Vector zero(2), one(2);
  zero << 1, 0;
  one << 0, 1;
  CHECK(fidelity(DensityMatrix::pure(zero), DensityMatrix::pure(one)) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // <0|rho|0> = (1 + r cos theta)/2 for pure target |0><0|.
  CHECK(fidelity(rho, DensityMatrix::pure(zero)) ==
        doctest::Approx(0.676776695296637).epsilon(1e-10));

  CHECK_THROWS_AS(fidelity(rho, random_state(3)), std::invalid_argument);
}

TEST_CASE("qubit fidelity routes agree") {
  // Uhlmann fidelity vs the determinant identity
  // F = tr(rho sigma) + 2 sqrt(det rho det sigma) on random qubit pairs.
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_state(2);
    const DensityMatrix sigma = random_state(2);
    const double f = fidelity(rho, sigma);
    CHECK(f == doctest::Approx(fidelity(sigma, rho)).epsilon(1e-10));
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    const double det_form =
        (rho.matrix() * sigma.matrix()).trace().real() +
        2.0 * std::sqrt(std::max(0.0, rho.matrix().determinant().real() *
                                          sigma.matrix().determinant().real()));
    CHECK(f == doctest::Approx(det_form).epsilon(1e-10));
  }
}

TEST_CASE("variance reference values") {
  Vector plus(2);
  plus << 1, 1;
  CHECK(variance(DensityMatrix::pure(plus), Observable(pauli_x())) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(variance(DensityMatrix::maximally_mixed(2), Observable(pauli_z())) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(Observable(pauli_x() + Complex(0, 1) * pauli_z()),
                  std::invalid_argument);
}

TEST_CASE("qfi reference values and the commutator chain") {
  for (int i = 0; i < 30; ++i) {
    Vector psi(2);
    psi << random_complex(), random_complex();
    const DensityMatrix rho = DensityMatrix::pure(psi);
    const Observable sz(pauli_z());
    CHECK(qfi(rho, sz) == doctest::Approx(variance(rho, sz)).epsilon(1e-10));
  }
  CHECK(qfi(DensityMatrix::maximally_mixed(2), Observable(pauli_x())) ==
        doctest::Approx(0.0).epsilon(1e-12));
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = random_state(2);
    const Observable h = random_qubit_observable();
    const double c1 =
        trace_norm(h.matrix() * rho.matrix() - rho.matrix() * h.matrix());
    const double f = qfi(rho, h);
    const double v = variance(rho, h);
    CHECK(c1 <= 2.0 * std::sqrt(f) + 1e-9);
    CHECK(2.0 * std::sqrt(f) <= 2.0 * std::sqrt(v) + 1e-9);
  }
}

TEST_CASE("mat_exp reference values") {
  CHECK((mat_exp(random_matrix(2), 0.0) - Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() <= 1e-14);

  // exp(-i (pi/2) sx) = -i sx.
  const Matrix quarter = mat_exp(pauli_x(), kPi / 2);
  CHECK((quarter - Complex(0, -1) * pauli_x()).cwiseAbs().maxCoeff() <= 1e-12);

  // exp(-i (sx + 2i sz)) = cosh(sqrt 3) I + sinh(sqrt 3) u.sigma with
  // u = (-i/sqrt3, 0, 2/sqrt3), the x component following from -i u / mu.
  const double s3 = std::sqrt(3.0);
  const Matrix u_sigma =
      Complex(0.0, -1.0 / s3) * pauli_x() + 2.0 / s3 * pauli_z();
  const Matrix closed =
      std::cosh(s3) * Matrix::Identity(2, 2) + std::sinh(s3) * u_sigma;
  const Matrix m = pauli_x() + Complex(0, 2) * pauli_z();
  CHECK((mat_exp(m, 1.0) - closed).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK((mat_exp_series(m, 1.0) - closed).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("mat_exp inverse property and route agreement") {
  for (int dim : {2, 3, 4}) {
    for (int i = 0; i < 10; ++i) {
      const Matrix m = random_matrix(dim);
      const Matrix forward = mat_exp(m, 0.7);
      const Matrix backward = mat_exp(m, -0.7);
      CHECK((forward * backward - Matrix::Identity(dim, dim))
                .cwiseAbs()
                .maxCoeff() <= 1e-10);
      CHECK((forward - mat_exp_series(m, 0.7)).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("density matrix validation") {
  Matrix not_unit = 2.0 * Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix{not_unit}, std::invalid_argument);

  Matrix not_hermitian(2, 2);
  not_hermitian << 0.5, Complex(0, 1e-3), 0.0, 0.5;
  CHECK_THROWS_AS(DensityMatrix{not_hermitian}, std::invalid_argument);

  Matrix negative(2, 2);
  negative << 1.1, 0, 0, -0.1;
  CHECK_THROWS_AS(DensityMatrix{negative}, std::invalid_argument);

  // Tolerated numerical negativity clamps to zero.
  Matrix nearly_pure(2, 2);
  nearly_pure << 1.0 + 5e-11, 0, 0, -5e-11;
  const DensityMatrix clamped(nearly_pure);
  CHECK(clamped.spectrum()(0) == 0.0);
  CHECK(clamped.spectrum()(1) == 1.0);
}

TEST_CASE("bloch vector validation and tensor ordering") {
  CHECK_THROWS_AS(BlochVector(1.5, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BlochVector(0.5, 4.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BlochVector(0.5, 0.0, 7.0), std::invalid_argument);

  // A-slow convention: kron(diag(1,0), I) = diag(1,1,0,0).
  Matrix proj = Matrix::Zero(2, 2);
  proj(0, 0) = 1.0;
  const Matrix k = kron(proj, Matrix::Identity(2, 2));
  CHECK(k(0, 0).real() == doctest::Approx(1.0));
  CHECK(k(1, 1).real() == doctest::Approx(1.0));
  CHECK(k(2, 2).real() == doctest::Approx(0.0));
  CHECK(k(3, 3).real() == doctest::Approx(0.0));
}
