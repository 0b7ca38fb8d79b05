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

#include "smqsl/matrix_core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace smqsl {

namespace {

const Complex kI(0.0, 1.0);

void require_finite(const Matrix& m, const char* who) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
  }
}

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
}

}  // namespace

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double hermitian_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

EighResult eigh(const Matrix& m) {
  require_square(m, "eigh");
  require_finite(m, "eigh");
  const double defect = hermitian_defect(m);
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "eigh: input is not Hermitian, asymmetry " << defect;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigh: eigendecomposition failed to converge");
  }
  return EighResult{solver.eigenvalues(), solver.eigenvectors()};
}

double trace_norm(const Matrix& m) {
  require_finite(m, "trace_norm");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double operator_norm(const Matrix& m) {
  require_finite(m, "operator_norm");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().maxCoeff();
}

BlochVector::BlochVector(double r_in, double theta_in, double phi_in)
    : r(r_in), theta(theta_in), phi(phi_in) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::invalid_argument("BlochVector: r must lie in [0, 1]");
  }
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("BlochVector: theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    throw std::invalid_argument("BlochVector: phi must lie in [0, 2 pi)");
  }
}

std::array<double, 3> BlochVector::cartesian() const {
  return {r * std::sin(theta) * std::cos(phi),
          r * std::sin(theta) * std::sin(phi), r * std::cos(theta)};
}

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  require_square(m_, "DensityMatrix");
  require_finite(m_, "DensityMatrix");
  const double defect = hermitian_defect(m_);
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian, asymmetry " << defect;
    throw std::invalid_argument(msg.str());
  }
  const double trace_defect = std::abs(m_.trace() - Complex(1.0, 0.0));
  if (trace_defect > kTraceTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace deviates from 1 by " << trace_defect;
    throw std::invalid_argument(msg.str());
  }
  spectrum_ = eigh(m_).eigenvalues;
  for (Eigen::Index i = 0; i < spectrum_.size(); ++i) {
    double& w = spectrum_(i);
    if (w < -kPsdTol || w > 1.0 + kPsdTol) {
      std::ostringstream msg;
      msg << "DensityMatrix: eigenvalue " << w << " outside [0, 1]";
      throw std::invalid_argument(msg.str());
    }
    w = std::min(std::max(w, 0.0), 1.0);
  }
}

DensityMatrix DensityMatrix::from_bloch(const BlochVector& b) {
  const auto v = b.cartesian();
  Matrix m = 0.5 * (Matrix::Identity(2, 2) + v[0] * pauli_x() +
                    v[1] * pauli_y() + v[2] * pauli_z());
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double norm = psi.norm();
  if (norm <= 0.0) {
    throw std::invalid_argument("DensityMatrix::pure: zero vector");
  }
  Vector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) {
    throw std::invalid_argument("DensityMatrix::maximally_mixed: dim < 1");
  }
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

Observable::Observable(Matrix m) : m_(std::move(m)) {
  require_square(m_, "Observable");
  require_finite(m_, "Observable");
  const double defect = hermitian_defect(m_);
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "Observable: not Hermitian, asymmetry " << defect;
    throw std::invalid_argument(msg.str());
  }
}

Matrix partial_trace_raw(const Matrix& m, int dim_a, int dim_b,
                         Subsystem keep) {
  if (dim_a < 1 || dim_b < 1 ||
      m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b ||
      m.rows() != m.cols()) {
    throw std::invalid_argument(
        "partial_trace: dimension mismatch between operator and (d_A, d_B)");
  }
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i) {
      for (int j = 0; j < dim_a; ++j) {
        Complex sum = 0.0;
        for (int b = 0; b < dim_b; ++b) {
          sum += m(i * dim_b + b, j * dim_b + b);
        }
        out(i, j) = sum;
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_b; ++i) {
    for (int j = 0; j < dim_b; ++j) {
      Complex sum = 0.0;
      for (int a = 0; a < dim_a; ++a) {
        sum += m(a * dim_b + i, a * dim_b + j);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, int dim_a, int dim_b,
                            Subsystem keep) {
  return DensityMatrix(partial_trace_raw(rho.matrix(), dim_a, dim_b, keep));
}

double real_expectation(const DensityMatrix& rho, const Matrix& op) {
  return (rho.matrix() * op).trace().real();
}

namespace {

Matrix psd_sqrt(const Matrix& m) {
  const EighResult er = eigh(m);
  RealVector roots = er.eigenvalues;
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    roots(i) = std::sqrt(std::max(roots(i), 0.0));
  }
  return er.eigenvectors * roots.asDiagonal() * er.eigenvectors.adjoint();
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  // tr sqrt(sqrt(rho) sigma sqrt(rho)) = ||sqrt(sigma) sqrt(rho)||_1; the
  // singular-value route avoids square roots of round-off eigenvalues.
  const double root =
      trace_norm(psd_sqrt(sigma.matrix()) * psd_sqrt(rho.matrix()));
  return std::min(root * root, 1.0);
}

double variance(const DensityMatrix& rho, const Observable& h) {
  if (rho.dim() != h.dim()) {
    throw std::invalid_argument("variance: dimension mismatch");
  }
  const Matrix& hm = h.matrix();
  const double second = (rho.matrix() * hm * hm).trace().real();
  const double first = (rho.matrix() * hm).trace().real();
  return std::max(second - first * first, 0.0);
}

double qfi(const DensityMatrix& rho, const Observable& h) {
  if (rho.dim() != h.dim()) {
    throw std::invalid_argument("qfi: dimension mismatch");
  }
  constexpr double kPairCutoff = 1e-12;
  const EighResult er = eigh(rho.matrix());
  const Matrix h_eig =
      er.eigenvectors.adjoint() * h.matrix() * er.eigenvectors;
  const int d = rho.dim();
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double wi = std::max(er.eigenvalues(i), 0.0);
      const double wj = std::max(er.eigenvalues(j), 0.0);
      if (wi + wj <= kPairCutoff) continue;
      const double diff = wi - wj;
      sum += diff * diff / (wi + wj) * std::norm(h_eig(i, j));
    }
  }
  return 0.5 * sum;
}

Matrix mat_exp_series(const Matrix& m, double t) {
  require_square(m, "mat_exp_series");
  require_finite(m, "mat_exp_series");
  const Matrix a = -kI * t * m;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const Matrix b = a / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(m.rows(), m.cols());
  Matrix sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20 * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) {
    sum = sum * sum;
  }
  return sum;
}

Matrix mat_exp(const Matrix& m, double t) {
  require_square(m, "mat_exp");
  require_finite(m, "mat_exp");
  if (m.rows() != 2) {
    return mat_exp_series(m, t);
  }
  // Pauli split m = c0 I + u.sigma with complex u; then
  // exp(-i t m) = e^{-i t c0} [cos(mu t) I - i sin(mu t)/mu (u.sigma)],
  // mu = sqrt(u.u). Branch-independent: cos is even, sin(x)/x is even.
  const Complex c0 = 0.5 * m.trace();
  const Complex uz = m(0, 0) - c0;
  const Complex ux = 0.5 * (m(0, 1) + m(1, 0));
  const Complex uy = 0.5 * kI * (m(0, 1) - m(1, 0));
  const Complex mu = std::sqrt(ux * ux + uy * uy + uz * uz);
  const Complex arg = mu * t;
  Complex cos_part, sinc_part;  // sinc_part = sin(mu t)/mu
  if (std::abs(arg) < 1e-4) {
    const Complex a2 = arg * arg;
    cos_part = 1.0 - a2 / 2.0 + a2 * a2 / 24.0;
    sinc_part = t * (1.0 - a2 / 6.0 + a2 * a2 / 120.0);
  } else {
    cos_part = std::cos(arg);
    sinc_part = std::sin(arg) / mu;
  }
  Matrix u_sigma(2, 2);
  u_sigma << uz, ux - kI * uy, ux + kI * uy, -uz;
  Matrix out = cos_part * Matrix::Identity(2, 2) - kI * sinc_part * u_sigma;
  return std::exp(-kI * t * c0) * out;
}

}  // namespace smqsl
