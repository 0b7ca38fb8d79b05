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

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace smqsl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numerical tolerances shared across the library.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;       // eigenvalues below -kPsdTol are an error
inline constexpr double kSpectrumZero = 1e-14;  // spectrum entries below this count as 0
inline constexpr double kWeightFloor = 1e-12;   // s_floor for the entropy weight g_q
inline constexpr double kLimitLine = 1e-7;      // proximity threshold for entropy limit lines
inline constexpr double kWeakLambda = 1e-6;     // below this the weight is ill-conditioned

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// Kronecker product, A slow / B fast index convention.
Matrix kron(const Matrix& a, const Matrix& b);

/// Largest |m_ij - conj(m_ji)| over all entries.
double hermitian_defect(const Matrix& m);

struct EighResult {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns, m = V diag(w) V^dag
};

/// Eigendecomposition of a Hermitian matrix. Rejects inputs whose
/// Hermitian defect exceeds kHermitianTol, reporting the measured asymmetry.
EighResult eigh(const Matrix& m);

/// Schatten 1-norm (sum of singular values).
double trace_norm(const Matrix& m);

/// Operator norm (largest singular value).
double operator_norm(const Matrix& m);

struct BlochVector {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  BlochVector(double r, double theta, double phi);
  /// Cartesian components (r sin t cos p, r sin t sin p, r cos t).
  std::array<double, 3> cartesian() const;
};

/// Hermitian, PSD, unit-trace matrix. Validated on construction; tiny
/// eigenvalue negativity in [-kPsdTol, 0) is clamped to zero in the stored
/// spectrum so that downstream entropy/weight evaluation never sees it.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  static DensityMatrix from_bloch(const BlochVector& b);
  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  /// Ascending clamped eigenvalues.
  const RealVector& spectrum() const { return spectrum_; }
  double lambda_min() const { return spectrum_(0); }

 private:
  Matrix m_;
  RealVector spectrum_;
};

/// Hermitian operator (Hamiltonians and their Hermitian parts).
class Observable {
 public:
  explicit Observable(Matrix m);
  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

enum class Subsystem { A, B };

/// Partial trace of an arbitrary operator on a dim_a * dim_b space,
/// A-slow/B-fast tensor ordering.
Matrix partial_trace_raw(const Matrix& m, int dim_a, int dim_b, Subsystem keep);

DensityMatrix partial_trace(const DensityMatrix& rho, int dim_a, int dim_b,
                            Subsystem keep);

double real_expectation(const DensityMatrix& rho, const Matrix& op);

/// Uhlmann fidelity F = (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 in [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// tr(rho h^2) - tr(rho h)^2, clamped to be nonnegative.
double variance(const DensityMatrix& rho, const Observable& h);

/// Quantum Fisher information, normalized so pure states give the variance:
/// F = 1/2 sum_{ij: wi+wj>eps} (wi-wj)^2/(wi+wj) |<i|h|j>|^2.
double qfi(const DensityMatrix& rho, const Observable& h);

/// exp(-i t m). 2x2 inputs use the closed cos/sin (cosh/sinh) form of the
/// Pauli decomposition; larger inputs go through mat_exp_series.
Matrix mat_exp(const Matrix& m, double t);

/// exp(-i t m) via scaling-and-squaring Taylor summation, any dimension.
Matrix mat_exp_series(const Matrix& m, double t);

}  // namespace smqsl
