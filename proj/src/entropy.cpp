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

#include "smqsl/entropy.hpp"

#include <cmath>
#include <sstream>

namespace smqsl {

namespace {

// Probability spectrum: entries in [0, 1] up to kPsdTol, unit sum to 1e-10.
void validate_spectrum(const RealVector& spectrum) {
  if (spectrum.size() < 1) {
    throw std::invalid_argument("entropy: empty spectrum");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    const double w = spectrum(i);
    if (!std::isfinite(w) || w < -kPsdTol || w > 1.0 + kPsdTol) {
      std::ostringstream msg;
      msg << "entropy: spectrum entry " << w << " outside [0, 1]";
      throw std::invalid_argument(msg.str());
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "entropy: spectrum sums to " << sum << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
}

void validate_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw std::domain_error("entropy: q must be a positive real");
  }
}

}  // namespace

EntropyKind EntropyParams::kind() const {
  const bool z_near_one = std::abs(z - 1.0) < kLimitLine;
  const bool q_near_one = std::abs(q - 1.0) < kLimitLine;
  if (q_near_one && z_near_one) return EntropyKind::VonNeumann;
  if (z_near_one) return EntropyKind::Renyi;
  if (std::abs(z - q) < kLimitLine) return EntropyKind::Tsallis;
  return EntropyKind::SharmaMittal;
}

bool EntropyParams::qsl_valid() const {
  if (!(q > 0.0 && q < 1.0)) return false;
  switch (kind()) {
    case EntropyKind::VonNeumann:
      return false;
    case EntropyKind::Renyi:
    case EntropyKind::Tsallis:
      return true;
    case EntropyKind::SharmaMittal:
      return q < z && z < 1.0;
  }
  return false;
}

bool EntropyParams::tsallis_boundary() const {
  return kind() == EntropyKind::Tsallis;
}

WeightDivergence::WeightDivergence(double s)
    : std::runtime_error("g_weight: divergent at s = " + std::to_string(s)),
      s_(s) {}

double q_purity(const RealVector& spectrum, double q) {
  validate_q(q);
  validate_spectrum(spectrum);
  double h = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    const double w = spectrum(i);
    if (w <= kSpectrumZero) continue;
    h += std::pow(w, q);
  }
  return h;
}

double sharma_mittal_entropy(const RealVector& spectrum, double q, double z) {
  validate_q(q);
  if (std::abs(q - 1.0) < kHermitianTol || std::abs(z - 1.0) < kHermitianTol) {
    throw std::domain_error(
        "sharma_mittal_entropy: q = 1 or z = 1; use the limit forms");
  }
  const double h = q_purity(spectrum, q);
  // expm1 keeps the numerator accurate as z approaches the Renyi line.
  return std::expm1((1.0 - z) / (1.0 - q) * std::log(h)) / (1.0 - z);
}

double renyi_entropy(const RealVector& spectrum, double q) {
  validate_q(q);
  if (std::abs(q - 1.0) < kHermitianTol) {
    throw std::domain_error("renyi_entropy: q = 1; use von Neumann");
  }
  return std::log(q_purity(spectrum, q)) / (1.0 - q);
}

double tsallis_entropy(const RealVector& spectrum, double q) {
  validate_q(q);
  if (std::abs(q - 1.0) < kHermitianTol) {
    throw std::domain_error("tsallis_entropy: q = 1; use von Neumann");
  }
  return (q_purity(spectrum, q) - 1.0) / (1.0 - q);
}

double von_neumann_entropy(const RealVector& spectrum) {
  validate_spectrum(spectrum);
  double s = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    const double w = spectrum(i);
    if (w <= kSpectrumZero) continue;
    s -= w * std::log(w);
  }
  return std::max(s, 0.0);
}

double entropy_auto(const RealVector& spectrum, const EntropyParams& params) {
  switch (params.kind()) {
    case EntropyKind::VonNeumann:
      return von_neumann_entropy(spectrum);
    case EntropyKind::Renyi:
      return renyi_entropy(spectrum, params.q);
    case EntropyKind::Tsallis:
      return tsallis_entropy(spectrum, params.q);
    case EntropyKind::SharmaMittal:
      return sharma_mittal_entropy(spectrum, params.q, params.z);
  }
  throw std::logic_error("entropy_auto: unreachable");
}

double g_weight(double s, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error("g_weight: q must lie in (0, 1)");
  }
  if (!(s > kWeightFloor)) {
    throw WeightDivergence(s);
  }
  return (1.0 - q + s) * std::pow(s, q - 2.0) / (1.0 - q);
}

WeightRegion classify_region(double q, double z) {
  if (q <= 0.0 || std::abs(q - 1.0) < kLimitLine ||
      std::abs(z - 1.0) < kLimitLine) {
    return WeightRegion::Undefined;
  }
  // For q < 1 the q-purity is >= 1 and the exponent (q-z)/(1-q) is negative
  // exactly when q < z; for q > 1 the purity is <= 1 and the exponent is
  // nonpositive exactly when z < q. Both cases reduce to comparing q and z.
  return q <= z ? WeightRegion::WeightLeqOne : WeightRegion::WeightGeqOne;
}

}  // namespace smqsl
