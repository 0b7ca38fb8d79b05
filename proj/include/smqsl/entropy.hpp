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

#include <stdexcept>

#include "smqsl/matrix_core.hpp"

namespace smqsl {

enum class EntropyKind { SharmaMittal, Renyi, Tsallis, VonNeumann };

/// Two-parameter entropy family selector. The (q, z) plane carries three
/// limit lines, detected within kLimitLine: z ~ 1 (Renyi), z ~ q (Tsallis),
/// and q ~ z ~ 1 (von Neumann).
struct EntropyParams {
  double q = 0.5;
  double z = 0.5;

  static EntropyParams sharma_mittal(double q, double z) { return {q, z}; }
  static EntropyParams renyi(double q) { return {q, 1.0}; }
  static EntropyParams tsallis(double q) { return {q, q}; }
  static EntropyParams von_neumann() { return {1.0, 1.0}; }

  EntropyKind kind() const;
  /// True when the speed-limit bounds apply: 0 < q < 1 together with
  /// q < z < 1, the Renyi line, or the Tsallis boundary z = q.
  bool qsl_valid() const;
  bool tsallis_boundary() const;
};

/// Thrown by g_weight when the weight argument falls at or below the
/// floor kWeightFloor; carries the offending value so callers can mark
/// the corresponding bound as trivial instead of propagating overflow.
class WeightDivergence : public std::runtime_error {
 public:
  explicit WeightDivergence(double s);
  double s() const { return s_; }

 private:
  double s_;
};

/// q-purity h_q = sum_i w_i^q over the nonzero spectrum, q > 0.
double q_purity(const RealVector& spectrum, double q);

/// Sharma-Mittal entropy [h_q^{(1-z)/(1-q)} - 1] / (1 - z). Rejects q or z
/// exactly at 1; entropy_auto routes those onto the limit forms.
double sharma_mittal_entropy(const RealVector& spectrum, double q, double z);

/// Renyi entropy ln(h_q) / (1 - q), q > 0, q != 1.
double renyi_entropy(const RealVector& spectrum, double q);

/// Tsallis entropy (h_q - 1) / (1 - q), q > 0, q != 1.
double tsallis_entropy(const RealVector& spectrum, double q);

/// von Neumann entropy -sum w ln w with 0 ln 0 := 0.
double von_neumann_entropy(const RealVector& spectrum);

/// Dispatches to the family member selected by params.kind().
double entropy_auto(const RealVector& spectrum, const EntropyParams& params);

/// Weight g_q[s] = (1 - q + s) s^{q-2} / (1 - q) for 0 < q < 1, s above the
/// floor. Diverges as s -> 0; see WeightDivergence.
double g_weight(double s, double q);

enum class WeightRegion { WeightLeqOne, WeightGeqOne, Undefined };

/// Sign regime of [h_q]^{(q-z)/(1-q)} in the (q, z) plane. Undefined on the
/// q = 1 and z = 1 lines and for q <= 0.
WeightRegion classify_region(double q, double z);

}  // namespace smqsl
