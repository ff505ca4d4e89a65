// Copyright 2026 The gateport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATEPORT_SEPARABILITY_HPP
#define GATEPORT_SEPARABILITY_HPP

#include <array>
#include <optional>

#include "gateport/linalg.hpp"

namespace gateport {

/// Second operator Schmidt coefficient at or below this counts as zero.
inline constexpr double kSeparabilityTol = 1e-7;

struct TensorFactorization {
  bool separable = false;
  std::optional<Mat2> factor_a;
  std::optional<Mat2> factor_b;
  double phase = 0.0;  // w = e^{i phase} (factor_a (x) factor_b) when separable
  std::array<double, 4> schmidt_values{};
};

/// Realignment of a 4x4 operator: R(2a+c, 2b+d) = w(2a+b, 2c+d). A product
/// A (x) B realigns to vec(A) vec(B)^T with row-major vec.
Mat4 realign(const Mat4& w);

/// Operator Schmidt coefficients, descending, normalized to unit 2-norm.
std::array<double, 4> operator_schmidt(const Mat4& w);

/// Decides whether a unitary w factors as e^{i phi} A (x) B and extracts the
/// factors. A and B are unitary; each is gauged so its largest-magnitude
/// entry is real and positive, the leftover phase goes to `phase`.
TensorFactorization tensor_factorize(const Mat4& w, double tol = kSeparabilityTol);

/// Unitary factors closest to the leading Schmidt term of w. Used to pick a
/// best-effort local correction when w is not a product.
std::pair<Mat2, Mat2> leading_product_factors(const Mat4& w);

/// exp(i angle P) for a Pauli pair P (P^2 = I).
Mat4 pauli_exp(PauliPair p, double angle);

/// The conjugations e^{i theta s_ll} e^{-i (lambda/2) s_g} e^{-i theta s_ll}.
/// kind 1: s_g = ZI, kind 2: IZ, label l in {X, Y};
/// kind 3: s_g = YI, kind 4: IY, label l in {X, Z}.
/// A nullopt label selects X.
Mat4 w_witness(int kind, double theta, double lambda,
               std::optional<Pauli> label = std::nullopt);

/// Closed-form separability predicate for the witnesses:
/// |sin(lambda/2) sin(2 theta) (e^{i lambda/2} sin^2 theta + e^{-i lambda/2} cos^2 theta)| <= 1e-10.
bool eq44_separable(double theta, double lambda);
double eq44_residual(double theta, double lambda);

}  // namespace gateport

#endif  // GATEPORT_SEPARABILITY_HPP
