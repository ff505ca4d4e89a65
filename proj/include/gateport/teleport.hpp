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

#ifndef GATEPORT_TELEPORT_HPP
#define GATEPORT_TELEPORT_HPP

#include <array>
#include <optional>
#include <utility>

#include "gateport/bases.hpp"
#include "gateport/kak.hpp"
#include "gateport/linalg.hpp"
#include "gateport/resource.hpp"
#include "gateport/separability.hpp"

namespace gateport {

/// M^dagger M within this Frobenius distance of p I counts as proportional.
inline constexpr double kTeleportableTol = 1e-8;

struct StateOutcome {
  Mat2 m_matrix;             // psi * beta_U,j (state form)
  double probability = 0.0;  // tr(M^dagger M) / 2
  bool teleportable = false;
  std::optional<Mat2> correction;  // V_j = M_j / sqrt(p_j); the receiver applies V_j^dagger
};

struct StateTeleportReport {
  std::array<StateOutcome, 4> outcomes;
  bool deterministic = false;
  double entanglement = 0.0;  // |det psi|
};

StateTeleportReport analyze_state_teleport(const ResourceState& resource, const Mat4& u_front,
                                           const MeasurementBasis& basis,
                                           double tol = kTeleportableTol);

struct GateOutcome {
  Mat4 w_matrix;  // u_t (beta_j (x) beta_k) u_t^dagger
  bool separable = false;
  /// W = e^{i phase} (first (x) second); the receiver applies the adjoints.
  std::optional<std::pair<Mat2, Mat2>> corrections;
  double phase = 0.0;
  std::array<double, 4> schmidt_values{};
};

struct GateTeleportReport {
  std::array<GateOutcome, 16> outcomes;  // index 4 (j - 1) + (k - 1)
  bool basis_capable = false;            // every gate-form beta unitary
  int n_separable = 0;
  double success_probability = 0.0;  // n_separable / 16
  bool deterministic = false;

  /// Adjoint factors of each separable W, ready for the simulator.
  std::array<std::optional<std::pair<Mat2, Mat2>>, 16> applied_corrections() const;
};

GateTeleportReport analyze_gate_teleport(const Mat4& u_t, const MeasurementBasis& basis,
                                         const Mat4& u_front = Mat4::Identity(),
                                         double tol = kSeparabilityTol);

/// The 16 factor pairs of T(phi, xi) (beta_j (x) beta_k) T^dagger under M2, in
/// symbolic closed form (P = diag(1, i), V_a = [[0, -i e^{-ia}], [i e^{ia}, 0]]).
/// Entry (4, 2) is iP (x) -V_phi Z; as printed in the source table its factors
/// appear in the opposite order.
std::array<std::pair<Mat2, Mat2>, 16> table2_factors(double phi, double xi);

/// Symbolic text of each table2_factors entry, e.g. {"V_xi", "-V_phi Z"}.
std::array<std::pair<const char*, const char*>, 16> table2_labels();

enum class Theorem1Conclusion { Deterministic, NotCovered };

struct Theorem1Outcome {
  // Euler angles of the conjugated factors C beta_j C^dagger and D beta_k D^dagger.
  LocalEulerAngles first;
  LocalEulerAngles second;
  // Lattice witnesses: lambda_i = n_i pi for the first factor, m_i pi for the second.
  std::array<std::optional<int>, 3> n{};
  std::array<std::optional<int>, 3> m{};
  bool pattern_met = false;
};

struct Theorem1Verdict {
  KakDecomposition kak;
  NonlocalClass nonlocal;
  bool basis_capable = false;
  bool condition1_met = false;
  bool condition2_met = false;
  /// Which Euler pattern condition 1 demands: "all", "middle", "outer",
  /// "local" (no non-local part) or "none" when the angles are off-lattice.
  const char* condition1_case = "none";
  std::array<Theorem1Outcome, 16> outcomes;
  Theorem1Conclusion conclusion = Theorem1Conclusion::NotCovered;
};

Theorem1Verdict theorem1_check(const Mat4& u_t, const MeasurementBasis& basis,
                               double tol = kAngleTol);

/// Rows: CNOT, C_pi8, CNOT^(1/2), SWAP^(1/2), exp(i pi/4 YY).
/// Columns: M_Bell, M1, M2.
std::array<std::array<double, 3>, 5> reproduce_table1();

}  // namespace gateport

#endif  // GATEPORT_TELEPORT_HPP
