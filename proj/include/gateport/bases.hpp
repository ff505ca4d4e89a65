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

#ifndef GATEPORT_BASES_HPP
#define GATEPORT_BASES_HPP

#include <array>
#include <string>

#include "gateport/linalg.hpp"

namespace gateport {

/// Four two-qubit vectors, outcome j = 1..4 in stored order.
struct MeasurementBasis {
  std::array<Vec4, 4> vectors;
  std::string name;
};

/// Layout of the induced 2x2 overlap matrices.
///  state_form: m(r, c) = <b_j| U |r c>             (single-qubit teleportation)
///  gate_form:  m(r, c) = sqrt(2) <b_j| U |c r>     (gate teleportation)
enum class BetaConvention { StateForm, GateForm };

struct BetaMatrices {
  std::array<Mat2, 4> mats;
  BetaConvention convention = BetaConvention::GateForm;
};

struct BasisReport {
  bool orthonormal = false;
  bool all_beta_unitary = false;
  std::array<double, 4> per_vector_entanglement{};  // |det| of the 2x2 reshape
  /// Basis can teleport some gate: orthonormal with every beta unitary.
  bool capable() const { return orthonormal && all_beta_unitary; }
};

MeasurementBasis bell_basis();
MeasurementBasis m1_basis();
MeasurementBasis m2_basis();

/// Real family parametrized by a^2 + b^2 = 1/2. Throws on violation beyond 1e-9.
MeasurementBasis beta_ab_basis(double a, double b);

/// Columns of exp(i(t1 XX + t2 YY + t3 ZZ)).
MeasurementBasis beta_nl_basis(double theta1, double theta2, double theta3);

/// Basis whose gate-form matrices are u_r^dagger s_j u_r for s_j = I, X, Y, Z.
MeasurementBasis conjugated_pauli_basis(const Mat2& u_r);

/// {(|U00> + w|U11>), (|U00> - w|U11>), (|U01> + w|U10>), (|U01> - w|U10>)} / sqrt(2)
/// with |Uxy> = u|xy> and w = e^{i phase}. phase = 0 gives Pauli corrections
/// for a Bell resource with u in front of the measurement.
MeasurementBasis u_shifted_basis(const Mat4& u, double phase = 0.0);

/// Basis whose gate-form matrices (with U = I) are the given matrices.
/// Inverse of beta_matrices(., I, GateForm).
MeasurementBasis basis_from_gate_form(const std::array<Mat2, 4>& mats, std::string name = {});

BetaMatrices beta_matrices(const MeasurementBasis& basis, const Mat4& u_front = Mat4::Identity(),
                           BetaConvention convention = BetaConvention::GateForm);

bool is_orthonormal(const MeasurementBasis& basis, double tol = kUnitarityTol);

/// |det| of the 2x2 reshape (psi_00 psi_11 - psi_01 psi_10).
double reshape_det_abs(const Vec4& v);

BasisReport validate_basis(const MeasurementBasis& basis, double tol = kUnitarityTol);

}  // namespace gateport

#endif  // GATEPORT_BASES_HPP
