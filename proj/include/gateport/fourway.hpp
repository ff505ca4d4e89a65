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

#ifndef GATEPORT_FOURWAY_HPP
#define GATEPORT_FOURWAY_HPP

#include <array>
#include <optional>

#include "gateport/bases.hpp"
#include "gateport/linalg.hpp"
#include "gateport/separability.hpp"

namespace gateport {

/// Register placement of the four chi qubits in the gate circuit: chi qubits
/// 0 and 3 pair with inputs 0 and 1 for measurement, chi qubits 1 and 2 carry
/// the outputs.
inline constexpr std::array<int, 4> kChiPlacement = {2, 3, 5, 4};

/// (|0000> - |0011> - |0101> + |0110> + |1001> + |1010> + |1100> + |1111>) / (2 sqrt 2).
StateVec chi_state();

/// diag(1, 1, -1, 1).
Mat4 u1_gate();

struct PauliTerm {
  PauliPair pauli;
  Complex phase;  // operator = phase * pauli
};

struct FourwayOutcome {
  double probability = 0.0;
  Vec4 output = Vec4::Zero();  // normalized conditional state on the outputs
  Mat4 branch_xx;              // U s_XX beta_jk U^dagger, U = u_t u1
  Mat4 branch_zz;              // U s_ZZ beta_jk U^dagger
  bool branch_xx_separable = false;
  bool branch_zz_separable = false;
  std::optional<PauliTerm> pauli_xx;  // set when the branch is a Pauli pair
  std::optional<PauliTerm> pauli_zz;
  /// Distance between the simulated output and the normalized
  /// u_t u1 (s_XX + s_ZZ) beta_jk |psi>, after phase alignment.
  double structure_error = 0.0;
  /// Best fidelity to u_t |psi> over the candidate local corrections.
  double corrected_fidelity = 0.0;
  int nonzero_terms = 0;  // computational amplitudes above 1e-9
  bool is_bell_state = false;
};

struct FourwayReport {
  std::array<FourwayOutcome, 16> outcomes;  // index 4 (j - 1) + (k - 1)
  bool clifford_case = false;               // U Clifford and every beta a Pauli up to phase
  double max_corrected_fidelity = 0.0;
  double max_structure_error = 0.0;
  double total_probability = 0.0;
};

FourwayReport analyze_fourway(const Mat4& u_t, const MeasurementBasis& basis, const Vec4& psi_ab,
                              double tol = kSeparabilityTol);

/// Reduced density matrix of one qubit of a normalized multi-qubit state.
Mat2 single_qubit_marginal(const StateVec& state, int num_qubits, int qubit);

/// Pauli pair p with op = c p, |c| = 1, if any.
std::optional<PauliTerm> as_pauli_term(const Mat4& op, double tol = 1e-9);

}  // namespace gateport

#endif  // GATEPORT_FOURWAY_HPP
