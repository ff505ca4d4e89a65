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

#include "gateport/fourway.hpp"

#include <cmath>
#include <vector>

#include "gateport/bases.hpp"
#include "gateport/gates.hpp"
#include "gateport/kak.hpp"
#include "gateport/simulator.hpp"

namespace gateport {
namespace {

bool paulis_up_to_phase(const BetaMatrices& betas) {
  for (const Mat2& b : betas.mats) {
    bool found = false;
    for (int p = 0; p < 4 && !found; ++p)
      found = equal_up_to_global_phase(b, pauli(static_cast<Pauli>(p)), 1e-9);
    if (!found) return false;
  }
  return true;
}

Vec4 bell_vector(int idx) { return bell_basis().vectors[idx]; }

}  // namespace

StateVec chi_state() {
  StateVec v = StateVec::Zero(16);
  const double a = 1 / (2 * std::sqrt(2.0));
  v(0b0000) = a;
  v(0b0011) = -a;
  v(0b0101) = -a;
  v(0b0110) = a;
  v(0b1001) = a;
  v(0b1010) = a;
  v(0b1100) = a;
  v(0b1111) = a;
  return v;
}

Mat4 u1_gate() { return gates::u1_gate(); }

std::optional<PauliTerm> as_pauli_term(const Mat4& op, double tol) {
  for (int s = 0; s < 16; ++s) {
    const PauliPair pp = PauliPair::from_index(s);
    const Mat4 p = pauli_pair(pp);
    const Complex c = (p * op).trace() / 4.0;
    if (std::abs(std::abs(c) - 1.0) <= tol && (op - c * p).norm() <= tol)
      return PauliTerm{pp, c / std::abs(c)};
  }
  return std::nullopt;
}

Mat2 single_qubit_marginal(const StateVec& state, int num_qubits, int qubit) {
  Mat2 rho = Mat2::Zero();
  const unsigned mask = 1u << (num_qubits - 1 - qubit);
  for (unsigned i = 0; i < static_cast<unsigned>(state.size()); ++i) {
    if (i & mask) continue;
    const Complex a0 = state(i), a1 = state(i | mask);
    rho(0, 0) += a0 * std::conj(a0);
    rho(0, 1) += a0 * std::conj(a1);
    rho(1, 0) += a1 * std::conj(a0);
    rho(1, 1) += a1 * std::conj(a1);
  }
  return rho;
}

FourwayReport analyze_fourway(const Mat4& u_t, const MeasurementBasis& basis, const Vec4& psi_ab,
                              double tol) {
  if (!is_unitary(u_t, kUnitarityTol)) throw_numerical("analyze_fourway: u_t is not unitary");
  if (!is_orthonormal(basis)) throw_numerical("analyze_fourway: basis is not orthonormal");
  if (std::abs(psi_ab.norm() - 1.0) > 1e-9) throw_numerical("analyze_fourway: psi_ab is not normalized");

  const Mat4 u = u_t * u1_gate();
  const BetaMatrices betas = beta_matrices(basis);
  bool capable = true;
  for (const Mat2& b : betas.mats) capable = capable && is_unitary(b, kUnitarityTol);

  FourwayReport report;
  report.clifford_case = capable && is_clifford(u) && paulis_up_to_phase(betas);

  const std::array<Vec4, 16> outs = resource_gate_outputs(psi_ab, u_t, basis, chi_state(), kChiPlacement);
  const Mat4 xx = pauli_pair(Pauli::X, Pauli::X);
  const Mat4 zz = pauli_pair(Pauli::Z, Pauli::Z);
  const Vec4 target = u_t * psi_ab;

  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      FourwayOutcome& o = report.outcomes[4 * j + k];
      const Mat4 beta = tensor(betas.mats[j], betas.mats[k]);
      o.branch_xx = u * xx * beta * u.adjoint();
      o.branch_zz = u * zz * beta * u.adjoint();
      std::vector<std::pair<Mat2, Mat2>> candidates = {{Mat2::Identity(), Mat2::Identity()}};
      for (const Mat4* branch : {&o.branch_xx, &o.branch_zz}) {
        if (!capable) break;
        const TensorFactorization f = tensor_factorize(*branch, tol);
        const bool sep = f.separable;
        (branch == &o.branch_xx ? o.branch_xx_separable : o.branch_zz_separable) = sep;
        const auto [a, b] = sep ? std::make_pair(*f.factor_a, *f.factor_b) : leading_product_factors(*branch);
        candidates.emplace_back(a.adjoint(), b.adjoint());
      }
      o.pauli_xx = as_pauli_term(o.branch_xx);
      o.pauli_zz = as_pauli_term(o.branch_zz);

      o.probability = outs[4 * j + k].squaredNorm();
      report.total_probability += o.probability;
      if (o.probability <= 1e-14) continue;
      o.output = outs[4 * j + k].normalized();

      const Vec4 predicted = u * (xx + zz) * beta * psi_ab;
      if (predicted.norm() > 1e-12) {
        const Vec4 pn = predicted.normalized();
        const Complex c = pn.dot(o.output);  // <pn|out>
        o.structure_error = (o.output - (std::abs(c) > 0 ? c / std::abs(c) : Complex{1.0}) * pn).norm();
      } else {
        o.structure_error = o.output.norm();
      }
      report.max_structure_error = std::max(report.max_structure_error, o.structure_error);

      for (const auto& [a, b] : candidates)
        o.corrected_fidelity = std::max(o.corrected_fidelity, std::norm(target.dot(tensor(a, b) * o.output)));
      report.max_corrected_fidelity = std::max(report.max_corrected_fidelity, o.corrected_fidelity);

      for (int i = 0; i < 4; ++i) o.nonzero_terms += std::abs(o.output(i)) > 1e-9 ? 1 : 0;
      for (int b = 0; b < 4 && !o.is_bell_state; ++b)
        o.is_bell_state = std::abs(std::abs(bell_vector(b).dot(o.output)) - 1.0) <= 1e-9;
    }
  }
  return report;
}

}  // namespace gateport
