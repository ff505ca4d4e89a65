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

#include "gateport/bases.hpp"

#include <cmath>

#include "gateport/kak.hpp"

namespace gateport {
namespace {

Vec4 vec(Complex a, Complex b, Complex c, Complex d) {
  Vec4 v;
  v << a, b, c, d;
  return v;
}

}  // namespace

MeasurementBasis bell_basis() {
  const double r = 1 / std::sqrt(2.0);
  return {{vec(r, 0, 0, r), vec(0, r, r, 0), vec(r, 0, 0, -r), vec(0, r, -r, 0)}, "bell"};
}

MeasurementBasis m1_basis() {
  return {{vec(-0.5, 0.5, 0.5, 0.5), vec(-0.5, 0.5, -0.5, -0.5), vec(-0.5, -0.5, 0.5, -0.5),
           vec(0.5, 0.5, 0.5, -0.5)},
          "m1"};
}

MeasurementBasis m2_basis() {
  const double r = 1 / std::sqrt(2.0);
  const Complex ir = kI * r;
  return {{vec(ir, 0, 0, r), vec(0, -ir, ir, 0), vec(0, r, r, 0), vec(r, 0, 0, ir)}, "m2"};
}

MeasurementBasis beta_ab_basis(double a, double b) {
  if (std::abs(a * a + b * b - 0.5) > 1e-9)
    throw_numerical("beta_ab_basis: parameters must satisfy a^2 + b^2 = 1/2");
  return {{vec(-a, b, b, a), vec(-b, a, -a, -b), vec(-a, -b, b, -a), vec(b, a, a, -b)},
          "beta_ab"};
}

MeasurementBasis beta_nl_basis(double theta1, double theta2, double theta3) {
  const Mat4 core = nonlocal_core({theta1, theta2, theta3});
  MeasurementBasis out;
  out.name = "beta_nl";
  for (int j = 0; j < 4; ++j) out.vectors[j] = core.col(j);
  return out;
}

MeasurementBasis basis_from_gate_form(const std::array<Mat2, 4>& mats, std::string name) {
  // gate_form(r, c) = sqrt(2) conj(v(2c + r))  =>  v(2x + y) = conj(m(y, x)) / sqrt(2)
  MeasurementBasis out;
  out.name = std::move(name);
  for (int j = 0; j < 4; ++j)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        out.vectors[j](2 * x + y) = std::conj(mats[j](y, x)) / std::sqrt(2.0);
  return out;
}

MeasurementBasis conjugated_pauli_basis(const Mat2& u_r) {
  if (!is_unitary(u_r, kUnitarityTol)) throw_numerical("conjugated_pauli_basis: u_r is not unitary");
  std::array<Mat2, 4> mats;
  for (int j = 0; j < 4; ++j) mats[j] = u_r.adjoint() * pauli(static_cast<Pauli>(j)) * u_r;
  return basis_from_gate_form(mats, "pauli_conj");
}

MeasurementBasis u_shifted_basis(const Mat4& u, double phase) {
  if (!is_unitary(u, kUnitarityTol)) throw_numerical("u_shifted_basis: u is not unitary");
  const Complex w = std::exp(kI * phase);
  const double r = 1 / std::sqrt(2.0);
  MeasurementBasis out;
  out.name = "u_shifted";
  out.vectors[0] = r * (u.col(0) + w * u.col(3));
  out.vectors[1] = r * (u.col(0) - w * u.col(3));
  out.vectors[2] = r * (u.col(1) + w * u.col(2));
  out.vectors[3] = r * (u.col(1) - w * u.col(2));
  return out;
}

BetaMatrices beta_matrices(const MeasurementBasis& basis, const Mat4& u_front,
                           BetaConvention convention) {
  BetaMatrices out;
  out.convention = convention;
  const double scale = convention == BetaConvention::GateForm ? std::sqrt(2.0) : 1.0;
  for (int j = 0; j < 4; ++j) {
    // overlaps(k) = <b_j| U |k>
    const Vec4 overlaps = (basis.vectors[j].adjoint() * u_front).transpose();
    Mat2& m = out.mats[j];
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        m(r, c) = convention == BetaConvention::StateForm ? overlaps(2 * r + c)
                                                          : scale * overlaps(2 * c + r);
  }
  return out;
}

bool is_orthonormal(const MeasurementBasis& basis, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex ip = basis.vectors[i].dot(basis.vectors[j]);  // conjugates the bra
      if (std::abs(ip - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  return true;
}

double reshape_det_abs(const Vec4& v) { return std::abs(v(0) * v(3) - v(1) * v(2)); }

BasisReport validate_basis(const MeasurementBasis& basis, double tol) {
  BasisReport r;
  r.orthonormal = is_orthonormal(basis, tol);
  const BetaMatrices betas = beta_matrices(basis);
  r.all_beta_unitary = true;
  for (int j = 0; j < 4; ++j) {
    r.per_vector_entanglement[j] = reshape_det_abs(basis.vectors[j]);
    r.all_beta_unitary = r.all_beta_unitary && is_unitary(betas.mats[j], tol);
  }
  return r;
}

}  // namespace gateport
