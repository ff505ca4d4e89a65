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

#include "gateport/separability.hpp"

#include <cmath>

namespace gateport {
namespace {

Mat2 unvec(const Vec4& v) {
  Mat2 m;
  m << v(0), v(1), v(2), v(3);
  return m;
}

Mat2 polar_unitary(const Mat2& m) {
  Eigen::JacobiSVD<Mat2> s(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return s.matrixU() * s.matrixV().adjoint();
}

// Unitary 2x2 matrices have entries of pairwise equal magnitude, so "largest"
// means the first entry in row-major order within 1e-9 of the maximum.
Complex unit_phase_of_largest(const Mat2& m) {
  const double top = m.cwiseAbs().maxCoeff();
  if (top == 0.0) return Complex{1.0};
  for (int i = 0; i < 4; ++i) {
    const Complex z = m(i / 2, i % 2);
    if (std::abs(z) >= top - 1e-9) return z / std::abs(z);
  }
  return Complex{1.0};
}

}  // namespace

Mat4 realign(const Mat4& w) {
  Mat4 r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) r(2 * a + c, 2 * b + d) = w(2 * a + b, 2 * c + d);
  return r;
}

std::array<double, 4> operator_schmidt(const Mat4& w) {
  const Svd4 s = svd(realign(w));
  double norm = 0.0;
  for (double v : s.singular_values) norm += v * v;
  norm = std::sqrt(norm);
  std::array<double, 4> out{};
  if (norm == 0.0) return out;
  for (int i = 0; i < 4; ++i) out[i] = s.singular_values[i] / norm;
  return out;
}

std::pair<Mat2, Mat2> leading_product_factors(const Mat4& w) {
  const Svd4 s = svd(realign(w));
  const Mat2 a = unvec(s.u.col(0));
  const Mat2 b = unvec(s.v_adjoint.row(0).transpose());
  return {polar_unitary(a), polar_unitary(b)};
}

TensorFactorization tensor_factorize(const Mat4& w, double tol) {
  if (!(tol > 0.0)) throw_usage("tensor_factorize: tol must be positive");
  if (!is_unitary(w, kUnitarityTol)) throw_numerical("tensor_factorize: input is not unitary");

  TensorFactorization out;
  const Svd4 s = svd(realign(w));
  double norm = 0.0;
  for (double v : s.singular_values) norm += v * v;
  norm = std::sqrt(norm);
  for (int i = 0; i < 4; ++i) out.schmidt_values[i] = s.singular_values[i] / norm;
  out.separable = out.schmidt_values[1] <= tol;
  if (!out.separable) return out;

  // Leading term s0 u0 v0^dagger; for a unitary product s0 = 2 and the
  // reshaped vectors have unit Frobenius norm, so sqrt(2) restores unitarity.
  Mat2 a = std::sqrt(2.0) * unvec(s.u.col(0));
  Mat2 b = std::sqrt(2.0) * unvec(s.v_adjoint.row(0).transpose());
  a /= unit_phase_of_largest(a);
  b /= unit_phase_of_largest(b);
  const Mat4 ab = tensor(a, b);
  const Complex c = aligning_phase(w, ab);
  out.phase = std::arg(c);
  out.factor_a = a;
  out.factor_b = b;
  return out;
}

Mat4 pauli_exp(PauliPair p, double angle) {
  return std::cos(angle) * Mat4::Identity() + kI * std::sin(angle) * pauli_pair(p);
}

Mat4 w_witness(int kind, double theta, double lambda, std::optional<Pauli> label) {
  const Pauli l = label.value_or(Pauli::X);
  PauliPair generator;
  switch (kind) {
    case 1: generator = {Pauli::Z, Pauli::I}; break;
    case 2: generator = {Pauli::I, Pauli::Z}; break;
    case 3: generator = {Pauli::Y, Pauli::I}; break;
    case 4: generator = {Pauli::I, Pauli::Y}; break;
    default: throw_usage("w_witness: kind must be 1..4");
  }
  const bool mu_kind = kind <= 2;
  if (mu_kind && l != Pauli::X && l != Pauli::Y)
    throw_usage("w_witness: label for W1/W2 must be X or Y");
  if (!mu_kind && l != Pauli::X && l != Pauli::Z)
    throw_usage("w_witness: label for W3/W4 must be X or Z");
  const PauliPair ll{l, l};
  return pauli_exp(ll, theta) * pauli_exp(generator, -lambda / 2) * pauli_exp(ll, -theta);
}

double eq44_residual(double theta, double lambda) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const Complex bracket =
      std::polar(1.0, lambda / 2) * (s * s) + std::polar(1.0, -lambda / 2) * (c * c);
  return std::abs(std::sin(lambda / 2) * std::sin(2 * theta) * bracket);
}

bool eq44_separable(double theta, double lambda) { return eq44_residual(theta, lambda) <= 1e-10; }

}  // namespace gateport
