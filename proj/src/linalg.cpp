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

#include "gateport/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace gateport {

Mat2 pauli(Pauli p) {
  Mat2 m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -kI, kI, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

char pauli_char(Pauli p) {
  static constexpr char names[] = {'I', 'X', 'Y', 'Z'};
  return names[static_cast<int>(p)];
}

std::string PauliPair::label() const {
  return {pauli_char(first), pauli_char(second)};
}

Mat4 pauli_pair(PauliPair pp) { return tensor(pauli(pp.first), pauli(pp.second)); }

Mat2 hadamard() {
  Mat2 h;
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

Mat2 phase_s() {
  Mat2 s;
  s << 1, 0, 0, kI;
  return s;
}

Mat2 phase_t() {
  Mat2 t;
  t << 1, 0, 0, std::polar(1.0, kPi / 4);
  return t;
}

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return r;
}

Mat4 dagger(const Mat4& m) { return m.adjoint(); }

double unitarity_defect(const MatX& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m.adjoint() * m - MatX::Identity(m.rows(), m.cols())).norm();
}

bool is_unitary(const MatX& m, double tol) {
  if (!m.allFinite()) return false;
  return unitarity_defect(m) <= tol;
}

Complex aligning_phase(const MatX& a, const MatX& b) {
  Eigen::Index r = 0, c = 0;
  if (b.cwiseAbs().maxCoeff(&r, &c) == 0.0) return 1.0;
  const Complex ratio = a(r, c) / b(r, c);
  const double mag = std::abs(ratio);
  return mag == 0.0 ? Complex{1.0} : ratio / mag;
}

bool equal_up_to_global_phase(const MatX& a, const MatX& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - aligning_phase(a, b) * b).norm() <= tol;
}

Svd4 svd(const Mat4& m) {
  Eigen::JacobiSVD<Mat4> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Svd4 out;
  out.u = solver.matrixU();
  out.v_adjoint = solver.matrixV().adjoint();
  for (int i = 0; i < 4; ++i) out.singular_values[i] = solver.singularValues()(i);
  return out;
}

Mat4 principal_sqrt(const Mat4& m, double tol) {
  if (!is_unitary(m, tol)) throw_numerical("principal_sqrt: input is not unitary");
  // A unitary is normal, so its Schur form is diagonal up to rounding.
  Eigen::ComplexSchur<Mat4> schur(m);
  const Mat4& q = schur.matrixU();
  const Mat4& t = schur.matrixT();
  Mat4 root_diag = Mat4::Zero();
  for (int i = 0; i < 4; ++i) {
    double theta = std::arg(t(i, i));
    // arg(-1 - 0i) is -pi; the principal branch takes +pi there.
    if (theta <= -kPi + 1e-12) theta = kPi;
    root_diag(i, i) = std::polar(1.0, theta / 2);
  }
  return q * root_diag * q.adjoint();
}

MatX haar_random_unitary(int dim, std::uint64_t seed) {
  if (dim != 2 && dim != 4) throw_usage("haar_random_unitary: dim must be 2 or 4");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));
  MatX z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<MatX> qr(z);
  MatX q = qr.householderQ();
  const MatX r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag == 0.0 ? Complex{1.0} : d / mag;
  }
  return q;
}

}  // namespace gateport
