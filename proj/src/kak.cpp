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

#include "gateport/kak.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "gateport/separability.hpp"

namespace gateport {
namespace {

// Columns: (|00>+|11>)/r2, i(|01>+|10>)/r2, (|01>-|10>)/r2, i(|00>-|11>)/r2.
// Local SU(2) x SU(2) becomes SO(4) in this basis and the non-local core is
// diagonal.
const Mat4& magic_basis() {
  static const Mat4 m = [] {
    Mat4 b;
    b << 1, 0, 0, kI,  //
        0, kI, 1, 0,   //
        0, kI, -1, 0,  //
        1, 0, 0, -kI;
    return Mat4(b / std::sqrt(2.0));
  }();
  return m;
}

double wrap_pi(double a) {
  a = std::remainder(a, 2 * kPi);  // [-pi, pi]
  if (a <= -kPi) a += 2 * kPi;
  return a;
}

// Real orthogonal P (det +1) with P^T m P diagonal, for complex symmetric
// unitary m. The real and imaginary parts of m commute, so a generic real
// combination of them shares their eigenvectors; retry a few mixing angles in
// case one maps two distinct eigenvalues onto the same number.
Eigen::Matrix4d simultaneous_real_eigenbasis(const Mat4& m) {
  const Eigen::Matrix4d re = m.real();
  const Eigen::Matrix4d im = m.imag();
  static constexpr double kMix[] = {0.6180339887498949, 1.2247448713915890, 0.3090169943749474,
                                    2.0943951023931953, 0.9159655941772190, 1.4142135623730951};
  Eigen::Matrix4d best = Eigen::Matrix4d::Identity();
  double best_off = std::numeric_limits<double>::infinity();
  for (double c : kMix) {
    const Eigen::Matrix4d s = std::cos(c) * re + std::sin(c) * im;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(s);
    Eigen::Matrix4d p = es.eigenvectors();
    const Mat4 d = p.transpose().cast<Complex>() * m * p.cast<Complex>();
    const double off = (d - Mat4(d.diagonal().asDiagonal())).norm();
    if (off < best_off) {
      best_off = off;
      best = p;
    }
    if (off < 1e-11) break;
  }
  if (best.determinant() < 0) best.col(0) = -best.col(0);
  return best;
}

std::pair<Mat2, Mat2> split_local(const Mat4& local) {
  const TensorFactorization f = tensor_factorize(local, 1e-6);
  if (!f.separable) throw_numerical("kak_decompose: local part failed to factor");
  return {*f.factor_a, *f.factor_b};
}

struct Working {
  Mat2 a, b, c, d;
  std::array<double, 3> t;
};

const Pauli kAxis[3] = {Pauli::X, Pauli::Y, Pauli::Z};

// exp(i t s_ii) = exp(i (t - pi/2) s_ii) (i s_ii): push s_i (x) s_i right.
void shift_quarter(Working& w, int i, int n) {
  w.t[i] -= n * kPi / 2;
  if (n % 2 != 0) {
    const Mat2 s = pauli(kAxis[i]);
    w.c = s * w.c;
    w.d = s * w.d;
  }
}

// Conjugating by s_k (x) I negates the two other angles.
void flip_pair(Working& w, int i, int j) {
  const int k = 3 - i - j;
  w.t[i] = -w.t[i];
  w.t[j] = -w.t[j];
  const Mat2 s = pauli(kAxis[k]);
  w.a = w.a * s;
  w.c = s * w.c;
}

// L (x) L with L exchanging s_i and s_j up to sign.
void swap_axes(Working& w, int i, int j) {
  if (i > j) std::swap(i, j);
  Mat2 l;
  if (i == 0 && j == 1) {
    l = phase_s();
  } else if (i == 0 && j == 2) {
    l = hadamard();
  } else {
    l << 1, -kI, -kI, 1;
    l /= std::sqrt(2.0);
  }
  std::swap(w.t[i], w.t[j]);
  w.a = w.a * l;
  w.b = w.b * l;
  w.c = l.adjoint() * w.c;
  w.d = l.adjoint() * w.d;
}

void canonicalize(Working& w) {
  for (int i = 0; i < 3; ++i) {
    const int n = static_cast<int>(std::lround(w.t[i] / (kPi / 2)));
    shift_quarter(w, i, n);
  }
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < 2; ++i)
      if (std::abs(w.t[i]) < std::abs(w.t[i + 1])) swap_axes(w, i, i + 1);

  if (w.t[0] < 0 && w.t[1] < 0) {
    flip_pair(w, 0, 1);
  } else if (w.t[0] < 0) {
    flip_pair(w, 0, 2);
  } else if (w.t[1] < 0) {
    flip_pair(w, 1, 2);
  }

  // On the t1 = pi/4 face, (pi/4, t2, t3) ~ (pi/4, t2, -t3); pick t3 >= 0.
  if (std::abs(w.t[0] - kPi / 4) <= kAngleTol && w.t[2] < 0) {
    shift_quarter(w, 0, 1);
    flip_pair(w, 0, 2);
  }
}

}  // namespace

Mat4 nonlocal_core(const std::array<double, 3>& theta) {
  return pauli_exp({Pauli::X, Pauli::X}, theta[0]) * pauli_exp({Pauli::Y, Pauli::Y}, theta[1]) *
         pauli_exp({Pauli::Z, Pauli::Z}, theta[2]);
}

KakDecomposition kak_decompose(const Mat4& u, double tol) {
  if (!is_unitary(u, tol)) throw_numerical("kak_decompose: input is not unitary");

  const Complex det = u.determinant();
  const Mat4 su = u * std::polar(1.0, -std::arg(det) / 4);
  const Mat4& mb = magic_basis();
  const Mat4 um = mb.adjoint() * su * mb;
  const Mat4 sym = um.transpose() * um;

  const Eigen::Matrix4d p = simultaneous_real_eigenbasis(sym);
  const Mat4 pc = p.cast<Complex>();
  const Mat4 diag = pc.transpose() * sym * pc;

  std::array<double, 4> phi{};
  double total = 0.0;
  for (int k = 0; k < 4; ++k) {
    phi[k] = std::arg(diag(k, k)) / 2;
    total += phi[k];
  }
  // sum(phi) is a multiple of pi; make it even so the left factor has det +1.
  if (std::lround(total / kPi) % 2 != 0) phi[0] += kPi;

  Mat4 inv_phase = Mat4::Zero();
  for (int k = 0; k < 4; ++k) inv_phase(k, k) = std::polar(1.0, -phi[k]);
  const Mat4 k1 = um * pc * inv_phase;

  const auto [a, b] = split_local(mb * k1 * mb.adjoint());
  const auto [c, d] = split_local(mb * pc.transpose() * mb.adjoint());

  // Magic-basis eigenphases of exp(i(t1 XX + t2 YY + t3 ZZ)) are
  // (t1-t2+t3, t1+t2-t3, -t1-t2-t3, -t1+t2+t3) on top of a common phase g.
  const double g = (phi[0] + phi[1] + phi[2] + phi[3]) / 4;
  Working w{a, b, c, d,
            {(phi[0] + phi[1]) / 2 - g, (phi[1] + phi[3]) / 2 - g, (phi[0] + phi[3]) / 2 - g}};
  canonicalize(w);

  KakDecomposition out;
  out.a_local = w.a;
  out.b_local = w.b;
  out.c_local = w.c;
  out.d_local = w.d;
  out.theta = w.t;
  const Mat4 bare = tensor(w.a, w.b) * nonlocal_core(w.t) * tensor(w.c, w.d);
  out.global_phase = std::arg(aligning_phase(u, bare));
  return out;
}

Mat4 kak_reconstruct(const KakDecomposition& d) {
  return std::polar(1.0, d.global_phase) * tensor(d.a_local, d.b_local) * nonlocal_core(d.theta) *
         tensor(d.c_local, d.d_local);
}

NonlocalClass classify_nonlocal(const std::array<double, 3>& theta, double tol) {
  NonlocalClass out;
  for (int i = 0; i < 3; ++i) {
    const double half = theta[i] / (kPi / 2);
    const bool zero = std::abs(half - std::round(half)) * (kPi / 2) <= tol;
    const double quarter = (theta[i] - kPi / 4) / (kPi / 2);
    const bool odd = std::abs(quarter - std::round(quarter)) * (kPi / 2) <= tol;
    out.delta[i] = !zero;
    out.odd_quarter_pi[i] = odd;
    // theta = (2k+1) pi/4  <=>  k = (4 theta / pi - 1) / 2
    out.k[i] = odd ? static_cast<int>(std::lround((4 * theta[i] / kPi - 1) / 2)) : 0;
    if (!zero && !odd) out.generic_angle = true;
  }
  out.is_swap_point = true;
  for (int i = 0; i < 3; ++i)
    out.is_swap_point = out.is_swap_point && std::abs(theta[i] - kPi / 4) <= tol;
  return out;
}

Mat2 rz(double angle) {
  Mat2 m;
  m << std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2);
  return m;
}

Mat2 ry(double angle) {
  Mat2 m;
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  m << c, -s, s, c;
  return m;
}

Mat2 euler_reconstruct(const LocalEulerAngles& e) {
  return std::polar(1.0, e.phase) * rz(e.lambda1) * ry(e.lambda2) * rz(e.lambda3);
}

LocalEulerAngles euler_zyz(const Mat2& u, double tol) {
  if (!is_unitary(u, tol)) throw_numerical("euler_zyz: input is not unitary");
  const Mat2 su = u * std::polar(1.0, -std::arg(u.determinant()) / 2);
  const double cos_half = std::abs(su(0, 0));
  const double sin_half = std::abs(su(1, 0));

  LocalEulerAngles e;
  e.lambda2 = 2 * std::atan2(sin_half, cos_half);
  constexpr double kTiny = 1e-14;
  if (sin_half <= kTiny) {
    e.lambda1 = wrap_pi(2 * std::arg(su(1, 1)));
  } else if (cos_half <= kTiny) {
    e.lambda1 = wrap_pi(2 * std::arg(su(1, 0)));
  } else {
    const double sum = 2 * std::arg(su(1, 1));
    const double diff = 2 * std::arg(su(1, 0));
    e.lambda1 = wrap_pi((sum + diff) / 2);
    e.lambda3 = wrap_pi((sum - diff) / 2);
  }
  const Mat2 bare = rz(e.lambda1) * ry(e.lambda2) * rz(e.lambda3);
  e.phase = std::arg(aligning_phase(u, bare));
  return e;
}

bool is_clifford(const Mat4& u, double tol) {
  for (int idx = 1; idx < 16; ++idx) {
    const Mat4 image = u * pauli_pair(PauliPair::from_index(idx)) * u.adjoint();
    int best = 0;
    double best_overlap = -1.0;
    for (int s = 0; s < 16; ++s) {
      const double overlap = std::abs((pauli_pair(PauliPair::from_index(s)) * image).trace());
      if (overlap > best_overlap) {
        best_overlap = overlap;
        best = s;
      }
    }
    if (!equal_up_to_global_phase(image, pauli_pair(PauliPair::from_index(best)), tol)) return false;
  }
  return true;
}

}  // namespace gateport
