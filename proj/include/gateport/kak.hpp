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

#ifndef GATEPORT_KAK_HPP
#define GATEPORT_KAK_HPP

#include <array>

#include "gateport/linalg.hpp"

namespace gateport {

/// Angle tolerance for lattice classification of the non-local triple.
inline constexpr double kAngleTol = 1e-8;

/// u = e^{i global_phase} (a (x) b) exp(i(t1 XX + t2 YY + t3 ZZ)) (c (x) d),
/// with pi/4 >= t1 >= t2 >= |t3| and t3 >= 0 whenever t1 = pi/4.
struct KakDecomposition {
  double global_phase = 0.0;
  Mat2 a_local = Mat2::Identity();
  Mat2 b_local = Mat2::Identity();
  std::array<double, 3> theta{};
  Mat2 c_local = Mat2::Identity();
  Mat2 d_local = Mat2::Identity();
};

/// u = e^{i phase} Rz(lambda1) Ry(lambda2) Rz(lambda3), R_a(t) = exp(-i t s_a / 2).
struct LocalEulerAngles {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double phase = 0.0;
};

struct NonlocalClass {
  std::array<bool, 3> delta{};           // angle not on the 0 mod pi/2 lattice
  std::array<bool, 3> odd_quarter_pi{};  // angle = pi/4 mod pi/2
  /// Nearest odd multiple index k for angles with odd_quarter_pi set:
  /// theta = (2k+1) pi/4.
  std::array<int, 3> k{};
  bool is_swap_point = false;
  /// Some delta angle sits on neither lattice.
  bool generic_angle = false;
};

/// exp(i(t1 XX + t2 YY + t3 ZZ)).
Mat4 nonlocal_core(const std::array<double, 3>& theta);

KakDecomposition kak_decompose(const Mat4& u, double tol = kUnitarityTol);
Mat4 kak_reconstruct(const KakDecomposition& d);

NonlocalClass classify_nonlocal(const std::array<double, 3>& theta, double tol = kAngleTol);

LocalEulerAngles euler_zyz(const Mat2& u, double tol = kUnitarityTol);
Mat2 euler_reconstruct(const LocalEulerAngles& e);
Mat2 rz(double angle);
Mat2 ry(double angle);

/// Conjugation by u maps each of the 16 Pauli pairs to a Pauli pair up to phase.
bool is_clifford(const Mat4& u, double tol = 1e-9);

}  // namespace gateport

#endif  // GATEPORT_KAK_HPP
