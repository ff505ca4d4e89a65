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

#include "gateport/gates.hpp"

#include "gateport/separability.hpp"

namespace gateport::gates {
namespace {

Mat4 permutation(const int (&image)[4]) {
  // column k carries |k> to |image[k]>
  Mat4 m = Mat4::Zero();
  for (int k = 0; k < 4; ++k) m(image[k], k) = 1;
  return m;
}

}  // namespace

Mat4 cnot() { return permutation({0, 1, 3, 2}); }
Mat4 swap() { return permutation({0, 2, 1, 3}); }
Mat4 q_gate() { return permutation({3, 1, 2, 0}); }

Mat4 r_gate() {
  Mat4 m;
  m << 0, 0, 1, 0,  //
      1, 0, 0, 0,   //
      0, 0, 0, 1,   //
      0, 1, 0, 0;
  return m;
}

Mat4 cz() {
  Mat4 m = Mat4::Identity();
  m(3, 3) = -1;
  return m;
}

Mat4 c_pi8() {
  Mat4 m = Mat4::Identity();
  m(3, 3) = std::polar(1.0, kPi / 4);
  return m;
}

Mat4 cnot_sqrt() { return principal_sqrt(cnot()); }
Mat4 swap_sqrt() { return principal_sqrt(swap()); }
Mat4 exp_yy() { return pauli_exp({Pauli::Y, Pauli::Y}, kPi / 4); }

Mat4 t_gate(double phi, double xi) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = kI;
  m(1, 1) = std::polar(1.0, phi);
  m(2, 2) = std::polar(1.0, xi);
  m(3, 3) = kI * std::polar(1.0, phi + xi);
  return m;
}

Mat4 u1_gate() {
  Mat4 m = Mat4::Identity();
  m(2, 2) = -1;
  return m;
}

}  // namespace gateport::gates
