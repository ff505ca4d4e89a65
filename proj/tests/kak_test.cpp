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

#include "doctest.h"
#include "gateport/gates.hpp"
#include "gateport/kak.hpp"
#include "gateport/separability.hpp"
#include "test_util.hpp"

using namespace gateport;
using gateport::testing::haar2;
using gateport::testing::haar4;

namespace {

double aligned_error(const Mat4& a, const Mat4& b) { return (a - aligning_phase(a, b) * b).norm(); }

void check_chamber(const std::array<double, 3>& t) {
  CHECK(t[0] <= kPi / 4 + 1e-9);
  CHECK(t[0] >= t[1] - 1e-9);
  CHECK(t[1] >= std::abs(t[2]) - 1e-9);
  if (std::abs(t[0] - kPi / 4) < 1e-9) CHECK(t[2] >= -1e-9);
}

}  // namespace

TEST_CASE("kak examples") {
  const Mat4 local = tensor(haar2(1), haar2(2));
  auto d = kak_decompose(local);
  for (double t : d.theta) CHECK(std::abs(t) < 1e-9);
  CHECK(aligned_error(kak_reconstruct(d), local) < 1e-9);

  d = kak_decompose(gates::swap());
  for (double t : d.theta) CHECK(t == doctest::Approx(kPi / 4));

  d = kak_decompose(gates::cnot());
  CHECK(d.theta[0] == doctest::Approx(kPi / 4));
  CHECK(std::abs(d.theta[1]) < 1e-9);
  CHECK(std::abs(d.theta[2]) < 1e-9);
  CHECK((kak_reconstruct(d) - gates::cnot()).norm() < 1e-9);

  CHECK(aligned_error(kak_reconstruct(kak_decompose(Mat4::Identity())), Mat4::Identity()) < 1e-12);

  KakDecomposition bare;
  bare.theta = {kPi / 4, 0, 0};
  CHECK((kak_reconstruct(bare) - pauli_exp({Pauli::X, Pauli::X}, kPi / 4)).norm() < 1e-14);
  CHECK((nonlocal_core({0.3, 0.2, 0.1}) -
         testing::taylor_expm(kI * (0.3 * pauli_pair(Pauli::X, Pauli::X) + 0.2 * pauli_pair(Pauli::Y, Pauli::Y) +
                                    0.1 * pauli_pair(Pauli::Z, Pauli::Z))))
            .norm() < 1e-12);

  CHECK_THROWS_AS(kak_decompose(2.0 * Mat4::Identity()), Error);
}

TEST_CASE("kak round trip on Haar samples") {
  double worst = 0;
  for (int s = 0; s < 1000; ++s) {
    const Mat4 u = haar4(20000 + s);
    const KakDecomposition d = kak_decompose(u);
    worst = std::max(worst, aligned_error(u, kak_reconstruct(d)));
    check_chamber(d.theta);
    for (const Mat2* m : {&d.a_local, &d.b_local, &d.c_local, &d.d_local}) CHECK(is_unitary(*m, 1e-10));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("kak canonical triples are fixed points") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 300; ++n) {
    double t1 = testing::uniform(rng, 0, kPi / 4);
    double t2 = testing::uniform(rng, 0, t1);
    double t3 = testing::uniform(rng, -t2, t2);
    // Sprinkle in boundary cases.
    if (n % 10 == 0) t1 = kPi / 4, t3 = std::abs(t3);
    if (n % 10 == 1) t2 = t1;
    if (n % 10 == 2) t3 = 0;
    if (n % 10 == 3) t3 = t2;
    if (n % 10 == 4) t3 = -t2;
    KakDecomposition d;
    d.theta = {t1, t2, t3};
    const auto back = kak_decompose(kak_reconstruct(d)).theta;
    for (int i = 0; i < 3; ++i) CHECK(std::abs(back[i] - d.theta[i]) < 1e-8);
  }
}

TEST_CASE("kak angles are local invariants") {
  for (int n = 0; n < 200; ++n) {
    const Mat4 u = haar4(40000 + n);
    const Mat4 dressed = tensor(haar2(50000 + 4 * n), haar2(50001 + 4 * n)) * u *
                         tensor(haar2(50002 + 4 * n), haar2(50003 + 4 * n));
    const auto a = kak_decompose(u).theta, b = kak_decompose(dressed).theta;
    for (int i = 0; i < 3; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-8);
  }
}

TEST_CASE("kak handles degenerate spectra") {
  for (const Mat4& g : {gates::swap(), gates::swap_sqrt(), gates::cz(), gates::exp_yy(), gates::q_gate(),
                        gates::r_gate(), Mat4(pauli_pair(Pauli::Y, Pauli::Z)), gates::c_pi8()}) {
    const auto d = kak_decompose(g);
    CHECK(aligned_error(g, kak_reconstruct(d)) < 1e-9);
    check_chamber(d.theta);
  }
}

TEST_CASE("Clifford gates sit on the quarter-pi lattice") {
  const Mat4 extra = tensor(hadamard(), Mat2::Identity()) * gates::cnot() * tensor(Mat2::Identity(), phase_s());
  for (const Mat4& g : {gates::cnot(), gates::swap(), gates::cz(), extra}) {
    const auto c = classify_nonlocal(kak_decompose(g).theta);
    CHECK_FALSE(c.generic_angle);
    for (int i = 0; i < 3; ++i) CHECK((c.delta[i] == c.odd_quarter_pi[i]));
  }
}

TEST_CASE("classify_nonlocal examples") {
  auto c = classify_nonlocal({kPi / 4, kPi / 4, kPi / 4});
  CHECK(c.is_swap_point);
  for (bool b : c.odd_quarter_pi) CHECK(b);

  c = classify_nonlocal({0, 0, 0});
  for (bool b : c.delta) CHECK_FALSE(b);
  CHECK_FALSE(c.is_swap_point);

  c = classify_nonlocal(kak_decompose(gates::cnot()).theta);
  CHECK(c.odd_quarter_pi == std::array{true, false, false});
  CHECK(c.delta == std::array{true, false, false});

  c = classify_nonlocal({0.3, 0.1, 0});
  CHECK(c.generic_angle);
}

TEST_CASE("euler_zyz examples") {
  auto e = euler_zyz(Mat2::Identity());
  CHECK(std::abs(e.lambda1) < 1e-12);
  CHECK(std::abs(e.lambda2) < 1e-12);
  CHECK(std::abs(e.lambda3) < 1e-12);

  e = euler_zyz(rz(0.8));
  CHECK(e.lambda1 == doctest::Approx(0.8));
  CHECK(std::abs(e.lambda2) < 1e-12);
  CHECK(std::abs(e.lambda3) < 1e-12);

  CHECK((rz(0.5) - testing::taylor_expm2(-kI * 0.25 * pauli(Pauli::Z))).norm() < 1e-14);
  CHECK((ry(0.5) - testing::taylor_expm2(-kI * 0.25 * pauli(Pauli::Y))).norm() < 1e-14);

  for (int s = 0; s < 1000; ++s) {
    const Mat2 u = haar2(70000 + s);
    e = euler_zyz(u);
    CHECK(e.lambda2 >= 0);
    CHECK(e.lambda2 <= kPi);
    CHECK((euler_reconstruct(e) - u).norm() < 1e-10);
  }
  for (const Mat2& m : {pauli(Pauli::X), pauli(Pauli::Y), hadamard(), phase_s()})
    CHECK((euler_reconstruct(euler_zyz(m)) - m).norm() < 1e-10);
}

TEST_CASE("is_clifford examples") {
  CHECK(is_clifford(gates::cnot()));
  CHECK(is_clifford(tensor(pauli(Pauli::Z), Mat2::Identity())));
  CHECK(is_clifford(gates::swap()));
  CHECK_FALSE(is_clifford(gates::t_gate(kPi / 8, kPi / 8)));
  CHECK_FALSE(is_clifford(gates::t_gate(kPi / 7, kPi / 13)));
  CHECK_FALSE(is_clifford(gates::c_pi8()));
}
