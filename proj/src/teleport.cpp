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

#include "gateport/teleport.hpp"

#include <cmath>

#include "gateport/gates.hpp"

namespace gateport {
namespace {

void require_unitary(const Mat4& m, const char* what) {
  if (!is_unitary(m, kUnitarityTol)) throw_numerical(std::string(what) + " is not unitary");
}

void require_orthonormal(const MeasurementBasis& basis) {
  if (!is_orthonormal(basis, kUnitarityTol)) throw_numerical("measurement basis is not orthonormal");
}

bool on_pi_lattice(double angle, double tol, int* witness) {
  const double r = angle / kPi;
  const double nearest = std::round(r);
  if (std::abs(r - nearest) * kPi > tol) return false;
  if (witness) *witness = static_cast<int>(nearest);
  return true;
}

enum class Pattern { All, Middle, Outer };

// Checks the Euler-angle pattern of one local factor. At lambda2 = 0 (pi) only
// lambda1 + lambda3 (lambda1 - lambda3) is defined; it then stands in for
// lambda1 with lambda3 = 0.
bool euler_pattern(const LocalEulerAngles& e, Pattern pattern, double tol,
                   std::array<std::optional<int>, 3>& witnesses) {
  witnesses = {};
  int n2 = 0;
  const bool middle_on = on_pi_lattice(e.lambda2, tol, &n2);
  if (pattern == Pattern::Middle) {
    if (middle_on) witnesses[1] = n2;
    return middle_on;
  }
  if (pattern == Pattern::All && !middle_on) return false;

  const bool flat = std::abs(e.lambda2) <= tol;
  const bool flipped = std::abs(e.lambda2 - kPi) <= tol;
  if (middle_on) witnesses[1] = n2;
  int n1 = 0, n3 = 0;
  if (flat || flipped) {
    const double combined = flat ? e.lambda1 + e.lambda3 : e.lambda1 - e.lambda3;
    if (!on_pi_lattice(combined, tol, &n1)) return false;
    witnesses[0] = n1;
    witnesses[2] = 0;
    return true;
  }
  if (!on_pi_lattice(e.lambda1, tol, &n1) || !on_pi_lattice(e.lambda3, tol, &n3)) return false;
  witnesses[0] = n1;
  witnesses[2] = n3;
  return true;
}

}  // namespace

StateTeleportReport analyze_state_teleport(const ResourceState& resource, const Mat4& u_front,
                                           const MeasurementBasis& basis, double tol) {
  require_unitary(u_front, "u_front");
  require_orthonormal(basis);
  const BetaMatrices betas = beta_matrices(basis, u_front, BetaConvention::StateForm);

  StateTeleportReport report;
  report.entanglement = resource.det_abs();
  report.deterministic = true;
  for (int j = 0; j < 4; ++j) {
    StateOutcome& o = report.outcomes[j];
    o.m_matrix = resource.psi() * betas.mats[j];
    const Mat2 gram = o.m_matrix.adjoint() * o.m_matrix;
    o.probability = gram.trace().real() / 2;
    if (o.probability <= 0.0) continue;  // never observed
    o.teleportable = (gram - o.probability * Mat2::Identity()).norm() <= tol;
    if (o.teleportable) {
      o.correction = Mat2(o.m_matrix / std::sqrt(o.probability));
    } else {
      report.deterministic = false;
    }
  }
  return report;
}

std::array<std::optional<std::pair<Mat2, Mat2>>, 16> GateTeleportReport::applied_corrections() const {
  std::array<std::optional<std::pair<Mat2, Mat2>>, 16> out;
  for (int o = 0; o < 16; ++o)
    if (outcomes[o].corrections)
      out[o] = std::make_pair(Mat2(outcomes[o].corrections->first.adjoint()),
                              Mat2(outcomes[o].corrections->second.adjoint()));
  return out;
}

GateTeleportReport analyze_gate_teleport(const Mat4& u_t, const MeasurementBasis& basis,
                                         const Mat4& u_front, double tol) {
  require_unitary(u_t, "u_t");
  require_unitary(u_front, "u_front");
  require_orthonormal(basis);

  GateTeleportReport report;
  const BetaMatrices betas = beta_matrices(basis, u_front, BetaConvention::GateForm);
  report.basis_capable = true;
  for (const Mat2& b : betas.mats) report.basis_capable = report.basis_capable && is_unitary(b, kUnitarityTol);

  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      GateOutcome& o = report.outcomes[4 * j + k];
      o.w_matrix = u_t * tensor(betas.mats[j], betas.mats[k]) * u_t.adjoint();
      o.schmidt_values = operator_schmidt(o.w_matrix);
      if (!report.basis_capable) continue;
      const TensorFactorization f = tensor_factorize(o.w_matrix, tol);
      o.separable = f.separable;
      if (f.separable) {
        o.corrections = std::make_pair(*f.factor_a, *f.factor_b);
        o.phase = f.phase;
        ++report.n_separable;
      }
    }
  }
  report.success_probability = report.n_separable / 16.0;
  report.deterministic = report.n_separable == 16;
  return report;
}

std::array<std::pair<Mat2, Mat2>, 16> table2_factors(double phi, double xi) {
  const Mat2 p = phase_s();
  const Mat2 x = pauli(Pauli::X), y = pauli(Pauli::Y), z = pauli(Pauli::Z);
  const auto v = [](double a) {
    Mat2 m;
    m << 0, -kI * std::polar(1.0, -a), kI * std::polar(1.0, a), 0;
    return m;
  };
  const Mat2 vp = v(phi), vx = v(xi);
  return {{
      {p, -p},             {p * z, -vp * z},   {p * z, kI * vp},     {p, p * y * x},
      {-vx * z, p * z},    {vx, vp},           {vx, -vp * z},        {-vx * z, kI * p},
      {vx, kI * p * z},    {-vx * z, kI * vp}, {vx * z, -vp * z},    {-vx, p},
      {p * y * x, p},      {kI * p, -vp * z},  {p, -vp},             {p * z, p * z},
  }};
}

std::array<std::pair<const char*, const char*>, 16> table2_labels() {
  return {{
      {"P", "-P"},          {"P Z", "-V_phi Z"},   {"P Z", "i V_phi"},    {"P", "P Y X"},
      {"-V_xi Z", "P Z"},   {"V_xi", "V_phi"},     {"V_xi", "-V_phi Z"},  {"-V_xi Z", "i P"},
      {"V_xi", "i P Z"},    {"-V_xi Z", "i V_phi"}, {"V_xi Z", "-V_phi Z"}, {"-V_xi", "P"},
      {"P Y X", "P"},       {"i P", "-V_phi Z"},   {"P", "-V_phi"},       {"P Z", "P Z"},
  }};
}

Theorem1Verdict theorem1_check(const Mat4& u_t, const MeasurementBasis& basis, double tol) {
  require_unitary(u_t, "u_t");
  require_orthonormal(basis);

  Theorem1Verdict v;
  v.kak = kak_decompose(u_t);
  v.nonlocal = classify_nonlocal(v.kak.theta, tol);

  const BetaMatrices betas = beta_matrices(basis);
  v.basis_capable = true;
  for (const Mat2& b : betas.mats) v.basis_capable = v.basis_capable && is_unitary(b, kUnitarityTol);

  const auto& d = v.nonlocal.delta;
  std::optional<Pattern> pattern;
  bool local_gate = false;
  if (!v.nonlocal.generic_angle) {
    if (!d[0] && !d[1] && !d[2]) {
      local_gate = true;
      v.condition1_case = "local";
    } else if (d[0] || (d[1] && d[2])) {
      pattern = Pattern::All;
      v.condition1_case = "all";
    } else if (d[2]) {
      pattern = Pattern::Middle;
      v.condition1_case = "middle";
    } else {
      pattern = Pattern::Outer;
      v.condition1_case = "outer";
    }
  }

  bool all_met = v.basis_capable && (pattern.has_value() || local_gate);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      Theorem1Outcome& o = v.outcomes[4 * j + k];
      if (!v.basis_capable) continue;
      const Mat2 first = v.kak.c_local * betas.mats[j] * v.kak.c_local.adjoint();
      const Mat2 second = v.kak.d_local * betas.mats[k] * v.kak.d_local.adjoint();
      o.first = euler_zyz(first);
      o.second = euler_zyz(second);
      if (local_gate) {
        o.pattern_met = true;
      } else if (pattern) {
        o.pattern_met = euler_pattern(o.first, *pattern, tol, o.n) &&
                        euler_pattern(o.second, *pattern, tol, o.m);
      }
      all_met = all_met && o.pattern_met;
    }
  }
  v.condition1_met = all_met;
  v.condition2_met = v.basis_capable && v.nonlocal.is_swap_point;
  v.conclusion = (v.condition1_met || v.condition2_met) ? Theorem1Conclusion::Deterministic
                                                        : Theorem1Conclusion::NotCovered;
  return v;
}

std::array<std::array<double, 3>, 5> reproduce_table1() {
  const std::array<Mat4, 5> rows = {gates::cnot(), gates::c_pi8(), gates::cnot_sqrt(),
                                    gates::swap_sqrt(), gates::exp_yy()};
  const std::array<MeasurementBasis, 3> cols = {bell_basis(), m1_basis(), m2_basis()};
  std::array<std::array<double, 3>, 5> table{};
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 3; ++c) table[r][c] = analyze_gate_teleport(rows[r], cols[c]).success_probability;
  return table;
}

}  // namespace gateport
