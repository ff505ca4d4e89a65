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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gateport/bases.hpp"
#include "gateport/fourway.hpp"
#include "gateport/gates.hpp"
#include "gateport/kak.hpp"
#include "gateport/linalg.hpp"
#include "gateport/separability.hpp"
#include "gateport/simulator.hpp"
#include "gateport/teleport.hpp"

using namespace gateport;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

Mat2 local(std::mt19937_64& rng) { return haar_random_unitary(2, rng()); }

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Local unitaries and phases applied to the Bell vectors: a random basis of
// maximally entangled states.
MeasurementBasis random_valid_basis(std::mt19937_64& rng) {
  const Mat4 l = tensor(local(rng), local(rng));
  MeasurementBasis b = bell_basis();
  for (auto& v : b.vectors) v = std::exp(kI * uniform(rng, -kPi, kPi)) * (l * v);
  b.name = "random_valid";
  return b;
}

Verdict table1() {
  Verdict v;
  const auto t = reproduce_table1();
  const std::array<std::array<double, 3>, 5> expect = {
      {{1, 0, .5}, {.5, 0, .5}, {.5, 0, .25}, {.25, .25, .25}, {1, 1, .25}}};
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 3; ++c) {
      const double sixteenths = t[r][c] * 16;
      v.require(sixteenths == std::round(sixteenths), "entry not a multiple of 1/16");
      v.require(t[r][c] == expect[r][c], "row " + std::to_string(r + 1) + " col " + std::to_string(c + 1) +
                                             " = " + std::to_string(t[r][c]));
    }
  v.detail << (v.pass ? "5x3 table exact" : "");
  return v;
}

Verdict table2() {
  Verdict v;
  int matched = 0;
  for (const auto& [phi, xi] : {std::pair{kPi / 8, kPi / 8}, std::pair{kPi / 7, kPi / 13}}) {
    const auto r = analyze_gate_teleport(gates::t_gate(phi, xi), m2_basis());
    const auto table = table2_factors(phi, xi);
    v.require(r.n_separable == 16, "not all outcomes separable");
    for (int i = 0; i < 16; ++i) {
      const auto& o = r.outcomes[i];
      const bool ok = o.corrections && equal_up_to_global_phase(table[i].first, o.corrections->first, 1e-8) &&
                      equal_up_to_global_phase(table[i].second, o.corrections->second, 1e-8);
      matched += ok;
      v.require(ok, "entry (" + std::to_string(i / 4 + 1) + "," + std::to_string(i % 4 + 1) + ") mismatch");
    }
  }
  if (v.pass) v.detail << matched << "/32 factor pairs match";
  return v;
}

Verdict shifted_state_teleport() {
  Verdict v;
  const Mat4 u = tensor(hadamard(), Mat2::Identity()) * gates::c_pi8();
  const auto basis = u_shifted_basis(u, kPi / 4);
  const auto r = analyze_state_teleport(ResourceState::bell(), u, basis);
  v.require(r.deterministic, "not deterministic");

  const Mat2 t = phase_t(), s = phase_s(), x = pauli(Pauli::X), z = pauli(Pauli::Z);
  const std::array<Mat2, 4> listed = {t * z, t, x * s * z, x * s};
  const std::array<const char*, 4> listed_names = {"[pi/8]Z", "[pi/8]", "XSZ", "XS"};
  std::array<std::optional<Mat2>, 4> corrections;
  std::vector<std::string> unmatched;
  std::array<bool, 4> covered{};
  for (int j = 0; j < 4; ++j) {
    if (!r.outcomes[j].correction) continue;
    const Mat2 inverse = r.outcomes[j].correction->adjoint();
    corrections[j] = inverse;
    bool hit = false;
    for (int l = 0; l < 4; ++l)
      if (equal_up_to_global_phase(inverse, listed[l], 1e-9)) hit = covered[l] = true;
    if (!hit) unmatched.push_back("outcome " + std::to_string(j + 1));
  }
  for (int l = 0; l < 4; ++l)
    v.require(covered[l], std::string("no outcome has inverse ") + listed_names[l]);
  if (!unmatched.empty()) v.require(false, std::to_string(unmatched.size()) + " inverses outside the listed set");

  std::mt19937_64 rng(17);
  double min_fid = 1.0;
  for (int n = 0; n < 20; ++n) {
    const StateVec in = haar_random_state(2, rng());
    const auto run = run_state_teleport(in, ResourceState::bell(), u, basis, corrections);
    for (int j = 0; j < 4; ++j)
      if (run.probabilities[j] > 1e-12) min_fid = std::min(min_fid, run.fidelities[j]);
  }
  v.require(min_fid >= 1 - 1e-9, "simulator fidelity " + std::to_string(min_fid));
  v.detail << (v.pass ? "" : " | ") << "min simulated fidelity over 20 inputs " << min_fid;
  return v;
}

Verdict oracle_agreement() {
  Verdict v;
  std::mt19937_64 rng(4);
  std::vector<std::pair<Mat4, MeasurementBasis>> cases;
  const std::array<MeasurementBasis, 3> table_bases = {bell_basis(), m1_basis(), m2_basis()};
  for (const Mat4& g : {gates::cnot(), gates::c_pi8(), gates::cnot_sqrt(), gates::swap_sqrt(), gates::exp_yy()})
    for (const auto& b : table_bases) cases.emplace_back(g, b);
  const auto random_pauli = conjugated_pauli_basis(local(rng));
  for (const Mat4& g : {gates::swap(), gates::q_gate(), gates::r_gate()}) {
    for (const auto& b : table_bases) cases.emplace_back(g, b);
    cases.emplace_back(g, random_pauli);
  }
  int disagreements = 0;
  for (const auto& [g, basis] : cases) {
    const auto report = analyze_gate_teleport(g, basis);
    const auto corr = report.applied_corrections();
    std::array<double, 16> min_fid;
    min_fid.fill(1.0);
    for (int n = 0; n < 20; ++n) {
      const auto run = run_gate_teleport(haar_random_state(4, rng()), g, basis, corr);
      for (int i = 0; i < 16; ++i) min_fid[i] = std::min(min_fid[i], run.fidelities[i]);
    }
    for (int i = 0; i < 16; ++i) disagreements += (min_fid[i] >= 1 - 1e-9) != report.outcomes[i].separable;
  }
  v.require(disagreements == 0, std::to_string(disagreements) + " outcome disagreements");
  v.detail << (v.pass ? "" : " | ") << cases.size() << " gate/basis pairs x 16 outcomes x 20 inputs";
  return v;
}

Verdict eq44_equivalence() {
  Verdict v;
  int disagreements = 0, checks = 0;
  auto compare = [&](double theta, double lambda) {
    const bool analytic = eq44_separable(theta, lambda);
    for (int kind = 1; kind <= 4; ++kind)
      for (Pauli label : kind <= 2 ? std::array{Pauli::X, Pauli::Y} : std::array{Pauli::X, Pauli::Z}) {
        ++checks;
        disagreements += analytic != tensor_factorize(w_witness(kind, theta, lambda, label)).separable;
      }
    return analytic;
  };
  std::mt19937_64 rng(44);
  for (int n = 0; n < 1000; ++n) compare(uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi));
  int family_misses = 0;
  for (int n = 0; n < 50; ++n) {
    const int k = n % 5 - 2;
    const double free = uniform(rng, -kPi, kPi);
    family_misses += !compare(k * kPi / 2, free);                                  // (k pi/2, any)
    family_misses += !compare(free, 2 * k * kPi);                                  // (any, 2k pi)
    family_misses += !compare((2 * k + 1) * kPi / 4, (n / 5 - 5) * kPi);           // ((2k+1) pi/4, n pi)
  }
  v.require(disagreements == 0, std::to_string(disagreements) + " predicate/numeric disagreements");
  v.require(family_misses == 0, std::to_string(family_misses) + " family points judged non-separable");
  v.detail << (v.pass ? "" : " | ") << checks << " comparisons";
  return v;
}

Verdict kak_round_trip() {
  Verdict v;
  double max_err = 0, max_drift = 0;
  std::mt19937_64 rng(6);
  for (int n = 0; n < 1000; ++n) {
    const Mat4 u = haar_random_unitary(4, rng());
    const auto d = kak_decompose(u);
    const Mat4 back = kak_reconstruct(d);
    max_err = std::max(max_err, (back * aligning_phase(back, u) - u).norm());
    if (n < 200) {
      const Mat4 dressed = tensor(local(rng), local(rng)) * u * tensor(local(rng), local(rng));
      const auto e = kak_decompose(dressed);
      for (int i = 0; i < 3; ++i) max_drift = std::max(max_drift, std::abs(e.theta[i] - d.theta[i]));
    }
  }
  v.require(max_err <= 1e-9, "reconstruction error " + std::to_string(max_err));
  v.require(max_drift <= 1e-8, "angle drift under dressing " + std::to_string(max_drift));
  v.detail << (v.pass ? "" : " | ") << "max reconstruction error " << max_err << ", max angle drift " << max_drift;
  return v;
}

Verdict theorem1_soundness() {
  Verdict v;
  std::mt19937_64 rng(71);
  const std::array<MeasurementBasis, 3> bases = {bell_basis(), m1_basis(), m2_basis()};
  int deterministic = 0, violations = 0;
  for (int n = 0; n < 200; ++n) {
    std::array<double, 3> theta{};
    for (double& t : theta) t = static_cast<int>(rng() % 4) * kPi / 4;
    // Even samples keep the input side local-free (condition-1 shape),
    // odd samples dress both sides.
    const Mat4 right = n % 2 ? tensor(local(rng), local(rng)) : Mat4(Mat4::Identity());
    const Mat4 u = tensor(local(rng), local(rng)) * nonlocal_core(theta) * right;
    const auto& basis = bases[n % 3];
    if (theorem1_check(u, basis).conclusion != Theorem1Conclusion::Deterministic) continue;
    ++deterministic;
    violations += analyze_gate_teleport(u, basis).success_probability != 1.0;
  }
  int swap_failures = 0;
  for (int n = 0; n < 20; ++n) {
    const auto basis = random_valid_basis(rng);
    const Mat4 u = tensor(local(rng), local(rng)) * gates::swap() * tensor(local(rng), local(rng));
    const auto verdict = theorem1_check(u, basis);
    swap_failures += !verdict.nonlocal.is_swap_point || verdict.conclusion != Theorem1Conclusion::Deterministic ||
                     !analyze_gate_teleport(u, basis).deterministic;
  }
  v.require(deterministic > 0, "no sample judged deterministic");
  v.require(violations == 0, std::to_string(violations) + " soundness violations");
  v.require(swap_failures == 0, std::to_string(swap_failures) + " swap-point failures");
  v.detail << (v.pass ? "" : " | ") << deterministic << "/200 judged deterministic, 20/20 swap-point cases checked";
  return v;
}

Verdict probability_conservation() {
  Verdict v;
  std::mt19937_64 rng(8);
  double max_dev = 0, max_uniform_dev = 0;
  for (int n = 0; n < 500; ++n) {
    const StateVec r = haar_random_state(4, rng());
    const ResourceState resource = ResourceState::from_vector(r);
    const Mat4 u = haar_random_unitary(4, rng());
    const Mat4 b = haar_random_unitary(4, rng());
    MeasurementBasis basis;
    for (int j = 0; j < 4; ++j) basis.vectors[j] = b.col(j);
    const auto report = analyze_state_teleport(resource, u, basis);
    double analytic = 0;
    for (const auto& o : report.outcomes) analytic += o.probability;
    const auto run = run_state_teleport(haar_random_state(2, rng()), resource, u, basis, {});
    double simulated = 0;
    for (double p : run.probabilities) simulated += p;
    max_dev = std::max({max_dev, std::abs(analytic - 1), std::abs(simulated - 1)});
  }
  for (int n = 0; n < 50; ++n) {
    const auto basis = random_valid_basis(rng);
    const Mat4 u = haar_random_unitary(4, rng());
    for (double p : outcome_distribution(haar_random_state(4, rng()), u, basis))
      max_uniform_dev = std::max(max_uniform_dev, std::abs(p - 1.0 / 16));
    const auto run =
        run_state_teleport(haar_random_state(2, rng()), ResourceState::bell(), Mat4::Identity(), basis, {});
    for (double p : run.probabilities) max_uniform_dev = std::max(max_uniform_dev, std::abs(p - 0.25));
  }
  v.require(max_dev <= 1e-9, "sum deviation " + std::to_string(max_dev));
  v.require(max_uniform_dev <= 1e-9, "non-uniform distribution, deviation " + std::to_string(max_uniform_dev));
  v.detail << (v.pass ? "" : " | ") << "max |sum - 1| " << max_dev << ", max uniform deviation " << max_uniform_dev;
  return v;
}

Verdict fourway() {
  Verdict v;
  const StateVec chi = chi_state();
  double marginal_err = 0;
  for (int q = 0; q < 4; ++q)
    marginal_err = std::max(marginal_err, (single_qubit_marginal(chi, 4, q) - 0.5 * Mat2::Identity()).norm());
  v.require(marginal_err <= 1e-12, "chi marginal error " + std::to_string(marginal_err));

  std::mt19937_64 rng(57);
  double structure = 0;
  for (int n = 0; n < 30; ++n) {
    const auto basis = n % 2 ? m2_basis() : random_valid_basis(rng);
    const auto r = analyze_fourway(haar_random_unitary(4, rng()), basis, haar_random_state(4, rng()));
    structure = std::max(structure, r.max_structure_error);
  }
  v.require(structure <= 1e-9, "structural identity error " + std::to_string(structure));

  // Clifford gate with its u1 compensated, measured in the Bell basis: each
  // outcome is an equal-weight sum of two distinct Pauli branches acting on
  // the target. For a basis-state target that leaves two amplitudes.
  int bad_superpositions = 0;
  for (const Mat4& clifford : {gates::cnot(), gates::cz(), gates::swap()})
    for (int trial = 0; trial < 2; ++trial) {
      const Mat4 ut = clifford * u1_gate();
      const Vec4 psi = trial == 0 ? Vec4(clifford.adjoint() * Vec4::Unit(0)) : Vec4(haar_random_state(4, rng()));
      const auto r = analyze_fourway(ut, bell_basis(), psi);
      if (!r.clifford_case) ++bad_superpositions;
      const Vec4 target = clifford * psi;
      for (const auto& o : r.outcomes) {
        if (o.probability < 1e-12) continue;
        if (!o.pauli_xx || !o.pauli_zz || o.pauli_xx->pauli == o.pauli_zz->pauli ||
            (trial == 0 && o.nonzero_terms != 2)) {
          ++bad_superpositions;
          continue;
        }
        const Vec4 expect = (o.pauli_xx->phase * pauli_pair(o.pauli_xx->pauli) * target +
                             o.pauli_zz->phase * pauli_pair(o.pauli_zz->pauli) * target)
                                .normalized();
        if (std::abs(std::abs(expect.dot(o.output)) - 1.0) > 1e-9) ++bad_superpositions;
      }
    }
  v.require(bad_superpositions == 0, std::to_string(bad_superpositions) + " Clifford outcomes off the two-branch form");

  double max_fid = 0;
  for (int n = 0; n < 10; ++n)
    max_fid = std::max(max_fid, analyze_fourway(gates::c_pi8(), bell_basis(), haar_random_state(4, rng())).max_corrected_fidelity);
  v.require(max_fid < 1 - 1e-3, "controlled-pi/8 corrected fidelity " + std::to_string(max_fid));
  v.detail << (v.pass ? "" : " | ") << "marginal error " << marginal_err << ", structure error " << structure
           << ", controlled-pi/8 best fidelity " << max_fid;
  return v;
}

Verdict non_clifford_headline() {
  Verdict v;
  for (const auto& [phi, xi, tag] : {std::tuple{kPi / 8, kPi / 8, "T(pi/8,pi/8)"},
                                     std::tuple{kPi / 7, kPi / 13, "T(pi/7,pi/13)"}}) {
    const Mat4 t = gates::t_gate(phi, xi);
    v.require(!is_clifford(t), std::string(tag) + " is Clifford");
    v.require(analyze_gate_teleport(t, bell_basis()).success_probability == 1.0, std::string(tag) + " under Bell");
    v.require(analyze_gate_teleport(t, m2_basis()).success_probability == 1.0, std::string(tag) + " under M2");
  }
  if (v.pass) v.detail << "both T gates non-Clifford with success 1 under Bell and M2";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"Table 1 reproduction", table1},
      {"Table 2 reproduction", table2},
      {"shifted-basis state teleport", shifted_state_teleport},
      {"analyzer/simulator agreement", oracle_agreement},
      {"witness separability predicate", eq44_equivalence},
      {"KAK round trip", kak_round_trip},
      {"lattice theorem soundness", theorem1_soundness},
      {"probability conservation", probability_conservation},
      {"four-way scheme", fourway},
      {"non-Clifford teleportation", non_clifford_headline},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "exception: " << e.what();
    }
    failures += !v.pass;
    std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
