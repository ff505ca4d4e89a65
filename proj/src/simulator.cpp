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

#include "gateport/simulator.hpp"

#include <cmath>
#include <vector>

namespace gateport {
namespace {

constexpr double kZeroProbability = 1e-14;

int qubits_for_size(Eigen::Index size) {
  int n = 0;
  while ((Eigen::Index{1} << n) < size) ++n;
  return (Eigen::Index{1} << n) == size ? n : -1;
}

// Bit mask of qubit q in an n-qubit index.
inline unsigned bit(int n, int q) { return 1u << (n - 1 - q); }

// Builds the full index from `rest` (the n-2 remaining qubits, in order) and
// the values x, y of qubits q1, q2.
unsigned insert_pair(unsigned rest, int n, int q1, int q2, unsigned x, unsigned y) {
  unsigned full = 0;
  int src = n - 3;  // bit position in `rest`, most significant first
  for (int q = 0; q < n; ++q) {
    unsigned v;
    if (q == q1) {
      v = x;
    } else if (q == q2) {
      v = y;
    } else {
      v = (rest >> src) & 1u;
      --src;
    }
    if (v) full |= bit(n, q);
  }
  return full;
}

double fidelity(const StateVec& target, const StateVec& state) {
  return std::norm(target.dot(state));
}

}  // namespace

Register::Register(StateVec state) : state_(std::move(state)) {
  num_qubits_ = qubits_for_size(state_.size());
  if (num_qubits_ < 1 || num_qubits_ > kMaxQubits)
    throw_usage("Register: size must be 2^n with 1 <= n <= 8");
  if (!state_.allFinite() || std::abs(state_.norm() - 1.0) > 1e-9)
    throw_numerical("Register: state must be normalized");
}

Register Register::basis_state(int num_qubits, unsigned index) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) throw_usage("Register: qubit count out of range");
  StateVec s = StateVec::Zero(Eigen::Index{1} << num_qubits);
  if (index >= static_cast<unsigned>(s.size())) throw_usage("Register: basis index out of range");
  s(index) = 1.0;
  return Register(std::move(s));
}

Register apply_gate(const Register& reg, const MatX& gate, std::span<const int> targets) {
  const int n = reg.num_qubits();
  const int k = static_cast<int>(targets.size());
  if (k < 1 || gate.rows() != (Eigen::Index{1} << k) || gate.cols() != gate.rows())
    throw_usage("apply_gate: gate dimension does not match target count");
  unsigned target_mask = 0;
  for (int t : targets) {
    if (t < 0 || t >= n) throw_usage("apply_gate: target qubit out of range");
    if (target_mask & bit(n, t)) throw_usage("apply_gate: duplicate target qubit");
    target_mask |= bit(n, t);
  }
  if (!is_unitary(gate, kUnitarityTol)) throw_numerical("apply_gate: gate is not unitary");

  const int dim = 1 << k;
  std::vector<unsigned> offsets(dim);
  for (int s = 0; s < dim; ++s) {
    unsigned off = 0;
    for (int t = 0; t < k; ++t)
      if ((s >> (k - 1 - t)) & 1) off |= bit(n, targets[t]);
    offsets[s] = off;
  }

  const StateVec& in = reg.state();
  StateVec out = in;
  Eigen::VectorXcd local(dim);
  for (unsigned base = 0; base < static_cast<unsigned>(in.size()); ++base) {
    if (base & target_mask) continue;
    for (int s = 0; s < dim; ++s) local(s) = in(base | offsets[s]);
    const Eigen::VectorXcd mapped = gate * local;
    for (int s = 0; s < dim; ++s) out(base | offsets[s]) = mapped(s);
  }
  out.normalize();
  return Register(std::move(out));
}

Register apply_gate(const Register& reg, const MatX& gate, std::initializer_list<int> targets) {
  return apply_gate(reg, gate, std::span<const int>(targets.begin(), targets.size()));
}

Register join(const Register& lhs, const Register& rhs) {
  if (lhs.num_qubits() + rhs.num_qubits() > kMaxQubits) throw_usage("join: too many qubits");
  const StateVec& a = lhs.state();
  const StateVec& b = rhs.state();
  StateVec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return Register(std::move(out));
}

StateVec contract_pair(const StateVec& state, int num_qubits, std::pair<int, int> targets,
                       const Vec4& v) {
  const auto [q1, q2] = targets;
  if (q1 == q2 || q1 < 0 || q2 < 0 || q1 >= num_qubits || q2 >= num_qubits || num_qubits < 2)
    throw_usage("contract_pair: invalid target pair");
  const unsigned rest_size = 1u << (num_qubits - 2);
  StateVec out = StateVec::Zero(rest_size);
  for (unsigned r = 0; r < rest_size; ++r)
    for (unsigned x = 0; x < 2; ++x)
      for (unsigned y = 0; y < 2; ++y)
        out(r) += std::conj(v(2 * x + y)) * state(insert_pair(r, num_qubits, q1, q2, x, y));
  return out;
}

std::array<double, 4> pair_outcome_probabilities(const Register& reg, std::pair<int, int> targets,
                                                 const MeasurementBasis& basis) {
  std::array<double, 4> p{};
  for (int j = 0; j < 4; ++j)
    p[j] = contract_pair(reg.state(), reg.num_qubits(), targets, basis.vectors[j]).squaredNorm();
  return p;
}

PairMeasurement measure_pair(const Register& reg, std::pair<int, int> targets,
                             const MeasurementBasis& basis, std::optional<int> forced_outcome,
                             std::mt19937_64* rng) {
  if (!is_orthonormal(basis)) throw_numerical("measure_pair: basis is not orthonormal");
  const int n = reg.num_qubits();
  const std::array<double, 4> p = pair_outcome_probabilities(reg, targets, basis);

  int outcome = 0;
  if (forced_outcome) {
    outcome = *forced_outcome;
    if (outcome < 1 || outcome > 4) throw_usage("measure_pair: outcome must be 1..4");
    if (p[outcome - 1] <= kZeroProbability)
      throw_numerical("measure_pair: forced outcome has zero probability");
  } else {
    if (rng == nullptr) throw_usage("measure_pair: sampling requires a generator");
    std::discrete_distribution<int> pick(p.begin(), p.end());
    outcome = pick(*rng) + 1;
  }

  const Vec4& v = basis.vectors[outcome - 1];
  const StateVec rest = contract_pair(reg.state(), n, targets, v);
  const double prob = rest.squaredNorm();
  StateVec post = StateVec::Zero(reg.state().size());
  const unsigned rest_size = 1u << (n - 2);
  for (unsigned r = 0; r < rest_size; ++r)
    for (unsigned x = 0; x < 2; ++x)
      for (unsigned y = 0; y < 2; ++y)
        post(insert_pair(r, n, targets.first, targets.second, x, y)) = v(2 * x + y) * rest(r);
  post /= std::sqrt(prob);
  return {outcome, prob, Register(std::move(post))};
}

StateTeleportRun run_state_teleport(const Eigen::Vector2cd& input, const ResourceState& resource,
                                    const Mat4& u_front, const MeasurementBasis& basis,
                                    const std::array<std::optional<Mat2>, 4>& corrections) {
  const Register res(StateVec(resource.vector()));
  const Register xi(StateVec(input.normalized()));
  const Register reg = apply_gate(join(res, xi), u_front, {1, 2});

  StateTeleportRun run;
  for (int j = 0; j < 4; ++j) {
    StateVec out = contract_pair(reg.state(), 3, {1, 2}, basis.vectors[j]);
    run.probabilities[j] = out.squaredNorm();
    if (run.probabilities[j] <= kZeroProbability) {
      run.outputs[j].setZero();
      continue;
    }
    out.normalize();
    run.outputs[j] = out;
    const StateVec corrected = corrections[j] ? StateVec(*corrections[j] * out) : out;
    run.fidelities[j] = fidelity(xi.state(), corrected);
  }
  return run;
}

std::array<Vec4, 16> resource_gate_outputs(const Vec4& input_ab, const Mat4& u_t,
                                           const MeasurementBasis& basis,
                                           const StateVec& resource4,
                                           const std::array<int, 4>& placement) {
  if (resource4.size() != 16) throw_usage("resource_gate_outputs: resource must have 4 qubits");
  std::array<bool, 4> used{};
  for (int q : placement) {
    if (q < 2 || q > 5) throw_usage("resource_gate_outputs: placement must use qubits 2..5");
    if (used[q - 2]) throw_usage("resource_gate_outputs: placement repeats a qubit");
    used[q - 2] = true;
  }
  if (std::abs(resource4.norm() - 1.0) > 1e-9) throw_numerical("resource_gate_outputs: resource is not normalized");
  // Register qubit placement[i] (one of 2..5) carries resource qubit i.
  StateVec placed = StateVec::Zero(16);
  for (unsigned idx = 0; idx < 16; ++idx) {
    unsigned target = 0;
    for (int i = 0; i < 4; ++i)
      if ((idx >> (3 - i)) & 1u) target |= 1u << (3 - (placement[i] - 2));
    placed(target) = resource4(idx);
  }
  const Register reg0 = join(Register(StateVec(input_ab.normalized())), Register(placed));
  const Register reg = apply_gate(reg0, u_t, {3, 5});
  std::array<Vec4, 16> outs;
  for (int j = 0; j < 4; ++j) {
    // Dropping (0, 2) leaves (1, 3, 4, 5) renumbered (0, 1, 2, 3).
    const StateVec after_j = contract_pair(reg.state(), 6, {0, 2}, basis.vectors[j]);
    for (int k = 0; k < 4; ++k) outs[4 * j + k] = contract_pair(after_j, 4, {0, 2}, basis.vectors[k]);
  }
  return outs;
}

namespace {

std::array<Vec4, 16> bell_pair_outputs(const Vec4& input_ab, const Mat4& u_t,
                                       const MeasurementBasis& basis, const Mat4& u_front) {
  const double r = 1 / std::sqrt(2.0);
  StateVec bell(4);
  bell << r, 0, 0, r;
  Register reg = join(join(Register(StateVec(input_ab.normalized())), Register(bell)), Register(bell));
  reg = apply_gate(reg, u_front, {0, 2});
  reg = apply_gate(reg, u_front, {1, 4});
  reg = apply_gate(reg, u_t, {3, 5});
  std::array<Vec4, 16> outs;
  for (int j = 0; j < 4; ++j) {
    const StateVec after_j = contract_pair(reg.state(), 6, {0, 2}, basis.vectors[j]);
    for (int k = 0; k < 4; ++k) outs[4 * j + k] = contract_pair(after_j, 4, {0, 2}, basis.vectors[k]);
  }
  return outs;
}

}  // namespace

GateTeleportRun run_gate_teleport(const Vec4& input_ab, const Mat4& u_t,
                                  const MeasurementBasis& basis,
                                  const std::array<std::optional<CorrectionPair>, 16>& corrections,
                                  const Mat4& u_front) {
  const std::array<Vec4, 16> outs = bell_pair_outputs(input_ab, u_t, basis, u_front);
  const Vec4 target = u_t * input_ab.normalized();
  GateTeleportRun run;
  for (int o = 0; o < 16; ++o) {
    run.probabilities[o] = outs[o].squaredNorm();
    if (run.probabilities[o] <= kZeroProbability) {
      run.outputs[o].setZero();
      continue;
    }
    run.outputs[o] = outs[o].normalized();
    Vec4 corrected = run.outputs[o];
    if (corrections[o]) corrected = tensor(corrections[o]->first, corrections[o]->second) * corrected;
    run.fidelities[o] = fidelity(target, corrected);
  }
  return run;
}

std::array<double, 16> outcome_distribution(const Vec4& input_ab, const Mat4& u_t,
                                            const MeasurementBasis& basis, const Mat4& u_front) {
  const std::array<Vec4, 16> outs = bell_pair_outputs(input_ab, u_t, basis, u_front);
  std::array<double, 16> p{};
  for (int o = 0; o < 16; ++o) p[o] = outs[o].squaredNorm();
  return p;
}

GateTeleportShot sample_gate_teleport(const Vec4& input_ab, const Mat4& u_t,
                                      const MeasurementBasis& basis,
                                      const std::array<std::optional<CorrectionPair>, 16>& corrections,
                                      std::mt19937_64& rng, const Mat4& u_front) {
  const double r = 1 / std::sqrt(2.0);
  StateVec bell(4);
  bell << r, 0, 0, r;
  Register reg = join(join(Register(StateVec(input_ab.normalized())), Register(bell)), Register(bell));
  reg = apply_gate(reg, u_front, {0, 2});
  reg = apply_gate(reg, u_front, {1, 4});
  reg = apply_gate(reg, u_t, {3, 5});

  const PairMeasurement mj = measure_pair(reg, {0, 2}, basis, std::nullopt, &rng);
  const PairMeasurement mk = measure_pair(mj.post_state, {1, 4}, basis, std::nullopt, &rng);

  GateTeleportShot shot;
  shot.record.outcome_indices = {mj.outcome, mk.outcome};
  shot.record.probabilities = {mj.probability, mk.probability};
  shot.outcome_index = 4 * (mj.outcome - 1) + (mk.outcome - 1);

  const StateVec after_j = contract_pair(mk.post_state.state(), 6, {0, 2}, basis.vectors[mj.outcome - 1]);
  Vec4 out = contract_pair(after_j, 4, {0, 2}, basis.vectors[mk.outcome - 1]).normalized();
  if (const auto& c = corrections[shot.outcome_index]) out = tensor(c->first, c->second) * out;
  shot.fidelity = fidelity(u_t * input_ab.normalized(), out);
  return shot;
}

StateVec haar_random_state(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v.normalized();
}

}  // namespace gateport
