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

#ifndef GATEPORT_SIMULATOR_HPP
#define GATEPORT_SIMULATOR_HPP

#include <array>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "gateport/bases.hpp"
#include "gateport/linalg.hpp"
#include "gateport/resource.hpp"

namespace gateport {

inline constexpr int kMaxQubits = 8;

/// Dense statevector on n <= 8 qubits. Qubit 0 is the most significant bit of
/// the amplitude index.
class Register {
 public:
  /// Throws unless the size is 2^n with 1 <= n <= 8 and the norm is 1 within 1e-9.
  explicit Register(StateVec state);
  static Register basis_state(int num_qubits, unsigned index = 0);

  int num_qubits() const { return num_qubits_; }
  const StateVec& state() const { return state_; }

 private:
  StateVec state_;
  int num_qubits_ = 0;
};

/// Applies a 2^k x 2^k gate to `targets` (first target is the gate's most
/// significant qubit).
Register apply_gate(const Register& reg, const MatX& gate, std::span<const int> targets);
Register apply_gate(const Register& reg, const MatX& gate, std::initializer_list<int> targets);

/// Tensor product of registers; `lhs` takes the low qubit indices.
Register join(const Register& lhs, const Register& rhs);

struct PairMeasurement {
  int outcome = 0;  // 1..4, index into basis.vectors
  double probability = 0.0;
  Register post_state;
};

/// Projective measurement of (q1, q2) in `basis`, q1 being the vector's first
/// ket symbol. A forced outcome is projected onto directly and must have
/// nonzero probability; otherwise the outcome is sampled with `rng`.
PairMeasurement measure_pair(const Register& reg, std::pair<int, int> targets,
                             const MeasurementBasis& basis, std::optional<int> forced_outcome,
                             std::mt19937_64* rng = nullptr);

std::array<double, 4> pair_outcome_probabilities(const Register& reg, std::pair<int, int> targets,
                                                 const MeasurementBasis& basis);

/// Contracts (q1, q2) with <v| and drops them; result is unnormalized.
StateVec contract_pair(const StateVec& state, int num_qubits, std::pair<int, int> targets,
                       const Vec4& v);

struct MeasurementRecord {
  std::vector<int> outcome_indices;
  std::vector<double> probabilities;
};

// Single-qubit teleportation circuit: qubit 0 output, qubit 1 resource
// partner, qubit 2 input. u_front acts on (1, 2) and (1, 2) is measured.
struct StateTeleportRun {
  std::array<double, 4> probabilities{};
  std::array<double, 4> fidelities{};  // 0 for zero-probability outcomes
  std::array<Eigen::Vector2cd, 4> outputs;  // normalized, before correction
};

StateTeleportRun run_state_teleport(const Eigen::Vector2cd& input, const ResourceState& resource,
                                    const Mat4& u_front, const MeasurementBasis& basis,
                                    const std::array<std::optional<Mat2>, 4>& corrections);

// Two-qubit gate teleportation circuit: qubits 0, 1 carry the input; Bell
// pairs on (2, 3) and (4, 5). u_front acts on (0, 2) and (1, 4), u_t on the
// outputs (3, 5); (0, 2) is measured for j and (1, 4) for k. Outcome (j, k)
// is stored at index 4 (j - 1) + (k - 1).
using CorrectionPair = std::pair<Mat2, Mat2>;

struct GateTeleportRun {
  std::array<double, 16> probabilities{};
  std::array<double, 16> fidelities{};
  std::array<Vec4, 16> outputs;  // normalized, before correction
};

GateTeleportRun run_gate_teleport(const Vec4& input_ab, const Mat4& u_t,
                                  const MeasurementBasis& basis,
                                  const std::array<std::optional<CorrectionPair>, 16>& corrections,
                                  const Mat4& u_front = Mat4::Identity());

std::array<double, 16> outcome_distribution(const Vec4& input_ab, const Mat4& u_t,
                                            const MeasurementBasis& basis,
                                            const Mat4& u_front = Mat4::Identity());

/// One Monte Carlo shot of the gate circuit: samples (j, k), applies the
/// matching correction and returns the fidelity to u_t |input>.
struct GateTeleportShot {
  MeasurementRecord record;  // two entries: j then k
  int outcome_index = 0;     // 4 (j - 1) + (k - 1)
  double fidelity = 0.0;
};

GateTeleportShot sample_gate_teleport(const Vec4& input_ab, const Mat4& u_t,
                                      const MeasurementBasis& basis,
                                      const std::array<std::optional<CorrectionPair>, 16>& corrections,
                                      std::mt19937_64& rng, const Mat4& u_front = Mat4::Identity());

/// Gate circuit with an arbitrary four-qubit resource in place of the two
/// Bell pairs; resource qubits (0, 1, 2, 3) land on register qubits
/// `placement`. Returns the unnormalized output (3, 5) for each outcome.
std::array<Vec4, 16> resource_gate_outputs(const Vec4& input_ab, const Mat4& u_t,
                                           const MeasurementBasis& basis,
                                           const StateVec& resource4,
                                           const std::array<int, 4>& placement);

/// Haar-random normalized state of dimension dim, deterministic in seed.
StateVec haar_random_state(int dim, std::uint64_t seed);

}  // namespace gateport

#endif  // GATEPORT_SIMULATOR_HPP
