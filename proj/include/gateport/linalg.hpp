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

#ifndef GATEPORT_LINALG_HPP
#define GATEPORT_LINALG_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gateport {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;
using StateVec = Eigen::VectorXcd;
using MatX = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// Default tolerances. Every public operation takes its tolerance explicitly;
/// these are the values used when a caller has no better choice.
inline constexpr double kUnitarityTol = 1e-9;
inline constexpr double kReconstructionTol = 1e-10;

/// Error categories shared by the library and the C API status codes.
enum class ErrorKind { Usage = 1, Numerical = 2, SelfCheck = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_numerical(const std::string& what) {
  throw Error(ErrorKind::Numerical, what);
}
[[noreturn]] inline void throw_usage(const std::string& what) {
  throw Error(ErrorKind::Usage, what);
}

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

struct PauliPair {
  Pauli first = Pauli::I;
  Pauli second = Pauli::I;

  /// Index in 0..15 with `first` as the high digit.
  int index() const { return 4 * static_cast<int>(first) + static_cast<int>(second); }
  static PauliPair from_index(int idx) {
    return {static_cast<Pauli>(idx / 4), static_cast<Pauli>(idx % 4)};
  }
  std::string label() const;
  friend bool operator==(const PauliPair&, const PauliPair&) = default;
};

Mat2 pauli(Pauli p);
Mat4 pauli_pair(PauliPair pp);
inline Mat4 pauli_pair(Pauli a, Pauli b) { return pauli_pair(PauliPair{a, b}); }
char pauli_char(Pauli p);

// Named single-qubit matrices used throughout.
Mat2 hadamard();
Mat2 phase_s();    // diag(1, i)
Mat2 phase_t();    // diag(1, e^{i pi/4})

/// Kronecker product, result(2i+k, 2j+l) = a(i,j) * b(k,l).
Mat4 tensor(const Mat2& a, const Mat2& b);

bool is_unitary(const MatX& m, double tol);

/// True iff some unit-modulus c has ||a - c b||_F <= tol. The phase c is the
/// one aligning the largest-magnitude entry of b.
bool equal_up_to_global_phase(const MatX& a, const MatX& b, double tol);

/// The phase c used by equal_up_to_global_phase (1 when b vanishes).
Complex aligning_phase(const MatX& a, const MatX& b);

struct Svd4 {
  Mat4 u;
  std::array<double, 4> singular_values{};  // descending
  Mat4 v_adjoint;
};

Svd4 svd(const Mat4& m);

/// Principal square root of a unitary: eigenphases of the result lie in
/// (-pi/2, pi/2]. Throws on non-unitary input.
Mat4 principal_sqrt(const Mat4& m, double tol = kUnitarityTol);

/// Haar-distributed unitary of dimension 2 or 4, deterministic in `seed`.
MatX haar_random_unitary(int dim, std::uint64_t seed);

Mat4 dagger(const Mat4& m);
inline Mat2 dagger(const Mat2& m) { return m.adjoint(); }

/// Frobenius norm of m^dagger m - I.
double unitarity_defect(const MatX& m);

}  // namespace gateport

#endif  // GATEPORT_LINALG_HPP
