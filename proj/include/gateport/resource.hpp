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

#ifndef GATEPORT_RESOURCE_HPP
#define GATEPORT_RESOURCE_HPP

#include "gateport/linalg.hpp"

namespace gateport {

/// Two-qubit resource |Psi> = sum psi(n, m) |nm>, stored as its 2x2 reshape.
class ResourceState {
 public:
  /// Throws unless the Frobenius norm of psi is 1 within 1e-9.
  explicit ResourceState(const Mat2& psi);
  static ResourceState from_vector(const Vec4& v);
  static ResourceState bell();  // (|00> + |11>) / sqrt(2)

  const Mat2& psi() const { return psi_; }
  Vec4 vector() const;
  /// |psi_00 psi_11 - psi_01 psi_10|; 1/2 for a maximally entangled state.
  double det_abs() const { return std::abs(psi_.determinant()); }

 private:
  Mat2 psi_;
};

}  // namespace gateport

#endif  // GATEPORT_RESOURCE_HPP
