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

#include "gateport/resource.hpp"

#include <cmath>

namespace gateport {

ResourceState::ResourceState(const Mat2& psi) : psi_(psi) {
  if (!psi.allFinite() || std::abs(psi.norm() - 1.0) > 1e-9)
    throw_numerical("ResourceState: amplitudes must have unit norm");
}

ResourceState ResourceState::from_vector(const Vec4& v) {
  Mat2 m;
  m << v(0), v(1), v(2), v(3);
  return ResourceState(m);
}

ResourceState ResourceState::bell() { return ResourceState(Mat2::Identity() / std::sqrt(2.0)); }

Vec4 ResourceState::vector() const {
  Vec4 v;
  v << psi_(0, 0), psi_(0, 1), psi_(1, 0), psi_(1, 1);
  return v;
}

}  // namespace gateport
