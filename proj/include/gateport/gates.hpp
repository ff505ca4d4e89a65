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

#ifndef GATEPORT_GATES_HPP
#define GATEPORT_GATES_HPP

#include "gateport/linalg.hpp"

namespace gateport::gates {

// Control is the first (most significant) qubit throughout.
Mat4 cnot();
Mat4 cz();
Mat4 swap();
/// Swap-family members |00><11| + |11><00| + |01><01| + |10><10| and the
/// cyclic |00>->|01>->|11>->|10>->|00> permutation.
Mat4 q_gate();
Mat4 r_gate();
/// diag(1, 1, 1, e^{i pi/4}).
Mat4 c_pi8();
Mat4 cnot_sqrt();
Mat4 swap_sqrt();
/// exp(i pi/4 YY).
Mat4 exp_yy();
/// diag(i, e^{i phi}, e^{i xi}, i e^{i(phi + xi)}).
Mat4 t_gate(double phi, double xi);
/// diag(1, 1, -1, 1).
Mat4 u1_gate();

}  // namespace gateport::gates

#endif  // GATEPORT_GATES_HPP
