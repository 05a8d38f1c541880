// Copyright 2026 The qframe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// Program texts shared by the unit suites and the acceptance runner.

#include <string_view>

namespace qf::fixtures {

/// Three-qubit deuteron Hamiltonian H3 with short coefficients.
inline constexpr std::string_view kDeuteronH3 =
    "15.531709 - 2.1433 X0X1 - 2.1433 Y0Y1 + .21829 Z0 - 6.125 Z1 - 9.625 Z2 - 3.91 X1 X2 - "
    "3.91 Y1 Y2";

/// Same operator with more digits in the coefficients.
inline constexpr std::string_view kDeuteronH3Precise =
    "15.531709 - 2.143304 X0X1 - 2.143304 Y0Y1 + .218291 Z0 - 6.125 Z1 - 9.625 Z2 - 3.913119 X1 X2 "
    "- 3.913119 Y1 Y2";

/// Two-parameter unitary coupled-cluster ansatz.
inline constexpr std::string_view kDeuteronAnsatz = R"(.compiler xasm
.circuit deuteron_ansatz
.parameters t0, t1
.qbit q
X(q[0]);
exp_i_theta(q, t0, {{"pauli", "X0 Y1 - Y0 X1"}});
exp_i_theta(q, t1, {{"pauli", "X0 Z1 Y2 - X2 Z1 Y0"}});
)";

/// Eight-parameter two-qubit circuit used for distribution learning.
inline constexpr std::string_view kDdclAnsatz = R"(.compiler xasm
.circuit qubit2_depth1
.parameters x
.qbit q
U(q[0], x[0], -pi/2, pi/2 );
U(q[0], 0, 0, x[1]);
U(q[1], x[2], -pi/2, pi/2);
U(q[1], 0, 0, x[3]);
CNOT(q[0], q[1]);
U(q[0], 0, 0, x[4]);
U(q[0], x[5], -pi/2, pi/2);
U(q[1], 0, 0, x[6]);
U(q[1], x[7], -pi/2, pi/2);
)";

/// A Quil ansatz and a second kernel that calls it and measures in the X basis.
inline constexpr std::string_view kQuilPair = R"(
__qpu__ ansatz(AcceleratorBuffer q, double x) {
X 0
RY(x) 1
CX 1 0
}
__qpu__ X0X1(AcceleratorBuffer q, double x) {
ansatz(q, x)
H 0
H 1
MEASURE 0 [0]
MEASURE 1 [1]
}
)";

} // namespace qf::fixtures
