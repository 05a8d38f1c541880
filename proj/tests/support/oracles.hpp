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

// Reference computations for tests. Nothing here calls the library's gate tables,
// simulator or operator algebra: gates are written out from their textbook definitions and
// multi-qubit operators are assembled with Eigen.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qf/ir/composite.hpp"

namespace qf::oracle {

using Cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct Op {
    std::string name;
    std::vector<std::size_t> qubits;
    std::vector<double> params;
};

/// Textbook gate matrix; the first listed qubit is the most significant.
Mat gateMatrix(const std::string &name, const std::vector<double> &params);

/// Full 2^n operator for `gate` acting on `qubits` (qubit 0 = most significant bit).
Mat embed(const Mat &gate, const std::vector<std::size_t> &qubits, std::size_t n);

Mat circuitUnitary(const std::vector<Op> &ops, std::size_t n);

/// Unitary of the enabled, concrete gate leaves of a composite (measurements skipped).
Mat circuitUnitary(const ir::Composite &circuit, std::size_t n);

/// Kronecker product of single-site Paulis, e.g. {{0,'X'},{2,'Z'}}.
Mat pauliString(const std::map<std::size_t, char> &sites, std::size_t n);

/// Product of ladder operators (site, creation) acting on occupation-number states, with the
/// parity sign counted over lower-indexed modes.
Mat fermionProduct(const std::vector<std::pair<std::size_t, bool>> &ops, std::size_t n);

/// Discrete Fourier transform matrix with entries exp(2*pi*i*j*k/N)/sqrt(N).
Mat dft(std::size_t n);

Mat expm(const Mat &m);

double minEigenvalue(const Mat &hermitian);

/// max |a - e^{i phi} b| after aligning the phase on the largest entry of b.
double distanceUpToPhase(const Mat &a, const Mat &b);

double maxAbs(const Mat &m);

/// |amplitude|^2 of U|0...0>.
std::vector<double> probabilities(const Mat &unitary);

/// Random gate circuit over `n` qubits with `depth` gates; rotation angles in (-pi, pi).
std::vector<Op> randomCircuit(std::mt19937_64 &rng, std::size_t n, std::size_t depth,
                              bool twoQubit = true);

/// Converts oracle ops into library instructions (for feeding the system under test).
std::vector<ir::Instruction> toInstructions(const std::vector<Op> &ops);

} // namespace qf::oracle
