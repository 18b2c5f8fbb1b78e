// Copyright 2026 The gmsc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include "gms/circuit.hpp"
#include "gms/zx.hpp"

namespace gms {

using Unitary = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Applies gate g in place to a dense statevector over n qubits.
/// Basis convention: bit q of the index is the state of qubit q.
void apply_gate(StateVector& psi, const Gate& g, int n);

/// psi after running the whole circuit; psi must have dimension 2^n.
StateVector apply_circuit(const Circuit& c, StateVector psi);

/// 2^n x 2^n unitary of a single gate. Throws for n > 14.
Unitary gate_unitary(const Gate& g, int n);

/// Ordered product of the circuit's gate unitaries. Throws for n > 10.
Unitary circuit_unitary(const Circuit& c);

/// True iff u2 = e^{i gamma} u1 within tol (max-norm), with gamma fixed by
/// the largest-magnitude entry of u1.
bool equivalent_up_to_phase(const Unitary& u1, const Unitary& u2,
                            double tol = 1e-9);

bool states_equal_up_to_phase(const StateVector& v1, const StateVector& v2,
                              double tol = 1e-9);

/// Statevector sampling check for circuits too large for full unitaries
/// (9 to 12 qubits): runs both circuits on random states and requires
/// output fidelity >= 1 - tol on every trial.
bool equivalent_on_random_states(const Circuit& c1, const Circuit& c2,
                                 int trials = 20, double tol = 1e-9,
                                 unsigned seed = 12345);

/// Linear map of a ZX-diagram by tensor contraction (spider tensors plus
/// Hadamard edge matrices), rescaled so the result is unitary; the global
/// scalar of the diagram is discarded. Row index is the output basis state,
/// column index the input basis state, bit q of each index being wire q.
/// Throws if the map is not proportional to a unitary or the contraction
/// frontier exceeds the size cap.
Unitary diagram_unitary(const ZxDiagram& d);

}  // namespace gms
