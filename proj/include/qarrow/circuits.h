// Copyright 2026 The qarrow Authors
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

#ifndef QARROW_CIRCUITS_H
#define QARROW_CIRCUITS_H

#include <string>
#include <string_view>
#include <vector>

#include "qarrow/superop.h"

namespace qarrow {

/// Toffoli on (top, middle, bottom) written as a chain of binds through
/// H, controlled phase, CNOT and controlled adjoint phase.
LinearOp toffoli_lin();

/// The same circuit built from arr re-wirings and `first` over lifted gates.
Superoperator toffoli_super();

/// (eprL, q) -> (m1, m2). CNOT from q onto eprL, H on q, measure both, keep
/// the classical outcomes.
Superoperator alice();

/// (eprR, m1, m2) -> eprR. CNOT from m2 and controlled-Z from m1 onto eprR,
/// then trace out the two control bits.
Superoperator bob();

/// (eprL, eprR, q) -> q'. alice on (eprL, q) then bob on (eprR, m1, m2).
Superoperator teleport();

/// Density of epr on (eprL, eprR) times the pure qubit q, over the flat
/// (eprL, eprR, q) basis expected by teleport().
DensityMatrix prepare_teleport_input(const StateVector &qubit);

/// x -> (x, x). Shares a value; does not clone a quantum state.
Superoperator copy_op();
/// (x, y) -> y as a pure function. Not physically realizable.
Superoperator weaken_op();

struct CatalogCircuit {
    std::string name;
    std::string description;
    Superoperator op;
    DensityMatrix default_input;
    DensityMatrix expected_output;
};

/// Circuits runnable by name from the command line: toffoli, teleport.
const std::vector<CatalogCircuit> &circuit_catalog();
/// Throws std::invalid_argument listing valid names.
const CatalogCircuit &find_circuit(std::string_view name);

/// Default qubit teleported by the catalog entry: 0.6|False> + 0.8i|True>.
StateVector default_teleport_qubit();

}  // namespace qarrow

#endif
