// Copyright 2026 The postsim Authors.
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

#include <utility>
#include <vector>

#include "postsim/gates.hpp"
#include "postsim/statevector.hpp"

namespace postsim {

/// Register layout: witness1 qubits occupy the lowest indices, then
/// witness2, then ancillas.
struct Layout {
    int witness1 = 0;
    int witness2 = 0;
    int ancilla = 0;

    int total() const { return witness1 + witness2 + ancilla; }
    int witness_total() const { return witness1 + witness2; }
    /// First ancilla index.
    int ancilla_start() const { return witness1 + witness2; }
};

struct AppliedGate {
    Gate gate;
    std::vector<int> targets;
};

/// A verifier circuit: register layout, designated output qubit (default 0,
/// the conventional "first qubit"), and an ordered gate list.
class Circuit {
  public:
    explicit Circuit(Layout layout, int output_qubit = 0);

    void add(Gate gate, std::vector<int> targets);

    int n_qubits() const { return layout_.total(); }
    const Layout &layout() const { return layout_; }
    int output_qubit() const { return output_qubit_; }
    const std::vector<AppliedGate> &gates() const { return gates_; }

  private:
    Layout layout_;
    int output_qubit_;
    std::vector<AppliedGate> gates_;
};

/// Applies all gates in order; the input must have the circuit's qubit count.
Statevector apply_circuit(const Statevector &state, const Circuit &circuit);

/// Applies the circuit's gates to a larger state whose lowest-index qubits
/// host the circuit (appended qubits keep their indices untouched).
void apply_circuit_in_place(Statevector &state, const Circuit &circuit);

/// Reversed gate list with each gate replaced by its inverse.
Circuit inverse_circuit(const Circuit &circuit);

} // namespace postsim
