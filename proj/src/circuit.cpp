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

#include "postsim/circuit.hpp"

#include "postsim/errors.hpp"

namespace postsim {

Circuit::Circuit(Layout layout, int output_qubit)
    : layout_(layout), output_qubit_(output_qubit) {
    if (layout.witness1 < 0 || layout.witness2 < 0 || layout.ancilla < 0) {
        throw InputError("register sizes must be non-negative");
    }
    if (layout.total() <= 0) {
        throw InputError("circuit needs at least one qubit");
    }
    if (layout.total() > kMaxQubits) {
        throw CapacityError("circuit exceeds the dense qubit limit");
    }
    if (output_qubit < 0 || output_qubit >= layout.total()) {
        throw InputError("output qubit " + std::to_string(output_qubit) +
                         " out of range");
    }
}

void Circuit::add(Gate gate, std::vector<int> targets) {
    if (static_cast<int>(targets.size()) != gate.arity) {
        throw InputError("gate " + gate.name + " expects " +
                         std::to_string(gate.arity) + " target(s)");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= n_qubits()) {
            throw InputError("target qubit " + std::to_string(targets[i]) +
                             " out of range for " + std::to_string(n_qubits()) +
                             " qubit(s)");
        }
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw InputError("duplicate target qubit " +
                                 std::to_string(targets[i]));
            }
        }
    }
    gates_.push_back({std::move(gate), std::move(targets)});
}

Statevector apply_circuit(const Statevector &state, const Circuit &circuit) {
    if (state.n_qubits() != circuit.n_qubits()) {
        throw InputError("state has " + std::to_string(state.n_qubits()) +
                         " qubit(s) but the circuit needs " +
                         std::to_string(circuit.n_qubits()));
    }
    Statevector out = state;
    apply_circuit_in_place(out, circuit);
    return out;
}

void apply_circuit_in_place(Statevector &state, const Circuit &circuit) {
    if (state.n_qubits() < circuit.n_qubits()) {
        throw InputError("state too small for the circuit");
    }
    for (const auto &ag : circuit.gates()) {
        state.apply(ag.gate, ag.targets);
    }
}

Circuit inverse_circuit(const Circuit &circuit) {
    Circuit inv(circuit.layout(), circuit.output_qubit());
    const auto &gs = circuit.gates();
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
        inv.add(it->gate.dagger(), it->targets);
    }
    return inv;
}

} // namespace postsim
