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

#include <Eigen/Dense>

#include "postsim/circuit.hpp"
#include "postsim/statevector.hpp"

namespace postsim {

/// A Hermitian matrix (acceptance operators have spectrum inside [0,1]).
struct HermitianOperator {
    Eigen::MatrixXcd entries;

    int dim() const { return static_cast<int>(entries.rows()); }

    /// max |(M - M^dag)_{ij}|.
    double hermiticity_defect() const;

    /// <v|M|v> for a unit vector given as a Statevector.
    double expectation(const Statevector &v) const;
};

/// ||Pi_1 Q |input>||^2 with Pi_1 = |1><1| on the circuit's output qubit.
/// The input's ancilla registers must be |0...0> within 1e-10.
double acceptance_probability(const Circuit &circuit, const Statevector &input);

/// Same quantity for an arbitrary pure input on the circuit's qubits, with
/// no constraint on the ancilla portion.
double output_one_probability(const Circuit &circuit, const Statevector &input);

/// The operator A on the witness registers (dimension 2^(w1+w2)) with
/// <v|A|v> = acceptance_probability(circuit, v tensor |0^m>). Built by
/// conjugating Pi_1 by the circuit and compressing onto the ancilla-zero
/// subspace.
HermitianOperator acceptance_operator(const Circuit &circuit);

/// v tensor |0^m> laid out per the circuit's register convention.
Statevector with_zero_ancillas(const Circuit &circuit, const Statevector &witness);

} // namespace postsim
