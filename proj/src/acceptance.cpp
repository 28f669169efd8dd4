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

#include "postsim/acceptance.hpp"

#include <cmath>

#include "postsim/errors.hpp"
#include "postsim/projector.hpp"

namespace postsim {

double HermitianOperator::hermiticity_defect() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double HermitianOperator::expectation(const Statevector &v) const {
    if (static_cast<std::size_t>(dim()) != v.dim()) {
        throw InputError("operator/state dimension mismatch");
    }
    Eigen::Map<const Eigen::VectorXcd> x(v.amplitudes().data(), dim());
    return (x.adjoint() * entries * x).value().real();
}

double output_one_probability(const Circuit &circuit, const Statevector &input) {
    if (input.n_qubits() != circuit.n_qubits()) {
        throw InputError("input state does not match the circuit's qubit count");
    }
    Statevector final = apply_circuit(input, circuit);
    double p = 0.0;
    const std::uint64_t m = final.mask(circuit.output_qubit());
    for (std::uint64_t i = 0; i < final.dim(); ++i) {
        if (i & m) p += std::norm(final[i]);
    }
    return p;
}

double acceptance_probability(const Circuit &circuit, const Statevector &input) {
    if (input.n_qubits() != circuit.n_qubits()) {
        throw InputError("input state does not match the circuit's qubit count");
    }
    const Layout &lay = circuit.layout();
    if (lay.ancilla > 0) {
        // The ancilla portion must be |0...0>: no amplitude outside the
        // ancilla-zero subspace.
        std::uint64_t anc_mask = 0;
        for (int q = lay.ancilla_start(); q < lay.total(); ++q) {
            anc_mask |= input.mask(q);
        }
        double leak = 0.0;
        for (std::uint64_t i = 0; i < input.dim(); ++i) {
            if (i & anc_mask) leak += std::norm(input[i]);
        }
        if (std::sqrt(leak) > 1e-10) {
            throw InputError("input ancillas are not |0...0>");
        }
    }
    return output_one_probability(circuit, input);
}

Statevector with_zero_ancillas(const Circuit &circuit, const Statevector &witness) {
    const Layout &lay = circuit.layout();
    if (witness.n_qubits() != lay.witness_total()) {
        throw InputError("witness must cover exactly the witness registers");
    }
    if (lay.ancilla == 0) return witness;
    return witness.extended(lay.ancilla);
}

HermitianOperator acceptance_operator(const Circuit &circuit) {
    const Layout &lay = circuit.layout();
    const int wq = lay.witness_total();
    if (wq <= 0) {
        throw InputError("circuit declares no witness qubits");
    }
    const std::uint64_t wdim = std::uint64_t{1} << wq;
    const std::uint64_t fdim = std::uint64_t{1} << circuit.n_qubits();

    // Columns of Pi_1 Q restricted to witness basis states with zeroed
    // ancillas; then A = C^dag C.
    Eigen::MatrixXcd cols(fdim, wdim);
    for (std::uint64_t j = 0; j < wdim; ++j) {
        Statevector in = with_zero_ancillas(circuit, Statevector::basis(wq, j));
        Statevector out = apply_circuit(in, circuit);
        const std::uint64_t m = out.mask(circuit.output_qubit());
        for (std::uint64_t i = 0; i < fdim; ++i) {
            cols(i, j) = (i & m) ? out[i] : std::complex<double>{0, 0};
        }
    }
    HermitianOperator a{cols.adjoint() * cols};
    return a;
}

} // namespace postsim
