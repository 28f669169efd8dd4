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

#include <complex>
#include <string>
#include <vector>

namespace postsim {

/// A named unitary on 1..3 qubits. `matrix` is row-major, dimension
/// 2^arity, and unitary within 1e-12 (checked on construction).
struct Gate {
    std::string name;
    int arity = 1;
    std::vector<double> params;
    std::vector<std::complex<double>> matrix;

    /// Factory for the fixed gate set: H, X, Y, Z, S, SDG, T, TDG,
    /// RX/RY/RZ(theta), U(theta,phi,lambda), CX, CZ, SWAP, CCX.
    /// Throws InputError for unknown names or wrong parameter counts.
    static Gate by_name(const std::string &name,
                        const std::vector<double> &params = {});

    /// True if `name` is in the gate set, with `n_params` set to the
    /// number of angles it takes.
    static bool is_known(const std::string &name, int *n_params = nullptr,
                         int *arity = nullptr);

    /// Inverse gate, expressed within the same gate set (S -> SDG,
    /// RY(t) -> RY(-t), U(t,p,l) -> U(-t,-l,-p), self-inverse gates
    /// unchanged).
    Gate dagger() const;

    /// max |(U^dag U - I)_{ij}|.
    double unitarity_defect() const;
};

} // namespace postsim
