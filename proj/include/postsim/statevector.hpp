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
#include <cstdint>
#include <vector>

#include "postsim/errors.hpp"
#include "postsim/gates.hpp"

namespace postsim {

/// Dense normalized amplitude vector over n qubits.
///
/// Bit ordering: qubit 0 is the most significant bit of the amplitude index,
/// so |q0 q1 ... q_{n-1}> lives at index (q0 << (n-1)) | ... | q_{n-1}.
/// All operations preserve the norm except explicit postselection, which
/// renormalizes before returning.
class Statevector {
  public:
    /// Builds the computational basis state |basis_index> on n_qubits.
    static Statevector basis(int n_qubits, std::uint64_t basis_index);

    /// Takes ownership of a full amplitude vector (size must be 2^n_qubits).
    Statevector(int n_qubits, std::vector<std::complex<double>> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    const std::vector<std::complex<double>> &amplitudes() const { return amps_; }
    std::complex<double> &operator[](std::size_t i) { return amps_[i]; }
    const std::complex<double> &operator[](std::size_t i) const { return amps_[i]; }

    /// Index mask of qubit q under the MSB-first convention.
    std::uint64_t mask(int qubit) const {
        return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
    }

    double norm() const;
    void renormalize();

    /// Applies `gate` to the listed target qubits, in place. Targets follow
    /// the same MSB-first convention: the first listed target is the most
    /// significant bit of the gate's local basis.
    void apply(const Gate &gate, const std::vector<int> &targets);

    /// This state tensored with `other` (other's qubits appended below).
    Statevector tensor(const Statevector &other) const;

    /// Appends k fresh |0> qubits at the highest indices.
    Statevector extended(int k) const;

  private:
    int n_qubits_;
    std::vector<std::complex<double>> amps_;
};

/// Value-returning counterpart of Statevector::apply.
Statevector apply_gate(const Statevector &state, const Gate &gate,
                       const std::vector<int> &targets);

/// <a|b>.
std::complex<double> inner(const Statevector &a, const Statevector &b);

/// Largest number of qubits the dense simulator will allocate.
inline constexpr int kMaxQubits = 26;

} // namespace postsim
