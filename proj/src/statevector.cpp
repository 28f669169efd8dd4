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

#include "postsim/statevector.hpp"

#include <array>
#include <cmath>

namespace postsim {

using cd = std::complex<double>;

Statevector Statevector::basis(int n_qubits, std::uint64_t basis_index) {
    if (n_qubits <= 0) {
        throw InputError("statevector needs at least one qubit");
    }
    if (n_qubits > kMaxQubits) {
        throw CapacityError("requested " + std::to_string(n_qubits) +
                            " qubits exceeds the dense limit of " +
                            std::to_string(kMaxQubits));
    }
    const std::uint64_t d = std::uint64_t{1} << n_qubits;
    if (basis_index >= d) {
        throw InputError("basis index " + std::to_string(basis_index) +
                         " out of range for " + std::to_string(n_qubits) +
                         " qubit(s)");
    }
    std::vector<cd> amps(d, cd{0, 0});
    amps[basis_index] = 1.0;
    return Statevector(n_qubits, std::move(amps));
}

Statevector::Statevector(int n_qubits, std::vector<cd> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits <= 0 || n_qubits > kMaxQubits) {
        throw InputError("qubit count out of range: " + std::to_string(n_qubits));
    }
    if (amps_.size() != (std::uint64_t{1} << n_qubits_)) {
        throw InputError("amplitude vector has length " +
                         std::to_string(amps_.size()) + ", expected 2^" +
                         std::to_string(n_qubits_));
    }
}

double Statevector::norm() const {
    double s = 0.0;
    for (const auto &a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void Statevector::renormalize() {
    const double n = norm();
    if (n <= 0.0) {
        throw InputError("cannot renormalize a zero vector");
    }
    const double inv = 1.0 / n;
    for (auto &a : amps_) a *= inv;
}

void Statevector::apply(const Gate &gate, const std::vector<int> &targets) {
    const int k = gate.arity;
    if (static_cast<int>(targets.size()) != k) {
        throw InputError("gate " + gate.name + " expects " + std::to_string(k) +
                         " target(s), got " + std::to_string(targets.size()));
    }
    std::uint64_t tmask = 0;
    for (int t : targets) {
        if (t < 0 || t >= n_qubits_) {
            throw InputError("target qubit " + std::to_string(t) +
                             " out of range for " + std::to_string(n_qubits_) +
                             " qubit(s)");
        }
        const std::uint64_t m = mask(t);
        if (tmask & m) {
            throw InputError("duplicate target qubit " + std::to_string(t));
        }
        tmask |= m;
    }

    // Local pattern bit (k-1-j) corresponds to targets[j]: the first listed
    // target is the most significant bit of the gate's basis.
    std::array<std::uint64_t, 3> bit{};
    for (int j = 0; j < k; ++j) bit[j] = mask(targets[j]);

    const std::uint64_t d = amps_.size();
    const std::uint64_t sub = std::uint64_t{1} << k;
    std::array<std::uint64_t, 8> offset{};
    for (std::uint64_t p = 0; p < sub; ++p) {
        std::uint64_t off = 0;
        for (int j = 0; j < k; ++j) {
            if (p & (std::uint64_t{1} << (k - 1 - j))) off |= bit[j];
        }
        offset[p] = off;
    }

    // Permutation gates (X, CX, SWAP, CCX) move whole amplitudes; handle the
    // dominant reversible-logic ones without the dense 2^k matmul.
    if (gate.name == "X" || gate.name == "CX" || gate.name == "CCX") {
        const std::uint64_t ctrl = tmask ^ bit[k - 1];
        const std::uint64_t tgt = bit[k - 1];
        for (std::uint64_t i = 0; i < d; ++i) {
            if ((i & ctrl) == ctrl && !(i & tgt)) {
                std::swap(amps_[i], amps_[i | tgt]);
            }
        }
        return;
    }

    std::array<cd, 8> in{};
    std::array<cd, 8> out{};
    for (std::uint64_t i = 0; i < d; ++i) {
        if (i & tmask) continue;
        for (std::uint64_t p = 0; p < sub; ++p) in[p] = amps_[i | offset[p]];
        for (std::uint64_t r = 0; r < sub; ++r) {
            cd acc{0, 0};
            const cd *row = gate.matrix.data() + r * sub;
            for (std::uint64_t c = 0; c < sub; ++c) acc += row[c] * in[c];
            out[r] = acc;
        }
        for (std::uint64_t p = 0; p < sub; ++p) amps_[i | offset[p]] = out[p];
    }
}

Statevector Statevector::tensor(const Statevector &other) const {
    if (n_qubits_ + other.n_qubits_ > kMaxQubits) {
        throw CapacityError("tensor product exceeds the dense qubit limit");
    }
    std::vector<cd> amps;
    amps.resize(dim() * other.dim());
    std::size_t idx = 0;
    for (const auto &a : amps_) {
        for (const auto &b : other.amps_) amps[idx++] = a * b;
    }
    return Statevector(n_qubits_ + other.n_qubits_, std::move(amps));
}

Statevector Statevector::extended(int k) const {
    if (k < 0) throw InputError("cannot append a negative qubit count");
    if (k == 0) return *this;
    if (n_qubits_ + k > kMaxQubits) {
        throw CapacityError("extension exceeds the dense qubit limit");
    }
    std::vector<cd> amps(dim() << k, cd{0, 0});
    for (std::size_t i = 0; i < dim(); ++i) amps[i << k] = amps_[i];
    return Statevector(n_qubits_ + k, std::move(amps));
}

Statevector apply_gate(const Statevector &state, const Gate &gate,
                       const std::vector<int> &targets) {
    Statevector out = state;
    out.apply(gate, targets);
    return out;
}

cd inner(const Statevector &a, const Statevector &b) {
    if (a.dim() != b.dim()) {
        throw InputError("inner product of states with different qubit counts");
    }
    cd s{0, 0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

} // namespace postsim
