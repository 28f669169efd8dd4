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

#include "postsim/projector.hpp"

#include <algorithm>
#include <cmath>

namespace postsim {

using cd = std::complex<double>;

namespace {

void check_qubits(const std::vector<int> &qubits) {
    if (qubits.empty()) throw InputError("projector needs at least one qubit");
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] < 0) throw InputError("negative qubit index in projector");
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[i] == qubits[j]) {
                throw InputError("duplicate qubit in projector");
            }
        }
    }
}

/// Extracts the local pattern of `state` index i on the projector qubits,
/// first listed qubit as the most significant bit.
std::uint64_t local_pattern(const Statevector &state, const std::vector<int> &qubits,
                            std::uint64_t i) {
    std::uint64_t p = 0;
    for (int q : qubits) {
        p = (p << 1) | ((i & state.mask(q)) ? 1u : 0u);
    }
    return p;
}

} // namespace

ProjectorSpec::ProjectorSpec(Kind kind, std::vector<int> qubits,
                             std::vector<std::uint64_t> patterns, Statevector vector)
    : kind_(kind), qubits_(std::move(qubits)), patterns_(std::move(patterns)),
      vector_(std::move(vector)) {}

ProjectorSpec ProjectorSpec::basis_subspace(std::vector<int> qubits,
                                            std::vector<std::uint64_t> patterns) {
    check_qubits(qubits);
    if (patterns.empty()) {
        throw InputError("basis-subspace projector needs at least one pattern");
    }
    const std::uint64_t bound = std::uint64_t{1} << qubits.size();
    for (auto p : patterns) {
        if (p >= bound) {
            throw InputError("projector pattern out of range");
        }
    }
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    return ProjectorSpec(Kind::basis_subspace, std::move(qubits),
                         std::move(patterns), Statevector::basis(1, 0));
}

ProjectorSpec ProjectorSpec::rank_one(std::vector<int> qubits, Statevector vector) {
    check_qubits(qubits);
    if (vector.n_qubits() != static_cast<int>(qubits.size())) {
        throw InputError("rank-one projector vector must live on the listed qubits");
    }
    if (std::abs(vector.norm() - 1.0) > 1e-9) {
        throw InputError("rank-one projector vector must be normalized");
    }
    return ProjectorSpec(Kind::rank_one_vector, std::move(qubits), {},
                         std::move(vector));
}

double projection_probability(const Statevector &state, const ProjectorSpec &proj) {
    for (int q : proj.qubits()) {
        if (q >= state.n_qubits()) {
            throw InputError("projector qubit " + std::to_string(q) +
                             " out of range");
        }
    }
    if (proj.kind() == ProjectorSpec::Kind::basis_subspace) {
        double p = 0.0;
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            const std::uint64_t pat = local_pattern(state, proj.qubits(), i);
            if (std::binary_search(proj.patterns().begin(), proj.patterns().end(),
                                   pat)) {
                p += std::norm(state[i]);
            }
        }
        return p;
    }
    // Rank one: group indices by the configuration of the untouched qubits
    // and accumulate <v|psi_rest>.
    const auto &v = proj.vector();
    std::uint64_t rest_mask = state.dim() - 1;
    for (int q : proj.qubits()) rest_mask &= ~state.mask(q);
    double p = 0.0;
    std::vector<cd> overlap(state.dim() >> proj.qubits().size(), cd{0, 0});
    // Compress each rest-configuration into a dense slot by deleting the
    // projector bits out of the index.
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const std::uint64_t pat = local_pattern(state, proj.qubits(), i);
        // Dense rank of the rest configuration.
        std::uint64_t rest = 0;
        for (int q = 0; q < state.n_qubits(); ++q) {
            const std::uint64_t m = state.mask(q);
            if (m & rest_mask) rest = (rest << 1) | ((i & m) ? 1u : 0u);
        }
        overlap[rest] += std::conj(v[pat]) * state[i];
    }
    for (const auto &o : overlap) p += std::norm(o);
    return p;
}

ProjectionResult project(const Statevector &state, const ProjectorSpec &proj) {
    const double p = projection_probability(state, proj);
    if (p < kNullPostselectionTolerance) {
        throw NullPostselectionError(
            "postselection on an event of probability " + std::to_string(p));
    }
    Statevector out = state;
    if (proj.kind() == ProjectorSpec::Kind::basis_subspace) {
        for (std::uint64_t i = 0; i < out.dim(); ++i) {
            const std::uint64_t pat = local_pattern(out, proj.qubits(), i);
            if (!std::binary_search(proj.patterns().begin(), proj.patterns().end(),
                                    pat)) {
                out[i] = cd{0, 0};
            }
        }
    } else {
        const auto &v = proj.vector();
        std::uint64_t rest_mask = out.dim() - 1;
        for (int q : proj.qubits()) rest_mask &= ~out.mask(q);
        std::vector<cd> overlap(out.dim() >> proj.qubits().size(), cd{0, 0});
        std::vector<std::uint64_t> rest_of(out.dim());
        std::vector<std::uint64_t> pat_of(out.dim());
        for (std::uint64_t i = 0; i < out.dim(); ++i) {
            pat_of[i] = local_pattern(out, proj.qubits(), i);
            std::uint64_t rest = 0;
            for (int q = 0; q < out.n_qubits(); ++q) {
                const std::uint64_t m = out.mask(q);
                if (m & rest_mask) rest = (rest << 1) | ((i & m) ? 1u : 0u);
            }
            rest_of[i] = rest;
            overlap[rest] += std::conj(v[pat_of[i]]) * out[i];
        }
        for (std::uint64_t i = 0; i < out.dim(); ++i) {
            out[i] = v[pat_of[i]] * overlap[rest_of[i]];
        }
    }
    out.renormalize();
    return {p, std::move(out)};
}

} // namespace postsim
