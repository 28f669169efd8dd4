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

#include <cstdint>
#include <vector>

#include "postsim/statevector.hpp"

namespace postsim {

/// Probability below which conditioning is refused as a null event.
inline constexpr double kNullPostselectionTolerance = 1e-14;

/// A projector on a subset of qubits: either the span of a set of basis
/// patterns, or a single normalized vector (rank one). Pattern bits follow
/// the usual convention: the first listed qubit is the most significant bit
/// of the pattern / of the local vector's index.
class ProjectorSpec {
  public:
    enum class Kind { basis_subspace, rank_one_vector };

    static ProjectorSpec basis_subspace(std::vector<int> qubits,
                                        std::vector<std::uint64_t> patterns);
    static ProjectorSpec rank_one(std::vector<int> qubits, Statevector vector);

    Kind kind() const { return kind_; }
    const std::vector<int> &qubits() const { return qubits_; }
    const std::vector<std::uint64_t> &patterns() const { return patterns_; }
    const Statevector &vector() const { return vector_; }

  private:
    ProjectorSpec(Kind kind, std::vector<int> qubits,
                  std::vector<std::uint64_t> patterns, Statevector vector);

    Kind kind_;
    std::vector<int> qubits_;
    std::vector<std::uint64_t> patterns_; // basis_subspace only
    Statevector vector_;                  // rank_one_vector only
};

/// ||P|state>||^2 without conditioning (may legitimately be 0).
double projection_probability(const Statevector &state, const ProjectorSpec &proj);

struct ProjectionResult {
    double probability;
    Statevector state;
};

/// The postselection primitive: returns the Born probability and the
/// renormalized conditional state. Throws NullPostselectionError when the
/// probability is below kNullPostselectionTolerance.
ProjectionResult project(const Statevector &state, const ProjectorSpec &proj);

} // namespace postsim
