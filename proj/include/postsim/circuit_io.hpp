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
#include <string>
#include <string_view>
#include <vector>

#include "postsim/circuit.hpp"
#include "postsim/statevector.hpp"

namespace postsim {

// Circuit text format (UTF-8, line oriented):
//   # comment
//   registers witness1=<w1> witness2=<w2> ancilla=<m>
//   out <index>            (optional, default 0)
//   NAME target...
//   NAME(angle[,angle...]) target...
// Angles are decimal radians. The registers line must be the first
// non-comment line.

/// Parses circuit text; throws ParseError with a line number on failure.
Circuit parse_circuit(std::string_view text);

/// Canonical text for a circuit; parse(serialize(c)) reproduces the gate
/// list exactly (angles are written with 17 significant digits).
std::string serialize_circuit(const Circuit &circuit);

Circuit load_circuit_file(const std::string &path);

// State file format: header "amplitudes <k>" then 2^k lines "<re> <im>".

Statevector parse_state(std::string_view text);
std::string serialize_state(const Statevector &state);
Statevector load_state_file(const std::string &path);
void save_state_file(const Statevector &state, const std::string &path);

// Truth-table file format: header "bits <n>" then 2^n lines of 0/1.

struct TruthTable {
    int n_bits;
    std::vector<std::uint8_t> outputs; // size 2^n_bits

    std::uint64_t ones() const;
};

TruthTable parse_truth_table(std::string_view text);
TruthTable load_truth_table_file(const std::string &path);

/// Formats a double with 17 significant digits (round-trips exactly).
std::string format_double(double x);

} // namespace postsim
