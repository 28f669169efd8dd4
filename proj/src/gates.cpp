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

#include "postsim/gates.hpp"

#include <cmath>
#include <cstddef>

#include "postsim/errors.hpp"

namespace postsim {

namespace {

using cd = std::complex<double>;

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

struct GateInfo {
    const char *name;
    int arity;
    int n_params;
};

constexpr GateInfo kGateTable[] = {
    {"H", 1, 0},  {"X", 1, 0},   {"Y", 1, 0},  {"Z", 1, 0},    {"S", 1, 0},
    {"SDG", 1, 0}, {"T", 1, 0},  {"TDG", 1, 0}, {"RX", 1, 1},  {"RY", 1, 1},
    {"RZ", 1, 1}, {"U", 1, 3},   {"CX", 2, 0}, {"CZ", 2, 0},   {"SWAP", 2, 0},
    {"CCX", 3, 0},
};

std::vector<cd> matrix_for(const std::string &name, const std::vector<double> &p) {
    const cd i{0.0, 1.0};
    if (name == "H") return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    if (name == "X") return {0, 1, 1, 0};
    if (name == "Y") return {0, -i, i, 0};
    if (name == "Z") return {1, 0, 0, -1};
    if (name == "S") return {1, 0, 0, i};
    if (name == "SDG") return {1, 0, 0, -i};
    if (name == "T") return {1, 0, 0, std::exp(i * (M_PI / 4.0))};
    if (name == "TDG") return {1, 0, 0, std::exp(-i * (M_PI / 4.0))};
    if (name == "RX") {
        double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        return {c, -i * s, -i * s, c};
    }
    if (name == "RY") {
        double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        return {c, -s, s, c};
    }
    if (name == "RZ") {
        return {std::exp(-i * (p[0] / 2)), 0, 0, std::exp(i * (p[0] / 2))};
    }
    if (name == "U") {
        // OpenQASM convention.
        double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
        return {c, -std::exp(i * p[2]) * s, std::exp(i * p[1]) * s,
                std::exp(i * (p[1] + p[2])) * c};
    }
    if (name == "CX") {
        return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    }
    if (name == "CZ") {
        return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
    }
    if (name == "SWAP") {
        return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
    }
    // CCX
    std::vector<cd> m(64, cd{0, 0});
    for (std::size_t k = 0; k < 8; ++k) {
        std::size_t to = (k == 6) ? 7 : (k == 7) ? 6 : k;
        m[to * 8 + k] = 1;
    }
    return m;
}

} // namespace

bool Gate::is_known(const std::string &name, int *n_params, int *arity) {
    for (const auto &g : kGateTable) {
        if (name == g.name) {
            if (n_params) *n_params = g.n_params;
            if (arity) *arity = g.arity;
            return true;
        }
    }
    return false;
}

Gate Gate::by_name(const std::string &name, const std::vector<double> &params) {
    int n_params = 0, arity = 0;
    if (!is_known(name, &n_params, &arity)) {
        throw InputError("unknown gate name: " + name);
    }
    if (static_cast<int>(params.size()) != n_params) {
        throw InputError("gate " + name + " takes " + std::to_string(n_params) +
                         " angle(s), got " + std::to_string(params.size()));
    }
    Gate g{name, arity, params, matrix_for(name, params)};
    if (g.unitarity_defect() > 1e-12) {
        throw InputError("gate " + name + " matrix is not unitary");
    }
    return g;
}

Gate Gate::dagger() const {
    if (name == "S") return by_name("SDG");
    if (name == "SDG") return by_name("S");
    if (name == "T") return by_name("TDG");
    if (name == "TDG") return by_name("T");
    if (name == "RX" || name == "RY" || name == "RZ") {
        return by_name(name, {-params[0]});
    }
    if (name == "U") return by_name("U", {-params[0], -params[2], -params[1]});
    // The remaining gates are self-inverse.
    return *this;
}

double Gate::unitarity_defect() const {
    const std::size_t d = std::size_t{1} << arity;
    double worst = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            cd s{0, 0};
            for (std::size_t k = 0; k < d; ++k) {
                s += std::conj(matrix[k * d + r]) * matrix[k * d + c];
            }
            if (r == c) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

} // namespace postsim
