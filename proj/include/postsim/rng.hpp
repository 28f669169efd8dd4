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

#include <cmath>
#include <complex>
#include <cstdint>
#include <string_view>

namespace postsim {

/// Deterministic splitmix64 stream. Every stochastic operation derives its
/// own sub-stream from (seed, operation name, index), so identical configs
/// reproduce bit-identical results regardless of call order elsewhere.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    static RandomStream derive(std::uint64_t seed, std::string_view op_name,
                               std::uint64_t index = 0) {
        // FNV-1a over the operation name, folded into the seed.
        std::uint64_t h = 1469598103934665603ull;
        for (char c : op_name) {
            h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
            h *= 1099511628211ull;
        }
        RandomStream s(seed ^ h);
        s.state_ += 0x9e3779b97f4a7c15ull * (index + 1);
        s.next_u64();
        return s;
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Integer in [0, bound) by rejection-free scaling (bound << 2^64).
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(next_double() * static_cast<double>(bound)) %
               bound;
    }

    /// Standard normal via Box-Muller (one value per call, second cached).
    double next_gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    std::complex<double> next_complex_gaussian() {
        double re = next_gaussian();
        double im = next_gaussian();
        return {re, im};
    }

  private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

} // namespace postsim
