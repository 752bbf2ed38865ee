/*
   Copyright 2026 The ringtwist Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef RINGTWIST_RANDOM_HPP
#define RINGTWIST_RANDOM_HPP

#include <cstdint>
#include <random>

namespace ringtwist {

/// The only generator used anywhere; mt19937_64 output is fixed by the standard.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n). Rejection sampling keeps the draw portable,
/// unlike std::uniform_int_distribution whose algorithm is unspecified.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline bool coin(Rng& rng, std::uint64_t num, std::uint64_t den) { return uniform_below(rng, den) < num; }

}  // namespace ringtwist

#endif
