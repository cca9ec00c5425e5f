// Copyright 2026 The hms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HMS_RANDOM_H
#define HMS_RANDOM_H

#include <cstdint>
#include <random>

namespace hms {

/// Seedable stream of uniform doubles. Child streams are derived from
/// (seed, index) so block-parallel simulations are reproducible regardless of
/// how blocks are scheduled.
class RandomStream {
   public:
    explicit RandomStream(uint64_t seed) : engine_(mix(seed)) {}

    /// Independent stream number `index` of the family identified by `seed`.
    static RandomStream derive(uint64_t seed, uint64_t index) {
        return RandomStream(mix(seed) ^ mix(index + 0x632be59bd9b4e019ULL));
    }

    /// Uniform in [0, 1), built from the top 53 bits so the sequence does not
    /// depend on the standard library's distribution implementation.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

   private:
    // SplitMix64 finalizer.
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace hms

#endif  // HMS_RANDOM_H
