//
// Copyright 2026 The dppca Authors
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
//

#ifndef DPPCA_RNG_H_
#define DPPCA_RNG_H_

#include <cstdint>
#include <random>

namespace dppca {

// Every sampler takes an explicit generator; there is no global RNG state.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t SplitMix64(std::uint64_t x);

// Counter-based seed split: the seed for item `index` of stream `stream`
// depends only on (master, stream, index), never on scheduling.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream,
                         std::uint64_t index);

inline Rng MakeRng(std::uint64_t seed) { return Rng(SplitMix64(seed)); }

}  // namespace dppca

#endif  // DPPCA_RNG_H_
