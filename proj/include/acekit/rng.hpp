// Copyright 2026 The acekit Authors
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

#pragma once

#include <cstdint>

namespace acekit {

// Counter-based randomness: every (seed, shot, location) maps to one 32-bit uniform
// with no sequential state, so shots can be split across workers in any order.

constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr uint32_t fmix32(uint32_t h) {
    h ^= h >> 16;
    h *= 0x85EBCA6Bu;
    h ^= h >> 13;
    h *= 0xC2B2AE35u;
    h ^= h >> 16;
    return h;
}

struct ShotKey {
    uint32_t lo = 0;
    uint32_t hi = 0;
};

constexpr ShotKey shot_key(uint64_t seed, uint64_t shot) {
    uint64_t k = splitmix64(seed ^ splitmix64(shot ^ 0x632BE59BD9B4E019ull));
    return {static_cast<uint32_t>(k), static_cast<uint32_t>(k >> 32)};
}

constexpr uint32_t kLocationStride = 0x9E3779B1u;

/// Uniform 32-bit draw for one location of one shot. Distinct locations of a shot
/// never collide: both mixing rounds are bijections.
constexpr uint32_t location_uniform(ShotKey key, uint32_t location) {
    uint32_t h = fmix32(location * kLocationStride + key.lo);
    return fmix32(h ^ key.hi);
}

}  // namespace acekit
