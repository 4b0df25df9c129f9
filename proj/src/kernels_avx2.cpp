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

// Compiled with -mavx2; only reached through kernels::select() on AVX2 hardware.

#include <immintrin.h>

#include "acekit/kernels.hpp"

namespace acekit::kernels {

namespace {

inline __m256i fmix32x8(__m256i h) {
    h = _mm256_xor_si256(h, _mm256_srli_epi32(h, 16));
    h = _mm256_mullo_epi32(h, _mm256_set1_epi32(static_cast<int>(0x85EBCA6Bu)));
    h = _mm256_xor_si256(h, _mm256_srli_epi32(h, 13));
    h = _mm256_mullo_epi32(h, _mm256_set1_epi32(static_cast<int>(0xC2B2AE35u)));
    h = _mm256_xor_si256(h, _mm256_srli_epi32(h, 16));
    return h;
}

// Unsigned a < b via the sign-flip trick.
inline __m256i less_u32(__m256i a, __m256i b) {
    const __m256i flip = _mm256_set1_epi32(static_cast<int>(0x80000000u));
    return _mm256_cmpgt_epi32(_mm256_xor_si256(b, flip), _mm256_xor_si256(a, flip));
}

inline uint32_t lanes_set(__m256i mask) {
    return static_cast<uint32_t>(__builtin_popcount(_mm256_movemask_ps(_mm256_castsi256_ps(mask))));
}

}  // namespace

FaultCounts count_faults_avx2(ShotKey key, uint32_t first, uint32_t count, FaultThresholds t) {
    const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i stride = _mm256_set1_epi32(static_cast<int>(kLocationStride));
    const __m256i lo = _mm256_set1_epi32(static_cast<int>(key.lo));
    const __m256i hi = _mm256_set1_epi32(static_cast<int>(key.hi));
    const __m256i x_end = _mm256_set1_epi32(static_cast<int>(t.x_end));
    const __m256i y_end = _mm256_set1_epi32(static_cast<int>(t.y_end));
    const __m256i z_end = _mm256_set1_epi32(static_cast<int>(t.z_end));

    FaultCounts c;
    uint32_t i = 0;
    for (; i + 8 <= count; i += 8) {
        __m256i loc = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(first + i)), lane);
        __m256i h = fmix32x8(_mm256_add_epi32(_mm256_mullo_epi32(loc, stride), lo));
        __m256i u = fmix32x8(_mm256_xor_si256(h, hi));
        c.x += lanes_set(less_u32(u, y_end));
        c.z += lanes_set(_mm256_andnot_si256(less_u32(u, x_end), less_u32(u, z_end)));
    }
    FaultCounts tail = count_faults_scalar(key, first + i, count - i, t);
    c.x += tail.x;
    c.z += tail.z;
    return c;
}

}  // namespace acekit::kernels
