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

#include "acekit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "acekit/error.hpp"

namespace acekit {

FaultThresholds thresholds_for(const PauliChannel &channel) {
    channel.validate();
    constexpr double scale = 4294967296.0;
    auto q = [&](double p) { return static_cast<uint64_t>(std::floor(p * scale)); };
    uint64_t x = q(channel.p_x);
    uint64_t y = x + q(channel.p_y);
    uint64_t z = y + q(channel.p_z);
    if (z > 0xFFFFFFFFull) {
        z = 0xFFFFFFFFull;
        y = std::min<uint64_t>(y, z);
        x = std::min<uint64_t>(x, y);
    }
    return {static_cast<uint32_t>(x), static_cast<uint32_t>(y), static_cast<uint32_t>(z)};
}

namespace kernels {

FaultCounts count_faults_scalar(ShotKey key, uint32_t first, uint32_t count, FaultThresholds t) {
    FaultCounts c;
    for (uint32_t i = 0; i < count; ++i) {
        uint32_t u = location_uniform(key, first + i);
        c.x += u < t.y_end;
        c.z += (u >= t.x_end) & (u < t.z_end);
    }
    return c;
}

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

CountFn select() {
    const char *force = std::getenv("ACEKIT_KERNEL");
    if (force && std::string(force) == "scalar") {
        return count_faults_scalar;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) {
        return count_faults_avx2;
    }
#endif
    return count_faults_scalar;
}

std::string_view selected_name() { return select() == count_faults_scalar ? "scalar" : "avx2"; }

}  // namespace kernels

}  // namespace acekit
