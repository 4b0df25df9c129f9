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
#include <string_view>

#include "acekit/noise.hpp"
#include "acekit/rng.hpp"

namespace acekit {

/// Cumulative 32-bit thresholds: u < x_end is X, u < y_end is Y, u < z_end is Z.
struct FaultThresholds {
    uint32_t x_end = 0;
    uint32_t y_end = 0;
    uint32_t z_end = 0;
};

FaultThresholds thresholds_for(const PauliChannel &channel);

/// Effective fault counts over a run of locations (a Y counts toward both).
struct FaultCounts {
    uint32_t x = 0;
    uint32_t z = 0;
    bool operator==(const FaultCounts &) const = default;
};

namespace kernels {

using CountFn = FaultCounts (*)(ShotKey key, uint32_t first, uint32_t count, FaultThresholds t);

FaultCounts count_faults_scalar(ShotKey key, uint32_t first, uint32_t count, FaultThresholds t);

#if defined(__x86_64__) || defined(_M_X64)
FaultCounts count_faults_avx2(ShotKey key, uint32_t first, uint32_t count, FaultThresholds t);
#endif

bool avx2_available();

/// Best kernel for this CPU. ACEKIT_KERNEL=scalar in the environment forces the
/// reference path.
CountFn select();
std::string_view selected_name();

}  // namespace kernels

}  // namespace acekit
