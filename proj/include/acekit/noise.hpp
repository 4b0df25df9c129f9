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

#include <string>
#include <string_view>
#include <vector>

namespace acekit {

/// Physical decoherence parameters, all in seconds.
struct DecoherenceParams {
    double t1 = 0;
    double t2 = 0;
    double gate_time = 0;
};

/// Single-location Pauli fault channel. Y faults count toward both effective rates.
struct PauliChannel {
    double p_i = 1;
    double p_x = 0;
    double p_y = 0;
    double p_z = 0;

    double p_x_eff() const { return p_x + p_y; }
    double p_z_eff() const { return p_z + p_y; }
    double p_total() const { return p_x + p_y + p_z; }

    /// Infinite when the channel has no X-type component.
    double alpha() const;

    /// Throws InputError unless every probability is in [0,1] and they sum to 1.
    void validate() const;

    static PauliChannel noiseless() { return {}; }
    static PauliChannel from_effective(double p_x_eff, double p_z_eff);
};

struct SystemPreset {
    std::string name;
    DecoherenceParams params;
    int expected_alpha_order = 0;
};

void validate(const DecoherenceParams &params);

/// Pauli channel of free relaxation (T1) and dephasing (T2) over one gate time.
///
/// p_x = p_y = (1 - e^{-t/T1}) / 4
/// p_z = (1 + e^{-t/T1} - 2 e^{-t/(2 T1) - 2t/T2}) / 4
///
/// Both are evaluated through expm1 so that rates near 1e-11 keep full precision.
PauliChannel derive_channel(const DecoherenceParams &params);

/// (p_z + p_y) / (p_x + p_y). Throws InputError for a channel without X-type faults.
double asymmetry(const PauliChannel &channel);

/// Synthetic channel with p_x = p_y and the requested total rate and asymmetry.
PauliChannel channel_from_total_and_alpha(double p_total, double alpha);

/// Decade exponent of an asymmetry value, as written in scientific notation.
int alpha_order(double alpha);

const std::vector<SystemPreset> &preset_catalog();

/// Case-insensitive lookup; throws InputError for unknown names.
const SystemPreset &find_preset(std::string_view name);

/// Reads "name t1_seconds t2_seconds" rows; '#' starts a comment.
std::vector<SystemPreset> parse_preset_table(std::string_view text);

}  // namespace acekit
