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

#include "acekit/noise.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "acekit/error.hpp"

namespace acekit {

namespace {

constexpr double kSumTolerance = 1e-12;

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

}  // namespace

double PauliChannel::alpha() const {
    if (p_x_eff() <= 0) {
        return std::numeric_limits<double>::infinity();
    }
    return p_z_eff() / p_x_eff();
}

void PauliChannel::validate() const {
    for (double p : {p_i, p_x, p_y, p_z}) {
        if (!(p >= 0 && p <= 1)) {
            throw InputError("Pauli channel probability outside [0, 1]");
        }
    }
    if (std::abs(p_i + p_x + p_y + p_z - 1) > kSumTolerance) {
        throw InputError("Pauli channel probabilities do not sum to 1");
    }
}

PauliChannel PauliChannel::from_effective(double p_x_eff, double p_z_eff) {
    PauliChannel c;
    c.p_x = p_x_eff;
    c.p_z = p_z_eff;
    c.p_y = 0;
    c.p_i = 1 - p_x_eff - p_z_eff;
    c.validate();
    return c;
}

void validate(const DecoherenceParams &params) {
    if (!(params.t1 > 0) || !(params.t2 > 0) || !(params.gate_time > 0)) {
        throw InputError("T1, T2 and gate time must be positive");
    }
    if (params.t2 > 2 * params.t1) {
        throw InputError("unphysical decoherence parameters: T2 > 2 T1");
    }
}

PauliChannel derive_channel(const DecoherenceParams &params) {
    validate(params);
    const double t = params.gate_time;
    const double relax = t / params.t1;
    const double dephase = t / (2 * params.t1) + 2 * t / params.t2;

    // 1 - e^{-a} = -expm1(-a); the Z coefficient regrouped as expm1(-a) - 2 expm1(-b).
    PauliChannel c;
    c.p_x = -std::expm1(-relax) / 4;
    c.p_y = c.p_x;
    c.p_z = (std::expm1(-relax) - 2 * std::expm1(-dephase)) / 4;
    if (c.p_z < 0) {
        throw InputError("decoherence parameters yield a negative Z probability");
    }
    c.p_i = 1 - c.p_x - c.p_y - c.p_z;
    return c;
}

double asymmetry(const PauliChannel &channel) {
    if (channel.p_x_eff() <= 0) {
        throw InputError("degenerate channel: no X-type faults, asymmetry undefined");
    }
    return channel.p_z_eff() / channel.p_x_eff();
}

PauliChannel channel_from_total_and_alpha(double p_total, double alpha) {
    if (!(p_total > 0 && p_total < 1)) {
        throw InputError("p_total must lie in (0, 1)");
    }
    if (!(alpha >= 0.5) || !std::isfinite(alpha)) {
        throw InputError("alpha must be finite and at least 1/2 when p_x = p_y");
    }
    PauliChannel c;
    c.p_x = p_total / (2 * alpha + 1);
    c.p_y = c.p_x;
    c.p_z = (2 * alpha - 1) * c.p_x;
    c.p_i = 1 - p_total;
    return c;
}

int alpha_order(double alpha) {
    if (!(alpha > 0)) {
        throw InputError("asymmetry must be positive to have an order of magnitude");
    }
    return static_cast<int>(std::floor(std::log10(alpha)));
}

const std::vector<SystemPreset> &preset_catalog() {
    static const std::vector<SystemPreset> catalog = {
        {"P:Si", {3600.0, 1e-3, 0}, 6},
        {"gaas-quantum-dots", {10e-3, 1e-6, 0}, 4},
        {"superconducting-flux", {4e-6, 100e-9, 0}, 2},
        {"trapped-ions", {100e-3, 1e-3, 0}, 2},
        {"solid-state-nmr", {60.0, 1.0, 0}, 2},
    };
    return catalog;
}

const SystemPreset &find_preset(std::string_view name) {
    for (const auto &p : preset_catalog()) {
        if (iequals(p.name, name)) {
            return p;
        }
    }
    throw InputError("unknown preset '" + std::string(name) + "'");
}

std::vector<SystemPreset> parse_preset_table(std::string_view text) {
    std::vector<SystemPreset> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream row(line);
        std::string name, t1s, t2s, extra;
        if (!(row >> name)) {
            continue;
        }
        if (!(row >> t1s >> t2s) || (row >> extra)) {
            throw InputError("preset table line " + std::to_string(line_no) +
                             ": expected 'name t1_seconds t2_seconds'");
        }
        SystemPreset p;
        p.name = name;
        try {
            size_t used1 = 0, used2 = 0;
            p.params.t1 = std::stod(t1s, &used1);
            p.params.t2 = std::stod(t2s, &used2);
            if (used1 != t1s.size() || used2 != t2s.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw InputError("preset table line " + std::to_string(line_no) + ": bad number");
        }
        if (!(p.params.t1 > 0) || !(p.params.t2 > 0)) {
            throw InputError("preset table line " + std::to_string(line_no) +
                             ": times must be positive");
        }
        for (const auto &q : out) {
            if (iequals(q.name, p.name)) {
                throw InputError("preset table: duplicate name '" + p.name + "'");
            }
        }
        p.expected_alpha_order = alpha_order(2 * p.params.t1 / p.params.t2);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace acekit
