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

// Brute-force references shared by the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "acekit/circuit.hpp"
#include "acekit/noise.hpp"

namespace acekit::oracle {

// Probability that at least two of `locations` independent sites fail, by summing
// over every fault subset.
inline double enumerate_rectangle_failure(uint32_t locations, double p) {
    long double total = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << locations); ++mask) {
        int k = __builtin_popcountll(mask);
        if (k < 2) continue;
        long double w = 1;
        for (uint32_t i = 0; i < locations; ++i) w *= (mask >> i) & 1 ? p : 1 - static_cast<long double>(p);
        total += w;
    }
    return static_cast<double>(total);
}

// Decoherence channel evaluated in extended precision.
struct LongChannel {
    long double p_x, p_y, p_z;
};

inline LongChannel long_channel(const DecoherenceParams &d) {
    long double t = d.gate_time, t1 = d.t1, t2 = d.t2;
    long double px = -std::expm1(-t / t1) / 4;
    long double a = t / t1;
    long double b = t / (2 * t1) + 2 * t / t2;
    long double pz = (std::expm1(-a) - 2 * std::expm1(-b)) / 4;
    return {px, px, pz};
}

// Exact probability that some `type` rectangle of a one-qubit circuit holds at least
// two faults, accounting for the blocks shared by neighbouring rectangles.
inline double chain_failure(const LogicalCircuit &c, ErrorType type, double p, const CostModel &cost) {
    const OpKind cut = correction_kind(type);
    auto counts = [&](uint64_t n) {
        double p0 = std::pow(1 - p, static_cast<double>(n));
        double p1 = n == 0 ? 0 : n * p * std::pow(1 - p, static_cast<double>(n - 1));
        return std::array<double, 3>{p0, p1, 1 - p0 - p1};
    };
    // ok[k]: probability that every closed rectangle survived and the open cut block
    // holds k faults (k = 0, 1).
    std::array<double, 2> ok{1, 0};
    uint64_t run = 0;
    for (size_t s = 0; s <= c.n_steps(); ++s) {
        bool at_edge = s == c.n_steps();
        if (!at_edge && c.at(s, 0).kind != cut) {
            run += cost.locations(c.at(s, 0).kind);
            continue;
        }
        auto mid = counts(run);
        auto blk = at_edge ? std::array<double, 3>{1, 0, 0} : counts(cost.locations(cut));
        std::array<double, 2> next{0, 0};
        for (int c0 = 0; c0 < 2; ++c0)
            for (int m = 0; m < 3; ++m)
                for (int c1 = 0; c1 < 3; ++c1)
                    if (c0 + m + c1 < 2) next[c1] += ok[c0] * mid[m] * blk[c1];
        ok = next;
        run = 0;
    }
    return 1 - ok[0] - ok[1];
}

// A random well-formed circuit. Each qubit gets one op per step.
inline LogicalCircuit random_circuit(std::mt19937_64 &rng, uint32_t n_qubits, uint32_t n_steps,
                                     bool corrections) {
    std::vector<LogicalCircuit::Step> steps;
    std::vector<uint32_t> order(n_qubits);
    for (uint32_t s = 0; s < n_steps; ++s) {
        for (uint32_t q = 0; q < n_qubits; ++q) order[q] = q;
        std::shuffle(order.begin(), order.end(), rng);
        LogicalCircuit::Step step;
        for (size_t i = 0; i < order.size(); ++i) {
            uint32_t pick = rng() % (corrections ? 7 : 5);
            if (pick == 4 && i + 1 < order.size()) {
                step.push_back({OpKind::CX, order[i], order[i + 1]});
                ++i;
                continue;
            }
            static constexpr OpKind kinds[] = {OpKind::Wait, OpKind::H, OpKind::S, OpKind::T,
                                               OpKind::Wait, OpKind::XEC, OpKind::ZEC};
            step.push_back({kinds[pick], order[i], 0});
        }
        steps.push_back(std::move(step));
    }
    return LogicalCircuit::make(n_qubits, std::move(steps));
}

// A random gate circuit over CX, H, S and WAIT only.
inline LogicalCircuit random_clifford(std::mt19937_64 &rng, uint32_t n_qubits, uint32_t n_steps) {
    LogicalCircuit c = random_circuit(rng, n_qubits, n_steps, false);
    std::vector<LogicalCircuit::Step> steps = c.steps();
    for (auto &step : steps)
        for (auto &op : step)
            if (op.kind == OpKind::T) op.kind = OpKind::S;
    return LogicalCircuit::make(n_qubits, std::move(steps));
}

}  // namespace acekit::oracle
