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
#include <optional>
#include <string_view>

#include "acekit/circuit.hpp"
#include "acekit/noise.hpp"

namespace acekit {

enum class Replacement : uint8_t { ReplaceWithZec, RemoveToWait };

struct AcePolicy {
    /// Must stay on: hybrid rectangles around mixing gates are not modeled.
    bool keep_around_mixing = true;
    Replacement replacement = Replacement::ReplaceWithZec;
    /// Greedily restore X correction until no X rectangle exceeds this many locations.
    std::optional<uint64_t> max_x_rectangle_locations;
    /// Rebalance against a channel after removal (see `rebalance`).
    bool rebalance = false;

    void validate() const;
};

/// Removes X correction from a corrected circuit.
///
/// An XEC survives when it sits in the correction run next to an H/S/T on its
/// qubit, when it precedes every gate on its qubit (entry), or when it follows every
/// gate and a ZEC already closed the last gate (exit). A removed block becomes a ZEC
/// if another qubit still corrects in that step, a WAIT otherwise; steps left with
/// no correction are dropped. A qubit whose last gate is no longer followed by any
/// X correction gets a closing XEC, ZEC pair.
LogicalCircuit apply_ace(const LogicalCircuit &circuit, const AcePolicy &policy = {},
                         const CostModel &cost = {});

/// Conventional schedule with every X correction removed except next to mixing gates.
LogicalCircuit remove_x_correction(const LogicalCircuit &conventional);

/// Greedy X-correction reinsertion until the analytic X failure probability no
/// longer exceeds the Z failure probability. Each round splits the largest X
/// rectangle at the reinsertion point that minimizes the largest remaining piece.
/// Returns the conventional schedule when the inequality cannot be reached.
LogicalCircuit rebalance(const LogicalCircuit &circuit, const PauliChannel &channel,
                         const CostModel &cost);

/// Greedy reinsertion until the largest X rectangle has at most `cap` locations or
/// no reinsertion point remains.
LogicalCircuit cap_x_rectangles(const LogicalCircuit &circuit, uint64_t cap, const CostModel &cost);

/// Reinsertion points: (qubit, step) gate slots whose following correction run has no XEC.
std::vector<std::pair<uint32_t, uint32_t>> x_reinsertion_points(const LogicalCircuit &circuit);

/// New XEC on `qubit` in a step placed directly after `step`.
LogicalCircuit insert_x_after(const LogicalCircuit &circuit, uint32_t qubit, uint32_t step);

enum class Scheme : uint8_t { Conventional, Ace, AceRebalanced, NoX, Bare };

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view name);

/// Schedules a correction-free circuit. `channel` is only consulted by AceRebalanced.
/// Bare returns the circuit unchanged. AceRebalanced against an X-dominated channel
/// (alpha < 1) is the conventional schedule.
LogicalCircuit build_schedule(const LogicalCircuit &base, Scheme scheme, const PauliChannel &channel,
                              const CostModel &cost);

}  // namespace acekit
