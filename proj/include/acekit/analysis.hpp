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
#include <string>
#include <vector>

#include "acekit/circuit.hpp"
#include "acekit/noise.hpp"
#include "acekit/schedule.hpp"

namespace acekit {

/// Probability of at least two faults among `locations` independent sites that
/// each fault with probability `p`.
double rectangle_failure(uint64_t locations, double p);

struct RectangleFailure {
    size_t id = 0;
    ErrorType error_type = ErrorType::X;
    uint64_t location_count = 0;
    uint32_t qubit_count = 1;
    double p_fail = 0;
};

/// Whole-circuit failure under the worst-case pair rule. The product over
/// rectangles ignores the dependence created by shared blocks, so the result is an
/// upper bound on failure (lower bound on fidelity).
struct FailureReport {
    std::vector<RectangleFailure> per_rectangle;
    double p_fail_x = 0;
    double p_fail_z = 0;
    double p_fail_total = 0;
    DepthReport depth;
    /// Logical (qubit, gate step) slots the failures are attributed over.
    uint64_t logical_locations = 0;
    bool lower_bound = true;
};

FailureReport circuit_failure(const LogicalCircuit &circuit, const PauliChannel &channel,
                              const CostModel &cost);

/// Per-logical-location channel seen by the next concatenation level. Rectangle
/// failures are spread evenly over the circuit's logical slots, a super-extended
/// rectangle charging each of its qubits. X and Z stay separate (p_y = 0).
PauliChannel logical_channel(const FailureReport &report);

struct LevelResult {
    uint32_t level = 1;
    Scheme scheme = Scheme::Conventional;
    PauliChannel channel;
    LogicalCircuit circuit;
    FailureReport report;
};

struct ConcatenationResult {
    uint32_t levels = 1;
    std::vector<LevelResult> per_level;
    DepthReport depth;

    const FailureReport &top() const { return per_level.back().report; }
};

/// Level 1 runs `base` scheduled with schemes[0] on the physical channel; level 2
/// runs `base` scheduled with schemes[1] on level 1's logical channel, every level-2
/// location standing for one level-1 logical location. A Bare level is unencoded:
/// each of its logical slots fails with the incoming effective rate.
ConcatenationResult concatenated_failure(const LogicalCircuit &base, const PauliChannel &channel,
                                         const CostModel &cost, uint32_t levels,
                                         const std::vector<Scheme> &schemes);

struct SweepSpec {
    std::vector<double> alphas;
    std::vector<double> p_totals;
    std::vector<Scheme> schemes;
    std::vector<uint32_t> levels;
    unsigned workers = 0;  // 0: hardware concurrency
};

struct SweepRow {
    double alpha = 0;
    double p_total = 0;
    Scheme scheme = Scheme::Conventional;
    uint32_t levels = 1;
    double depth = 0;
    double p_fail_x = 0;
    double p_fail_z = 0;
    double p_fail_total = 0;
};

/// Rows ordered by alpha, then p_total, then scheme, then levels, regardless of
/// how the grid points were scheduled across workers.
std::vector<SweepRow> sweep(const SweepSpec &spec, const LogicalCircuit &base, const CostModel &cost);

std::string sweep_csv_header();
std::string to_csv_line(const SweepRow &row);
std::string to_csv(const std::vector<SweepRow> &rows);
/// %.9g
std::string format_number(double v);

/// Log-spaced grid with `points` values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, size_t points);

/// Smallest alpha of the (ascending) grid from which `challenger` fails less than
/// `baseline` at every later grid point.
std::optional<double> crossover_alpha(const std::vector<double> &alphas, double p_total,
                                      const LogicalCircuit &base, const CostModel &cost,
                                      uint32_t levels, Scheme baseline, Scheme challenger);

/// baseline p_fail_total / challenger p_fail_total at one grid point.
double failure_ratio(double alpha, double p_total, const LogicalCircuit &base, const CostModel &cost,
                     uint32_t levels, Scheme baseline, Scheme challenger);

struct NoXComparison {
    double depth_conventional = 0;
    double depth_no_x = 0;
    double depth_reduction = 0;  // 1 - no_x / conventional
    double failure_conventional = 0;
    double failure_no_x = 0;
    double failure_ratio = 0;  // conventional / no_x
    bool feasible = false;     // no_x X failure does not exceed its Z failure
};

NoXComparison no_x_limit(const LogicalCircuit &base, const PauliChannel &channel, const CostModel &cost,
                         uint32_t levels);

}  // namespace acekit
