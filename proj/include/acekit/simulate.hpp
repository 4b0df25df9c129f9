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
#include <string>
#include <vector>

#include "acekit/analysis.hpp"
#include "acekit/circuit.hpp"
#include "acekit/kernels.hpp"
#include "acekit/noise.hpp"

namespace acekit {

/// X and Z components of a Pauli error on n physical qubits, phases dropped.
class PauliFrame {
   public:
    PauliFrame() = default;
    explicit PauliFrame(size_t n) : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool x(size_t q) const { return (x_[q / 64] >> (q % 64)) & 1; }
    bool z(size_t q) const { return (z_[q / 64] >> (q % 64)) & 1; }
    void set_x(size_t q, bool v) { set(x_, q, v); }
    void set_z(size_t q, bool v) { set(z_, q, v); }
    bool has_x() const;
    bool has_z() const;

    /// Product of two Paulis up to phase.
    PauliFrame &operator*=(const PauliFrame &other);
    bool operator==(const PauliFrame &) const = default;

   private:
    static void set(std::vector<uint64_t> &bits, size_t q, bool v) {
        uint64_t m = uint64_t{1} << (q % 64);
        bits[q / 64] = v ? bits[q / 64] | m : bits[q / 64] & ~m;
    }

    size_t n_ = 0;
    std::vector<uint64_t> x_;
    std::vector<uint64_t> z_;
};

/// Conjugates the frame through one physical gate: H swaps X and Z, S sends X to Y,
/// CX copies X from control to target and Z from target to control, WAIT is the
/// identity. T is rejected: it is not a Clifford gate.
void propagate_pauli(const LogicalOp &gate, PauliFrame &frame);

struct MCEstimate {
    uint64_t shots = 0;
    uint64_t failures_x = 0;
    uint64_t failures_z = 0;
    uint64_t failures_total = 0;
    uint64_t seed = 0;

    double rate_x() const { return static_cast<double>(failures_x) / static_cast<double>(shots); }
    double rate_z() const { return static_cast<double>(failures_z) / static_cast<double>(shots); }
    double rate_total() const { return static_cast<double>(failures_total) / static_cast<double>(shots); }
    /// Standard error of a rate estimated from `shots` Bernoulli trials.
    double std_error(double rate) const;
    /// Normal-approximation 95% half-width.
    double ci_halfwidth(double rate) const { return 1.96 * std_error(rate); }

    bool operator==(const MCEstimate &) const = default;
};

struct MCOptions {
    uint64_t shots = 100000;
    uint64_t seed = 1;
    unsigned workers = 0;  // 0: hardware concurrency
    kernels::CountFn kernel = nullptr;  // nullptr: kernels::select()
};

/// Samples an I/X/Y/Z fault at every physical location, every EC block expanded into
/// its pool of anonymous locations. A shot fails in X (Z) when some X (Z) rectangle
/// holds two or more effective faults; a fault inside a block shared by two
/// rectangles is one fault seen by both. Counts depend only on (seed, shots, circuit,
/// channel, cost), never on the worker count.
MCEstimate mc_estimate(const LogicalCircuit &circuit, const PauliChannel &channel, const CostModel &cost,
                       const MCOptions &options);

std::string mc_csv_header();
/// One row in the sweep dialect plus shots, seed, ci_halfwidth of the total rate.
std::string mc_csv_line(const SweepRow &context, const MCEstimate &estimate);

}  // namespace acekit
