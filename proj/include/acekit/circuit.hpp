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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace acekit {

enum class OpKind : uint8_t { Wait, H, S, T, CX, XEC, ZEC };

enum class ErrorType : uint8_t { X, Z };

std::string_view op_name(OpKind kind);
std::string_view error_type_name(ErrorType type);

/// One logical operation. `qubit` is the only qubit of single-qubit ops and the
/// control of CX; `target` is meaningful only for CX.
struct LogicalOp {
    OpKind kind = OpKind::Wait;
    uint32_t qubit = 0;
    uint32_t target = 0;

    bool is_mixing() const { return kind == OpKind::H || kind == OpKind::S || kind == OpKind::T; }
    bool is_correction() const { return kind == OpKind::XEC || kind == OpKind::ZEC; }
    bool is_two_qubit() const { return kind == OpKind::CX; }
    bool touches(uint32_t q) const { return qubit == q || (is_two_qubit() && target == q); }

    bool operator==(const LogicalOp &) const = default;
};

inline OpKind correction_kind(ErrorType type) {
    return type == ErrorType::X ? OpKind::XEC : OpKind::ZEC;
}

/// Timestep-ordered grid of logical operations.
///
/// Every step lists an op for every qubit (idle qubits hold explicit WAITs), with
/// ops ordered by their lowest qubit. Construct through `make` or `parse_circuit`
/// so that this normal form holds.
class LogicalCircuit {
   public:
    using Step = std::vector<LogicalOp>;

    LogicalCircuit() = default;
    explicit LogicalCircuit(size_t n_qubits) : n_qubits_(n_qubits) {}

    /// Validates the steps, fills in WAITs for unmentioned qubits and sorts each step.
    static LogicalCircuit make(size_t n_qubits, std::vector<Step> steps);

    size_t n_qubits() const { return n_qubits_; }
    size_t n_steps() const { return steps_.size(); }
    const std::vector<Step> &steps() const { return steps_; }
    const Step &step(size_t s) const { return steps_[s]; }

    /// The op acting on `qubit` during step `s`.
    const LogicalOp &at(size_t s, uint32_t qubit) const;

    /// Appends a step after validating and normalizing it.
    void push_step(Step step);

    size_t count(OpKind kind) const;
    bool has_corrections() const;
    /// A step whose non-WAIT ops are all corrections and which contains at least one.
    bool is_correction_step(size_t s) const;

    bool operator==(const LogicalCircuit &) const = default;

   private:
    Step normalize(Step step) const;

    size_t n_qubits_ = 0;
    std::vector<Step> steps_;
};

/// Physical location and depth cost of each logical operation kind.
struct CostModel {
    uint32_t n_xec = 70;
    uint32_t n_zec = 70;
    uint32_t n_transversal = 7;
    uint32_t n_cnot = 7;
    uint32_t d_xec = 8;
    uint32_t d_zec = 8;
    uint32_t d_gate = 1;

    void validate() const;
    uint64_t locations(OpKind kind) const;
    uint32_t depth(OpKind kind) const;

    static CostModel with_block_size(uint32_t n);
};

/// .ftc text format. Throws InputError with a line number on malformed input.
LogicalCircuit parse_circuit(std::string_view text);
std::string serialize_circuit(const LogicalCircuit &circuit);

/// XEC then ZEC on every qubit before the first step and after every step.
LogicalCircuit insert_conventional_ec(const LogicalCircuit &circuit);

/// Drops every correction block; steps left holding only WAITs are removed.
LogicalCircuit strip_corrections(const LogicalCircuit &circuit);

/// Closed interval of timesteps on one qubit.
struct Segment {
    uint32_t qubit = 0;
    uint32_t first = 0;
    uint32_t last = 0;

    bool contains(uint32_t s) const { return first <= s && s <= last; }
    bool operator==(const Segment &) const = default;
};

struct ExtendedRectangle {
    ErrorType error_type = ErrorType::X;
    std::vector<Segment> segments;
    uint64_t location_count = 0;
    bool is_super = false;
    /// (qubit, step) slots of gate steps inside, counting each CX once per qubit.
    uint32_t gate_slots = 0;

    std::vector<uint32_t> qubits() const;
    bool operator==(const ExtendedRectangle &) const = default;
};

/// Throws InputError unless every H/S/T has both correction types immediately
/// before and after it on its qubit (circuit edges count as both).
void check_mixing_protection(const LogicalCircuit &circuit);

/// Typed extended rectangles: each qubit's timeline is cut at the corrections of
/// `type`, every piece keeps its bounding blocks, and pieces coupled by a CX are
/// merged into super-extended rectangles. The circuit edges act as virtual
/// corrections. Output is sorted by (lowest qubit, earliest step).
std::vector<ExtendedRectangle> extract_rectangles(const LogicalCircuit &circuit, ErrorType type,
                                                  const CostModel &cost);

struct DepthReport {
    uint32_t levels = 1;
    /// Depth of the circuit counted in its own timesteps (EC blocks weighted d_xec/d_zec).
    double level1_depth = 0;
    /// Physical depth of one logical location of the lower level, used to weight the
    /// upper level. 1 for single-level reports.
    double lower_cell_depth = 1;
    double total = 0;
};

/// Physical-timestep depth of a single level.
double single_level_depth(const LogicalCircuit &circuit, const CostModel &cost);

/// Depth of the leading run of correction steps.
double leading_correction_depth(const LogicalCircuit &circuit, const CostModel &cost);

/// Number of steps that are not correction steps.
size_t gate_step_count(const LogicalCircuit &circuit);

/// Amortized physical depth of one logical timestep when `circuit` is used as the
/// lower level: everything but the leading correction run, spread over gate steps.
double cell_depth(const LogicalCircuit &circuit, const CostModel &cost);

/// Upper level `upper` executed on a lower level scheduled as `lower`.
DepthReport composed_depth(const LogicalCircuit &upper, const LogicalCircuit &lower,
                           const CostModel &cost);

/// levels = 1: single_level_depth. levels = 2: the same schedule is used at both levels.
DepthReport depth(const LogicalCircuit &circuit, const CostModel &cost, uint32_t levels);

namespace templates {

/// One logical qubit idling for `waits` steps.
LogicalCircuit memory(size_t waits);
/// The five-wait memory string.
LogicalCircuit memory5();
/// H on qubit 0 then CX 0 -> 1.
LogicalCircuit bell();
/// CX 2 -> 1 then CX 0 -> 1: the three-qubit coupling pattern.
LogicalCircuit coupled3();
/// Logical-level stand-in for one Steane EC gadget: |0> ancilla encoding on seven
/// qubits, transversal coupling to a seven-qubit data block, and ancilla decoding.
LogicalCircuit steane_ec();

/// By name: memory5, bell, coupled3, steane_ec. Throws InputError otherwise.
LogicalCircuit by_name(std::string_view name);

}  // namespace templates

}  // namespace acekit
