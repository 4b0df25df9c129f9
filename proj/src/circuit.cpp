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

#include "acekit/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <tuple>

#include "acekit/error.hpp"

namespace acekit {

std::string_view op_name(OpKind kind) {
    switch (kind) {
        case OpKind::Wait: return "WAIT";
        case OpKind::H: return "H";
        case OpKind::S: return "S";
        case OpKind::T: return "T";
        case OpKind::CX: return "CX";
        case OpKind::XEC: return "XEC";
        case OpKind::ZEC: return "ZEC";
    }
    throw InvariantError("unknown op kind");
}

std::string_view error_type_name(ErrorType type) { return type == ErrorType::X ? "X" : "Z"; }

// ---------------------------------------------------------------------------
// LogicalCircuit

LogicalCircuit LogicalCircuit::make(size_t n_qubits, std::vector<Step> steps) {
    LogicalCircuit c(n_qubits);
    c.steps_.reserve(steps.size());
    for (auto &s : steps) {
        c.push_step(std::move(s));
    }
    return c;
}

LogicalCircuit::Step LogicalCircuit::normalize(Step step) const {
    std::vector<bool> used(n_qubits_, false);
    auto claim = [&](uint32_t q) {
        if (q >= n_qubits_) {
            throw InputError("qubit index " + std::to_string(q) + " out of range (circuit has " +
                             std::to_string(n_qubits_) + " qubits)");
        }
        if (used[q]) {
            throw InputError("qubit " + std::to_string(q) + " appears twice in one timestep");
        }
        used[q] = true;
    };
    for (auto &op : step) {
        if (op.is_two_qubit()) {
            if (op.qubit == op.target) {
                throw InputError("CX control equals target");
            }
            claim(op.qubit);
            claim(op.target);
        } else {
            op.target = 0;
            claim(op.qubit);
        }
    }
    for (uint32_t q = 0; q < n_qubits_; ++q) {
        if (!used[q]) {
            step.push_back({OpKind::Wait, q, 0});
        }
    }
    auto low = [](const LogicalOp &op) {
        return op.is_two_qubit() ? std::min(op.qubit, op.target) : op.qubit;
    };
    std::sort(step.begin(), step.end(),
              [&](const LogicalOp &a, const LogicalOp &b) { return low(a) < low(b); });
    return step;
}

void LogicalCircuit::push_step(Step step) { steps_.push_back(normalize(std::move(step))); }

const LogicalOp &LogicalCircuit::at(size_t s, uint32_t qubit) const {
    for (const auto &op : steps_[s]) {
        if (op.touches(qubit)) {
            return op;
        }
    }
    throw InvariantError("qubit missing from normalized step");
}

size_t LogicalCircuit::count(OpKind kind) const {
    size_t n = 0;
    for (const auto &s : steps_) {
        n += std::count_if(s.begin(), s.end(), [&](const LogicalOp &op) { return op.kind == kind; });
    }
    return n;
}

bool LogicalCircuit::has_corrections() const {
    return count(OpKind::XEC) + count(OpKind::ZEC) > 0;
}

bool LogicalCircuit::is_correction_step(size_t s) const {
    bool any = false;
    for (const auto &op : steps_[s]) {
        if (op.is_correction()) {
            any = true;
        } else if (op.kind != OpKind::Wait) {
            return false;
        }
    }
    return any;
}

// ---------------------------------------------------------------------------
// CostModel

void CostModel::validate() const {
    for (uint32_t v : {n_xec, n_zec, n_transversal, n_cnot, d_xec, d_zec, d_gate}) {
        if (v < 1) {
            throw InputError("cost model counts must all be at least 1");
        }
    }
}

uint64_t CostModel::locations(OpKind kind) const {
    switch (kind) {
        case OpKind::XEC: return n_xec;
        case OpKind::ZEC: return n_zec;
        case OpKind::CX: return n_cnot;
        default: return n_transversal;
    }
}

uint32_t CostModel::depth(OpKind kind) const {
    switch (kind) {
        case OpKind::XEC: return d_xec;
        case OpKind::ZEC: return d_zec;
        default: return d_gate;
    }
}

CostModel CostModel::with_block_size(uint32_t n) {
    CostModel c;
    c.n_xec = n;
    c.n_zec = n;
    return c;
}

// ---------------------------------------------------------------------------
// .ftc format

namespace {

std::string_view trim(std::string_view s) {
    const auto *ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void syntax_error(int line, const std::string &what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

uint32_t parse_index(std::string_view tok, int line) {
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        syntax_error(line, "expected a qubit index, got '" + std::string(tok) + "'");
    }
    return v;
}

LogicalOp parse_op(std::string_view text, int line) {
    auto tok = split_ws(text);
    if (tok.empty()) {
        syntax_error(line, "empty operation");
    }
    static constexpr OpKind kinds[] = {OpKind::Wait, OpKind::H,   OpKind::S,  OpKind::T,
                                       OpKind::CX,   OpKind::XEC, OpKind::ZEC};
    for (OpKind k : kinds) {
        if (tok[0] != op_name(k)) {
            continue;
        }
        size_t want = k == OpKind::CX ? 3 : 2;
        if (tok.size() != want) {
            syntax_error(line, std::string(op_name(k)) + " takes " + std::to_string(want - 1) +
                                   " qubit argument(s)");
        }
        LogicalOp op{k, parse_index(tok[1], line), 0};
        if (k == OpKind::CX) {
            op.target = parse_index(tok[2], line);
        }
        return op;
    }
    syntax_error(line, "unknown operation '" + std::string(tok[0]) + "'");
}

}  // namespace

LogicalCircuit parse_circuit(std::string_view text) {
    LogicalCircuit circuit;
    bool have_header = false;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (!have_header) {
            auto tok = split_ws(line);
            if (tok.size() != 2 || tok[0] != "qubits") {
                syntax_error(line_no, "expected header 'qubits K'");
            }
            uint32_t k = parse_index(tok[1], line_no);
            if (k == 0) {
                syntax_error(line_no, "circuit needs at least one qubit");
            }
            circuit = LogicalCircuit(k);
            have_header = true;
            continue;
        }
        LogicalCircuit::Step step;
        size_t p = 0;
        while (p <= line.size()) {
            size_t semi = line.find(';', p);
            if (semi == std::string_view::npos) semi = line.size();
            step.push_back(parse_op(trim(line.substr(p, semi - p)), line_no));
            p = semi + 1;
        }
        try {
            circuit.push_step(std::move(step));
        } catch (const InputError &e) {
            syntax_error(line_no, e.what());
        }
    }
    if (!have_header) {
        throw InputError("missing 'qubits K' header");
    }
    return circuit;
}

std::string serialize_circuit(const LogicalCircuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.n_qubits() << '\n';
    for (const auto &step : circuit.steps()) {
        bool first = true;
        for (const auto &op : step) {
            if (op.kind == OpKind::Wait) {
                continue;
            }
            if (!first) out << "; ";
            first = false;
            out << op_name(op.kind) << ' ' << op.qubit;
            if (op.is_two_qubit()) out << ' ' << op.target;
        }
        if (first) {
            // An all-idle step still occupies a line.
            out << "WAIT 0";
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Scheduling helpers

namespace {

LogicalCircuit::Step uniform_step(size_t n_qubits, OpKind kind) {
    LogicalCircuit::Step s;
    for (uint32_t q = 0; q < n_qubits; ++q) {
        s.push_back({kind, q, 0});
    }
    return s;
}

}  // namespace

LogicalCircuit insert_conventional_ec(const LogicalCircuit &circuit) {
    if (circuit.has_corrections()) {
        throw InputError("circuit already contains correction blocks");
    }
    const size_t n = circuit.n_qubits();
    LogicalCircuit out(n);
    out.push_step(uniform_step(n, OpKind::XEC));
    out.push_step(uniform_step(n, OpKind::ZEC));
    for (const auto &step : circuit.steps()) {
        out.push_step(step);
        out.push_step(uniform_step(n, OpKind::XEC));
        out.push_step(uniform_step(n, OpKind::ZEC));
    }
    return out;
}

LogicalCircuit strip_corrections(const LogicalCircuit &circuit) {
    LogicalCircuit out(circuit.n_qubits());
    for (size_t s = 0; s < circuit.n_steps(); ++s) {
        if (circuit.is_correction_step(s)) {
            continue;
        }
        LogicalCircuit::Step step;
        for (const auto &op : circuit.step(s)) {
            if (!op.is_correction()) step.push_back(op);
        }
        out.push_step(std::move(step));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rectangles

std::vector<uint32_t> ExtendedRectangle::qubits() const {
    std::vector<uint32_t> q;
    for (const auto &s : segments) q.push_back(s.qubit);
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return q;
}

namespace {

struct EcRun {
    bool x = false;
    bool z = false;
    bool reaches_edge = false;
    bool complete() const { return reaches_edge || (x && z); }
};

EcRun scan_run(const LogicalCircuit &c, uint32_t q, long from, long step_dir) {
    EcRun run;
    long s = from;
    const long n = static_cast<long>(c.n_steps());
    while (s >= 0 && s < n) {
        const auto &op = c.at(s, q);
        if (!op.is_correction()) {
            return run;
        }
        (op.kind == OpKind::XEC ? run.x : run.z) = true;
        s += step_dir;
    }
    run.reaches_edge = true;
    return run;
}

class DisjointSets {
   public:
    explicit DisjointSets(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    size_t find(size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

   private:
    std::vector<size_t> parent_;
};

}  // namespace

void check_mixing_protection(const LogicalCircuit &circuit) {
    for (size_t s = 0; s < circuit.n_steps(); ++s) {
        for (const auto &op : circuit.step(s)) {
            if (!op.is_mixing()) continue;
            auto before = scan_run(circuit, op.qubit, static_cast<long>(s) - 1, -1);
            auto after = scan_run(circuit, op.qubit, static_cast<long>(s) + 1, +1);
            if (!before.complete() || !after.complete()) {
                throw InputError("unsupported circuit: " + std::string(op_name(op.kind)) +
                                 " on qubit " + std::to_string(op.qubit) + " at step " +
                                 std::to_string(s) +
                                 " lacks adjacent X and Z correction on both sides");
            }
        }
    }
}

std::vector<ExtendedRectangle> extract_rectangles(const LogicalCircuit &circuit, ErrorType type,
                                                  const CostModel &cost) {
    check_mixing_protection(circuit);
    const OpKind cut = correction_kind(type);
    const size_t n_steps = circuit.n_steps();
    const size_t n_qubits = circuit.n_qubits();
    if (n_steps == 0) {
        return {};
    }

    std::vector<Segment> segments;
    // owner[q][s]: segment holding the non-cut slot (q, s).
    std::vector<std::vector<size_t>> owner(n_qubits, std::vector<size_t>(n_steps, SIZE_MAX));
    for (uint32_t q = 0; q < n_qubits; ++q) {
        long prev = -1;
        for (long s = 0; s <= static_cast<long>(n_steps); ++s) {
            bool is_cut = s == static_cast<long>(n_steps) || circuit.at(s, q).kind == cut;
            if (!is_cut) continue;
            long first = std::max(prev, 0L);
            long last = std::min(s, static_cast<long>(n_steps) - 1);
            if (first <= last) {
                for (long t = prev + 1; t < s; ++t) owner[q][t] = segments.size();
                segments.push_back({q, static_cast<uint32_t>(first), static_cast<uint32_t>(last)});
            }
            prev = s;
        }
    }

    DisjointSets sets(segments.size());
    for (size_t s = 0; s < n_steps; ++s) {
        for (const auto &op : circuit.step(s)) {
            if (op.is_two_qubit()) {
                sets.unite(owner[op.qubit][s], owner[op.target][s]);
            }
        }
    }

    std::vector<size_t> group_of(segments.size(), SIZE_MAX);
    std::vector<ExtendedRectangle> rects;
    for (size_t i = 0; i < segments.size(); ++i) {
        size_t root = sets.find(i);
        if (group_of[root] == SIZE_MAX) {
            group_of[root] = rects.size();
            rects.push_back({type, {}, 0, false, 0});
        }
        auto &r = rects[group_of[root]];
        const auto &seg = segments[i];
        r.segments.push_back(seg);
        for (uint32_t t = seg.first; t <= seg.last; ++t) {
            const auto &op = circuit.at(t, seg.qubit);
            if (!op.is_correction() && !circuit.is_correction_step(t)) ++r.gate_slots;
            // A CX belongs to both of its qubits' segments; charge it once, on the control.
            if (op.is_two_qubit() && op.target == seg.qubit) continue;
            r.location_count += cost.locations(op.kind);
        }
    }
    for (auto &r : rects) {
        std::sort(r.segments.begin(), r.segments.end(), [](const Segment &a, const Segment &b) {
            return std::tie(a.qubit, a.first) < std::tie(b.qubit, b.first);
        });
        r.is_super = r.qubits().size() > 1;
    }
    std::sort(rects.begin(), rects.end(), [](const ExtendedRectangle &a, const ExtendedRectangle &b) {
        return std::tie(a.segments.front().qubit, a.segments.front().first) <
               std::tie(b.segments.front().qubit, b.segments.front().first);
    });
    return rects;
}

// ---------------------------------------------------------------------------
// Depth

namespace {

double step_depth(const LogicalCircuit::Step &step, const CostModel &cost) {
    uint32_t d = 0;
    for (const auto &op : step) d = std::max(d, cost.depth(op.kind));
    return d;
}

}  // namespace

double single_level_depth(const LogicalCircuit &circuit, const CostModel &cost) {
    double d = 0;
    for (const auto &s : circuit.steps()) d += step_depth(s, cost);
    return d;
}

double leading_correction_depth(const LogicalCircuit &circuit, const CostModel &cost) {
    double d = 0;
    for (size_t s = 0; s < circuit.n_steps() && circuit.is_correction_step(s); ++s) {
        d += step_depth(circuit.step(s), cost);
    }
    return d;
}

size_t gate_step_count(const LogicalCircuit &circuit) {
    size_t n = 0;
    for (size_t s = 0; s < circuit.n_steps(); ++s) n += circuit.is_correction_step(s) ? 0 : 1;
    return n;
}

double cell_depth(const LogicalCircuit &circuit, const CostModel &cost) {
    size_t gates = gate_step_count(circuit);
    if (gates == 0) {
        return cost.d_gate;
    }
    return (single_level_depth(circuit, cost) - leading_correction_depth(circuit, cost)) /
           static_cast<double>(gates);
}

DepthReport composed_depth(const LogicalCircuit &upper, const LogicalCircuit &lower,
                           const CostModel &cost) {
    DepthReport r;
    r.levels = 2;
    r.level1_depth = single_level_depth(upper, cost);
    r.lower_cell_depth = cell_depth(lower, cost);
    r.total = r.level1_depth * r.lower_cell_depth;
    return r;
}

DepthReport depth(const LogicalCircuit &circuit, const CostModel &cost, uint32_t levels) {
    cost.validate();
    if (levels == 1) {
        DepthReport r;
        r.level1_depth = single_level_depth(circuit, cost);
        r.total = r.level1_depth;
        return r;
    }
    if (levels == 2) {
        return composed_depth(circuit, circuit, cost);
    }
    throw InputError("depth supports 1 or 2 levels");
}

// ---------------------------------------------------------------------------
// Templates

namespace templates {

namespace {

using Step = LogicalCircuit::Step;

LogicalOp cx(uint32_t c, uint32_t t) { return {OpKind::CX, c, t}; }
LogicalOp h(uint32_t q) { return {OpKind::H, q, 0}; }

}  // namespace

LogicalCircuit memory(size_t waits) {
    std::vector<Step> steps(waits, Step{{OpKind::Wait, 0, 0}});
    return LogicalCircuit::make(1, std::move(steps));
}

LogicalCircuit memory5() { return memory(5); }

LogicalCircuit bell() { return LogicalCircuit::make(2, {{h(0)}, {cx(0, 1)}}); }

LogicalCircuit coupled3() { return LogicalCircuit::make(3, {{cx(2, 1)}, {cx(0, 1)}}); }

LogicalCircuit steane_ec() {
    // One syndrome half of a Steane EC gadget. Data block on 0..6, ancilla on 7..13.
    // The ancilla is encoded from pivots 0, 1, 3 (the leading columns of the Hamming
    // checks 1010101, 0110011, 0001111), coupled transversally and decoded again.
    auto a = [](uint32_t i) { return 7 + i; };
    std::vector<Step> encode = {
        {h(a(0)), h(a(1)), h(a(3))},
        {cx(a(0), a(2)), cx(a(1), a(5)), cx(a(3), a(4))},
        {cx(a(0), a(4)), cx(a(1), a(2)), cx(a(3), a(6))},
        {cx(a(0), a(6)), cx(a(3), a(5))},
        {cx(a(1), a(6))},
    };
    std::vector<Step> steps = encode;
    Step couple;
    for (uint32_t i = 0; i < 7; ++i) couple.push_back(cx(i, a(i)));
    steps.push_back(couple);
    for (auto it = encode.rbegin(); it != encode.rend(); ++it) steps.push_back(*it);
    return LogicalCircuit::make(14, std::move(steps));
}

LogicalCircuit by_name(std::string_view name) {
    if (name == "memory5") return memory5();
    if (name == "bell") return bell();
    if (name == "coupled3") return coupled3();
    if (name == "steane_ec") return steane_ec();
    throw InputError("unknown circuit template '" + std::string(name) + "'");
}

}  // namespace templates

}  // namespace acekit
