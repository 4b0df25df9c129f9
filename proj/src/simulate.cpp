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

#include "acekit/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "acekit/error.hpp"

namespace acekit {

bool PauliFrame::has_x() const {
    return std::any_of(x_.begin(), x_.end(), [](uint64_t w) { return w != 0; });
}

bool PauliFrame::has_z() const {
    return std::any_of(z_.begin(), z_.end(), [](uint64_t w) { return w != 0; });
}

PauliFrame &PauliFrame::operator*=(const PauliFrame &other) {
    if (other.n_ != n_) {
        throw InputError("Pauli frames of different sizes");
    }
    for (size_t i = 0; i < x_.size(); ++i) {
        x_[i] ^= other.x_[i];
        z_[i] ^= other.z_[i];
    }
    return *this;
}

void propagate_pauli(const LogicalOp &gate, PauliFrame &frame) {
    const uint32_t q = gate.qubit;
    if (q >= frame.size() || (gate.is_two_qubit() && gate.target >= frame.size())) {
        throw InputError("gate acts outside the frame");
    }
    switch (gate.kind) {
        case OpKind::Wait: return;
        case OpKind::H: {
            bool x = frame.x(q);
            frame.set_x(q, frame.z(q));
            frame.set_z(q, x);
            return;
        }
        case OpKind::S:
            frame.set_z(q, frame.z(q) ^ frame.x(q));
            return;
        case OpKind::CX:
            frame.set_x(gate.target, frame.x(gate.target) ^ frame.x(q));
            frame.set_z(q, frame.z(q) ^ frame.z(gate.target));
            return;
        case OpKind::T:
            throw InputError("T is not a Clifford gate; Pauli frames cannot be propagated through it");
        default:
            throw InputError("correction blocks have no physical frame action");
    }
}

double MCEstimate::std_error(double rate) const {
    return std::sqrt(rate * (1 - rate) / static_cast<double>(shots));
}

namespace {

struct Layout {
    std::vector<uint32_t> offset;
    std::vector<uint32_t> size;
    std::vector<std::vector<uint32_t>> x_rects;
    std::vector<std::vector<uint32_t>> z_rects;
};

Layout build_layout(const LogicalCircuit &c, const CostModel &cost) {
    Layout l;
    std::vector<std::vector<uint32_t>> block_of(c.n_steps(), std::vector<uint32_t>(c.n_qubits()));
    uint64_t next = 0;
    for (size_t s = 0; s < c.n_steps(); ++s) {
        for (const auto &op : c.step(s)) {
            auto id = static_cast<uint32_t>(l.offset.size());
            uint64_t n = cost.locations(op.kind);
            l.offset.push_back(static_cast<uint32_t>(next));
            l.size.push_back(static_cast<uint32_t>(n));
            next += n;
            block_of[s][op.qubit] = id;
            if (op.is_two_qubit()) block_of[s][op.target] = id;
        }
    }
    if (next > 0xFFFFFFFFull) {
        throw InputError("circuit has too many physical locations to simulate");
    }
    for (ErrorType type : {ErrorType::X, ErrorType::Z}) {
        auto &dst = type == ErrorType::X ? l.x_rects : l.z_rects;
        for (const auto &r : extract_rectangles(c, type, cost)) {
            std::vector<uint32_t> blocks;
            for (const auto &seg : r.segments) {
                for (uint32_t t = seg.first; t <= seg.last; ++t) blocks.push_back(block_of[t][seg.qubit]);
            }
            std::sort(blocks.begin(), blocks.end());
            blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
            dst.push_back(std::move(blocks));
        }
    }
    return l;
}

struct Tally {
    uint64_t x = 0, z = 0, total = 0;
};

Tally run_shots(const Layout &l, FaultThresholds t, uint64_t seed, uint64_t begin, uint64_t end,
                kernels::CountFn count) {
    Tally tally;
    std::vector<FaultCounts> per_block(l.offset.size());
    auto any_failed = [&](const std::vector<std::vector<uint32_t>> &rects, bool x_type) {
        for (const auto &r : rects) {
            uint32_t faults = 0;
            for (uint32_t b : r) faults += x_type ? per_block[b].x : per_block[b].z;
            if (faults >= 2) return true;
        }
        return false;
    };
    for (uint64_t shot = begin; shot < end; ++shot) {
        ShotKey key = shot_key(seed, shot);
        for (size_t b = 0; b < per_block.size(); ++b) per_block[b] = count(key, l.offset[b], l.size[b], t);
        bool fx = any_failed(l.x_rects, true);
        bool fz = any_failed(l.z_rects, false);
        tally.x += fx;
        tally.z += fz;
        tally.total += fx || fz;
    }
    return tally;
}

}  // namespace

MCEstimate mc_estimate(const LogicalCircuit &circuit, const PauliChannel &channel, const CostModel &cost,
                       const MCOptions &options) {
    if (options.shots == 0) {
        throw InputError("Monte Carlo needs at least one shot");
    }
    cost.validate();
    const auto layout = build_layout(circuit, cost);
    const auto thresholds = thresholds_for(channel);
    const auto count = options.kernel ? options.kernel : kernels::select();

    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, options.shots));
    std::vector<Tally> partial(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t begin = options.shots * w / workers;
        uint64_t end = options.shots * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            partial[w] = run_shots(layout, thresholds, options.seed, begin, end, count);
        });
    }
    for (auto &th : pool) th.join();

    MCEstimate est;
    est.shots = options.shots;
    est.seed = options.seed;
    for (const auto &p : partial) {
        est.failures_x += p.x;
        est.failures_z += p.z;
        est.failures_total += p.total;
    }
    return est;
}

std::string mc_csv_header() { return sweep_csv_header() + ",shots,seed,ci_halfwidth"; }

std::string mc_csv_line(const SweepRow &context, const MCEstimate &estimate) {
    SweepRow row = context;
    row.p_fail_x = estimate.rate_x();
    row.p_fail_z = estimate.rate_z();
    row.p_fail_total = estimate.rate_total();
    return to_csv_line(row) + ',' + std::to_string(estimate.shots) + ',' + std::to_string(estimate.seed) +
           ',' + format_number(estimate.ci_halfwidth(estimate.rate_total()));
}

}  // namespace acekit
