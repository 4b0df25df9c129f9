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

#include "acekit/schedule.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "acekit/analysis.hpp"
#include "acekit/error.hpp"

namespace acekit {

void AcePolicy::validate() const {
    if (!keep_around_mixing) {
        throw InputError("ACE policy must keep X correction around mixing gates");
    }
}

namespace {

struct Event {
    uint32_t step;
    LogicalOp op;
    bool is_gate() const { return !op.is_correction(); }
};

// A qubit's timeline without the idle filler of correction steps.
std::vector<Event> timeline(const LogicalCircuit &c, uint32_t q) {
    std::vector<Event> out;
    for (uint32_t s = 0; s < c.n_steps(); ++s) {
        const auto &op = c.at(s, q);
        if (op.kind == OpKind::Wait && c.is_correction_step(s)) continue;
        out.push_back({s, op});
    }
    return out;
}

bool adjacent_to_mixing(const std::vector<Event> &ev, size_t i) {
    size_t lo = i, hi = i;
    while (lo > 0 && ev[lo - 1].op.is_correction()) --lo;
    while (hi + 1 < ev.size() && ev[hi + 1].op.is_correction()) ++hi;
    return (lo > 0 && ev[lo - 1].op.is_mixing()) || (hi + 1 < ev.size() && ev[hi + 1].op.is_mixing());
}

using Removed = std::vector<std::vector<bool>>;

LogicalCircuit rebuild(const LogicalCircuit &c, const Removed &removed, bool sync_with_zec) {
    LogicalCircuit out(c.n_qubits());
    for (uint32_t s = 0; s < c.n_steps(); ++s) {
        const auto &step = c.step(s);
        bool retained_ec = false;
        bool any_removed = false;
        for (const auto &op : step) {
            if (!op.is_correction()) continue;
            if (removed[s][op.qubit]) {
                any_removed = true;
            } else {
                retained_ec = true;
            }
        }
        if (!any_removed) {
            out.push_step(step);
            continue;
        }
        LogicalCircuit::Step next;
        bool non_idle = false;
        for (auto op : step) {
            if (op.is_correction() && removed[s][op.qubit]) {
                op.kind = sync_with_zec && retained_ec ? OpKind::ZEC : OpKind::Wait;
            }
            non_idle |= op.kind != OpKind::Wait;
            next.push_back(op);
        }
        if (non_idle) out.push_step(std::move(next));
    }
    return out;
}

void require_corrected(const LogicalCircuit &c) {
    if (!c.has_corrections()) {
        throw InputError("circuit has no correction blocks; schedule it conventionally first");
    }
    check_mixing_protection(c);
}

}  // namespace

LogicalCircuit apply_ace(const LogicalCircuit &circuit, const AcePolicy &policy,
                         const CostModel &cost) {
    policy.validate();
    require_corrected(circuit);
    const uint32_t n = static_cast<uint32_t>(circuit.n_qubits());

    Removed removed(circuit.n_steps(), std::vector<bool>(n, false));
    for (uint32_t q = 0; q < n; ++q) {
        auto ev = timeline(circuit, q);
        long first_gate = -1, last_gate = -1;
        for (size_t i = 0; i < ev.size(); ++i) {
            if (!ev[i].is_gate()) continue;
            if (first_gate < 0) first_gate = static_cast<long>(i);
            last_gate = static_cast<long>(i);
        }
        for (size_t i = 0; i < ev.size(); ++i) {
            if (ev[i].op.kind != OpKind::XEC) continue;
            const long li = static_cast<long>(i);
            bool entry = first_gate < 0 || li < first_gate;
            bool exit = false;
            if (li > last_gate) {
                for (long j = last_gate + 1; j < li; ++j) {
                    exit |= ev[j].op.kind == OpKind::ZEC;
                }
            }
            if (!(entry || exit || adjacent_to_mixing(ev, i))) {
                removed[ev[i].step][q] = true;
            }
        }
    }

    auto out = rebuild(circuit, removed, policy.replacement == Replacement::ReplaceWithZec);

    // Close every qubit whose last gate lost its X correction.
    LogicalCircuit::Step close_x, close_z;
    for (uint32_t q = 0; q < n; ++q) {
        auto ev = timeline(out, q);
        auto last_gate = std::find_if(ev.rbegin(), ev.rend(), [](const Event &e) { return e.is_gate(); });
        if (last_gate == ev.rend()) continue;
        bool has_x = std::any_of(ev.rbegin(), last_gate,
                                 [](const Event &e) { return e.op.kind == OpKind::XEC; });
        if (!has_x) {
            close_x.push_back({OpKind::XEC, q, 0});
            close_z.push_back({OpKind::ZEC, q, 0});
        }
    }
    if (!close_x.empty()) {
        out.push_step(std::move(close_x));
        out.push_step(std::move(close_z));
    }

    if (policy.max_x_rectangle_locations) {
        out = cap_x_rectangles(out, *policy.max_x_rectangle_locations, cost);
    }
    return out;
}

LogicalCircuit remove_x_correction(const LogicalCircuit &conventional) {
    require_corrected(conventional);
    const uint32_t n = static_cast<uint32_t>(conventional.n_qubits());
    Removed removed(conventional.n_steps(), std::vector<bool>(n, false));
    for (uint32_t q = 0; q < n; ++q) {
        auto ev = timeline(conventional, q);
        for (size_t i = 0; i < ev.size(); ++i) {
            if (ev[i].op.kind == OpKind::XEC && !adjacent_to_mixing(ev, i)) {
                removed[ev[i].step][q] = true;
            }
        }
    }
    return rebuild(conventional, removed, false);
}

std::vector<std::pair<uint32_t, uint32_t>> x_reinsertion_points(const LogicalCircuit &circuit) {
    std::vector<std::pair<uint32_t, uint32_t>> pts;
    for (uint32_t q = 0; q < circuit.n_qubits(); ++q) {
        auto ev = timeline(circuit, q);
        for (size_t i = 0; i < ev.size(); ++i) {
            if (!ev[i].is_gate()) continue;
            bool has_x = false;
            for (size_t j = i + 1; j < ev.size() && !ev[j].is_gate(); ++j) {
                has_x |= ev[j].op.kind == OpKind::XEC;
            }
            if (!has_x) pts.emplace_back(q, ev[i].step);
        }
    }
    return pts;
}

LogicalCircuit insert_x_after(const LogicalCircuit &circuit, uint32_t qubit, uint32_t step) {
    if (step >= circuit.n_steps() || qubit >= circuit.n_qubits()) {
        throw InputError("X reinsertion point out of range");
    }
    LogicalCircuit out(circuit.n_qubits());
    for (uint32_t s = 0; s < circuit.n_steps(); ++s) {
        out.push_step(circuit.step(s));
        if (s == step) out.push_step({{OpKind::XEC, qubit, 0}});
    }
    return out;
}

namespace {

uint64_t largest(const std::vector<ExtendedRectangle> &rects) {
    uint64_t m = 0;
    for (const auto &r : rects) m = std::max(m, r.location_count);
    return m;
}

bool inside(const ExtendedRectangle &r, uint32_t q, uint32_t s) {
    return std::any_of(r.segments.begin(), r.segments.end(),
                       [&](const Segment &seg) { return seg.qubit == q && seg.contains(s); });
}

// One greedy split of the largest splittable X rectangle; nullopt when none is splittable.
std::optional<LogicalCircuit> split_largest(const LogicalCircuit &c, const CostModel &cost) {
    auto rects = extract_rectangles(c, ErrorType::X, cost);
    auto pts = x_reinsertion_points(c);
    std::vector<size_t> order(rects.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return rects[a].location_count > rects[b].location_count;
    });
    for (size_t idx : order) {
        std::optional<LogicalCircuit> best;
        uint64_t best_size = std::numeric_limits<uint64_t>::max();
        for (auto [q, s] : pts) {
            if (!inside(rects[idx], q, s)) continue;
            auto trial = insert_x_after(c, q, s);
            uint64_t size = largest(extract_rectangles(trial, ErrorType::X, cost));
            if (size < best_size) {
                best_size = size;
                best = std::move(trial);
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

}  // namespace

LogicalCircuit rebalance(const LogicalCircuit &circuit, const PauliChannel &channel,
                         const CostModel &cost) {
    require_corrected(circuit);
    if (!(channel.alpha() >= 1)) {
        throw InputError("rebalance expects a channel with alpha >= 1");
    }
    LogicalCircuit c = circuit;
    while (true) {
        auto report = circuit_failure(c, channel, cost);
        if (report.p_fail_x <= report.p_fail_z) return c;
        auto next = split_largest(c, cost);
        if (!next) return insert_conventional_ec(strip_corrections(circuit));
        c = std::move(*next);
    }
}

LogicalCircuit cap_x_rectangles(const LogicalCircuit &circuit, uint64_t cap, const CostModel &cost) {
    LogicalCircuit c = circuit;
    while (largest(extract_rectangles(c, ErrorType::X, cost)) > cap) {
        auto next = split_largest(c, cost);
        if (!next) break;
        c = std::move(*next);
    }
    return c;
}

std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Conventional: return "conventional";
        case Scheme::Ace: return "ace";
        case Scheme::AceRebalanced: return "ace_rebalanced";
        case Scheme::NoX: return "no_x";
        case Scheme::Bare: return "bare";
    }
    throw InvariantError("unknown scheme");
}

Scheme parse_scheme(std::string_view name) {
    for (Scheme s : {Scheme::Conventional, Scheme::Ace, Scheme::AceRebalanced, Scheme::NoX, Scheme::Bare}) {
        if (scheme_name(s) == name) return s;
    }
    throw InputError("unknown scheme '" + std::string(name) + "'");
}

LogicalCircuit build_schedule(const LogicalCircuit &base, Scheme scheme, const PauliChannel &channel,
                              const CostModel &cost) {
    if (scheme == Scheme::Bare) return base;
    auto conv = insert_conventional_ec(base);
    switch (scheme) {
        case Scheme::Conventional: return conv;
        case Scheme::Ace: return apply_ace(conv);
        case Scheme::AceRebalanced:
            if (!(channel.alpha() >= 1)) return conv;
            return rebalance(apply_ace(conv), channel, cost);
        case Scheme::NoX: return remove_x_correction(conv);
        default: break;
    }
    throw InvariantError("unhandled scheme");
}

}  // namespace acekit
