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

#include "acekit/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "acekit/error.hpp"

namespace acekit {

double rectangle_failure(uint64_t locations, double p) {
    if (!(p >= 0 && p <= 1)) {
        throw InputError("fault probability outside [0, 1]");
    }
    if (locations < 2 || p == 0) return 0;
    if (p == 1) return 1;
    const double n = static_cast<double>(locations);
    const double log_keep = std::log1p(-p);
    if (n * p < 1) {
        // Direct binomial tail: the closed form cancels badly when n p is small.
        double term = 0.5 * n * (n - 1) * p * p * std::exp((n - 2) * log_keep);
        double sum = 0;
        const double ratio = p / (1 - p);
        for (uint64_t k = 2; k <= locations && term > 0; ++k) {
            sum += term;
            if (term < sum * 1e-18) break;
            term *= static_cast<double>(locations - k) / static_cast<double>(k + 1) * ratio;
        }
        return std::min(sum, 1.0);
    }
    double none = std::exp(n * log_keep);
    double one = n * p * std::exp((n - 1) * log_keep);
    return std::clamp(1 - none - one, 0.0, 1.0);
}

namespace {

double union_of_independent(const std::vector<RectangleFailure> &rects, ErrorType type) {
    double log_ok = 0;
    for (const auto &r : rects) {
        if (r.error_type == type) log_ok += std::log1p(-r.p_fail);
    }
    return -std::expm1(log_ok);
}

FailureReport unencoded_failure(const LogicalCircuit &circuit, const PauliChannel &channel,
                                const CostModel &cost) {
    FailureReport r;
    r.logical_locations = gate_step_count(circuit) * circuit.n_qubits();
    const double slots = static_cast<double>(r.logical_locations);
    r.p_fail_x = -std::expm1(slots * std::log1p(-channel.p_x_eff()));
    r.p_fail_z = -std::expm1(slots * std::log1p(-channel.p_z_eff()));
    r.p_fail_total = r.p_fail_x + r.p_fail_z - r.p_fail_x * r.p_fail_z;
    r.depth = depth(circuit, cost, 1);
    r.lower_bound = false;
    return r;
}

}  // namespace

FailureReport circuit_failure(const LogicalCircuit &circuit, const PauliChannel &channel,
                              const CostModel &cost) {
    cost.validate();
    channel.validate();
    FailureReport report;
    for (ErrorType type : {ErrorType::X, ErrorType::Z}) {
        const double p = type == ErrorType::X ? channel.p_x_eff() : channel.p_z_eff();
        for (const auto &rect : extract_rectangles(circuit, type, cost)) {
            RectangleFailure rf;
            rf.id = report.per_rectangle.size();
            rf.error_type = type;
            rf.location_count = rect.location_count;
            rf.qubit_count = static_cast<uint32_t>(rect.qubits().size());
            rf.p_fail = rectangle_failure(rect.location_count, p);
            report.per_rectangle.push_back(rf);
        }
    }
    report.p_fail_x = union_of_independent(report.per_rectangle, ErrorType::X);
    report.p_fail_z = union_of_independent(report.per_rectangle, ErrorType::Z);
    report.p_fail_total = report.p_fail_x + report.p_fail_z - report.p_fail_x * report.p_fail_z;
    report.depth = depth(circuit, cost, 1);
    report.logical_locations = gate_step_count(circuit) * circuit.n_qubits();
    return report;
}

PauliChannel logical_channel(const FailureReport &report) {
    if (report.logical_locations == 0) {
        throw InputError("failure report has no logical locations to attribute failures to");
    }
    const double slots = static_cast<double>(report.logical_locations);
    double log_ok_x = 0, log_ok_z = 0;
    if (report.per_rectangle.empty()) {
        // Unencoded level: every slot saw the same rate.
        log_ok_x = std::log1p(-report.p_fail_x);
        log_ok_z = std::log1p(-report.p_fail_z);
    }
    for (const auto &r : report.per_rectangle) {
        double contribution = r.qubit_count * std::log1p(-r.p_fail);
        (r.error_type == ErrorType::X ? log_ok_x : log_ok_z) += contribution;
    }
    // A logical qubit cannot be more than fully randomized.
    double q_x = std::min(0.5, -std::expm1(log_ok_x / slots));
    double q_z = std::min(0.5, -std::expm1(log_ok_z / slots));
    return PauliChannel::from_effective(q_x, q_z);
}

namespace {

LevelResult evaluate_level(uint32_t level, const LogicalCircuit &base, Scheme scheme,
                           const PauliChannel &channel, const CostModel &cost) {
    LevelResult r;
    r.level = level;
    r.scheme = scheme;
    r.channel = channel;
    r.circuit = build_schedule(base, scheme, channel, cost);
    r.report = scheme == Scheme::Bare ? unencoded_failure(r.circuit, channel, cost)
                                      : circuit_failure(r.circuit, channel, cost);
    return r;
}

}  // namespace

ConcatenationResult concatenated_failure(const LogicalCircuit &base, const PauliChannel &channel,
                                         const CostModel &cost, uint32_t levels,
                                         const std::vector<Scheme> &schemes) {
    if (levels < 1 || levels > 2) {
        throw InputError("concatenation supports 1 or 2 levels");
    }
    if (schemes.empty()) {
        throw InputError("no scheme given");
    }
    if (base.has_corrections()) {
        throw InputError("concatenated analysis expects a circuit without correction blocks");
    }
    auto scheme_at = [&](size_t i) { return schemes[std::min(i, schemes.size() - 1)]; };

    ConcatenationResult result;
    result.levels = levels;
    result.per_level.push_back(evaluate_level(1, base, scheme_at(0), channel, cost));
    result.depth = result.per_level[0].report.depth;
    if (levels == 2) {
        auto upper_channel = logical_channel(result.per_level[0].report);
        result.per_level.push_back(evaluate_level(2, base, scheme_at(1), upper_channel, cost));
        result.depth = composed_depth(result.per_level[1].circuit, result.per_level[0].circuit, cost);
        result.per_level[1].report.depth = result.depth;
    }
    return result;
}

std::vector<SweepRow> sweep(const SweepSpec &spec, const LogicalCircuit &base, const CostModel &cost) {
    if (spec.alphas.empty() || spec.p_totals.empty() || spec.schemes.empty() || spec.levels.empty()) {
        throw InputError("sweep grids must be non-empty");
    }
    std::vector<SweepRow> rows;
    for (double a : spec.alphas)
        for (double p : spec.p_totals)
            for (Scheme s : spec.schemes)
                for (uint32_t l : spec.levels) rows.push_back({a, p, s, l});

    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (size_t i = next++; i < rows.size() && !failed; i = next++) {
            auto &row = rows[i];
            try {
                auto ch = channel_from_total_and_alpha(row.p_total, row.alpha);
                auto res = concatenated_failure(base, ch, cost, row.levels, {row.scheme});
                row.depth = res.depth.total;
                row.p_fail_x = res.top().p_fail_x;
                row.p_fail_z = res.top().p_fail_z;
                row.p_fail_total = res.top().p_fail_total;
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        }
    };
    unsigned workers = spec.workers ? spec.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<size_t>(workers, rows.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto &t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return rows;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string sweep_csv_header() { return "alpha,p_total,scheme,levels,depth,p_fail_x,p_fail_z,p_fail_total"; }

std::string to_csv_line(const SweepRow &row) {
    std::string s;
    s += format_number(row.alpha) + ',';
    s += format_number(row.p_total) + ',';
    s += std::string(scheme_name(row.scheme)) + ',';
    s += std::to_string(row.levels) + ',';
    s += format_number(row.depth) + ',';
    s += format_number(row.p_fail_x) + ',';
    s += format_number(row.p_fail_z) + ',';
    s += format_number(row.p_fail_total);
    return s;
}

std::string to_csv(const std::vector<SweepRow> &rows) {
    std::string out = sweep_csv_header() + '\n';
    for (const auto &r : rows) out += to_csv_line(r) + '\n';
    return out;
}

std::vector<double> log_grid(double lo, double hi, size_t points) {
    if (!(lo > 0) || !(hi >= lo) || points == 0) {
        throw InputError("log grid needs 0 < lo <= hi and at least one point");
    }
    if (points == 1) return {lo};
    std::vector<double> g(points);
    const double a = std::log(lo), b = std::log(hi);
    for (size_t i = 0; i < points; ++i) {
        g[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

double failure_ratio(double alpha, double p_total, const LogicalCircuit &base, const CostModel &cost,
                     uint32_t levels, Scheme baseline, Scheme challenger) {
    auto ch = channel_from_total_and_alpha(p_total, alpha);
    double b = concatenated_failure(base, ch, cost, levels, {baseline}).top().p_fail_total;
    double c = concatenated_failure(base, ch, cost, levels, {challenger}).top().p_fail_total;
    return b / c;
}

std::optional<double> crossover_alpha(const std::vector<double> &alphas, double p_total,
                                      const LogicalCircuit &base, const CostModel &cost,
                                      uint32_t levels, Scheme baseline, Scheme challenger) {
    std::optional<double> found;
    for (auto it = alphas.rbegin(); it != alphas.rend(); ++it) {
        if (failure_ratio(*it, p_total, base, cost, levels, baseline, challenger) > 1) {
            found = *it;
        } else {
            break;
        }
    }
    return found;
}

NoXComparison no_x_limit(const LogicalCircuit &base, const PauliChannel &channel, const CostModel &cost,
                         uint32_t levels) {
    auto conv = concatenated_failure(base, channel, cost, levels, {Scheme::Conventional});
    auto nox = concatenated_failure(base, channel, cost, levels, {Scheme::NoX});
    NoXComparison r;
    r.depth_conventional = conv.depth.total;
    r.depth_no_x = nox.depth.total;
    r.depth_reduction = 1 - r.depth_no_x / r.depth_conventional;
    r.failure_conventional = conv.top().p_fail_total;
    r.failure_no_x = nox.top().p_fail_total;
    r.failure_ratio = r.failure_conventional / r.failure_no_x;
    r.feasible = nox.top().p_fail_x <= nox.top().p_fail_z;
    return r;
}

}  // namespace acekit
