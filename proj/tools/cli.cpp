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

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acekit/analysis.hpp"
#include "acekit/circuit.hpp"
#include "acekit/error.hpp"
#include "acekit/noise.hpp"
#include "acekit/schedule.hpp"
#include "acekit/simulate.hpp"
#include "acekit/stabilizer.hpp"

namespace acekit::cli {

namespace {

constexpr size_t kDefaultGridPoints = 41;
constexpr uint32_t kMaxLevels = 2;

struct RunConfig {
    std::string subcommand;

    std::string template_name;
    std::string input;

    std::string preset;
    std::optional<double> t1, t2, gate_time;
    std::string p_total;
    std::string alpha;

    std::optional<uint32_t> n, n_xec, n_zec, n_transversal, n_cnot, d_xec, d_zec, d_gate;

    std::string levels = "1";
    std::string schemes;
    std::string replacement = "zec";
    std::optional<uint64_t> max_x_locations;

    uint64_t shots = 100000;
    uint64_t seed = 1;
    unsigned workers = 0;
    std::string kernel = "auto";
    uint32_t trials = 200;

    std::string output;
    bool quiet = false;
};

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

double parse_double(const std::string &s, const char *what) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw InputError(std::string("invalid ") + what + " '" + s + "'");
    }
    return v;
}

uint32_t parse_uint(const std::string &s, const char *what) {
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError(std::string("invalid ") + what + " '" + s + "'");
    }
    return v;
}

// "v", "v1,v2,...", "lo:hi:log[:points]" or "lo:hi:lin[:points]".
std::vector<double> parse_grid(const std::string &spec, const char *what) {
    if (spec.empty()) throw InputError(std::string("empty ") + what);
    if (spec.find(':') == std::string::npos) {
        std::vector<double> values;
        for (const auto &part : split(spec, ',')) values.push_back(parse_double(part, what));
        return values;
    }
    auto parts = split(spec, ':');
    if (parts.size() < 3 || parts.size() > 4) {
        throw InputError(std::string("invalid ") + what + " grid '" + spec + "' (want lo:hi:log[:points])");
    }
    double lo = parse_double(parts[0], what);
    double hi = parse_double(parts[1], what);
    size_t points = parts.size() == 4 ? parse_uint(parts[3], "grid point count") : kDefaultGridPoints;
    if (points == 0 || lo > hi) throw InputError(std::string("invalid ") + what + " grid '" + spec + "'");
    if (parts[2] == "log") {
        if (!(lo > 0)) throw InputError(std::string("log grid for ") + what + " needs a positive lower end");
        return log_grid(lo, hi, points);
    }
    if (parts[2] == "lin") {
        std::vector<double> values;
        for (size_t i = 0; i < points; ++i) {
            values.push_back(points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (points - 1));
        }
        return values;
    }
    throw InputError("unknown grid kind '" + parts[2] + "' (want log or lin)");
}

double parse_single(const std::string &spec, const char *what) {
    auto values = parse_grid(spec, what);
    if (values.size() != 1) throw InputError(std::string("expected a single ") + what + ", got a grid");
    return values.front();
}

std::vector<uint32_t> parse_levels(const std::string &spec) {
    std::vector<uint32_t> levels;
    for (const auto &part : split(spec, ',')) {
        uint32_t l = parse_uint(part, "level count");
        if (l < 1 || l > kMaxLevels) {
            throw InputError("levels must be in 1.." + std::to_string(kMaxLevels));
        }
        levels.push_back(l);
    }
    if (levels.empty()) throw InputError("no levels given");
    return levels;
}

std::vector<Scheme> parse_schemes(const std::string &spec, const std::string &fallback) {
    std::vector<Scheme> schemes;
    for (const auto &part : split(spec.empty() ? fallback : spec, ',')) schemes.push_back(parse_scheme(part));
    return schemes;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LogicalCircuit load_base(const RunConfig &cfg, std::ostream &err) {
    if (!cfg.input.empty() && !cfg.template_name.empty()) {
        throw InputError("give either --input or --template, not both");
    }
    LogicalCircuit c = cfg.input.empty() ? templates::by_name(cfg.template_name.empty() ? "memory5" : cfg.template_name)
                                         : parse_circuit(read_file(cfg.input));
    if (c.has_corrections()) {
        if (!cfg.quiet) err << "note: input corrections stripped; schedules are rebuilt from the bare circuit\n";
        c = strip_corrections(c);
    }
    return c;
}

CostModel load_cost(const RunConfig &cfg) {
    CostModel c = cfg.n ? CostModel::with_block_size(*cfg.n) : CostModel{};
    if (cfg.n_xec) c.n_xec = *cfg.n_xec;
    if (cfg.n_zec) c.n_zec = *cfg.n_zec;
    if (cfg.n_transversal) c.n_transversal = *cfg.n_transversal;
    if (cfg.n_cnot) c.n_cnot = *cfg.n_cnot;
    if (cfg.d_xec) c.d_xec = *cfg.d_xec;
    if (cfg.d_zec) c.d_zec = *cfg.d_zec;
    if (cfg.d_gate) c.d_gate = *cfg.d_gate;
    c.validate();
    return c;
}

enum class Source { None, Preset, Decoherence, Direct };

Source channel_source(const RunConfig &cfg) {
    bool preset = !cfg.preset.empty();
    bool deco = cfg.t1 || cfg.t2;
    bool direct = !cfg.p_total.empty() || !cfg.alpha.empty();
    if (int(preset) + int(deco) + int(direct) > 1) {
        throw InputError("give exactly one channel source: --preset, --t1/--t2, or --p-total/--alpha");
    }
    if (cfg.gate_time && !preset && !deco) throw InputError("--gate-time needs --preset or --t1/--t2");
    if (preset) return Source::Preset;
    if (deco) {
        if (!cfg.t1 || !cfg.t2 || !cfg.gate_time) throw InputError("--t1, --t2 and --gate-time go together");
        return Source::Decoherence;
    }
    if (direct) {
        if (cfg.p_total.empty() || cfg.alpha.empty()) throw InputError("--p-total and --alpha go together");
        return Source::Direct;
    }
    return Source::None;
}

// Resolves a single channel; nullopt when no source is given.
std::optional<PauliChannel> load_channel(const RunConfig &cfg) {
    switch (channel_source(cfg)) {
        case Source::Preset: {
            const SystemPreset &p = find_preset(cfg.preset);
            DecoherenceParams params = p.params;
            params.gate_time = cfg.gate_time ? *cfg.gate_time : params.t2 / 1000;
            return derive_channel(params);
        }
        case Source::Decoherence:
            return derive_channel({*cfg.t1, *cfg.t2, *cfg.gate_time});
        case Source::Direct:
            return channel_from_total_and_alpha(parse_single(cfg.p_total, "p_total"), parse_single(cfg.alpha, "alpha"));
        case Source::None: break;
    }
    return std::nullopt;
}

PauliChannel require_channel(const RunConfig &cfg) {
    auto ch = load_channel(cfg);
    if (!ch) throw InputError("a channel source is required: --preset, --t1/--t2/--gate-time, or --p-total/--alpha");
    return *ch;
}

kernels::CountFn load_kernel(const std::string &name) {
    if (name == "auto") return nullptr;
    if (name == "scalar") return kernels::count_faults_scalar;
    if (name == "avx2") {
#if defined(__x86_64__) || defined(_M_X64)
        if (kernels::avx2_available()) return kernels::count_faults_avx2;
#endif
        throw InputError("AVX2 kernel requested but not supported on this CPU");
    }
    throw InputError("unknown kernel '" + name + "' (want auto, scalar or avx2)");
}

std::string format_alpha(double alpha) { return std::isfinite(alpha) ? format_number(alpha) : "inf"; }

std::string cmd_channel(const RunConfig &cfg, std::ostream &err) {
    PauliChannel ch = require_channel(cfg);
    double a = ch.alpha();
    std::string order = std::isfinite(a) && a > 0 ? std::to_string(alpha_order(a)) : "";
    if (!cfg.quiet) {
        err << "p_x = " << format_number(ch.p_x) << "  p_y = " << format_number(ch.p_y)
            << "  p_z = " << format_number(ch.p_z) << "\n"
            << "alpha = " << format_alpha(a);
        if (!order.empty()) err << " (order 10^" << order << ")";
        err << "\n";
    }
    std::ostringstream out;
    out << "p_i,p_x,p_y,p_z,p_x_eff,p_z_eff,p_total,alpha,alpha_order\n"
        << format_number(ch.p_i) << ',' << format_number(ch.p_x) << ',' << format_number(ch.p_y) << ','
        << format_number(ch.p_z) << ',' << format_number(ch.p_x_eff()) << ',' << format_number(ch.p_z_eff()) << ','
        << format_number(ch.p_total()) << ',' << format_alpha(a) << ',' << order << '\n';
    return out.str();
}

std::string cmd_schedule(const RunConfig &cfg, std::ostream &err) {
    LogicalCircuit base = load_base(cfg, err);
    CostModel cost = load_cost(cfg);
    auto schemes = parse_schemes(cfg.schemes, "ace");
    if (schemes.size() != 1) throw InputError("schedule takes exactly one scheme");

    LogicalCircuit out;
    if (schemes[0] == Scheme::Ace) {
        AcePolicy policy;
        if (cfg.replacement == "zec") {
            policy.replacement = Replacement::ReplaceWithZec;
        } else if (cfg.replacement == "wait") {
            policy.replacement = Replacement::RemoveToWait;
        } else {
            throw InputError("unknown replacement '" + cfg.replacement + "' (want zec or wait)");
        }
        policy.max_x_rectangle_locations = cfg.max_x_locations;
        out = apply_ace(insert_conventional_ec(base), policy, cost);
    } else {
        auto ch = load_channel(cfg);
        if (!ch && schemes[0] == Scheme::AceRebalanced) throw InputError("ace_rebalanced needs a channel source");
        out = build_schedule(base, schemes[0], ch ? *ch : PauliChannel::noiseless(), cost);
    }
    if (!cfg.quiet) {
        err << scheme_name(schemes[0]) << ": " << out.n_steps() << " steps, " << out.count(OpKind::XEC) << " X_EC, "
            << out.count(OpKind::ZEC) << " Z_EC, " << out.count(OpKind::Wait) << " WAIT, depth "
            << format_number(single_level_depth(out, cost)) << "\n";
    }
    return serialize_circuit(out);
}

SweepRow row_for(double alpha, double p_total, Scheme scheme, uint32_t levels, const FailureReport &top,
                 double depth_total) {
    return {alpha, p_total, scheme, levels, depth_total, top.p_fail_x, top.p_fail_z, top.p_fail_total};
}

std::string cmd_analyze(const RunConfig &cfg, std::ostream &err) {
    LogicalCircuit base = load_base(cfg, err);
    CostModel cost = load_cost(cfg);
    PauliChannel ch = require_channel(cfg);
    auto schemes = parse_schemes(cfg.schemes, "conventional,ace");
    std::vector<SweepRow> rows;
    for (Scheme s : schemes) {
        for (uint32_t levels : parse_levels(cfg.levels)) {
            auto res = concatenated_failure(base, ch, cost, levels, {s});
            const FailureReport &top = res.top();
            rows.push_back(row_for(ch.alpha(), ch.p_total(), s, levels, top, res.depth.total));
            if (cfg.quiet) continue;
            uint64_t largest_x = 0, largest_z = 0;
            size_t nx = 0, nz = 0;
            for (const auto &r : res.per_level.front().report.per_rectangle) {
                bool is_x = r.error_type == ErrorType::X;
                (is_x ? nx : nz) += 1;
                uint64_t &largest = is_x ? largest_x : largest_z;
                largest = std::max(largest, r.location_count);
            }
            err << scheme_name(s) << " levels=" << levels << ": depth " << format_number(res.depth.total)
                << ", p_fail_x " << format_number(top.p_fail_x) << ", p_fail_z " << format_number(top.p_fail_z)
                << ", p_fail " << format_number(top.p_fail_total) << " (lower bound); level-1 rectangles " << nx
                << " X (largest " << largest_x << " locations), " << nz << " Z (largest " << largest_z << ")\n";
        }
    }
    return to_csv(rows);
}

std::string cmd_simulate(const RunConfig &cfg, std::ostream &err) {
    LogicalCircuit base = load_base(cfg, err);
    CostModel cost = load_cost(cfg);
    PauliChannel ch = require_channel(cfg);
    auto levels = parse_levels(cfg.levels);
    if (levels.size() != 1 || levels[0] != 1) throw InputError("simulate models a single level only");
    if (cfg.shots == 0) throw InputError("--shots must be positive");
    MCOptions opt{cfg.shots, cfg.seed, cfg.workers, load_kernel(cfg.kernel)};

    std::string csv = mc_csv_header() + "\n";
    for (Scheme s : parse_schemes(cfg.schemes, "conventional,ace")) {
        LogicalCircuit circuit = build_schedule(base, s, ch, cost);
        FailureReport analytic = circuit_failure(circuit, ch, cost);
        MCEstimate est = mc_estimate(circuit, ch, cost, opt);
        SweepRow ctx = row_for(ch.alpha(), ch.p_total(), s, 1, analytic, analytic.depth.total);
        csv += mc_csv_line(ctx, est) + "\n";
        if (!cfg.quiet) {
            err << scheme_name(s) << ": MC " << format_number(est.rate_total()) << " +/- "
                << format_number(est.ci_halfwidth(est.rate_total())) << " over " << est.shots
                << " shots, analytic " << format_number(analytic.p_fail_total) << "\n";
        }
    }
    return csv;
}

std::string cmd_sweep(const RunConfig &cfg, std::ostream &err) {
    LogicalCircuit base = load_base(cfg, err);
    CostModel cost = load_cost(cfg);
    SweepSpec spec;
    if (channel_source(cfg) == Source::Direct) {
        spec.alphas = parse_grid(cfg.alpha, "alpha");
        spec.p_totals = parse_grid(cfg.p_total, "p_total");
    } else {
        PauliChannel ch = require_channel(cfg);
        spec.alphas = {ch.alpha()};
        spec.p_totals = {ch.p_total()};
    }
    spec.schemes = parse_schemes(cfg.schemes, "conventional,ace");
    spec.levels = parse_levels(cfg.levels);
    spec.workers = cfg.workers;
    auto rows = sweep(spec, base, cost);
    if (!cfg.quiet) err << rows.size() << " rows\n";
    return to_csv(rows);
}

std::string cmd_verify(const RunConfig &cfg, std::ostream &err, bool &passed) {
    StabilizerCode code = StabilizerCode::steane();
    DistanceReport d = verify_distance3(code);
    TypePreservationReport t = verify_type_preservation(code, cfg.trials, 20, cfg.seed);
    passed = d.passed() && t.passed();

    std::ostringstream out;
    out << "suite,check,total,count\n"
        << "distance3,weight1_corrected," << d.weight1_total << ',' << d.weight1_corrected << '\n'
        << "distance3,weight2_x_logical," << d.weight2_x_total << ',' << d.weight2_x_logical << '\n'
        << "distance3,weight2_z_logical," << d.weight2_z_total << ',' << d.weight2_z_logical << '\n'
        << "distance3,identity_trivial,1," << int(d.identity_trivial) << '\n'
        << "type_preservation,z_subsets_preserved," << t.z_subsets << ',' << t.z_preserved << '\n'
        << "type_preservation,x_subsets_preserved," << t.x_subsets << ',' << t.x_preserved << '\n'
        << "type_preservation,z_frames_x_free," << t.propagation_trials << ',' << t.propagation_preserved << '\n';
    if (!cfg.quiet) {
        err << "distance-3: " << d.weight1_corrected << "/" << d.weight1_total << " weight-1 errors corrected; "
            << "weight-2 logical failures X " << d.weight2_x_logical << "/" << d.weight2_x_total << ", Z "
            << d.weight2_z_logical << "/" << d.weight2_z_total << " -> " << (d.passed() ? "pass" : "FAIL") << "\n"
            << "type preservation: Z " << t.z_preserved << "/" << t.z_subsets << ", X " << t.x_preserved << "/"
            << t.x_subsets << ", frames " << t.propagation_preserved << "/" << t.propagation_trials << " -> "
            << (t.passed() ? "pass" : "FAIL") << "\n";
    }
    return out.str();
}

void emit(const RunConfig &cfg, const std::string &artifact, std::ostream &out) {
    if (cfg.output.empty()) {
        out << artifact;
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file || !(file << artifact) || !file.flush()) throw InputError("cannot write '" + cfg.output + "'");
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Asymmetric error correction scheduling and failure analysis", "acekit"};
    app.set_config("--config", "", "Read options from a key=value file");
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--template", cfg.template_name, "Built-in circuit: memory5, bell, coupled3, steane_ec");
    app.add_option("--input", cfg.input, "Circuit file (.ftc)");
    app.add_option("--preset", cfg.preset, "Physical system preset");
    app.add_option("--t1", cfg.t1, "Relaxation time T1 (s)");
    app.add_option("--t2", cfg.t2, "Dephasing time T2 (s)");
    app.add_option("--gate-time", cfg.gate_time, "Gate time (s)");
    app.add_option("--p-total", cfg.p_total, "Total error rate; sweep accepts a list or lo:hi:log[:points]");
    app.add_option("--alpha", cfg.alpha, "Asymmetry; sweep accepts a list or lo:hi:log[:points]");
    app.add_option("--n", cfg.n, "Locations per EC block (both types)");
    app.add_option("--n-xec", cfg.n_xec, "Locations per X correction block");
    app.add_option("--n-zec", cfg.n_zec, "Locations per Z correction block");
    app.add_option("--n-transversal", cfg.n_transversal, "Locations per transversal single-qubit gate");
    app.add_option("--n-cnot", cfg.n_cnot, "Locations per transversal CNOT");
    app.add_option("--d-xec", cfg.d_xec, "Depth of an X correction block");
    app.add_option("--d-zec", cfg.d_zec, "Depth of a Z correction block");
    app.add_option("--d-gate", cfg.d_gate, "Depth of a transversal gate");
    app.add_option("--levels", cfg.levels, "Concatenation levels (comma list for analyze/sweep)");
    app.add_option("--schemes,--scheme", cfg.schemes, "conventional, ace, ace_rebalanced, no_x, bare");
    app.add_option("--replacement", cfg.replacement, "What replaces a removed X correction: zec or wait");
    app.add_option("--max-x-locations", cfg.max_x_locations, "Cap on X rectangle size after removal");
    app.add_option("--shots", cfg.shots, "Monte Carlo shots");
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--workers", cfg.workers, "Worker threads (0: all cores)");
    app.add_option("--kernel", cfg.kernel, "Fault sampling kernel: auto, scalar, avx2");
    app.add_option("--trials", cfg.trials, "Random propagation trials for verify");
    app.add_option("--output,-o", cfg.output, "Write the artifact here instead of stdout");
    app.add_flag("--quiet,-q", cfg.quiet, "Emit only the artifact");

    for (auto [name, desc] : {std::pair{"channel", "Derive the Pauli channel and its asymmetry"},
                              {"schedule", "Write the scheduled .ftc circuit"},
                              {"analyze", "Location-counting failure analysis"},
                              {"simulate", "Monte Carlo fault sampling"},
                              {"sweep", "Failure rates over an alpha x p_total grid"},
                              {"verify", "Check the [[7,1,3]] decoder"}}) {
        app.add_subcommand(name, desc)->callback([&cfg, n = std::string(name)] { cfg.subcommand = n; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        std::string artifact;
        bool verified = true;
        if (cfg.subcommand == "channel") artifact = cmd_channel(cfg, err);
        else if (cfg.subcommand == "schedule") artifact = cmd_schedule(cfg, err);
        else if (cfg.subcommand == "analyze") artifact = cmd_analyze(cfg, err);
        else if (cfg.subcommand == "simulate") artifact = cmd_simulate(cfg, err);
        else if (cfg.subcommand == "sweep") artifact = cmd_sweep(cfg, err);
        else if (cfg.subcommand == "verify") artifact = cmd_verify(cfg, err, verified);
        emit(cfg, artifact, out);
        if (!verified) {
            err << "error: stabilizer verification failed\n";
            return 2;
        }
        return 0;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantError &e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace acekit::cli
