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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "acekit/analysis.hpp"
#include "acekit/error.hpp"
#include "acekit/schedule.hpp"
#include "oracles.hpp"

using namespace acekit;

namespace {

uint64_t largest_x(const LogicalCircuit &c, const CostModel &cost) {
    uint64_t m = 0;
    for (const auto &r : extract_rectangles(c, ErrorType::X, cost)) m = std::max(m, r.location_count);
    return m;
}

}  // namespace

TEST_CASE("ACE on the memory template") {
    auto ace = apply_ace(insert_conventional_ec(templates::memory5()));
    CHECK(ace.count(OpKind::XEC) == 2);
    CHECK(ace.count(OpKind::ZEC) == 7);
    CHECK(ace.count(OpKind::Wait) == 5);
    std::string expect = "qubits 1\nXEC 0\nZEC 0\n";
    for (int i = 0; i < 5; ++i) expect += "WAIT 0\nZEC 0\n";
    expect += "XEC 0\nZEC 0\n";
    CHECK(serialize_circuit(ace) == expect);
}

TEST_CASE("ACE keeps X correction around mixing gates") {
    auto conv = insert_conventional_ec(parse_circuit("qubits 1\nWAIT 0\nH 0\nWAIT 0\nWAIT 0\n"));
    auto ace = apply_ace(conv);
    CHECK_NOTHROW(check_mixing_protection(ace));
    CHECK(ace.count(OpKind::XEC) < conv.count(OpKind::XEC));
    CHECK(ace.count(OpKind::XEC) >= 3);
}

TEST_CASE("ACE is idempotent and safe on random circuits") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        auto base = oracle::random_circuit(rng, 1 + rng() % 5, 1 + rng() % 8, false);
        auto conv = insert_conventional_ec(base);
        auto ace = apply_ace(conv);
        CHECK(apply_ace(ace) == ace);
        CHECK_NOTHROW(check_mixing_protection(ace));
        CHECK(strip_corrections(ace) == base);
        CHECK(ace.count(OpKind::XEC) <= conv.count(OpKind::XEC));
        CHECK(ace.count(OpKind::ZEC) >= conv.count(OpKind::ZEC));
        auto waits = apply_ace(conv, {true, Replacement::RemoveToWait, std::nullopt, false});
        CHECK(waits.count(OpKind::XEC) == ace.count(OpKind::XEC));
        CHECK(waits.count(OpKind::ZEC) <= ace.count(OpKind::ZEC));
        CHECK(strip_corrections(waits) == base);
    }
}

TEST_CASE("ACE adds at most one closing correction pair of depth") {
    std::mt19937_64 rng(23);
    CostModel cost;
    for (int i = 0; i < 100; ++i) {
        auto base = oracle::random_circuit(rng, 1 + rng() % 4, 1 + rng() % 8, false);
        auto conv = insert_conventional_ec(base);
        CHECK(single_level_depth(apply_ace(conv), cost) <=
              single_level_depth(conv, cost) + cost.d_xec + cost.d_zec);
    }
}

TEST_CASE("policy validation") {
    AcePolicy p;
    p.keep_around_mixing = false;
    CHECK_THROWS_AS(p.validate(), InputError);
    CHECK_THROWS_AS(apply_ace(insert_conventional_ec(templates::memory5()), p), InputError);
    CHECK_THROWS_AS(apply_ace(templates::memory5()), InputError);
}

TEST_CASE("removing all optional X correction") {
    auto nox = remove_x_correction(insert_conventional_ec(templates::memory5()));
    CHECK(nox.count(OpKind::XEC) == 0);
    CHECK(nox.count(OpKind::ZEC) == 6);
    auto bell = remove_x_correction(insert_conventional_ec(templates::bell()));
    CHECK_NOTHROW(check_mixing_protection(bell));
    CHECK(bell.count(OpKind::XEC) == 2);
}

TEST_CASE("X reinsertion splits rectangles") {
    CostModel cost;
    auto ace = apply_ace(insert_conventional_ec(templates::memory5()));
    auto pts = x_reinsertion_points(ace);
    CHECK(pts.size() == 4);
    auto split = insert_x_after(ace, pts[2].first, pts[2].second);
    CHECK(split.n_steps() == ace.n_steps() + 1);
    CHECK(largest_x(split, cost) < largest_x(ace, cost));
    CHECK_THROWS_AS(insert_x_after(ace, 0, 99), InputError);
}

TEST_CASE("capping X rectangles") {
    CostModel cost;
    auto conv = insert_conventional_ec(templates::memory5());
    auto ace = apply_ace(conv);
    uint64_t cap = largest_x(conv, cost);
    auto capped = cap_x_rectangles(ace, cap, cost);
    // The last wait keeps the closing pair, so the cap cannot be met exactly.
    CHECK(largest_x(capped, cost) < largest_x(ace, cost));
    CHECK(largest_x(capped, cost) == 2 * cost.n_xec + 2 * cost.n_zec + cost.n_transversal);
    CHECK(cap_x_rectangles(ace, largest_x(ace, cost), cost) == ace);
    AcePolicy p;
    p.max_x_rectangle_locations = cap;
    CHECK(apply_ace(conv, p, cost) == capped);
}

TEST_CASE("rebalancing against a channel") {
    CostModel cost;
    auto ace = apply_ace(insert_conventional_ec(templates::memory5()));
    CHECK_THROWS_AS(rebalance(ace, channel_from_total_and_alpha(1e-5, 0.8), cost), InputError);

    auto strong = channel_from_total_and_alpha(1e-5, 1e4);
    CHECK(rebalance(ace, strong, cost) == ace);

    auto mild = channel_from_total_and_alpha(1e-5, 1.0);
    auto r = rebalance(ace, mild, cost);
    auto report = circuit_failure(r, mild, cost);
    bool balanced = report.p_fail_x <= report.p_fail_z;
    CHECK((balanced || r == insert_conventional_ec(templates::memory5())));
    CHECK(r.count(OpKind::XEC) > ace.count(OpKind::XEC));
}

TEST_CASE("scheme names") {
    for (Scheme s : {Scheme::Conventional, Scheme::Ace, Scheme::AceRebalanced, Scheme::NoX, Scheme::Bare}) {
        CHECK(parse_scheme(scheme_name(s)) == s);
    }
    CHECK_THROWS_AS(parse_scheme("ACE"), InputError);
}

TEST_CASE("build_schedule") {
    CostModel cost;
    auto base = templates::memory5();
    auto ch = channel_from_total_and_alpha(1e-5, 10);
    CHECK(build_schedule(base, Scheme::Bare, ch, cost) == base);
    CHECK(build_schedule(base, Scheme::Conventional, ch, cost) == insert_conventional_ec(base));
    CHECK(build_schedule(base, Scheme::Ace, ch, cost) == apply_ace(insert_conventional_ec(base)));
    auto weak = channel_from_total_and_alpha(1e-5, 0.7);
    CHECK(build_schedule(base, Scheme::AceRebalanced, weak, cost) == insert_conventional_ec(base));
}
