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

#include <cmath>
#include <limits>

#include "acekit/error.hpp"
#include "acekit/noise.hpp"
#include "oracles.hpp"

using namespace acekit;

TEST_CASE("derive_channel matches an extended-precision evaluation") {
    for (double t1 : {1e-6, 1e-3, 1.0, 3600.0}) {
        for (double ratio : {1e-6, 1e-3, 0.1, 1.0, 2.0}) {
            for (double t_frac : {1e-6, 1e-3, 0.5}) {
                DecoherenceParams d{t1, ratio * t1, t_frac * ratio * t1};
                PauliChannel ch = derive_channel(d);
                auto ref = oracle::long_channel(d);
                CHECK(ch.p_x == doctest::Approx(static_cast<double>(ref.p_x)).epsilon(1e-12));
                CHECK(ch.p_y == ch.p_x);
                CHECK(ch.p_z == doctest::Approx(static_cast<double>(ref.p_z)).epsilon(1e-9));
                CHECK(ch.p_i + ch.p_x + ch.p_y + ch.p_z == doctest::Approx(1.0).epsilon(1e-15));
                CHECK_NOTHROW(ch.validate());
            }
        }
    }
}

TEST_CASE("asymmetry approaches 2 T1 / T2 for short gates") {
    for (const auto &preset : preset_catalog()) {
        DecoherenceParams d = preset.params;
        d.gate_time = d.t2 / 1000;
        double expect = 2 * d.t1 / d.t2;
        CHECK(asymmetry(derive_channel(d)) == doctest::Approx(expect).epsilon(0.02));
    }
}

TEST_CASE("short gates give alpha close to 2 T1 / T2 + 1/2") {
    CHECK(derive_channel({1.0, 2.0, 1e-6}).alpha() == doctest::Approx(1.5).epsilon(1e-5));
    CHECK(derive_channel({1.0, 0.1, 1e-6}).alpha() == doctest::Approx(20.5).epsilon(1e-5));
}

TEST_CASE("decoherence parameters are validated") {
    CHECK_THROWS_AS(derive_channel({1.0, 2.5, 1e-3}), InputError);
    CHECK_THROWS_AS(derive_channel({-1.0, 1.0, 1e-3}), InputError);
    CHECK_THROWS_AS(derive_channel({1.0, 1.0, 0.0}), InputError);
    CHECK_NOTHROW(derive_channel({1.0, 2.0, 1e-3}));
}

TEST_CASE("channel_from_total_and_alpha inverts alpha and p_total") {
    for (double p : {1e-6, 1e-3, 0.1}) {
        for (double a : {1.0, 2.5, 10.0, 1e6}) {
            PauliChannel ch = channel_from_total_and_alpha(p, a);
            CHECK(ch.p_total() == doctest::Approx(p).epsilon(1e-12));
            CHECK(ch.alpha() == doctest::Approx(a).epsilon(1e-12));
            CHECK(ch.p_x == ch.p_y);
        }
    }
    CHECK_THROWS_AS(channel_from_total_and_alpha(1e-3, 0.25), InputError);
    CHECK_THROWS_AS(channel_from_total_and_alpha(-1e-3, 2.0), InputError);
    CHECK_THROWS_AS(channel_from_total_and_alpha(1.5, 2.0), InputError);
}

TEST_CASE("alpha of a channel without X components is infinite") {
    PauliChannel ch = PauliChannel::from_effective(0, 1e-3);
    CHECK(std::isinf(ch.alpha()));
    CHECK(PauliChannel::noiseless().p_total() == 0);
}

TEST_CASE("PauliChannel::validate") {
    PauliChannel bad;
    bad.p_x = 0.2;
    CHECK_THROWS_AS(bad.validate(), InputError);
    bad.p_i = 0.8;
    CHECK_NOTHROW(bad.validate());
    bad.p_z = -0.1;
    bad.p_i = 0.9;
    CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("alpha_order is the decade exponent") {
    CHECK(alpha_order(1.0) == 0);
    CHECK(alpha_order(9.99) == 0);
    CHECK(alpha_order(10.0) == 1);
    CHECK(alpha_order(7.2e6) == 6);
    CHECK(alpha_order(0.5) == -1);
    CHECK_THROWS_AS(alpha_order(0.0), InputError);
}

TEST_CASE("preset lookup") {
    CHECK(preset_catalog().size() == 5);
    CHECK(find_preset("p:si").name == "P:Si");
    CHECK(find_preset("Trapped-Ions").params.t1 == 0.1);
    CHECK_THROWS_AS(find_preset("nope"), InputError);
}

TEST_CASE("preset table parsing") {
    auto rows = parse_preset_table("# name t1 t2\nfoo 1 1e-3  # trailing\n\nbar 2.0 4.0\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].name == "foo");
    CHECK(rows[0].expected_alpha_order == 3);
    CHECK(rows[1].expected_alpha_order == 0);
    CHECK_THROWS_AS(parse_preset_table("foo 1\n"), InputError);
    CHECK_THROWS_AS(parse_preset_table("foo 1 x\n"), InputError);
    CHECK_THROWS_AS(parse_preset_table("foo 1 1\nFOO 2 2\n"), InputError);
    CHECK_THROWS_AS(parse_preset_table("foo 1 -1\n"), InputError);
}
