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

#include <bit>

#include "acekit/error.hpp"
#include "acekit/stabilizer.hpp"

using namespace acekit;

TEST_CASE("Steane code structure") {
    auto code = StabilizerCode::steane();
    CHECK(code.n() == 7);
    CHECK(code.k() == 1);
    CHECK(code.d() == 3);
    REQUIRE(code.x_checks().size() == 3);
    CHECK(code.x_checks()[0] == 0b1010101);
    CHECK(code.x_checks()[1] == 0b1100110);
    CHECK(code.x_checks()[2] == 0b1111000);
    for (uint32_t g : code.x_checks()) CHECK(std::popcount(g) == 4);
}

TEST_CASE("syndromes of single errors are distinct and nonzero") {
    auto code = StabilizerCode::steane();
    uint32_t seen = 0;
    for (uint32_t q = 0; q < 7; ++q) {
        uint32_t s = code.x_syndrome(1u << q);
        CHECK(s == q + 1);
        CHECK(((seen >> s) & 1) == 0);
        seen |= 1u << s;
    }
}

TEST_CASE("stabilizers and logicals decode as expected") {
    auto code = StabilizerCode::steane();
    for (uint32_t g : code.x_checks()) CHECK(code.decode({g, 0}) == LogicalClass::I);
    for (uint32_t g : code.z_checks()) CHECK(code.decode({0, g}) == LogicalClass::I);
    CHECK(code.decode({code.logical_x(), 0}) == LogicalClass::X);
    CHECK(code.decode({0, code.logical_z()}) == LogicalClass::Z);
    CHECK(code.decode({code.logical_x(), code.logical_z()}) == LogicalClass::Y);
    CHECK(code.decode({0b11, 0}) == LogicalClass::X);
}

TEST_CASE("distance-3 suite") {
    auto r = verify_distance3(StabilizerCode::steane());
    CHECK(r.weight1_total == 21);
    CHECK(r.weight1_corrected == 21);
    CHECK(r.weight2_x_total == 21);
    CHECK(r.weight2_z_total == 21);
    CHECK(r.weight2_x_logical == 21);
    CHECK(r.identity_trivial);
    CHECK(r.passed());
}

TEST_CASE("type preservation suite") {
    auto r = verify_type_preservation(StabilizerCode::steane(), 100, 20, 3);
    CHECK(r.z_subsets == 128);
    CHECK(r.x_subsets == 128);
    CHECK(r.propagation_trials == 100);
    CHECK(r.passed());
}

TEST_CASE("inconsistent codes are rejected") {
    CHECK_THROWS_AS(StabilizerCode(3, 1, {0b011}, {0b001}, 0b111, 0b111), InvariantError);
    CHECK_THROWS_AS(StabilizerCode(3, 1, {0b011}, {0b011}, 0b001, 0b111), InvariantError);
    CHECK_THROWS_AS(StabilizerCode(2, 1, {}, {}, 0b01, 0b10), InvariantError);
    CHECK_THROWS_AS(StabilizerCode(0, 1, {}, {}, 0, 0), InputError);
    auto rep = StabilizerCode(3, 1, {}, {0b011, 0b110}, 0b111, 0b001);
    CHECK(rep.decode({0b001, 0}) == LogicalClass::I);
    CHECK(rep.decode({0b011, 0}) == LogicalClass::X);
}
