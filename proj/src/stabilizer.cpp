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

#include "acekit/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "acekit/circuit.hpp"
#include "acekit/error.hpp"
#include "acekit/simulate.hpp"

namespace acekit {

namespace {

bool odd_overlap(uint32_t a, uint32_t b) { return std::popcount(a & b) & 1; }

uint32_t syndrome(const std::vector<uint32_t> &checks, uint32_t bits) {
    uint32_t s = 0;
    for (size_t i = 0; i < checks.size(); ++i) s |= static_cast<uint32_t>(odd_overlap(checks[i], bits)) << i;
    return s;
}

// Minimum-weight representative for every reachable syndrome, by increasing weight.
std::vector<uint32_t> build_table(const std::vector<uint32_t> &checks, uint32_t n) {
    std::vector<uint32_t> table(size_t{1} << checks.size(), UINT32_MAX);
    std::vector<uint32_t> order;
    for (uint32_t e = 0; e < (1u << n); ++e) order.push_back(e);
    std::stable_sort(order.begin(), order.end(),
                     [](uint32_t a, uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (uint32_t e : order) {
        auto &slot = table[syndrome(checks, e)];
        if (slot == UINT32_MAX) slot = e;
    }
    return table;
}

}  // namespace

StabilizerCode::StabilizerCode(uint32_t n, uint32_t d, std::vector<uint32_t> x_checks,
                               std::vector<uint32_t> z_checks, uint32_t logical_x, uint32_t logical_z)
    : n_(n), d_(d), x_checks_(std::move(x_checks)), z_checks_(std::move(z_checks)),
      logical_x_(logical_x), logical_z_(logical_z) {
    if (n_ == 0 || n_ > 20) {
        throw InputError("stabilizer verifier supports 1..20 qubits");
    }
    for (uint32_t gx : x_checks_)
        for (uint32_t gz : z_checks_)
            if (odd_overlap(gx, gz)) throw InvariantError("stabilizer generators anticommute");
    for (uint32_t gz : z_checks_)
        if (odd_overlap(logical_x_, gz)) throw InvariantError("logical X anticommutes with a Z check");
    for (uint32_t gx : x_checks_)
        if (odd_overlap(logical_z_, gx)) throw InvariantError("logical Z anticommutes with an X check");
    if (!odd_overlap(logical_x_, logical_z_)) {
        throw InvariantError("logical X and Z commute");
    }
    x_table_ = build_table(z_checks_, n_);
    z_table_ = build_table(x_checks_, n_);
}

StabilizerCode StabilizerCode::steane() {
    // Bit i of a mask is qubit i. Check j covers the qubits whose 1-based index has bit j set.
    std::vector<uint32_t> hamming;
    for (uint32_t j = 0; j < 3; ++j) {
        uint32_t m = 0;
        for (uint32_t q = 0; q < 7; ++q)
            if (((q + 1) >> j) & 1) m |= 1u << q;
        hamming.push_back(m);
    }
    return StabilizerCode(7, 3, hamming, hamming, 0x7F, 0x7F);
}

uint32_t StabilizerCode::x_syndrome(uint32_t x_bits) const { return syndrome(z_checks_, x_bits); }
uint32_t StabilizerCode::z_syndrome(uint32_t z_bits) const { return syndrome(x_checks_, z_bits); }

PauliError StabilizerCode::correction(const PauliError &error) const {
    return {x_table_[x_syndrome(error.x)], z_table_[z_syndrome(error.z)]};
}

LogicalClass StabilizerCode::decode(const PauliError &error) const {
    PauliError fix = correction(error);
    uint32_t rx = error.x ^ fix.x;
    uint32_t rz = error.z ^ fix.z;
    if (x_syndrome(rx) != 0 || z_syndrome(rz) != 0) {
        throw InvariantError("correction left a nonzero syndrome");
    }
    bool flip_x = odd_overlap(rx, logical_z_);
    bool flip_z = odd_overlap(rz, logical_x_);
    if (flip_x && flip_z) return LogicalClass::Y;
    if (flip_x) return LogicalClass::X;
    if (flip_z) return LogicalClass::Z;
    return LogicalClass::I;
}

DistanceReport verify_distance3(const StabilizerCode &code) {
    DistanceReport r;
    r.identity_trivial = code.x_syndrome(0) == 0 && code.z_syndrome(0) == 0 &&
                         code.correction({}) == PauliError{} && code.decode({}) == LogicalClass::I;
    const uint32_t n = code.n();
    for (uint32_t q = 0; q < n; ++q) {
        uint32_t m = 1u << q;
        for (PauliError e : {PauliError{m, 0}, PauliError{0, m}, PauliError{m, m}}) {
            ++r.weight1_total;
            r.weight1_corrected += code.decode(e) == LogicalClass::I;
        }
    }
    for (uint32_t a = 0; a < n; ++a) {
        for (uint32_t b = a + 1; b < n; ++b) {
            uint32_t m = (1u << a) | (1u << b);
            ++r.weight2_x_total;
            r.weight2_x_logical += code.decode({m, 0}) != LogicalClass::I;
            ++r.weight2_z_total;
            r.weight2_z_logical += code.decode({0, m}) != LogicalClass::I;
        }
    }
    return r;
}

TypePreservationReport verify_type_preservation(const StabilizerCode &code, uint32_t trials, uint32_t depth,
                                                uint64_t seed) {
    TypePreservationReport r;
    const uint32_t n = code.n();
    for (uint32_t m = 0; m < (1u << n); ++m) {
        ++r.z_subsets;
        auto zc = code.decode({0, m});
        r.z_preserved += zc == LogicalClass::I || zc == LogicalClass::Z;
        ++r.x_subsets;
        auto xc = code.decode({m, 0});
        r.x_preserved += xc == LogicalClass::I || xc == LogicalClass::X;
    }

    // Two blocks coupled by transversal CX layers in either direction, or idling.
    std::mt19937_64 rng(seed);
    for (uint32_t trial = 0; trial < trials; ++trial) {
        PauliFrame frame(2 * n);
        for (uint32_t q = 0; q < 2 * n; ++q) frame.set_z(q, rng() & 1);
        for (uint32_t layer = 0; layer < depth; ++layer) {
            switch (rng() % 3) {
                case 0:
                    for (uint32_t q = 0; q < n; ++q) propagate_pauli({OpKind::CX, q, n + q}, frame);
                    break;
                case 1:
                    for (uint32_t q = 0; q < n; ++q) propagate_pauli({OpKind::CX, n + q, q}, frame);
                    break;
                default:
                    for (uint32_t q = 0; q < 2 * n; ++q) propagate_pauli({OpKind::Wait, q, 0}, frame);
                    break;
            }
        }
        ++r.propagation_trials;
        r.propagation_preserved += !frame.has_x();
    }
    return r;
}

}  // namespace acekit
