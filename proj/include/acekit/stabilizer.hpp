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

#include <array>
#include <cstdint>
#include <vector>

namespace acekit {

/// Pauli error on up to 32 qubits in binary symplectic form.
struct PauliError {
    uint32_t x = 0;
    uint32_t z = 0;
    bool operator==(const PauliError &) const = default;
};

enum class LogicalClass : uint8_t { I, X, Y, Z };

/// CSS stabilizer code with a minimum-weight syndrome lookup decoder.
class StabilizerCode {
   public:
    /// Throws InvariantError unless the generators commute, the logicals commute with
    /// every generator and anticommute with each other.
    StabilizerCode(uint32_t n, uint32_t d, std::vector<uint32_t> x_checks, std::vector<uint32_t> z_checks,
                   uint32_t logical_x, uint32_t logical_z);

    /// [[7,1,3]]: both check types are the Hamming [7,4] parity checks.
    static StabilizerCode steane();

    uint32_t n() const { return n_; }
    uint32_t k() const { return 1; }
    uint32_t d() const { return d_; }
    const std::vector<uint32_t> &x_checks() const { return x_checks_; }
    const std::vector<uint32_t> &z_checks() const { return z_checks_; }
    uint32_t logical_x() const { return logical_x_; }
    uint32_t logical_z() const { return logical_z_; }

    /// Syndrome of the X part (measured by Z checks) and of the Z part (by X checks).
    uint32_t x_syndrome(uint32_t x_bits) const;
    uint32_t z_syndrome(uint32_t z_bits) const;

    /// Correction from the lookup table.
    PauliError correction(const PauliError &error) const;

    /// Logical action of error followed by its correction.
    LogicalClass decode(const PauliError &error) const;

   private:
    uint32_t n_, d_;
    std::vector<uint32_t> x_checks_, z_checks_;
    uint32_t logical_x_, logical_z_;
    std::vector<uint32_t> x_table_;  // indexed by x syndrome
    std::vector<uint32_t> z_table_;
};

struct DistanceReport {
    uint32_t weight1_total = 0;
    uint32_t weight1_corrected = 0;
    uint32_t weight2_x_total = 0;
    uint32_t weight2_x_logical = 0;
    uint32_t weight2_z_total = 0;
    uint32_t weight2_z_logical = 0;
    bool identity_trivial = false;

    bool passed() const {
        return identity_trivial && weight1_corrected == weight1_total && weight2_x_logical > 0 &&
               weight2_z_logical > 0;
    }
};

/// Exhaustive single-qubit X/Y/Z and same-type weight-2 injection.
DistanceReport verify_distance3(const StabilizerCode &code);

struct TypePreservationReport {
    uint32_t z_subsets = 0;
    uint32_t z_preserved = 0;  // decoded to I or logical Z
    uint32_t x_subsets = 0;
    uint32_t x_preserved = 0;  // decoded to I or logical X
    uint32_t propagation_trials = 0;
    uint32_t propagation_preserved = 0;  // pure-Z frames that stayed X-free

    bool passed() const {
        return z_preserved == z_subsets && x_preserved == x_subsets &&
               propagation_preserved == propagation_trials;
    }
};

/// Every pure-Z (pure-X) fault subset decodes to I or logical Z (X); random pure-Z
/// frames on two code blocks stay X-free through random transversal CX / WAIT
/// circuits of `depth` layers.
TypePreservationReport verify_type_preservation(const StabilizerCode &code, uint32_t trials = 200,
                                                uint32_t depth = 20, uint64_t seed = 7);

}  // namespace acekit
