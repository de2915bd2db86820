// Copyright 2026 The cghz Authors
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

/**
 * @file
 * Bell, GHZ and concatenated-GHZ (C-GHZ) states in the circular basis.
 *
 * A C-GHZ state over N logic qubits of m photons each is
 *
 *   (1/sqrt2) (  GHZ_m^{s_1} ... GHZ_m^{s_N}
 *              + sign * GHZ_m^{-s_1} ... GHZ_m^{-s_N} ),
 *
 * with s_j = + when pattern bit b_j is 0 and - when it is 1. The patterns b
 * and its complement give the same state (the sign label is unchanged), so
 * labels keep b_1 = 0.
 *
 * Group index k. With c = b XOR b_N (the representative whose last bit is
 * 0), k = 1 + sum_{j<N} c_j 2^{j-1}. For N = 3 this gives
 *   k=1: (+,+,+)  k=2: (-,+,+)  k=3: (+,-,+)  k=4: (+,+,-)
 * for the first branch, and for any N, k = 2 is (-,+,...,+) and
 * k = 2^{N-1} is (+,...,+,-).
 *
 * Registers are logic-major, physical-minor: a1 a2 .. am b1 .. bm c1 ...
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cghz/qstate.hpp"

namespace cghz {

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

struct CghzLabel {
    int n = 2;
    int m = 2;
    /// Bit j holds b_{j+1}; bit 0 is always clear.
    std::uint64_t pattern = 0;
    /// +1 or -1.
    int sign = 1;

    /// Builds a label from any pattern, replacing it with its complement
    /// when b_1 = 1.
    static CghzLabel from_pattern(int n, int m, std::uint64_t pattern, int sign);
    static CghzLabel from_k(int n, int m, std::uint64_t k, int sign);

    /// Parses "k+" / "k-" (1-based k) for the given shape.
    static CghzLabel parse(std::string_view text, int n, int m);

    std::uint64_t k() const;
    /// "k+" or "k-".
    std::string text() const;
    /// b_1 b_2 ... b_N as '0'/'1'.
    std::string pattern_bits() const;
    bool bit(int j) const { return ((pattern >> j) & 1U) != 0; }

    friend bool operator==(const CghzLabel &, const CghzLabel &) = default;
};

/// Mode label for physical photon `phys` (0-based) of logic qubit `logic`:
/// (0, 0) -> "a1", (1, 1) -> "b2".
std::string photon_label(int logic, int phys);

/// Two-photon Bell state on [a1, a2]; psi_minus is (|LR> - |RL>)/sqrt2.
StateVector bell(BellKind kind);
StateVector ghz(int sign, int m);
StateVector cghz(const CghzLabel &label);

/// All 2^N labels, ordered by k then sign (+ before -).
std::vector<CghzLabel> enumerate_labels(int n, int m);

/// Throws InvalidArgument unless n >= 2, m >= 2 and n * m fits the cap
/// arithmetic (n <= 26 logic qubits).
void validate_shape(int n, int m);

} // namespace cghz
