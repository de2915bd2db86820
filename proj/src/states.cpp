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

#include "cghz/states.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <regex>

#include "cghz/error.hpp"

namespace cghz {

namespace {

std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

} // namespace

void validate_shape(int n, int m) {
    if (n < 2) {
        throw InvalidArgument("need at least 2 logic qubits");
    }
    if (m < 2) {
        throw InvalidArgument("need at least 2 physical qubits per logic qubit");
    }
    if (n > 26) {
        throw InvalidArgument("at most 26 logic qubits (modes a..z)");
    }
}

CghzLabel CghzLabel::from_pattern(int n, int m, std::uint64_t pattern, int sign) {
    validate_shape(n, m);
    if (sign != 1 && sign != -1) {
        throw InvalidArgument("sign must be +1 or -1");
    }
    pattern &= full_mask(n);
    if (pattern & 1U) {
        pattern = ~pattern & full_mask(n);
    }
    return {n, m, pattern, sign};
}

CghzLabel CghzLabel::from_k(int n, int m, std::uint64_t k, int sign) {
    validate_shape(n, m);
    const std::uint64_t groups = std::uint64_t{1} << (n - 1);
    if (k < 1 || k > groups) {
        throw InvalidArgument("group index k out of range");
    }
    // Representative with b_N = 0, then flip to the b_1 = 0 one.
    return from_pattern(n, m, k - 1, sign);
}

std::uint64_t CghzLabel::k() const {
    const std::uint64_t last = bit(n - 1) ? full_mask(n) : 0;
    const std::uint64_t rep = pattern ^ last;
    return 1 + (rep & full_mask(n - 1));
}

std::string CghzLabel::text() const {
    return std::to_string(k()) + (sign > 0 ? "+" : "-");
}

std::string CghzLabel::pattern_bits() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j) {
        if (bit(j)) {
            s[static_cast<std::size_t>(j)] = '1';
        }
    }
    return s;
}

CghzLabel CghzLabel::parse(std::string_view text, int n, int m) {
    static const std::regex re("^([1-9][0-9]{0,18})([+-])$");
    std::match_results<std::string_view::const_iterator> mt;
    if (!std::regex_match(text.begin(), text.end(), mt, re)) {
        throw InvalidArgument("malformed state label '" + std::string(text) +
                              "' (expected e.g. 1+ or 2-)");
    }
    const std::uint64_t k = std::stoull(mt[1].str());
    const int sign = mt[2].str() == "+" ? 1 : -1;
    return from_k(n, m, k, sign);
}

std::string photon_label(int logic, int phys) {
    std::string s(1, static_cast<char>('a' + logic));
    s += std::to_string(phys + 1);
    return s;
}

StateVector bell(BellKind kind) {
    const double h = std::numbers::sqrt2 / 2.0;
    // index = bit(a1) + 2 bit(a2)
    std::vector<cplx> amps(4, cplx{0.0});
    switch (kind) {
    case BellKind::phi_plus:
        amps[0] = h;
        amps[3] = h;
        break;
    case BellKind::phi_minus:
        amps[0] = h;
        amps[3] = -h;
        break;
    case BellKind::psi_plus:
        amps[2] = h;
        amps[1] = h;
        break;
    case BellKind::psi_minus:
        amps[2] = h; // |L>_a1 |R>_a2
        amps[1] = -h;
        break;
    }
    return StateVector({QubitId::photon("a1"), QubitId::photon("a2")},
                       std::move(amps));
}

StateVector ghz(int sign, int m) {
    if (m < 2) {
        throw InvalidArgument("GHZ state needs m >= 2");
    }
    if (sign != 1 && sign != -1) {
        throw InvalidArgument("sign must be +1 or -1");
    }
    std::vector<QubitId> qubits;
    for (int i = 0; i < m; ++i) {
        qubits.push_back(QubitId::photon(photon_label(0, i)));
    }
    if (static_cast<std::size_t>(m) > max_qubits()) {
        throw CapacityError("GHZ state exceeds the qubit cap");
    }
    std::vector<cplx> amps(std::size_t{1} << m, cplx{0.0});
    amps.front() = std::numbers::sqrt2 / 2.0;
    amps.back() = sign * std::numbers::sqrt2 / 2.0;
    return StateVector(std::move(qubits), std::move(amps));
}

StateVector cghz(const CghzLabel &label) {
    const int n = label.n;
    const int m = label.m;
    validate_shape(n, m);
    const auto total = static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
    if (total > max_qubits()) {
        throw CapacityError("C-GHZ state of " + std::to_string(total) +
                            " photons exceeds the qubit cap of " +
                            std::to_string(max_qubits()));
    }
    std::vector<QubitId> qubits;
    qubits.reserve(total);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            qubits.push_back(QubitId::photon(photon_label(j, i)));
        }
    }
    std::vector<cplx> amps(std::size_t{1} << total, cplx{0.0});
    const double norm = std::pow(2.0, -(n + 1) / 2.0);
    const std::size_t block = (std::size_t{1} << m) - 1;
    // Only product terms with every block all-L or all-R survive.
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
        const int weight = std::popcount(c);
        const int branch = 1 + label.sign * (weight % 2 ? -1 : 1);
        if (branch == 0) {
            continue;
        }
        const int flips = std::popcount(c & label.pattern);
        const double sgn = flips % 2 ? -1.0 : 1.0;
        std::size_t index = 0;
        for (int j = 0; j < n; ++j) {
            if ((c >> j) & 1U) {
                index |= block << (static_cast<std::size_t>(j) * m);
            }
        }
        amps[index] = sgn * norm * branch;
    }
    return StateVector(std::move(qubits), std::move(amps));
}

std::vector<CghzLabel> enumerate_labels(int n, int m) {
    validate_shape(n, m);
    std::vector<CghzLabel> out;
    const std::uint64_t groups = std::uint64_t{1} << (n - 1);
    out.reserve(2 * groups);
    for (std::uint64_t k = 1; k <= groups; ++k) {
        out.push_back(CghzLabel::from_k(n, m, k, 1));
        out.push_back(CghzLabel::from_k(n, m, k, -1));
    }
    return out;
}

} // namespace cghz
