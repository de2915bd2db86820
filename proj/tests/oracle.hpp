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

// Independent dense-vector constructions used as test oracles. Nothing here
// calls into the library's state builders or gate kernels.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Vec = std::vector<cplx>;

inline const double kR = 1.0 / std::sqrt(2.0);

/// lo (x) hi with lo's qubits in the low bits.
inline Vec kron(const Vec &lo, const Vec &hi) {
    Vec out(lo.size() * hi.size());
    for (std::size_t j = 0; j < hi.size(); ++j) {
        for (std::size_t i = 0; i < lo.size(); ++i) {
            out[i + lo.size() * j] = lo[i] * hi[j];
        }
    }
    return out;
}

/// Product state from a string over {L, R} (or {0, 1}); character i is qubit i.
inline Vec ket(const std::string &bits) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == 'R' || bits[i] == '1') {
            index |= std::size_t{1} << i;
        }
    }
    Vec v(std::size_t{1} << bits.size(), 0.0);
    v[index] = 1.0;
    return v;
}

inline Vec add(const Vec &a, const Vec &b, cplx cb = 1.0) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + cb * b[i];
    }
    return out;
}

inline Vec scaled(Vec v, cplx c) {
    for (auto &x : v) {
        x *= c;
    }
    return v;
}

inline cplx dot(const Vec &a, const Vec &b) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

inline Vec ghz(int sign, int m) {
    return scaled(add(ket(std::string(m, 'L')), ket(std::string(m, 'R')),
                      static_cast<double>(sign)),
                  kR);
}

/// (1/sqrt2)(GHZ^{s_1}..GHZ^{s_N} + sign GHZ^{-s_1}..GHZ^{-s_N}), s_j = -
/// when bit j of `pattern` is set.
inline Vec cghz(int n, int m, std::uint64_t pattern, int sign) {
    Vec first{1.0};
    Vec second{1.0};
    for (int j = 0; j < n; ++j) {
        const int s = ((pattern >> j) & 1U) ? -1 : 1;
        first = kron(first, ghz(s, m));
        second = kron(second, ghz(-s, m));
    }
    return scaled(add(first, second, static_cast<double>(sign)), kR);
}

/// Dense Hadamard on qubit q, written out from the 2x2 definition.
inline Vec hadamard(const Vec &v, int q) {
    Vec out(v.size(), 0.0);
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const bool one = (i & mask) != 0;
        out[i & ~mask] += kR * v[i];
        out[i | mask] += (one ? -kR : kR) * v[i];
    }
    return out;
}

/// Three-photon pair (|s1> + rel |s2>) on one row of a 3x2 register,
/// spread onto the positions of that row (row 0: qubits 0, 2, 4).
struct RowTerm {
    std::string s1;
    std::string s2;
    int rel;
};

/// Joint photon-atom state of the first C-GHZ group (N = 3, m = 2) after the
/// four step-1 interactions, assembled term by term. Qubits 0..5 are
/// a1 a2 b1 b2 c1 c2 and qubits 6..9 are the atoms in the order 1, 1_2, 2,
/// 2_2. atoms[k] is the sign of g_R in the factor (g_L + atoms[k] g_R).
/// `phase` is the overall factor of each term; the last two pick up -1 from
/// the two odd-parity pairs. With with_phase = false every term enters with +1.
inline Vec first_group_after_interaction(int sign, bool with_phase = true) {
    struct Term {
        RowTerm row;
        int atoms[4];
        int phase;
    };
    const Term terms[4] = {
        {{"LLL", "RRR", sign}, {-1, -1, -1, -1}, 1},
        {{"LRL", "RLR", sign}, {1, 1, 1, 1}, 1},
        {{"LLR", "RRL", -sign}, {-1, -1, 1, 1}, -1},
        {{"LRR", "RLL", -sign}, {1, 1, -1, -1}, -1},
    };
    auto row_coef = [](const RowTerm &t, const char c[3]) -> double {
        const std::string s(c, 3);
        return (s == t.s1 ? 1.0 : 0.0) + (s == t.s2 ? t.rel : 0.0);
    };
    Vec out(std::size_t{1} << 10, 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const char row1[3] = {(i & 1) ? 'R' : 'L', (i & 4) ? 'R' : 'L',
                              (i & 16) ? 'R' : 'L'};
        const char row2[3] = {(i & 2) ? 'R' : 'L', (i & 8) ? 'R' : 'L',
                              (i & 32) ? 'R' : 'L'};
        cplx amp = 0.0;
        for (const auto &t : terms) {
            double a = row_coef(t.row, row1) * row_coef(t.row, row2) *
                       (with_phase ? t.phase : 1);
            for (int k = 0; k < 4; ++k) {
                a *= ((i >> (6 + k)) & 1U) ? t.atoms[k] : 1.0;
            }
            amp += a;
        }
        out[i] = amp / 16.0;
    }
    return out;
}

} // namespace oracle
