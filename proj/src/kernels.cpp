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

#include "cghz/kernels.hpp"

#include <array>
#include <cstdint>


namespace cghz::kernels {

namespace serial {

void apply_1q(std::span<cplx> amps, std::size_t target, const Matrix2 &u) {
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) {
            continue;
        }
        const cplx a0 = amps[i];
        const cplx a1 = amps[i | mask];
        amps[i] = u[0] * a0 + u[1] * a1;
        amps[i | mask] = u[2] * a0 + u[3] * a1;
    }
}

void apply_diag2(std::span<cplx> amps, std::size_t q1, std::size_t q2,
                 const Diag4 &d) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const std::size_t k = ((i >> q1) & 1U) | (((i >> q2) & 1U) << 1U);
        amps[i] *= d[k];
    }
}

double prob_one(std::span<const cplx> amps, std::size_t target) {
    const std::size_t mask = std::size_t{1} << target;
    double p = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

void collapse(std::span<cplx> amps, std::size_t target, int outcome,
              double scale) {
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t keep = outcome ? mask : 0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) != keep) {
            amps[i] = 0.0;
            continue;
        }
        amps[i] *= scale;
        if (std::norm(amps[i]) < kPruneThreshold * kPruneThreshold) {
            amps[i] = 0.0;
        }
    }
}

double norm_sq(std::span<const cplx> amps) {
    double s = 0.0;
    for (const auto &a : amps) {
        s += std::norm(a);
    }
    return s;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

void scale(std::span<cplx> amps, double factor) {
    for (auto &a : amps) {
        a *= factor;
    }
}

} // namespace serial

namespace omp {

namespace {

constexpr std::size_t kBlocks = 64;

// Plain complex product, without the inf/nan recovery of operator*.
inline cplx mul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

inline std::size_t insert_zero_bit(std::size_t i, std::size_t bit) {
    const std::size_t lo = i & ((std::size_t{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | lo;
}

// Sum f(begin, end) over kBlocks contiguous blocks, combined in block order.
template <typename T, typename F>
T block_reduce(std::size_t len, F &&f) {
    std::array<T, kBlocks> partial{};
    const auto nblocks = static_cast<std::int64_t>(kBlocks);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::size_t begin = len * static_cast<std::size_t>(b) / kBlocks;
        const std::size_t end = len * static_cast<std::size_t>(b + 1) / kBlocks;
        partial[static_cast<std::size_t>(b)] = f(begin, end);
    }
    T total{};
    for (const auto &p : partial) {
        total += p;
    }
    return total;
}

} // namespace

void apply_1q(std::span<cplx> amps, std::size_t target, const Matrix2 &u) {
    const std::size_t mask = std::size_t{1} << target;
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    cplx *data = amps.data();
    const bool real = u[0].imag() == 0.0 && u[1].imag() == 0.0 &&
                      u[2].imag() == 0.0 && u[3].imag() == 0.0;
    if (real) {
        const double u0 = u[0].real();
        const double u1 = u[1].real();
        const double u2 = u[2].real();
        const double u3 = u[3].real();
        auto *raw = reinterpret_cast<double *>(data);
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
        for (std::int64_t k = 0; k < half; ++k) {
            const std::size_t i0 =
                2 * insert_zero_bit(static_cast<std::size_t>(k), target);
            const std::size_t i1 = i0 + 2 * mask;
            const double r0 = raw[i0];
            const double m0 = raw[i0 + 1];
            const double r1 = raw[i1];
            const double m1 = raw[i1 + 1];
            raw[i0] = u0 * r0 + u1 * r1;
            raw[i0 + 1] = u0 * m0 + u1 * m1;
            raw[i1] = u2 * r0 + u3 * r1;
            raw[i1 + 1] = u2 * m0 + u3 * m1;
        }
        return;
    }
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(k), target);
        const std::size_t i1 = i0 | mask;
        const cplx a0 = data[i0];
        const cplx a1 = data[i1];
        data[i0] = mul(u[0], a0) + mul(u[1], a1);
        data[i1] = mul(u[2], a0) + mul(u[3], a1);
    }
}

void apply_diag2(std::span<cplx> amps, std::size_t q1, std::size_t q2,
                 const Diag4 &d) {
    const auto len = static_cast<std::int64_t>(amps.size());
    cplx *data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t s = 0; s < len; ++s) {
        const auto i = static_cast<std::size_t>(s);
        data[i] = mul(data[i], d[((i >> q1) & 1U) | (((i >> q2) & 1U) << 1U)]);
    }
}

double prob_one(std::span<const cplx> amps, std::size_t target) {
    if (amps.size() < kParallelThreshold) {
        return serial::prob_one(amps, target);
    }
    const std::size_t mask = std::size_t{1} << target;
    return block_reduce<double>(amps.size(), [&](std::size_t b, std::size_t e) {
        double p = 0.0;
        for (std::size_t i = b; i < e; ++i) {
            if (i & mask) {
                p += std::norm(amps[i]);
            }
        }
        return p;
    });
}

void collapse(std::span<cplx> amps, std::size_t target, int outcome,
              double scale) {
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t keep = outcome ? mask : 0;
    const auto len = static_cast<std::int64_t>(amps.size());
    cplx *data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t s = 0; s < len; ++s) {
        const auto i = static_cast<std::size_t>(s);
        if ((i & mask) != keep) {
            data[i] = 0.0;
            continue;
        }
        data[i] *= scale;
        if (std::norm(data[i]) < kPruneThreshold * kPruneThreshold) {
            data[i] = 0.0;
        }
    }
}

double norm_sq(std::span<const cplx> amps) {
    if (amps.size() < kParallelThreshold) {
        return serial::norm_sq(amps);
    }
    return block_reduce<double>(amps.size(), [&](std::size_t b, std::size_t e) {
        double s = 0.0;
        for (std::size_t i = b; i < e; ++i) {
            s += std::norm(amps[i]);
        }
        return s;
    });
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() < kParallelThreshold) {
        return serial::inner(a, b);
    }
    return block_reduce<cplx>(a.size(), [&](std::size_t lo, std::size_t hi) {
        cplx s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            s += std::conj(a[i]) * b[i];
        }
        return s;
    });
}

void scale(std::span<cplx> amps, double factor) {
    const auto len = static_cast<std::int64_t>(amps.size());
    cplx *data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t s = 0; s < len; ++s) {
        data[s] *= factor;
    }
}

} // namespace omp

} // namespace cghz::kernels
