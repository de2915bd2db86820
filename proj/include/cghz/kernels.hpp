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
 * Amplitude kernels for dense state vectors.
 *
 * Every kernel exists twice: a plain serial loop kept as the reference
 * implementation, and an OpenMP version used by StateVector. Both operate
 * on a span of 2^n amplitudes where qubit q addresses bit q of the index
 * (least-significant bit first).
 *
 * Reductions in the OpenMP path are summed over a fixed number of blocks
 * and combined in block order, so results do not depend on the thread count.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace cghz {

using cplx = std::complex<double>;

/// Row-major 2x2 matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<cplx, 4>;

/// Diagonal of a two-qubit gate indexed by bit(q1) + 2 * bit(q2).
using Diag4 = std::array<cplx, 4>;

namespace kernels {

/// Amplitude count below which the OpenMP kernels stay on one thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// Amplitudes whose magnitude falls below this after a collapse are set to 0.
inline constexpr double kPruneThreshold = 1e-12;

namespace serial {

void apply_1q(std::span<cplx> amps, std::size_t target, const Matrix2 &u);
void apply_diag2(std::span<cplx> amps, std::size_t q1, std::size_t q2,
                 const Diag4 &d);
double prob_one(std::span<const cplx> amps, std::size_t target);
void collapse(std::span<cplx> amps, std::size_t target, int outcome,
              double scale);
double norm_sq(std::span<const cplx> amps);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
void scale(std::span<cplx> amps, double factor);

} // namespace serial

namespace omp {

void apply_1q(std::span<cplx> amps, std::size_t target, const Matrix2 &u);
void apply_diag2(std::span<cplx> amps, std::size_t q1, std::size_t q2,
                 const Diag4 &d);
double prob_one(std::span<const cplx> amps, std::size_t target);
void collapse(std::span<cplx> amps, std::size_t target, int outcome,
              double scale);
double norm_sq(std::span<const cplx> amps);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
void scale(std::span<cplx> amps, double factor);

} // namespace omp

} // namespace kernels
} // namespace cghz
