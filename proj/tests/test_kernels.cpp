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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cghz/kernels.hpp"

namespace {

using cghz::cplx;
namespace serial = cghz::kernels::serial;
namespace omp = cghz::kernels::omp;

std::vector<cplx> random_state(std::size_t n, unsigned seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist;
    std::vector<cplx> v(std::size_t{1} << n);
    for (auto &x : v) {
        x = {dist(gen), dist(gen)};
    }
    serial::scale(v, 1.0 / std::sqrt(serial::norm_sq(v)));
    return v;
}

void expect_near(const std::vector<cplx> &a, const std::vector<cplx> &b,
                 double tol = 1e-13) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_NEAR(std::abs(a[i] - b[i]), 0.0, tol) << "index " << i;
    }
}

class KernelParity : public ::testing::TestWithParam<std::size_t> {};

TEST_P(KernelParity, Apply1qMatchesSerial) {
    const std::size_t n = GetParam();
    const double r = 1.0 / std::sqrt(2.0);
    const cghz::Matrix2 h{r, r, r, -r};
    const cghz::Matrix2 u{cplx{0.6, 0.0}, cplx{0.0, 0.8}, cplx{0.0, 0.8},
                          cplx{0.6, 0.0}};
    for (std::size_t q = 0; q < n; ++q) {
        for (const auto &m : {h, u}) {
            auto a = random_state(n, 7 + static_cast<unsigned>(q));
            auto b = a;
            serial::apply_1q(a, q, m);
            omp::apply_1q(b, q, m);
            expect_near(a, b);
        }
    }
}

TEST_P(KernelParity, Diag2MatchesSerial) {
    const std::size_t n = GetParam();
    const cghz::Diag4 d{cplx{-1, 0}, cplx{0, 1}, cplx{0, 1}, cplx{-1, 0}};
    auto a = random_state(n, 3);
    auto b = a;
    serial::apply_diag2(a, 0, n - 1, d);
    omp::apply_diag2(b, 0, n - 1, d);
    expect_near(a, b);
}

TEST_P(KernelParity, ReductionsMatchSerial) {
    const std::size_t n = GetParam();
    const auto a = random_state(n, 11);
    const auto b = random_state(n, 12);
    EXPECT_NEAR(serial::norm_sq(a), omp::norm_sq(a), 1e-12);
    EXPECT_NEAR(std::abs(serial::inner(a, b) - omp::inner(a, b)), 0.0, 1e-12);
    for (std::size_t q = 0; q < n; ++q) {
        EXPECT_NEAR(serial::prob_one(a, q), omp::prob_one(a, q), 1e-12);
    }
}

TEST_P(KernelParity, CollapseAndScaleMatchSerial) {
    const std::size_t n = GetParam();
    for (int outcome : {0, 1}) {
        auto a = random_state(n, 21);
        auto b = a;
        serial::collapse(a, 1, outcome, 1.7);
        omp::collapse(b, 1, outcome, 1.7);
        expect_near(a, b);
        serial::scale(a, 0.25);
        omp::scale(b, 0.25);
        expect_near(a, b);
    }
}

// 10 qubits stays below the parallel threshold, 16 crosses it.
INSTANTIATE_TEST_SUITE_P(Sizes, KernelParity, ::testing::Values(3u, 10u, 16u));

TEST(Kernels, CollapsePrunesTinyAmplitudes) {
    std::vector<cplx> v{cplx{1e-14, 0}, cplx{1.0, 0}, cplx{0.5, 0}, cplx{0.3, 0}};
    serial::collapse(v, 1, 0, 1.0);
    EXPECT_EQ(v[0], cplx{0.0});
    EXPECT_EQ(v[1], cplx{1.0});
    EXPECT_EQ(v[2], cplx{0.0});
    EXPECT_EQ(v[3], cplx{0.0});
}

TEST(Kernels, HadamardOnBasisState) {
    std::vector<cplx> v{1.0, 0.0, 0.0, 0.0};
    const double r = 1.0 / std::sqrt(2.0);
    omp::apply_1q(v, 1, {r, r, r, -r});
    EXPECT_NEAR(v[0].real(), r, 1e-15);
    EXPECT_NEAR(v[2].real(), r, 1e-15);
    EXPECT_EQ(v[1], cplx{0.0});
}

TEST(Kernels, OmpReductionIsBitReproducible) {
    const auto a = random_state(17, 5);
    const double first = omp::norm_sq(a);
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(first, omp::norm_sq(a));
    }
}

} // namespace
