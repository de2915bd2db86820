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

#include <array>
#include <set>

#include <gtest/gtest.h>

#include "cghz/rng.hpp"

namespace {

TEST(Rng, SameSeedSameStream) {
    cghz::Rng a(42);
    cghz::Rng b(42);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(a.next_u64(), b.next_u64());
    }
}

TEST(Rng, UniformInUnitInterval) {
    cghz::Rng r(1);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 100000.0, 0.5, 0.005);
}

TEST(Rng, SplitIgnoresParentPosition) {
    cghz::Rng a(9);
    const cghz::Rng fresh(9);
    a.next_u64();
    a.next_u64();
    EXPECT_EQ(a.split(3).next_u64(), fresh.split(3).next_u64());
}

TEST(Rng, SplitStreamsDiffer) {
    const cghz::Rng base(0);
    std::set<std::uint64_t> firsts;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        firsts.insert(base.split(s).next_u64());
    }
    EXPECT_EQ(firsts.size(), 1000u);
}

TEST(Rng, BelowIsUniform) {
    cghz::Rng r(5);
    std::array<int, 6> counts{};
    for (int i = 0; i < 60000; ++i) {
        ++counts[r.below(6)];
    }
    for (int c : counts) {
        EXPECT_NEAR(c, 10000, 500);
    }
}

TEST(Rng, Splitmix64KnownValue) {
    // First output of the reference splitmix64 generator seeded with 0.
    EXPECT_EQ(cghz::splitmix64(0), 0xE220A8397B1DCDAFULL);
}

} // namespace
