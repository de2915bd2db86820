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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "cghz/error.hpp"
#include "cghz/states.hpp"
#include "oracle.hpp"

namespace {

using cghz::CghzLabel;
using oracle::kR;

oracle::Vec amps_of(const cghz::StateVector &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

void expect_same_state(const oracle::Vec &a, const oracle::Vec &b, double tol = 1e-12) {
    ASSERT_EQ(a.size(), b.size());
    EXPECT_NEAR(std::abs(oracle::dot(a, b)), 1.0, tol);
}

oracle::Vec bell_vec(char kind) {
    switch (kind) {
    case '+': return oracle::scaled(oracle::add(oracle::ket("LL"), oracle::ket("RR")), kR);
    case '-': return oracle::scaled(oracle::add(oracle::ket("LL"), oracle::ket("RR"), -1.0), kR);
    default: return oracle::scaled(oracle::add(oracle::ket("LR"), oracle::ket("RL")), kR);
    }
}

// Three logic Bell pairs in register order A, B, C.
oracle::Vec abc(const char *first, const char *second, int sign) {
    auto one = oracle::kron(oracle::kron(bell_vec(first[0]), bell_vec(first[1])),
                            bell_vec(first[2]));
    auto two = oracle::kron(oracle::kron(bell_vec(second[0]), bell_vec(second[1])),
                            bell_vec(second[2]));
    return oracle::scaled(oracle::add(one, two, static_cast<double>(sign)), kR);
}

TEST(Bell, Amplitudes) {
    const auto pp = cghz::bell(cghz::BellKind::phi_plus);
    EXPECT_NEAR(pp.amplitude(0).real(), kR, 1e-15);
    EXPECT_NEAR(pp.amplitude(3).real(), kR, 1e-15);
    const auto sp = cghz::bell(cghz::BellKind::psi_plus);
    EXPECT_NEAR(sp.amplitude(1).real(), kR, 1e-15);
    EXPECT_NEAR(sp.amplitude(2).real(), kR, 1e-15);
    const auto sm = cghz::bell(cghz::BellKind::psi_minus);
    // (|LR> - |RL>)/sqrt2 with a1 on the low bit: |LR> sits at index 2.
    EXPECT_NEAR(sm.amplitude(2).real(), kR, 1e-15);
    EXPECT_NEAR(sm.amplitude(1).real(), -kR, 1e-15);
    EXPECT_NEAR(std::abs(cghz::overlap(pp, cghz::bell(cghz::BellKind::phi_minus))),
                0.0, 1e-15);
}

TEST(Bell, HalfWavePlateImages) {
    auto pm = cghz::bell(cghz::BellKind::phi_minus);
    pm.apply_1q("a1", cghz::gates::hadamard());
    pm.apply_1q("a2", cghz::gates::hadamard());
    EXPECT_NEAR(std::abs(cghz::overlap(cghz::bell(cghz::BellKind::psi_plus), pm) - 1.0),
                0.0, 1e-12);
    auto pp = cghz::bell(cghz::BellKind::phi_plus);
    pp.apply_1q("a1", cghz::gates::hadamard());
    pp.apply_1q("a2", cghz::gates::hadamard());
    EXPECT_NEAR(std::abs(cghz::overlap(cghz::bell(cghz::BellKind::phi_plus), pp) - 1.0),
                0.0, 1e-12);
}

TEST(Ghz, Definition) {
    const auto g = cghz::ghz(-1, 3);
    EXPECT_NEAR(g.amplitude(0).real(), kR, 1e-15);
    EXPECT_NEAR(g.amplitude(7).real(), -kR, 1e-15);
    EXPECT_EQ(g.qubits()[2].label, "a3");
    const auto p2 = cghz::ghz(1, 2);
    EXPECT_NEAR(std::abs(cghz::overlap(p2, cghz::bell(cghz::BellKind::phi_plus)) - 1.0),
                0.0, 1e-15);
    for (int m = 2; m <= 10; ++m) {
        EXPECT_NEAR(cghz::ghz(1, m).norm(), 1.0, 1e-12);
    }
    EXPECT_THROW(cghz::ghz(1, 1), cghz::InvalidArgument);
}

TEST(Cghz, RegisterLayout) {
    const auto s = cghz::cghz(CghzLabel::from_k(3, 2, 1, 1));
    const char *expect[] = {"a1", "a2", "b1", "b2", "c1", "c2"};
    ASSERT_EQ(s.num_qubits(), 6u);
    for (int i = 0; i < 6; ++i) {
        EXPECT_EQ(s.qubits()[static_cast<std::size_t>(i)].label, expect[i]);
        EXPECT_EQ(s.qubits()[static_cast<std::size_t>(i)].kind, cghz::QubitKind::photon);
    }
}

TEST(Cghz, ThreeQubitListing) {
    for (int sign : {1, -1}) {
        expect_same_state(amps_of(cghz::cghz(CghzLabel::from_k(3, 2, 1, sign))),
                          abc("+++", "---", sign));
        expect_same_state(amps_of(cghz::cghz(CghzLabel::from_k(3, 2, 2, sign))),
                          abc("-++", "+--", sign));
        expect_same_state(amps_of(cghz::cghz(CghzLabel::from_k(3, 2, 3, sign))),
                          abc("+-+", "-+-", sign));
        expect_same_state(amps_of(cghz::cghz(CghzLabel::from_k(3, 2, 4, sign))),
                          abc("++-", "--+", sign));
    }
}

TEST(Cghz, FirstGroupSignIsExact) {
    const auto plus = amps_of(cghz::cghz(CghzLabel::from_k(3, 2, 1, 1)));
    EXPECT_NEAR(std::abs(oracle::dot(abc("+++", "---", 1), plus) - 1.0), 0.0, 1e-12);
}

TEST(Cghz, ComplementRepresentativeSharesGroup) {
    // b = 011 is the complement of 100, the pattern of group 2.
    const auto label = CghzLabel::from_pattern(3, 2, 0b110, 1);
    EXPECT_EQ(label.k(), 2u);
    EXPECT_EQ(label.pattern, 0b110u);
    const auto flipped = CghzLabel::from_pattern(3, 2, 0b001, 1);
    EXPECT_EQ(flipped, label);
}

TEST(Cghz, GroupEndpointsForAnyN) {
    for (int n = 2; n <= 6; ++n) {
        const auto second = CghzLabel::from_k(n, 2, 2, 1);
        // (-,+,...,+) up to complement.
        EXPECT_EQ(second, CghzLabel::from_pattern(n, 2, 1, 1)) << "n=" << n;
        const auto last = CghzLabel::from_k(n, 2, std::uint64_t{1} << (n - 1), 1);
        EXPECT_EQ(last, CghzLabel::from_pattern(n, 2, std::uint64_t{1} << (n - 1), 1))
            << "n=" << n;
    }
}

TEST(Cghz, MatchesKroneckerOracle) {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 2; m <= 3; ++m) {
            for (const auto &label : cghz::enumerate_labels(n, m)) {
                const auto got = amps_of(cghz::cghz(label));
                const auto want = oracle::cghz(n, m, label.pattern, label.sign);
                ASSERT_EQ(got.size(), want.size());
                for (std::size_t i = 0; i < got.size(); ++i) {
                    ASSERT_NEAR(std::abs(got[i] - want[i]), 0.0, 1e-14)
                        << label.text() << " n=" << n << " m=" << m << " i=" << i;
                }
            }
        }
    }
}

TEST(Cghz, BellTensorConsistency) {
    for (const auto &label : cghz::enumerate_labels(3, 2)) {
        oracle::Vec first{1.0};
        oracle::Vec second{1.0};
        for (int j = 0; j < 3; ++j) {
            const bool minus = label.bit(j);
            const auto a = cghz::bell(minus ? cghz::BellKind::phi_minus
                                            : cghz::BellKind::phi_plus);
            const auto b = cghz::bell(minus ? cghz::BellKind::phi_plus
                                            : cghz::BellKind::phi_minus);
            first = oracle::kron(first, amps_of(a));
            second = oracle::kron(second, amps_of(b));
        }
        const auto want = oracle::scaled(
            oracle::add(first, second, static_cast<double>(label.sign)), kR);
        EXPECT_NEAR(std::abs(oracle::dot(want, amps_of(cghz::cghz(label))) - 1.0), 0.0,
                    1e-12);
    }
}

TEST(Cghz, GramMatrixIsIdentity) {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 2; m <= 3; ++m) {
            std::vector<cghz::StateVector> states;
            for (const auto &label : cghz::enumerate_labels(n, m)) {
                states.push_back(cghz::cghz(label));
            }
            for (std::size_t i = 0; i < states.size(); ++i) {
                for (std::size_t j = 0; j < states.size(); ++j) {
                    const auto g = cghz::overlap(states[i], states[j]);
                    EXPECT_NEAR(std::abs(g - (i == j ? 1.0 : 0.0)), 0.0, 1e-12);
                }
            }
        }
    }
}

TEST(Cghz, CapacityEnforced) {
    const auto saved = cghz::max_qubits();
    cghz::set_max_qubits(8);
    EXPECT_THROW(cghz::cghz(CghzLabel::from_k(3, 3, 1, 1)), cghz::CapacityError);
    cghz::set_max_qubits(saved);
}

TEST(Labels, Enumeration) {
    EXPECT_EQ(cghz::enumerate_labels(2, 2).size(), 4u);
    const auto three = cghz::enumerate_labels(3, 2);
    ASSERT_EQ(three.size(), 8u);
    const char *expect[] = {"1+", "1-", "2+", "2-", "3+", "3-", "4+", "4-"};
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(three[i].text(), expect[i]);
    }
    const auto five = cghz::enumerate_labels(5, 2);
    ASSERT_EQ(five.size(), 32u);
    std::set<std::pair<std::uint64_t, int>> seen;
    for (const auto &l : five) {
        EXPECT_EQ(l.pattern & 1U, 0u);
        seen.insert({l.pattern, l.sign});
    }
    EXPECT_EQ(seen.size(), 32u);
}

TEST(Labels, ParseRoundTrip) {
    for (int n = 2; n <= 5; ++n) {
        for (const auto &l : cghz::enumerate_labels(n, 3)) {
            EXPECT_EQ(CghzLabel::parse(l.text(), n, 3), l);
            EXPECT_EQ(CghzLabel::from_k(n, 3, l.k(), l.sign), l);
        }
    }
}

TEST(Labels, ParseErrors) {
    for (const char *bad : {"bogus", "", "1", "0+", "5+", "+1", "1+ ", "01+", "2*"}) {
        EXPECT_THROW(CghzLabel::parse(bad, 3, 2), cghz::InvalidArgument) << bad;
    }
}

TEST(Labels, ShapeValidation) {
    EXPECT_THROW(cghz::validate_shape(1, 2), cghz::InvalidArgument);
    EXPECT_THROW(cghz::validate_shape(2, 1), cghz::InvalidArgument);
    EXPECT_NO_THROW(cghz::validate_shape(2, 2));
}

} // namespace
