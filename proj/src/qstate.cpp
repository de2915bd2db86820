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

#include "cghz/qstate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <unordered_set>

#include "cghz/error.hpp"

namespace cghz {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kUnitaryTol = 1e-10;
constexpr double kPureTol = 1e-10;

std::size_t initial_cap() {
    if (const char *env = std::getenv("CGHZ_MAX_QUBITS")) {
        char *end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 63) {
            return v;
        }
    }
    return 26;
}

std::atomic<std::size_t> &cap_storage() {
    static std::atomic<std::size_t> cap{initial_cap()};
    return cap;
}

void check_cap(std::size_t n) {
    if (n > max_qubits()) {
        throw CapacityError("register of " + std::to_string(n) +
                            " qubits exceeds the cap of " +
                            std::to_string(max_qubits()));
    }
}

bool is_unitary(const Matrix2 &u) {
    // U^dagger U == I
    const cplx a = std::conj(u[0]) * u[0] + std::conj(u[2]) * u[2];
    const cplx b = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
    const cplx d = std::conj(u[1]) * u[1] + std::conj(u[3]) * u[3];
    return std::abs(a - 1.0) < kUnitaryTol && std::abs(b) < kUnitaryTol &&
           std::abs(d - 1.0) < kUnitaryTol;
}

} // namespace

std::size_t max_qubits() { return cap_storage().load(); }

void set_max_qubits(std::size_t n) {
    if (n == 0 || n >= 63) {
        throw InvalidArgument("qubit cap must lie in [1, 62]");
    }
    cap_storage().store(n);
}

namespace gates {

Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

Matrix2 hadamard() {
    const double s = std::numbers::sqrt2 / 2.0;
    return {s, s, s, -s};
}

Matrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }

} // namespace gates

StateVector::StateVector(std::vector<QubitId> qubits, std::vector<cplx> amps)
    : qubits_(std::move(qubits)), amps_(std::move(amps)) {
    check_cap(qubits_.size());
    std::unordered_set<std::string> seen;
    for (const auto &q : qubits_) {
        if (!seen.insert(q.label).second) {
            throw InvalidArgument("duplicate qubit label '" + q.label + "'");
        }
    }
    if (amps_.size() != (std::size_t{1} << qubits_.size())) {
        throw InvalidArgument("amplitude count does not match register size");
    }
    if (std::abs(norm() - 1.0) > kNormTol) {
        throw InvalidArgument("state vector is not normalized");
    }
}

bool StateVector::contains(std::string_view label) const {
    return std::any_of(qubits_.begin(), qubits_.end(),
                       [&](const QubitId &q) { return q.label == label; });
}

std::size_t StateVector::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < qubits_.size(); ++i) {
        if (qubits_[i].label == label) {
            return i;
        }
    }
    throw InvalidArgument("unknown qubit '" + std::string(label) + "'");
}

void StateVector::apply_1q(std::string_view q, const Matrix2 &u) {
    const std::size_t pos = index_of(q);
    if (!is_unitary(u)) {
        throw InvalidArgument("single-qubit matrix is not unitary");
    }
    kernels::omp::apply_1q(amps_, pos, u);
}

void StateVector::apply_diag2(std::string_view q1, std::string_view q2,
                              const Diag4 &d) {
    const std::size_t p1 = index_of(q1);
    const std::size_t p2 = index_of(q2);
    if (p1 == p2) {
        throw InvalidArgument("two-qubit gate on aliased qubits");
    }
    bool unimodular = true;
    for (const auto &x : d) {
        const double mag = std::abs(x);
        if (mag == 0.0 || mag > 1.0 + kUnitaryTol) {
            throw InvalidArgument("diagonal entries must have modulus in (0, 1]");
        }
        unimodular = unimodular && std::abs(mag - 1.0) < kUnitaryTol;
    }
    kernels::omp::apply_diag2(amps_, p1, p2, d);
    if (!unimodular) {
        const double n = std::sqrt(kernels::omp::norm_sq(amps_));
        kernels::omp::scale(amps_, 1.0 / n);
    }
}

double StateVector::prob_one(std::string_view q) const {
    return std::clamp(kernels::omp::prob_one(amps_, index_of(q)), 0.0, 1.0);
}

MeasurementRecord StateVector::collapse_to(std::size_t pos, int outcome,
                                           double p1) {
    const double p = outcome ? p1 : 1.0 - p1;
    kernels::omp::collapse(amps_, pos, outcome, 1.0 / std::sqrt(p));
    // Rescale away the rounding left by 1 - p1 and by pruning.
    kernels::omp::scale(amps_, 1.0 / std::sqrt(kernels::omp::norm_sq(amps_)));
    return {qubits_[pos], outcome, p};
}

MeasurementRecord StateVector::measure(std::string_view q, Rng &rng) {
    const std::size_t pos = index_of(q);
    const double p1 = std::clamp(kernels::omp::prob_one(amps_, pos), 0.0, 1.0);
    const int outcome = rng.uniform() < p1 ? 1 : 0;
    return collapse_to(pos, outcome, p1);
}

MeasurementRecord StateVector::postselect(std::string_view q, int outcome) {
    const std::size_t pos = index_of(q);
    const double p1 = std::clamp(kernels::omp::prob_one(amps_, pos), 0.0, 1.0);
    const double p = outcome ? p1 : 1.0 - p1;
    if (p <= kNormTol) {
        throw UnreachableOutcome("outcome " + std::to_string(outcome) +
                                 " of qubit '" + std::string(q) +
                                 "' has zero probability");
    }
    return collapse_to(pos, outcome, p1);
}

void StateVector::drop_qubit(std::string_view q) {
    const std::size_t pos = index_of(q);
    const double p1 = std::clamp(kernels::omp::prob_one(amps_, pos), 0.0, 1.0);
    int value = 0;
    if (p1 <= kPureTol) {
        value = 0;
    } else if (1.0 - p1 <= kPureTol) {
        value = 1;
    } else {
        throw InvalidArgument("qubit '" + std::string(q) +
                              "' is not in a basis state and cannot be dropped");
    }
    const std::size_t half = amps_.size() / 2;
    const std::size_t lo_mask = (std::size_t{1} << pos) - 1;
    std::vector<cplx> out(half);
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t src = ((k & ~lo_mask) << 1U) |
                                (static_cast<std::size_t>(value) << pos) |
                                (k & lo_mask);
        out[k] = amps_[src];
    }
    amps_ = std::move(out);
    qubits_.erase(qubits_.begin() + static_cast<std::ptrdiff_t>(pos));
    const double n = std::sqrt(kernels::omp::norm_sq(amps_));
    kernels::omp::scale(amps_, 1.0 / n);
}

MeasurementRecord StateVector::take_branch(std::size_t pos, int outcome,
                                           double p1) {
    const double p = outcome ? p1 : 1.0 - p1;
    const std::size_t half = amps_.size() / 2;
    const std::size_t lo_mask = (std::size_t{1} << pos) - 1;
    const std::size_t bit = static_cast<std::size_t>(outcome) << pos;
    const double floor = kernels::kPruneThreshold * kernels::kPruneThreshold * p;
    std::vector<cplx> out(half);
    for (std::size_t k = 0; k < half; ++k) {
        const cplx a = amps_[((k & ~lo_mask) << 1U) | bit | (k & lo_mask)];
        out[k] = std::norm(a) < floor ? cplx{0.0} : a;
    }
    kernels::omp::scale(out, 1.0 / std::sqrt(kernels::omp::norm_sq(out)));
    amps_ = std::move(out);
    MeasurementRecord rec{qubits_[pos], outcome, p};
    qubits_.erase(qubits_.begin() + static_cast<std::ptrdiff_t>(pos));
    return rec;
}

MeasurementRecord StateVector::measure_and_drop(std::string_view q, Rng &rng) {
    const std::size_t pos = index_of(q);
    const double p1 = std::clamp(kernels::omp::prob_one(amps_, pos), 0.0, 1.0);
    return take_branch(pos, rng.uniform() < p1 ? 1 : 0, p1);
}

MeasurementRecord StateVector::postselect_and_drop(std::string_view q,
                                                   int outcome) {
    const std::size_t pos = index_of(q);
    const double p1 = std::clamp(kernels::omp::prob_one(amps_, pos), 0.0, 1.0);
    if ((outcome ? p1 : 1.0 - p1) <= kNormTol) {
        throw UnreachableOutcome("outcome " + std::to_string(outcome) +
                                 " of qubit '" + std::string(q) +
                                 "' has zero probability");
    }
    return take_branch(pos, outcome, p1);
}

void StateVector::add_qubit(QubitId q, int bit) {
    if (contains(q.label)) {
        throw InvalidArgument("duplicate qubit label '" + q.label + "'");
    }
    if (bit != 0 && bit != 1) {
        throw InvalidArgument("basis bit must be 0 or 1");
    }
    check_cap(qubits_.size() + 1);
    const std::size_t old = amps_.size();
    amps_.resize(old * 2, cplx{0.0});
    if (bit == 1) {
        std::copy(amps_.begin(), amps_.begin() + static_cast<std::ptrdiff_t>(old),
                  amps_.begin() + static_cast<std::ptrdiff_t>(old));
        std::fill(amps_.begin(), amps_.begin() + static_cast<std::ptrdiff_t>(old),
                  cplx{0.0});
    }
    qubits_.push_back(std::move(q));
}

double StateVector::norm() const {
    return std::sqrt(kernels::omp::norm_sq(amps_));
}

StateVector init_register(std::vector<QubitId> qubits, std::string_view bits) {
    if (bits.size() != qubits.size()) {
        throw InvalidArgument("bitstring length does not match register size");
    }
    check_cap(qubits.size());
    std::size_t index = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            index |= std::size_t{1} << i;
        } else if (bits[i] != '0') {
            throw InvalidArgument("bitstring must contain only '0' and '1'");
        }
    }
    std::vector<cplx> amps(std::size_t{1} << qubits.size(), cplx{0.0});
    amps[index] = 1.0;
    return StateVector(std::move(qubits), std::move(amps));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<QubitId> qubits = a.qubits();
    qubits.insert(qubits.end(), b.qubits().begin(), b.qubits().end());
    check_cap(qubits.size());
    const auto aa = a.amplitudes();
    const auto bb = b.amplitudes();
    std::vector<cplx> amps(aa.size() * bb.size());
    for (std::size_t j = 0; j < bb.size(); ++j) {
        for (std::size_t i = 0; i < aa.size(); ++i) {
            amps[j * aa.size() + i] = aa[i] * bb[j];
        }
    }
    return StateVector(std::move(qubits), std::move(amps));
}

cplx overlap(const StateVector &a, const StateVector &b) {
    if (a.qubits() != b.qubits()) {
        throw InvalidArgument("overlap of states on different registers");
    }
    return kernels::omp::inner(a.amplitudes(), b.amplitudes());
}

} // namespace cghz
