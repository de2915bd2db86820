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
 * Dense state vector over a register of labeled two-level systems.
 *
 * Basis convention: bit value 0 is |L> for a photon and |g_L> for an atom,
 * bit value 1 is |R> or |g_R>. Qubit i of the register addresses bit i of
 * the amplitude index, least-significant first, so for the register
 * [a1, a2] the amplitude of |a1=0, a2=1> sits at index 2. Newly added
 * qubits take the next higher bit.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cghz/kernels.hpp"
#include "cghz/rng.hpp"

namespace cghz {

enum class QubitKind { photon, atom };

struct QubitId {
    QubitKind kind;
    std::string label;

    static QubitId photon(std::string label) {
        return {QubitKind::photon, std::move(label)};
    }
    static QubitId atom(std::string label) {
        return {QubitKind::atom, std::move(label)};
    }

    friend bool operator==(const QubitId &, const QubitId &) = default;
};

struct MeasurementRecord {
    QubitId qubit;
    int outcome;
    /// Born probability of `outcome` before the collapse.
    double probability;
};

/// Largest register a StateVector may hold. Defaults to 26; the
/// CGHZ_MAX_QUBITS environment variable overrides it at first use.
std::size_t max_qubits();
void set_max_qubits(std::size_t n);

namespace gates {
Matrix2 identity();
/// Half-wave plate: |L> -> (|L>+|R>)/sqrt2, |R> -> (|L>-|R>)/sqrt2.
Matrix2 hadamard();
/// Bit flip |L> <-> |R>.
Matrix2 pauli_x();
} // namespace gates

class StateVector {
  public:
    /// Takes ownership of `amps`. Throws if the length is not 2^|qubits|,
    /// labels repeat, the cap is exceeded, or the norm is off by > 1e-12.
    StateVector(std::vector<QubitId> qubits, std::vector<cplx> amps);

    const std::vector<QubitId> &qubits() const { return qubits_; }
    std::size_t num_qubits() const { return qubits_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    cplx amplitude(std::size_t index) const { return amps_.at(index); }

    bool contains(std::string_view label) const;
    /// Register position of `label`; throws InvalidArgument if absent.
    std::size_t index_of(std::string_view label) const;

    void apply_1q(std::string_view q, const Matrix2 &u);

    /// Multiplies every amplitude by d[bit(q1) + 2 * bit(q2)]. A diagonal
    /// with entries of modulus below one acts as a conditioned (lossy) gate
    /// and the result is renormalized.
    void apply_diag2(std::string_view q1, std::string_view q2, const Diag4 &d);

    /// Born-rule measurement in the {0, 1} basis. The state collapses and is
    /// renormalized; amplitudes below 1e-12 are pruned to zero.
    MeasurementRecord measure(std::string_view q, Rng &rng);

    /// Forces `outcome`; throws UnreachableOutcome if its probability is 0.
    MeasurementRecord postselect(std::string_view q, int outcome);

    double prob_one(std::string_view q) const;

    /// Removes a qubit whose marginal is a basis state within 1e-10.
    void drop_qubit(std::string_view q);

    /// measure() followed by drop_qubit(), in a single pass over the state.
    MeasurementRecord measure_and_drop(std::string_view q, Rng &rng);
    MeasurementRecord postselect_and_drop(std::string_view q, int outcome);

    /// Appends a qubit prepared in |bit> as the new highest index bit.
    void add_qubit(QubitId q, int bit = 0);

    double norm() const;

  private:
    MeasurementRecord collapse_to(std::size_t pos, int outcome, double p1);
    MeasurementRecord take_branch(std::size_t pos, int outcome, double p1);

    std::vector<QubitId> qubits_;
    std::vector<cplx> amps_;
};

/// Computational basis state |bits>, where bits[i] is the value of qubits[i].
StateVector init_register(std::vector<QubitId> qubits, std::string_view bits);

/// a (x) b; the qubits of `b` follow those of `a` in the register.
StateVector tensor(const StateVector &a, const StateVector &b);

/// <a|b>. Registers must match label-for-label.
cplx overlap(const StateVector &a, const StateVector &b);

} // namespace cghz
