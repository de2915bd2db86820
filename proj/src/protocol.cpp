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

#include "cghz/protocol.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <tuple>

#include "cghz/error.hpp"

namespace cghz {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

void check_photon_register(const StateVector &state, int n, int rows) {
    const auto expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(rows);
    if (state.num_qubits() != expected) {
        throw InvalidArgument("register shape mismatch: expected " +
                              std::to_string(expected) + " photons, found " +
                              std::to_string(state.num_qubits()) + " qubits");
    }
    std::size_t pos = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < rows; ++i, ++pos) {
            const auto &q = state.qubits()[pos];
            if (q.kind != QubitKind::photon || q.label != photon_label(j, i)) {
                throw InvalidArgument("register shape mismatch at qubit '" +
                                      q.label + "'");
            }
        }
    }
}

int photon_pair_count(const StateVector &state) {
    if (state.num_qubits() < 4 || state.num_qubits() % 2 != 0) {
        throw InvalidArgument("register shape mismatch: need 2N photons, N >= 2");
    }
    const int n = static_cast<int>(state.num_qubits() / 2);
    check_photon_register(state, n, 2);
    return n;
}

void prepare_plus(StateVector &state, const std::string &label) {
    state.add_qubit(QubitId::atom(label), 0);
    state.apply_1q(label, gates::hadamard());
}

} // namespace

std::vector<int> ParitySignature::d() const {
    std::vector<int> out(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n - 1; ++j) {
        out[static_cast<std::size_t>(j)] =
            raw.at(static_cast<std::size_t>(j)) !=
            raw.at(static_cast<std::size_t>(n - 1 + j));
    }
    return out;
}

std::string ParitySignature::raw_bits() const {
    std::string s;
    for (int b : raw) {
        s += b ? '1' : '0';
    }
    return s;
}

std::string ParitySignature::d_bits() const {
    std::string s;
    for (int b : d()) {
        s += b ? '1' : '0';
    }
    return s;
}

ParitySignature ParitySignature::from_bits(int n, std::string_view raw_bits) {
    if (n < 2 || raw_bits.size() != static_cast<std::size_t>(2 * (n - 1))) {
        throw InvalidArgument("signature must hold 2(N-1) outcomes");
    }
    ParitySignature sig{n, {}};
    for (char c : raw_bits) {
        if (c != '0' && c != '1') {
            throw InvalidArgument("signature bits must be '0' or '1'");
        }
        sig.raw.push_back(c == '1');
    }
    return sig;
}

std::uint64_t PauliFrame::flip_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < flips.size(); ++j) {
        if (flips[j]) {
            mask |= std::uint64_t{1} << j;
        }
    }
    return mask;
}

std::string step1_atom_label(int j, int row) {
    return row == 1 ? std::to_string(j) : std::to_string(j) + "_2";
}

Reduction reduce_m(StateVector state, int n, int m, Rng &rng,
                   const DetectorHook &detector) {
    validate_shape(n, m);
    check_photon_register(state, n, m);
    Reduction out{std::move(state), PauliFrame{}, 0, {}, true};
    out.frame.flips.assign(static_cast<std::size_t>(n), 0);
    out.outcomes.assign(static_cast<std::size_t>(n), std::string{});
    for (int j = 0; j < n; ++j) {
        for (int i = 2; i < m; ++i) {
            const std::string label = photon_label(j, i);
            out.state.apply_1q(label, gates::hadamard());
            if (detector && !detector(DetectionKind::photon)) {
                out.completed = false;
                return out;
            }
            const auto rec = out.state.measure_and_drop(label, rng);
            ++out.detections;
            out.outcomes[static_cast<std::size_t>(j)] += rec.outcome ? '1' : '0';
            out.frame.flips[static_cast<std::size_t>(j)] ^= rec.outcome;
        }
    }
    return out;
}

std::vector<FaradayCoupling> step1_couplings(int n) {
    std::vector<FaradayCoupling> out;
    for (int j = 1; j < n; ++j) {
        const std::string top = step1_atom_label(j, 1);
        const std::string bottom = step1_atom_label(j, 2);
        out.push_back({photon_label(j - 1, 0), top});
        out.push_back({photon_label(j, 0), top});
        out.push_back({photon_label(j - 1, 1), bottom});
        out.push_back({photon_label(j, 1), bottom});
    }
    return out;
}

StateVector step1_interact(StateVector photons, const FaradayPhases &ph,
                           std::span<const std::size_t> gate_order) {
    const int n = photon_pair_count(photons);
    for (const auto &q : std::vector<QubitId>(photons.qubits())) {
        photons.apply_1q(q.label, gates::hadamard());
    }
    for (int j = 1; j < n; ++j) {
        prepare_plus(photons, step1_atom_label(j, 1));
        prepare_plus(photons, step1_atom_label(j, 2));
    }
    const auto couplings = step1_couplings(n);
    const Diag4 d = faraday_diag(ph);
    if (gate_order.empty()) {
        for (const auto &c : couplings) {
            photons.apply_diag2(c.photon, c.atom, d);
        }
        return photons;
    }
    if (gate_order.size() != couplings.size()) {
        throw InvalidArgument("gate order must be a permutation of the couplings");
    }
    std::vector<bool> used(couplings.size(), false);
    for (std::size_t idx : gate_order) {
        if (idx >= couplings.size() || used[idx]) {
            throw InvalidArgument("gate order must be a permutation of the couplings");
        }
        used[idx] = true;
        photons.apply_diag2(couplings[idx].photon, couplings[idx].atom, d);
    }
    return photons;
}

Step1Result step1(StateVector state, const FaradayPhases &ph, Rng &rng,
                  const Step1Options &opts, const DetectorHook &detector) {
    const int n = photon_pair_count(state);
    const auto natoms = static_cast<std::size_t>(2 * (n - 1));
    if (opts.forced && opts.forced->size() != natoms) {
        throw InvalidArgument("forced outcomes must cover all 2(N-1) atoms");
    }
    Step1Result out{std::move(state), ParitySignature{n, std::vector<int>(natoms, 0)}, true};

    auto read_atom = [&](const std::string &label, std::size_t slot) {
        if (detector && !detector(DetectionKind::atom)) {
            return false;
        }
        const auto rec = opts.forced
                             ? out.state.postselect_and_drop(label, (*opts.forced)[slot])
                             : out.state.measure_and_drop(label, rng);
        out.signature.raw[slot] = rec.outcome;
        return true;
    };
    const auto row2_slot = [n](int j) { return static_cast<std::size_t>(n - 2 + j); };

    if (opts.joint) {
        out.state = step1_interact(std::move(out.state), ph, opts.gate_order);
        for (int j = 1; j < n; ++j) {
            out.state.apply_1q(step1_atom_label(j, 1), gates::hadamard());
            out.state.apply_1q(step1_atom_label(j, 2), gates::hadamard());
        }
        for (int j = 1; j < n; ++j) {
            if (!read_atom(step1_atom_label(j, 1), static_cast<std::size_t>(j - 1)) ||
                !read_atom(step1_atom_label(j, 2), row2_slot(j))) {
                out.completed = false;
                return out;
            }
        }
        return out;
    }

    if (!opts.gate_order.empty()) {
        throw InvalidArgument("gate order applies to joint mode only");
    }
    for (const auto &q : std::vector<QubitId>(out.state.qubits())) {
        out.state.apply_1q(q.label, gates::hadamard());
    }
    const Diag4 d = faraday_diag(ph);
    for (int j = 1; j < n; ++j) {
        const std::string top = step1_atom_label(j, 1);
        const std::string bottom = step1_atom_label(j, 2);
        prepare_plus(out.state, top);
        prepare_plus(out.state, bottom);
        out.state.apply_diag2(photon_label(j - 1, 0), top, d);
        out.state.apply_diag2(photon_label(j, 0), top, d);
        out.state.apply_diag2(photon_label(j - 1, 1), bottom, d);
        out.state.apply_diag2(photon_label(j, 1), bottom, d);
        out.state.apply_1q(top, gates::hadamard());
        out.state.apply_1q(bottom, gates::hadamard());
        if (!read_atom(top, static_cast<std::size_t>(j - 1)) ||
            !read_atom(bottom, row2_slot(j))) {
            out.completed = false;
            return out;
        }
    }
    return out;
}

std::uint64_t decode_pattern(const ParitySignature &sig) {
    const auto d = sig.d();
    std::uint64_t b = 0;
    int prev = 0;
    for (int j = 0; j < sig.n - 1; ++j) {
        const int next = prev ^ d[static_cast<std::size_t>(j)];
        if (next) {
            b |= std::uint64_t{1} << (j + 1);
        }
        prev = next;
    }
    return b;
}

std::uint64_t decode_group(const ParitySignature &sig) {
    return CghzLabel::from_pattern(sig.n, 2, decode_pattern(sig), 1).k();
}

std::uint64_t row2_pattern(const ParitySignature &sig) {
    std::uint64_t s = 0;
    int prev = 0;
    for (int j = 0; j < sig.n - 1; ++j) {
        const int next = prev ^ (sig.raw.at(static_cast<std::size_t>(sig.n - 1 + j)) == 0);
        if (next) {
            s |= std::uint64_t{1} << (j + 1);
        }
        prev = next;
    }
    return s;
}

Step2Result step2(StateVector state, const ParitySignature &sig,
                  const FaradayPhases &ph, Rng &rng, const Step2Options &opts,
                  const DetectorHook &detector) {
    const int n = photon_pair_count(state);
    if (sig.n != n) {
        throw InvalidArgument("signature and register disagree on N");
    }
    std::vector<std::string> row2;
    for (int j = 0; j < n; ++j) {
        row2.push_back(photon_label(j, 1));
    }
    std::uint64_t s = row2_pattern(sig);
    if (opts.bit_flip_pass) {
        for (int j = 0; j < n; ++j) {
            if ((s >> j) & 1U) {
                state.apply_1q(row2[static_cast<std::size_t>(j)], gates::pauli_x());
            }
        }
        s = 0;
    }

    Step2Result out{std::move(state), 0, 0.0, 0.0, true};

    if (opts.mode == ReadoutMode::oracle) {
        int parity = 0;
        for (const auto &label : row2) {
            out.state.apply_1q(label, gates::hadamard());
        }
        for (const auto &label : row2) {
            parity ^= out.state.measure_and_drop(label, rng).outcome;
        }
        out.readout = parity;
        return out;
    }

    // Reference states: the current state projected onto the canonical
    // (|s> +- |s'>)/sqrt2 residual on row 2, propagated alongside it.
    std::size_t row2_mask = 0;
    std::size_t s_mask = 0;
    for (int j = 0; j < n; ++j) {
        const std::size_t bit = std::size_t{1}
                                << out.state.index_of(row2[static_cast<std::size_t>(j)]);
        row2_mask |= bit;
        if ((s >> j) & 1U) {
            s_mask |= bit;
        }
    }
    const auto amps = out.state.amplitudes();
    std::vector<cplx> plus(amps.size(), cplx{0.0});
    std::vector<cplx> minus(amps.size(), cplx{0.0});
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & row2_mask) != s_mask) {
            continue;
        }
        const std::size_t mirror = i ^ row2_mask;
        const cplx cp = (amps[i] + amps[mirror]) * kInvSqrt2;
        const cplx cm = (amps[i] - amps[mirror]) * kInvSqrt2;
        plus[i] = cp * kInvSqrt2;
        plus[mirror] = cp * kInvSqrt2;
        minus[i] = cm * kInvSqrt2;
        minus[mirror] = -cm * kInvSqrt2;
    }
    auto make_ref = [&](std::vector<cplx> v) -> std::optional<StateVector> {
        const double nrm = std::sqrt(kernels::omp::norm_sq(v));
        if (nrm < 1e-12) {
            return std::nullopt;
        }
        kernels::omp::scale(v, 1.0 / nrm);
        return StateVector(out.state.qubits(), std::move(v));
    };
    auto ref_plus = make_ref(std::move(plus));
    auto ref_minus = make_ref(std::move(minus));

    const Diag4 d = faraday_diag(ph);
    auto propagate = [&](StateVector &sv) {
        for (const auto &label : row2) {
            sv.apply_1q(label, gates::hadamard());
        }
        sv.add_qubit(QubitId::atom(std::string(kStep2AtomLabel)), 0);
        for (const auto &label : row2) {
            sv.apply_diag2(label, kStep2AtomLabel, d);
        }
    };
    propagate(out.state);
    if (ref_plus) {
        propagate(*ref_plus);
        out.overlap_plus = std::abs(overlap(*ref_plus, out.state));
    }
    if (ref_minus) {
        propagate(*ref_minus);
        out.overlap_minus = std::abs(overlap(*ref_minus, out.state));
    }
    out.readout = out.overlap_plus >= out.overlap_minus ? 0 : 1;

    if (detector && !detector(DetectionKind::atom)) {
        out.completed = false;
        return out;
    }
    out.state.measure_and_drop(kStep2AtomLabel, rng);
    for (const auto &label : row2) {
        out.state.measure_and_drop(label, rng);
    }
    return out;
}

namespace {

struct CalibrationTable {
    std::shared_mutex mu;
    std::map<std::tuple<int, std::string, int>, int> entries;
};

CalibrationTable &calibration_table() {
    static CalibrationTable table;
    return table;
}

int run_calibration(const ParitySignature &sig, ReadoutMode mode) {
    const auto k = decode_group(sig);
    StateVector ref = cghz(CghzLabel::from_k(sig.n, 2, k, 1));
    Rng rng(0);
    Step1Options o;
    o.forced = sig.raw;
    try {
        auto s1 = step1(std::move(ref), ideal_phases(), rng, o);
        Step2Options o2;
        o2.mode = mode;
        return step2(std::move(s1.state), sig, ideal_phases(), rng, o2).readout;
    } catch (const UnreachableOutcome &) {
        throw UnreachableOutcome("signature " + sig.raw_bits() +
                                 " cannot occur for group " + std::to_string(k));
    }
}

} // namespace

int calibrate_sign(const ParitySignature &sig, ReadoutMode mode) {
    if (sig.n < 2 || sig.raw.size() != static_cast<std::size_t>(2 * (sig.n - 1))) {
        throw InvalidArgument("signature must hold 2(N-1) outcomes");
    }
    auto &table = calibration_table();
    const auto key = std::make_tuple(sig.n, sig.raw_bits(), static_cast<int>(mode));
    {
        std::shared_lock lock(table.mu);
        if (auto it = table.entries.find(key); it != table.entries.end()) {
            return it->second;
        }
    }
    const int flip = run_calibration(sig, mode);
    std::unique_lock lock(table.mu);
    table.entries.emplace(key, flip);
    return flip;
}

int sign_flip_closed_form(const ParitySignature &sig) {
    int parity = 0;
    for (int j = 0; j < sig.n - 1; ++j) {
        parity ^= sig.raw.at(static_cast<std::size_t>(sig.n - 1 + j));
    }
    return parity;
}

CghzLabel identify_input(const StateVector &state, int n, int m) {
    validate_shape(n, m);
    check_photon_register(state, n, m);
    for (const auto &label : enumerate_labels(n, m)) {
        if (std::abs(std::abs(overlap(cghz(label), state)) - 1.0) <= 1e-9) {
            return label;
        }
    }
    throw InvalidArgument("input state is not one of the 2^N C-GHZ states");
}

namespace {

AnalysisReport run_analysis(StateVector state, const CghzLabel &input,
                            const FaradayPhases &ph, std::uint64_t seed,
                            const AnalyzeOptions &opts) {
    AnalysisReport report;
    report.n = input.n;
    report.m = input.m;
    report.input = input;
    report.seed = seed;
    Rng rng(seed);

    auto red = reduce_m(std::move(state), input.n, input.m, rng, opts.detector);
    report.reduction_outcomes = red.outcomes;
    report.photon_detections = red.detections;
    report.frame = red.frame;
    if (!red.completed) {
        report.completed = false;
        return report;
    }
    report.norms.push_back(red.state.norm());

    auto s1 = step1(std::move(red.state), ph, rng, opts.step1, opts.detector);
    report.signature = s1.signature;
    if (!s1.completed) {
        report.completed = false;
        return report;
    }
    report.atom_detections += s1.signature.raw.size();
    report.norms.push_back(s1.state.norm());

    auto s2 = step2(std::move(s1.state), s1.signature, ph, rng, opts.step2,
                    opts.detector);
    if (!s2.completed) {
        report.completed = false;
        return report;
    }
    if (opts.step2.mode == ReadoutMode::cavity) {
        ++report.atom_detections;
    }
    report.norms.push_back(s2.state.norm());
    report.step2_readout = s2.readout;

    report.frame.sign_flip = calibrate_sign(s1.signature, opts.step2.mode);
    const int sign = (s2.readout ^ report.frame.sign_flip) ? -1 : 1;
    const std::uint64_t pattern = decode_pattern(s1.signature) ^ report.frame.flip_mask();
    report.identified = CghzLabel::from_pattern(input.n, input.m, pattern, sign);
    return report;
}

} // namespace

AnalysisReport analyze(const CghzLabel &label, const FaradayPhases &ph,
                       std::uint64_t seed, const AnalyzeOptions &opts) {
    return run_analysis(cghz(label), label, ph, seed, opts);
}

AnalysisReport analyze(const StateVector &state, int n, int m,
                       const FaradayPhases &ph, std::uint64_t seed,
                       const AnalyzeOptions &opts) {
    const CghzLabel input = identify_input(state, n, m);
    return run_analysis(state, input, ph, seed, opts);
}

} // namespace cghz
