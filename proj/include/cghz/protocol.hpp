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
 * Two-step C-GHZ state analyzer driven by cavity-assisted parity checks.
 *
 *   reduce_m   HWP + measurement on the extra m-2 photons of every logic
 *              qubit, leaving an (N, 2) C-GHZ state up to a bit-flip frame.
 *   step1      HWPs on all 2N photons, then 2(N-1) atoms in |+> probe
 *              neighbouring row-1 (x1) and row-2 (x2) photons; after an atomic
 *              Hadamard each atom reports a parity. Comparing atom j with
 *              atom j_2 gives d_j = b_j XOR b_{j+1}.
 *   step2      HWPs on the row-2 photons and one atom "N" in |g_L> read
 *              out the relative sign of the residual row-2 GHZ state.
 *   calibrate  The sign picked up by a given step-1 branch is obtained by
 *              running the + member of the decoded group through the same
 *              branch.
 *
 * Atom wiring: atom "j" (1-based, j < N) couples to the row-1 photons of
 * logic qubits j and j+1, atom "j_2" to their row-2 photons.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cghz/cavity.hpp"
#include "cghz/qstate.hpp"
#include "cghz/rng.hpp"
#include "cghz/states.hpp"

namespace cghz {

enum class DetectionKind { photon, atom };

/// Consulted at every counted detector event; returning false models a
/// missed detection and aborts the run.
using DetectorHook = std::function<bool(DetectionKind)>;

struct ParitySignature {
    int n = 2;
    /// 2(N-1) atom outcomes: atoms 1..N-1 then 1_2..(N-1)_2; 0 = g_L.
    std::vector<int> raw;

    /// d_j = raw[j] != raw[N-1+j], length N-1.
    std::vector<int> d() const;
    std::string raw_bits() const;
    std::string d_bits() const;

    static ParitySignature from_bits(int n, std::string_view raw_bits);
};

struct PauliFrame {
    /// One bit per logic qubit: odd number of |R> outcomes in reduce_m.
    std::vector<int> flips;
    /// Set by calibrate_sign.
    int sign_flip = 0;

    std::uint64_t flip_mask() const;
};

std::string step1_atom_label(int j, int row);
inline constexpr std::string_view kStep2AtomLabel = "N";

struct Reduction {
    StateVector state;
    PauliFrame frame;
    std::size_t detections = 0;
    /// Per logic qubit, the m-2 outcomes as a bitstring.
    std::vector<std::string> outcomes;
    bool completed = true;
};

Reduction reduce_m(StateVector state, int n, int m, Rng &rng,
                   const DetectorHook &detector = {});

struct FaradayCoupling {
    std::string photon;
    std::string atom;
};

/// The 4(N-1) photon-atom couplings of step 1, grouped by atom pair.
std::vector<FaradayCoupling> step1_couplings(int n);

struct Step1Options {
    /// Post-select these outcomes instead of sampling (ParitySignature order).
    std::optional<std::vector<int>> forced;
    /// Hold all atoms in one register instead of processing pair by pair.
    bool joint = false;
    /// Joint mode only: permutation of step1_couplings(n) indices.
    std::vector<std::size_t> gate_order;
};

struct Step1Result {
    StateVector state;
    ParitySignature signature;
    bool completed = true;
};

/// HWPs on every photon, then all atoms prepared in |+> and every Faraday
/// gate applied (atomic Hadamards not yet applied). Atoms are appended in
/// order 1, 1_2, 2, 2_2, ...
StateVector step1_interact(StateVector photons, const FaradayPhases &ph,
                           std::span<const std::size_t> gate_order = {});

Step1Result step1(StateVector state, const FaradayPhases &ph, Rng &rng,
                  const Step1Options &opts = {},
                  const DetectorHook &detector = {});

/// b_1 = 0, b_{j+1} = b_j XOR d_j.
std::uint64_t decode_pattern(const ParitySignature &sig);
std::uint64_t decode_group(const ParitySignature &sig);

/// Row-2 photon pattern (b_1 = 0 representative) implied by the row-2 atoms:
/// g_R means the neighbouring photons agree, g_L that they differ.
std::uint64_t row2_pattern(const ParitySignature &sig);

enum class ReadoutMode { cavity, oracle };

struct Step2Options {
    ReadoutMode mode = ReadoutMode::cavity;
    /// Flip row-2 photons so the residual becomes L..L +- R..R first.
    bool bit_flip_pass = false;
};

struct Step2Result {
    StateVector state;
    /// 0 for "+", 1 for "-".
    int readout = 0;
    /// |<ref+|out>| and |<ref-|out>|, cavity mode only.
    double overlap_plus = 0.0;
    double overlap_minus = 0.0;
    bool completed = true;
};

Step2Result step2(StateVector state, const ParitySignature &sig,
                  const FaradayPhases &ph, Rng &rng,
                  const Step2Options &opts = {},
                  const DetectorHook &detector = {});

/// Sign flip for a step-1 branch, found by simulating the + member of the
/// decoded group at ideal phases. Memoized; safe to call concurrently.
/// Throws UnreachableOutcome for signatures that cannot occur.
int calibrate_sign(const ParitySignature &sig,
                   ReadoutMode mode = ReadoutMode::cavity);

/// Parity of the number of g_R outcomes among the row-2 atoms.
int sign_flip_closed_form(const ParitySignature &sig);

struct AnalyzeOptions {
    Step1Options step1;
    Step2Options step2;
    DetectorHook detector;
};

struct AnalysisReport {
    int n = 2;
    int m = 2;
    CghzLabel input;
    std::optional<CghzLabel> identified;
    ParitySignature signature;
    std::vector<std::string> reduction_outcomes;
    std::size_t photon_detections = 0;
    std::size_t atom_detections = 0;
    int step2_readout = 0;
    PauliFrame frame;
    std::uint64_t seed = 0;
    /// State norm after reduce_m, step1 and step2.
    std::vector<double> norms;
    bool completed = true;

    bool correct() const { return completed && identified == input; }
};

AnalysisReport analyze(const CghzLabel &label, const FaradayPhases &ph,
                       std::uint64_t seed, const AnalyzeOptions &opts = {});

/// Identifies the input among the 2^N library states first (|overlap| must
/// be within 1e-9 of 1) and throws InvalidArgument otherwise.
AnalysisReport analyze(const StateVector &state, int n, int m,
                       const FaradayPhases &ph, std::uint64_t seed,
                       const AnalyzeOptions &opts = {});

CghzLabel identify_input(const StateVector &state, int n, int m);

} // namespace cghz
