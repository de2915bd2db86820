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
 * Detector-loss and phase-detuning imperfection models.
 *
 * A run succeeds when every photon detection of the m -> 2 reduction
 * (N(m-2) of them) and every atom detection (2N-1) registers, and the
 * surviving run is not misidentified:
 *
 *   P = eta_p^{N(m-2)} * eta_a^{2N-1} * (1 - p_error)
 */
#pragma once

#include <cstdint>

namespace cghz {

struct NoiseParams {
    double eta_p = 1.0;
    double eta_a = 1.0;
    double p_error = 0.0;

    /// Throws InvalidArgument unless every field lies in [0, 1].
    void validate() const;
};

struct TrialStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double std_error = 0.0;

    static TrialStats from_counts(std::uint64_t trials, std::uint64_t successes);
};

double analytic_success(int n, int m, const NoiseParams &p);

/// Monte Carlo of the full pipeline at ideal phases. Trial t draws its label,
/// analysis seed and detector outcomes from Rng(seed).split(t), so the result
/// does not depend on the thread count.
TrialStats mc_success(int n, int m, const NoiseParams &p, std::uint64_t trials,
                      std::uint64_t seed);

/// Misidentification rate with detuned_phases(sigma) and perfect detectors.
/// `successes` counts misidentified trials.
TrialStats error_prob_sigma(int n, int m, double sigma, std::uint64_t trials,
                            std::uint64_t seed);

} // namespace cghz
