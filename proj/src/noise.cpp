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

#include "cghz/noise.hpp"

#include <cmath>
#include <exception>
#include <vector>

#include "cghz/cavity.hpp"
#include "cghz/error.hpp"
#include "cghz/protocol.hpp"
#include "cghz/rng.hpp"
#include "cghz/states.hpp"

namespace cghz {

namespace {

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

// Runs trial(t) for t in [0, trials) in parallel and counts true results.
template <typename Trial>
std::uint64_t count_trials(std::uint64_t trials, Trial trial) {
    std::uint64_t hits = 0;
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : hits)
    for (std::int64_t t = 0; t < count; ++t) {
        try {
            if (trial(static_cast<std::uint64_t>(t))) {
                ++hits;
            }
        } catch (...) {
#pragma omp critical(cghz_trial_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return hits;
}

void check_trials(std::uint64_t trials) {
    if (trials == 0) {
        throw InvalidArgument("trials must be at least 1");
    }
}

} // namespace

void NoiseParams::validate() const {
    if (!in_unit(eta_p) || !in_unit(eta_a) || !in_unit(p_error)) {
        throw InvalidArgument("eta_p, eta_a and p_error must lie in [0, 1]");
    }
}

TrialStats TrialStats::from_counts(std::uint64_t trials, std::uint64_t successes) {
    TrialStats s{trials, successes, 0.0, 0.0};
    if (trials > 0) {
        s.estimate = static_cast<double>(successes) / static_cast<double>(trials);
        s.std_error = std::sqrt(s.estimate * (1.0 - s.estimate) /
                                static_cast<double>(trials));
    }
    return s;
}

double analytic_success(int n, int m, const NoiseParams &p) {
    validate_shape(n, m);
    p.validate();
    return std::pow(p.eta_p, n * (m - 2)) * std::pow(p.eta_a, 2 * n - 1) *
           (1.0 - p.p_error);
}

TrialStats mc_success(int n, int m, const NoiseParams &p, std::uint64_t trials,
                      std::uint64_t seed) {
    validate_shape(n, m);
    p.validate();
    check_trials(trials);
    const auto labels = enumerate_labels(n, m);
    const Rng master(seed);
    const FaradayPhases ph = ideal_phases();

    const auto hits = count_trials(trials, [&](std::uint64_t t) {
        Rng rng = master.split(t);
        const CghzLabel &label = labels[rng.below(labels.size())];
        const std::uint64_t run_seed = rng.next_u64();
        Rng loss(rng.next_u64());
        AnalyzeOptions opts;
        opts.detector = [&](DetectionKind kind) {
            return loss.bernoulli(kind == DetectionKind::photon ? p.eta_p : p.eta_a);
        };
        const auto report = analyze(label, ph, run_seed, opts);
        return report.correct() && !loss.bernoulli(p.p_error);
    });
    return TrialStats::from_counts(trials, hits);
}

TrialStats error_prob_sigma(int n, int m, double sigma, std::uint64_t trials,
                            std::uint64_t seed) {
    validate_shape(n, m);
    check_trials(trials);
    if (!std::isfinite(sigma)) {
        throw InvalidArgument("sigma must be finite");
    }
    const auto labels = enumerate_labels(n, m);
    const Rng master(seed);
    const FaradayPhases ph = detuned_phases(sigma);

    const auto misses = count_trials(trials, [&](std::uint64_t t) {
        Rng rng = master.split(t);
        const CghzLabel &label = labels[rng.below(labels.size())];
        return !analyze(label, ph, rng.next_u64()).correct();
    });
    return TrialStats::from_counts(trials, misses);
}

} // namespace cghz
