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

#include "cghz/cavity.hpp"

#include <cmath>
#include <numbers>

#include "cghz/error.hpp"

namespace cghz {

namespace {

using std::numbers::pi;

void validate(const CavityParams &p) {
    if (!(p.kappa > 0.0)) {
        throw InvalidArgument("cavity damping rate kappa must be positive");
    }
    if (p.gamma < 0.0 || p.lambda < 0.0) {
        throw InvalidArgument("gamma and lambda must be non-negative");
    }
}

double wrap_2pi(double x) {
    double r = std::fmod(x, 2.0 * pi);
    if (r < 0.0) {
        r += 2.0 * pi;
    }
    // Absorb -0 and values that rounded up to 2*pi.
    if (r >= 2.0 * pi) {
        r = 0.0;
    }
    return r;
}

} // namespace

double FaradayPhases::sigma() const {
    return std::remainder((phi_ - phi0_) - pi / 2.0, 2.0 * pi);
}

std::complex<double> reflection(const CavityParams &p) {
    validate(p);
    using namespace std::complex_literals;
    const std::complex<double> cav = 1i * (p.omega_c - p.omega_p);
    const std::complex<double> atom = 1i * (p.omega_0 - p.omega_p) + p.gamma / 2.0;
    const double g2 = p.lambda * p.lambda;
    return ((cav - p.kappa / 2.0) * atom + g2) / ((cav + p.kappa / 2.0) * atom + g2);
}

std::complex<double> empty_reflection(const CavityParams &p) {
    validate(p);
    using namespace std::complex_literals;
    const std::complex<double> cav = 1i * (p.omega_c - p.omega_p);
    return (cav - p.kappa / 2.0) / (cav + p.kappa / 2.0);
}

FaradayPhases phases(const CavityParams &p, double tol_mod) {
    const auto r = reflection(p);
    const auto r0 = empty_reflection(p);
    if (std::abs(std::abs(r) - 1.0) > tol_mod) {
        throw ModelError("|r| = " + std::to_string(std::abs(r)) +
                         " is outside the pure-phase tolerance");
    }
    return {wrap_2pi(std::arg(r)), wrap_2pi(std::arg(r0))};
}

CavityParams ideal_params(double kappa, double omega_c) {
    if (!(kappa > 0.0)) {
        throw InvalidArgument("cavity damping rate kappa must be positive");
    }
    CavityParams p;
    p.omega_c = omega_c;
    p.omega_0 = omega_c;
    p.omega_p = omega_c - kappa / 2.0;
    p.kappa = kappa;
    p.gamma = 0.0;
    p.lambda = kappa / 2.0;
    return p;
}

FaradayPhases ideal_phases() { return {pi, pi / 2.0}; }

FaradayPhases detuned_phases(double sigma) { return {pi + sigma, pi / 2.0}; }

Diag4 faraday_diag(const FaradayPhases &ph) {
    const auto coupled = std::polar(1.0, ph.phi());
    const auto empty = std::polar(1.0, ph.phi0());
    return {coupled, empty, empty, coupled};
}

} // namespace cghz
