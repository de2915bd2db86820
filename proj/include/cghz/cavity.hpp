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
 * Single-sided low-Q cavity with one trapped three-level atom.
 *
 * All rates and frequencies are angular (rad/s) and may be given in any
 * common unit, since the reflection coefficients depend only on ratios.
 * Phases are reported in [0, 2*pi) so that the operating point
 * (phi, phi0) = (pi, pi/2) lies away from the branch cut.
 */
#pragma once

#include <complex>

#include "cghz/kernels.hpp"

namespace cghz {

struct CavityParams {
    double omega_c = 0.0; ///< cavity frequency
    double omega_0 = 0.0; ///< atomic transition frequency
    double omega_p = 0.0; ///< probe photon frequency
    double kappa = 1.0;   ///< cavity damping rate, > 0
    double gamma = 0.0;   ///< atomic decay rate, >= 0
    double lambda = 0.0;  ///< atom-cavity coupling, >= 0
};

/// Phase pair picked up on reflection. sigma() is always derived.
class FaradayPhases {
  public:
    FaradayPhases(double phi, double phi0) : phi_(phi), phi0_(phi0) {}

    /// Phase when the photon drives the atomic transition.
    double phi() const { return phi_; }
    /// Phase when the photon only sees the empty cavity.
    double phi0() const { return phi0_; }
    /// (phi - phi0) - pi/2, wrapped to (-pi, pi].
    double sigma() const;

  private:
    double phi_;
    double phi0_;
};

/// Reflection coefficient of the coupled atom-cavity system at omega_p.
std::complex<double> reflection(const CavityParams &p);

/// Reflection coefficient of the empty cavity (lambda = 0). Unimodular.
std::complex<double> empty_reflection(const CavityParams &p);

/// Default bound on | |r| - 1 | for the pure-phase approximation.
inline constexpr double kDefaultModulusTolerance = 0.02;

/// Extracts (phi, phi0). Throws ModelError when |r| deviates from 1 by more
/// than `tol_mod`.
FaradayPhases phases(const CavityParams &p,
                     double tol_mod = kDefaultModulusTolerance);

/// omega_0 = omega_c, omega_p = omega_c - kappa/2, lambda = kappa/2,
/// gamma = 0.
CavityParams ideal_params(double kappa, double omega_c = 0.0);

/// (pi, pi/2).
FaradayPhases ideal_phases();

/// phi = pi + sigma with phi0 held at pi/2.
FaradayPhases detuned_phases(double sigma);

/// (e^{i phi}, e^{i phi0}, e^{i phi0}, e^{i phi}) over (photon bit, atom bit)
/// = (L g_L, R g_L, L g_R, R g_R); feed to apply_diag2(photon, atom, ...).
Diag4 faraday_diag(const FaradayPhases &ph);

} // namespace cghz
