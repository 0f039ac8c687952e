// Copyright 2026 The tfdcs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Quadratures, characteristic functions, and closed-form first/second
// moments of the thermal coherent states, with Fock-space counterparts.

#include <utility>

#include "tfdcs/fockspace.hpp"
#include "tfdcs/tfd_states.hpp"

namespace tfdcs {

struct PhysicalConstants {
    double hbar = 1.0;
    double lambda = 1.0;   // m * omega
    double epsilon = 1.0;  // hbar * omega

    void validate() const;
    double q_scale() const;  // sqrt(hbar / (2 lambda))
    double p_scale() const;  // sqrt(lambda hbar / 2)
};

struct QuadratureMoments {
    double mean_Q = 0.0;
    double mean_P = 0.0;
    double var_Q = 0.0;
    double var_P = 0.0;

    double uncertainty_product() const;  // Delta Q * Delta P
};

struct QuadratureOperators {
    TwoModeOperator Q;
    TwoModeOperator P;
};

/// Q = sqrt(hbar/2 lambda)(a^dag + a), P = i sqrt(lambda hbar/2)(a^dag - a) on
/// the ordinary mode, embedded in the two-mode space.
QuadratureOperators quadrature_operators(const PhysicalConstants& pc, int d);

/// Closed-form <D(gamma, gamma')> for the U.D state |alpha, zeta; theta).
cplx cf_full(cplx alpha, cplx zeta, double theta, cplx gamma, cplx gamma_p);

/// Tr[rho D(eta)] for the signal-mode reduction of |alpha, alpha*; theta).
cplx chi_signal(cplx alpha, double theta, cplx eta);

/// <Q>, <P> for the tilde-invariant state of the given kind.
std::pair<double, double> mean_quadratures(StateKind kind, cplx alpha, double theta,
                                           const PhysicalConstants& pc);

/// (hbar/2) cosh 2 theta, for every kind and displacement.
double uncertainty_product(double theta, const PhysicalConstants& pc);

/// <Q> / (2 Re(alpha) sqrt(hbar/2 lambda)): e^theta, (e^theta-1)/theta, 1.
double fig1_ordinate(StateKind kind, double theta);

// ---------------------------------------------------------------------------
// Fock-space counterparts

/// Ordinary-mode quadrature moments of a truncated state.
QuadratureMoments numeric_quadrature_moments(const TwoModeState& psi,
                                             const PhysicalConstants& pc);

/// <psi| D(gamma) (x) D(gamma') |psi> from exact displacement matrix elements.
cplx numeric_cf(const TwoModeState& psi, cplx gamma, cplx gamma_p);

/// Tr[rho D(eta)] from exact displacement matrix elements.
cplx numeric_chi(const DensityMatrix& rho, cplx eta);

}  // namespace tfdcs
