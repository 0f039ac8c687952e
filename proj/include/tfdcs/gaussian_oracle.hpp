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

// Truncation-free moments of the thermal coherent states.
//
// Quadratures are ordered (Q, P, Q~, P~) in hbar = lambda = 1 units with
//   Q = (a + a^dag)/sqrt2,  P = i(a^dag - a)/sqrt2
// and the same convention for the tilde mode, so [R_j, R_k] = i Omega_jk with
// Omega = diag(J, J), J = [[0, 1], [-1, 0]].

#include <Eigen/Dense>

#include "tfdcs/fockspace.hpp"
#include "tfdcs/observables.hpp"
#include "tfdcs/quasiprob.hpp"
#include "tfdcs/tfd_states.hpp"

namespace tfdcs {

struct GaussianMoments {
    Eigen::Vector4d mean = Eigen::Vector4d::Zero();
    Eigen::Matrix4d cov = Eigen::Matrix4d::Zero();

    /// Minimum eigenvalue of cov + (i/2) Omega; >= 0 for a physical state.
    double physicality_margin() const;
    /// Converts Q-type entries by sqrt(hbar/lambda) and P-type by sqrt(lambda hbar).
    GaussianMoments in_units(const PhysicalConstants& pc) const;
};

struct ReducedGaussian {
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();

    /// 1 / (2 sqrt(det cov))
    double purity() const;
};

Eigen::Matrix4d symplectic_form();

GaussianMoments moments_from_cf(StateKind kind, cplx alpha, cplx zeta, double theta);

ReducedGaussian reduce_to_signal(const GaussianMoments& gm);

/// W: sigma^2 = var/2; Q: sigma_W^2 + 1/4; P: sigma_W^2 - 1/4 (PointMass when
/// that vanishes). Mean (<Q> + i <P>)/sqrt2.
QuasiDistribution reduced_to_qp(const ReducedGaussian& rg, QuasiKind which);

/// Same quantities measured on a truncated state.
GaussianMoments numeric_moments(const TwoModeState& psi);

}  // namespace tfdcs
