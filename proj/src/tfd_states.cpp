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
#include "tfdcs/tfd_states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tfdcs/equivalence.hpp"
#include "tfdcs/hyperbolic.hpp"

namespace tfdcs {

const char* to_string(StateKind kind) noexcept {
    switch (kind) {
        case StateKind::Round: return "round";
        case StateKind::Double: return "double";
        case StateKind::Trotter: return "trotter";
    }
    return "unknown";
}

ThermalParams theta_of_beta(double beta, double epsilon) {
    require(std::isfinite(beta) && beta > 0.0, ErrorKind::InvalidArgument,
            "beta must be positive and finite");
    require(std::isfinite(epsilon) && epsilon > 0.0, ErrorKind::InvalidArgument,
            "epsilon must be positive and finite");
    const double sh = 1.0 / std::sqrt(std::expm1(beta * epsilon));
    return ThermalParams{beta, epsilon, std::asinh(sh)};
}

ThermalParams thermal_from_theta(double theta, double epsilon) {
    require(std::isfinite(theta) && theta >= 0.0, ErrorKind::InvalidArgument,
            "theta must be finite and non-negative");
    require(std::isfinite(epsilon) && epsilon > 0.0, ErrorKind::InvalidArgument,
            "epsilon must be positive and finite");
    if (theta == 0.0) return ThermalParams{std::numeric_limits<double>::infinity(), epsilon, 0.0};
    const double sh = std::sinh(theta);
    return ThermalParams{std::log1p(1.0 / (sh * sh)) / epsilon, epsilon, theta};
}

DisplacementParams DisplacementParams::general(cplx alpha, cplx zeta) {
    require(std::isfinite(std::abs(alpha)) && std::isfinite(std::abs(zeta)),
            ErrorKind::NonFinite, "non-finite displacement");
    return DisplacementParams(alpha, zeta, zeta == std::conj(alpha));
}

DisplacementParams DisplacementParams::tilde_invariant(cplx alpha) {
    require(std::isfinite(std::abs(alpha)), ErrorKind::NonFinite, "non-finite displacement");
    return DisplacementParams(alpha, std::conj(alpha), true);
}

TwoModeOperator generator_G(int d) {
    const TwoModeOperator a = embed(annihilation_matrix(d), Slot::Ordinary);
    const TwoModeOperator at = embed(annihilation_matrix(d), Slot::Tilde);
    // G = i (a atil - atil^dag a^dag)
    return cplx(0.0, 1.0) * (a * at - at.adjoint() * a.adjoint());
}

TwoModeOperator thermalizing_U(double theta, int d, double tol) {
    return matrix_exp(cplx(0.0, theta) * generator_G(d), tol);
}

TwoModeOperator displacement_D(cplx alpha, cplx zeta, int d, double tol) {
    return matrix_exp(displacement_generator(alpha, zeta).dense(d), tol);
}

LadderGenerator squeeze_generator(double theta) {
    // i theta G = theta (a^dag atil^dag - a atil)
    return LadderGenerator{cplx(theta, 0.0), 0.0, 0.0};
}

LadderGenerator displacement_generator(cplx alpha, cplx zeta) {
    return LadderGenerator{0.0, alpha, zeta};
}

namespace {

// <a>, <atil> of U D(alpha, zeta) |0,0~>
std::pair<cplx, cplx> round_means(cplx alpha, cplx zeta, double theta) {
    const double c = std::cosh(theta), s = std::sinh(theta);
    return {alpha * c + std::conj(zeta) * s, zeta * c + std::conj(alpha) * s};
}

}  // namespace

double displacement_scale(StateKind kind, const DisplacementParams& dp, const ThermalParams& tp) {
    cplx a = dp.alpha(), z = dp.zeta();
    if (kind == StateKind::Double) {
        const MappedPair m = map_double_to_round(a, z, tp.theta);
        a = m.alpha;
        z = m.zeta;
    } else if (kind == StateKind::Trotter) {
        const EquivalenceResult r = map_trotter_to_round(a, z, tp.theta);
        a = r.alpha_prime;
        z = r.zeta_prime;
    }
    const auto [ma, mz] = round_means(a, z, tp.theta);
    return std::max({std::abs(dp.alpha()), std::abs(dp.zeta()), std::abs(ma), std::abs(mz)});
}

TwoModeState thermal_vacuum(const ThermalParams& tp, const CutoffPolicy& policy) {
    return build_with_cutoff(policy, 0.0, tp.theta, [&](int d) {
        return TwoModeState(d, expm_apply(squeeze_generator(tp.theta), vacuum_state(d).amplitudes(), d));
    });
}

TwoModeState build_state(StateKind kind, const DisplacementParams& dp, const ThermalParams& tp,
                         const CutoffPolicy& policy) {
    const LadderGenerator squeeze = squeeze_generator(tp.theta);
    const LadderGenerator shift = displacement_generator(dp.alpha(), dp.zeta());
    auto build = [&](int d) {
        const Vector vac = vacuum_state(d).amplitudes();
        switch (kind) {
            case StateKind::Round:
                return TwoModeState(d, expm_apply(squeeze, expm_apply(shift, vac, d), d));
            case StateKind::Double:
                return TwoModeState(d, expm_apply(shift, expm_apply(squeeze, vac, d), d));
            case StateKind::Trotter: {
                const LadderGenerator combined{squeeze.pair, shift.alpha, shift.zeta};
                return TwoModeState(d, expm_apply(combined, vac, d));
            }
        }
        fail(ErrorKind::InvalidArgument, "unknown state kind");
    };
    return build_with_cutoff(policy, displacement_scale(kind, dp, tp), tp.theta, build);
}

TwoModeState build_trotter_finite(const DisplacementParams& dp, const ThermalParams& tp,
                                  int slices, const CutoffPolicy& policy) {
    require(slices >= 1, ErrorKind::InvalidArgument, "number of Trotter slices must be >= 1");
    const double inv = 1.0 / slices;
    const LadderGenerator squeeze = squeeze_generator(tp.theta).scaled(inv);
    const LadderGenerator shift = displacement_generator(dp.alpha(), dp.zeta()).scaled(inv);
    auto build = [&](int d) {
        Vector v = vacuum_state(d).amplitudes();
        for (int k = 0; k < slices; ++k) v = expm_apply(squeeze, expm_apply(shift, v, d), d);
        return TwoModeState(d, std::move(v));
    };
    return build_with_cutoff(policy, displacement_scale(StateKind::Trotter, dp, tp), tp.theta,
                             build);
}

TwoModeOperator xi_operator(const ThermalParams& tp, int d) {
    const TwoModeOperator a = embed(annihilation_matrix(d), Slot::Ordinary);
    const TwoModeOperator at_dag = embed(creation_matrix(d), Slot::Tilde);
    return cplx(tp.cosh_theta()) * a - cplx(tp.sinh_theta()) * at_dag;
}

Vector apply_xi(const ThermalParams& tp, const Vector& v, int d) {
    return tp.cosh_theta() * apply_lower(v, d, Slot::Ordinary) -
           tp.sinh_theta() * apply_raise(v, d, Slot::Tilde);
}

double xi_residual(const ThermalParams& tp, const TwoModeState& psi, cplx f) {
    const int d = psi.dim_per_mode();
    return (apply_xi(tp, psi.amplitudes(), d) - f * psi.amplitudes()).norm();
}

cplx xi_eigenvalue(StateKind kind, const DisplacementParams& dp, const ThermalParams& tp) {
    const cplx a = dp.alpha(), z = dp.zeta();
    const double th = tp.theta;
    switch (kind) {
        case StateKind::Round: return a;
        case StateKind::Double: return a * std::cosh(th) - std::conj(z) * std::sinh(th);
        case StateKind::Trotter: return a * sinh_over(th) + std::conj(z) * one_minus_cosh_over(th);
    }
    fail(ErrorKind::InvalidArgument, "unknown state kind");
}

ImproperEigenvector improper_eigenvector(cplx f, const ThermalParams& tp,
                                         const CutoffPolicy& policy) {
    // f xi^dag - f* xi = (f cosh) a^dag - c.c. + (f* sinh) atil^dag - c.c.
    const cplx mu = f * tp.cosh_theta();
    const cplx nu = std::conj(f) * tp.sinh_theta();
    const LadderGenerator squeeze = squeeze_generator(tp.theta);
    const LadderGenerator shift = displacement_generator(mu, nu);
    const double scale = std::max(std::abs(mu), std::abs(nu));
    TwoModeState state = build_with_cutoff(policy, scale, tp.theta, [&](int d) {
        const Vector vac = vacuum_state(d).amplitudes();
        return TwoModeState(d, expm_apply(shift, expm_apply(squeeze, vac, d), d));
    });
    return ImproperEigenvector{std::move(state), std::abs(std::conj(mu) - nu), mu, nu};
}

}  // namespace tfdcs
