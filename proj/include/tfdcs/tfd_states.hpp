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

// Thermal vacuum and thermal coherent states on the truncated two-mode space.
//
//   Round    U(theta) D(alpha, zeta) |0,0~>
//   Double   D(alpha, zeta) U(theta) |0,0~>
//   Trotter  exp[i theta G + (alpha a^dag - alpha* a + zeta atil^dag - zeta* atil)] |0,0~>
//
// with G = i(a atil - atil^dag a^dag) and U(theta) = exp(i theta G).

#include <complex>

#include "tfdcs/fockspace.hpp"

namespace tfdcs {

/// Inverse temperature, energy quantum and the derived squeeze angle with
///   cosh theta = (1 - e^{-beta eps})^{-1/2},  sinh theta = (e^{beta eps} - 1)^{-1/2}.
struct ThermalParams {
    double beta;
    double epsilon;
    double theta;

    double cosh_theta() const { return std::cosh(theta); }
    double sinh_theta() const { return std::sinh(theta); }
    /// Bose-Einstein occupancy sinh^2 theta.
    double occupancy() const { return sinh_theta() * sinh_theta(); }
};

ThermalParams theta_of_beta(double beta, double epsilon);
/// Inverts theta_of_beta for a given epsilon; theta = 0 maps to beta = +inf.
ThermalParams thermal_from_theta(double theta, double epsilon = 1.0);

class DisplacementParams {
  public:
    static DisplacementParams general(cplx alpha, cplx zeta);
    /// zeta = conj(alpha), the tilde-conjugation invariant choice.
    static DisplacementParams tilde_invariant(cplx alpha);

    cplx alpha() const noexcept { return alpha_; }
    cplx zeta() const noexcept { return zeta_; }
    bool is_tilde_invariant() const noexcept { return tilde_invariant_; }

  private:
    DisplacementParams(cplx alpha, cplx zeta, bool tilde)
        : alpha_(alpha), zeta_(zeta), tilde_invariant_(tilde) {}

    cplx alpha_;
    cplx zeta_;
    bool tilde_invariant_;
};

enum class StateKind { Round, Double, Trotter };

inline constexpr StateKind kAllKinds[] = {StateKind::Round, StateKind::Double,
                                          StateKind::Trotter};

const char* to_string(StateKind kind) noexcept;

TwoModeOperator generator_G(int d);
TwoModeOperator thermalizing_U(double theta, int d, double tol = kDefaultExpTol);
TwoModeOperator displacement_D(cplx alpha, cplx zeta, int d, double tol = kDefaultExpTol);

/// i theta G and the displacement exponent as matrix-free generators.
LadderGenerator squeeze_generator(double theta);
LadderGenerator displacement_generator(cplx alpha, cplx zeta);

/// max(|alpha|, |zeta|, |<a>|, |<atil>|), the displacement scale fed to the
/// adaptive cutoff rule.
double displacement_scale(StateKind kind, const DisplacementParams& dp, const ThermalParams& tp);

TwoModeState thermal_vacuum(const ThermalParams& tp, const CutoffPolicy& policy);

TwoModeState build_state(StateKind kind, const DisplacementParams& dp, const ThermalParams& tp,
                         const CutoffPolicy& policy);
inline TwoModeState build_state(StateKind kind, const DisplacementParams& dp,
                                const ThermalParams& tp, int d) {
    return build_state(kind, dp, tp, CutoffPolicy::fixed(d));
}

/// [U(theta/N) D(alpha/N, zeta/N)]^N |0,0~>.
TwoModeState build_trotter_finite(const DisplacementParams& dp, const ThermalParams& tp,
                                  int slices, const CutoffPolicy& policy);
inline TwoModeState build_trotter_finite(const DisplacementParams& dp, const ThermalParams& tp,
                                         int slices, int d) {
    return build_trotter_finite(dp, tp, slices, CutoffPolicy::fixed(d));
}

/// xi = cosh theta a - sinh theta atil^dag  (= U a U^dag).
TwoModeOperator xi_operator(const ThermalParams& tp, int d);
Vector apply_xi(const ThermalParams& tp, const Vector& v, int d);

/// ||xi psi - f psi||
double xi_residual(const ThermalParams& tp, const TwoModeState& psi, cplx f);

cplx xi_eigenvalue(StateKind kind, const DisplacementParams& dp, const ThermalParams& tp);

struct ImproperEigenvector {
    TwoModeState state;
    /// |mu* - nu| for the displacement D(mu, nu) = exp(f xi^dag - f* xi);
    /// zero only if the state were tilde invariant.
    double tilde_violation;
    cplx mu;
    cplx nu;
};

/// exp(f xi^dag - f* xi) U |0,0~>, an eigenvector of xi with eigenvalue f.
ImproperEigenvector improper_eigenvector(cplx f, const ThermalParams& tp,
                                         const CutoffPolicy& policy);

}  // namespace tfdcs
