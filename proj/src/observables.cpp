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
#include "tfdcs/observables.hpp"

#include <cmath>

#include "tfdcs/equivalence.hpp"
#include "tfdcs/hyperbolic.hpp"

namespace tfdcs {

void PhysicalConstants::validate() const {
    require(std::isfinite(hbar) && hbar > 0.0, ErrorKind::InvalidArgument, "hbar must be > 0");
    require(std::isfinite(lambda) && lambda > 0.0, ErrorKind::InvalidArgument,
            "lambda must be > 0");
    require(std::isfinite(epsilon) && epsilon > 0.0, ErrorKind::InvalidArgument,
            "epsilon must be > 0");
}

double PhysicalConstants::q_scale() const { return std::sqrt(hbar / (2.0 * lambda)); }
double PhysicalConstants::p_scale() const { return std::sqrt(lambda * hbar / 2.0); }

double QuadratureMoments::uncertainty_product() const {
    return std::sqrt(var_Q) * std::sqrt(var_P);
}

QuadratureOperators quadrature_operators(const PhysicalConstants& pc, int d) {
    pc.validate();
    const TwoModeOperator a = embed(annihilation_matrix(d), Slot::Ordinary);
    const TwoModeOperator ad = a.adjoint();
    return QuadratureOperators{cplx(pc.q_scale()) * (ad + a),
                               cplx(0.0, pc.p_scale()) * (ad - a)};
}

cplx cf_full(cplx alpha, cplx zeta, double theta, cplx gamma, cplx gamma_p) {
    const double c = std::cosh(theta), s = std::sinh(theta);
    const cplx g = gamma, gp = gamma_p;
    const cplx gc = std::conj(g), gpc = std::conj(gp);
    const cplx quad = (c * c + s * s) * (std::norm(g) + std::norm(gp)) -
                      2.0 * c * s * (g * gp + gc * gpc);
    const cplx lin = (g * c - gpc * s) * std::conj(alpha) - (gc * c - gp * s) * alpha +
                     (gp * c - gc * s) * std::conj(zeta) - (gpc * c - g * s) * zeta;
    return std::exp(-0.5 * quad + lin);
}

cplx chi_signal(cplx alpha, double theta, cplx eta) {
    const double c = std::cosh(theta), s = std::sinh(theta);
    return std::exp(-0.5 * (c * c + s * s) * std::norm(eta) +
                    (c + s) * (std::conj(alpha) * eta - alpha * std::conj(eta)));
}

std::pair<double, double> mean_quadratures(StateKind kind, cplx alpha, double theta,
                                           const PhysicalConstants& pc) {
    pc.validate();
    require(std::isfinite(theta) && theta >= 0.0, ErrorKind::InvalidArgument,
            "theta must be finite and non-negative");
    const double factor = fig1_ordinate(kind, theta);
    // (alpha + alpha*) = 2 Re alpha,  i (alpha* - alpha) = 2 Im alpha
    return {pc.q_scale() * factor * 2.0 * alpha.real(),
            pc.p_scale() * factor * 2.0 * alpha.imag()};
}

double uncertainty_product(double theta, const PhysicalConstants& pc) {
    pc.validate();
    require(std::isfinite(theta) && theta >= 0.0, ErrorKind::InvalidArgument,
            "theta must be finite and non-negative");
    const double c = std::cosh(theta), s = std::sinh(theta);
    return 0.5 * pc.hbar * (c * c + s * s);
}

double fig1_ordinate(StateKind kind, double theta) {
    require(std::isfinite(theta) && theta >= 0.0, ErrorKind::InvalidArgument,
            "theta must be finite and non-negative");
    switch (kind) {
        case StateKind::Round: return std::exp(theta);
        case StateKind::Trotter: return expm1_over(theta);
        case StateKind::Double: return 1.0;
    }
    fail(ErrorKind::InvalidArgument, "unknown state kind");
}

QuadratureMoments numeric_quadrature_moments(const TwoModeState& psi,
                                             const PhysicalConstants& pc) {
    pc.validate();
    const int d = psi.dim_per_mode();
    const Vector& v = psi.amplitudes();
    const Vector lower = apply_lower(v, d, Slot::Ordinary);
    const Vector raise = apply_raise(v, d, Slot::Ordinary);
    const Vector qv = pc.q_scale() * (raise + lower);
    const Vector pv = cplx(0.0, pc.p_scale()) * (raise - lower);
    QuadratureMoments m;
    m.mean_Q = v.dot(qv).real();
    m.mean_P = v.dot(pv).real();
    m.var_Q = qv.squaredNorm() - m.mean_Q * m.mean_Q;
    m.var_P = pv.squaredNorm() - m.mean_P * m.mean_P;
    return m;
}

cplx numeric_cf(const TwoModeState& psi, cplx gamma, cplx gamma_p) {
    const int d = psi.dim_per_mode();
    Eigen::Map<const Matrix> map(psi.amplitudes().data(), d, d);  // map(t, o)
    const Matrix big_psi = map.transpose();                        // psi(o, t)
    const Matrix d1 = displacement_elements(gamma, d);
    const Matrix d2 = displacement_elements(gamma_p, d);
    return (big_psi.adjoint() * d1 * big_psi * d2.transpose()).trace();
}

cplx numeric_chi(const DensityMatrix& rho, cplx eta) {
    const Matrix dm = displacement_elements(eta, rho.dim());
    return rho.entries().cwiseProduct(dm.transpose()).sum();
}

}  // namespace tfdcs
