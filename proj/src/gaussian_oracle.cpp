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
#include "tfdcs/gaussian_oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "tfdcs/equivalence.hpp"

namespace tfdcs {

Eigen::Matrix4d symplectic_form() {
    Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
    omega(0, 1) = 1.0;
    omega(1, 0) = -1.0;
    omega(2, 3) = 1.0;
    omega(3, 2) = -1.0;
    return omega;
}

double GaussianMoments::physicality_margin() const {
    const Eigen::Matrix4cd m =
        cov.cast<cplx>() + cplx(0.0, 0.5) * symplectic_form().cast<cplx>();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

GaussianMoments GaussianMoments::in_units(const PhysicalConstants& pc) const {
    pc.validate();
    const double q = std::sqrt(pc.hbar / pc.lambda);
    const double p = std::sqrt(pc.lambda * pc.hbar);
    const Eigen::Vector4d s(q, p, q, p);
    GaussianMoments out;
    out.mean = mean.cwiseProduct(s);
    out.cov = s.asDiagonal() * cov * s.asDiagonal();
    return out;
}

double ReducedGaussian::purity() const {
    return 1.0 / (2.0 * std::sqrt(cov.determinant()));
}

GaussianMoments moments_from_cf(StateKind kind, cplx alpha, cplx zeta, double theta) {
    require(std::isfinite(theta) && theta >= 0.0, ErrorKind::InvalidArgument,
            "theta must be finite and non-negative");
    cplx a = alpha, z = zeta;
    if (kind == StateKind::Double) {
        const MappedPair m = map_double_to_round(alpha, zeta, theta);
        a = m.alpha;
        z = m.zeta;
    } else if (kind == StateKind::Trotter) {
        const EquivalenceResult r = map_trotter_to_round(alpha, zeta, theta);
        a = r.alpha_prime;
        z = r.zeta_prime;
    }
    const double c = std::cosh(theta), s = std::sinh(theta);
    // First derivatives of the CF at the origin.
    const cplx mean_a = a * c + std::conj(z) * s;
    const cplx mean_t = z * c + std::conj(a) * s;
    GaussianMoments gm;
    const double r2 = std::numbers::sqrt2;
    gm.mean << r2 * mean_a.real(), r2 * mean_a.imag(), r2 * mean_t.real(), r2 * mean_t.imag();
    // Second derivatives: displacement independent.
    const double var = 0.5 * (c * c + s * s);
    const double cross = c * s;
    gm.cov.diagonal().setConstant(var);
    gm.cov(0, 2) = gm.cov(2, 0) = cross;
    gm.cov(1, 3) = gm.cov(3, 1) = -cross;
    return gm;
}

ReducedGaussian reduce_to_signal(const GaussianMoments& gm) {
    ReducedGaussian rg;
    rg.mean = gm.mean.head<2>();
    rg.cov = gm.cov.topLeftCorner<2, 2>();
    return rg;
}

QuasiDistribution reduced_to_qp(const ReducedGaussian& rg, QuasiKind which) {
    const double var = 0.5 * (rg.cov(0, 0) + rg.cov(1, 1));
    const double sw2 = 0.5 * var;
    const cplx mean = cplx(rg.mean(0), rg.mean(1)) / std::numbers::sqrt2;
    switch (which) {
        case QuasiKind::W: return GaussianQP{mean, std::sqrt(sw2), QuasiKind::W};
        case QuasiKind::Q: return GaussianQP{mean, std::sqrt(sw2 + 0.25), QuasiKind::Q};
        case QuasiKind::P: {
            const double sp2 = sw2 - 0.25;
            if (!(sp2 > 0.0)) return PointMass{mean, QuasiKind::P};
            return GaussianQP{mean, std::sqrt(sp2), QuasiKind::P};
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown quasiprobability kind");
}

GaussianMoments numeric_moments(const TwoModeState& psi) {
    const int d = psi.dim_per_mode();
    const Vector& v = psi.amplitudes();
    const double inv = 1.0 / std::numbers::sqrt2;
    std::array<Vector, 4> rv;
    for (int mode = 0; mode < 2; ++mode) {
        const Slot slot = mode == 0 ? Slot::Ordinary : Slot::Tilde;
        const Vector lo = apply_lower(v, d, slot);
        const Vector hi = apply_raise(v, d, slot);
        rv[2 * mode] = inv * (hi + lo);
        rv[2 * mode + 1] = cplx(0.0, inv) * (hi - lo);
    }
    GaussianMoments gm;
    for (int i = 0; i < 4; ++i) gm.mean(i) = v.dot(rv[i]).real();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            gm.cov(i, j) = rv[i].dot(rv[j]).real() - gm.mean(i) * gm.mean(j);
    return gm;
}

}  // namespace tfdcs
