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
#include "tfdcs/quasiprob.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tfdcs/observables.hpp"

namespace tfdcs {

const char* to_string(QuasiKind kind) noexcept {
    switch (kind) {
        case QuasiKind::P: return "P";
        case QuasiKind::Q: return "Q";
        case QuasiKind::W: return "W";
    }
    return "?";
}

double GaussianQP::evaluate(cplx x) const {
    const double two_s2 = 2.0 * sigma * sigma;
    return std::exp(-std::norm(x - mean) / two_s2) / (std::numbers::pi * two_s2);
}

double mean_factor(StateKind kind, double theta) { return fig1_ordinate(kind, theta); }

QuasiDistribution p_rep(StateKind kind, cplx alpha, double theta) {
    const cplx mean = mean_factor(kind, theta) * alpha;
    if (theta == 0.0) return PointMass{mean, QuasiKind::P};
    return GaussianQP{mean, std::sinh(theta) / std::numbers::sqrt2, QuasiKind::P};
}

GaussianQP q_func(StateKind kind, cplx alpha, double theta) {
    return GaussianQP{mean_factor(kind, theta) * alpha, std::cosh(theta) / std::numbers::sqrt2,
                      QuasiKind::Q};
}

GaussianQP wigner(StateKind kind, cplx alpha, double theta) {
    return GaussianQP{mean_factor(kind, theta) * alpha, 0.5 * std::sqrt(std::cosh(2.0 * theta)),
                      QuasiKind::W};
}

double q_func_numeric(const DensityMatrix& rho, cplx mu, double tail_tol) {
    const SingleModeState coh = coherent_vector(mu, rho.dim(), tail_tol);
    const cplx v = coh.amplitudes.dot(rho.entries() * coh.amplitudes);
    return std::max(0.0, v.real()) / std::numbers::pi;
}

double q_func_truncated(const DensityMatrix& rho, cplx mu, double tail_tol) {
    const int need = std::max(rho.dim(), initial_cutoff(std::abs(mu), 0.0));
    for (int d = need;; d *= 2) {
        try {
            return q_func_numeric(d == rho.dim() ? rho : rho.padded(d), mu, tail_tol);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CutoffTooSmall || d > 4096) throw;
        }
    }
}

QuadratureSpec QuadratureSpec::for_sigma_q(double sigma_q) {
    QuadratureSpec spec;
    spec.half_width = 6.0 * std::max(1.0, sigma_q * std::numbers::sqrt2);
    return spec;
}

WignerQuadrature::WignerQuadrature(const DensityMatrix& rho, QuadratureSpec spec)
    : rho_(rho.entries()), spec_(spec) {
    require(spec_.half_width > 0.0 && spec_.initial_points >= 2 && spec_.tol > 0.0 &&
                spec_.max_refinements >= 1,
            ErrorKind::InvalidArgument, "invalid quadrature specification");
}

const WignerQuadrature::Level& WignerQuadrature::level(int k) {
    while (static_cast<int>(levels_.size()) <= k) {
        const int n = spec_.initial_points << levels_.size();
        const double h = 2.0 * spec_.half_width / n;
        const int dim = static_cast<int>(rho_.rows());
        Level lv{n, h, {}};
        lv.chi.resize(static_cast<size_t>(n + 1) * (n + 1));
        for (int i = 0; i <= n; ++i) {
            const double wx = (i == 0 || i == n) ? 0.5 : 1.0;
            for (int j = 0; j <= n; ++j) {
                const double wy = (j == 0 || j == n) ? 0.5 : 1.0;
                const cplx eta(-spec_.half_width + i * h, -spec_.half_width + j * h);
                const cplx chi = rho_.cwiseProduct(displacement_elements(eta, dim).transpose()).sum();
                lv.chi[static_cast<size_t>(i) * (n + 1) + j] = wx * wy * chi;
            }
        }
        levels_.push_back(std::move(lv));
    }
    return levels_[k];
}

double WignerQuadrature::integrate(const Level& lv, cplx mu) const {
    const int n = lv.intervals;
    const double h = lv.step;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            const cplx eta(-spec_.half_width + i * h, -spec_.half_width + j * h);
            // -eta mu* + eta* mu = 2i Im(eta* mu)
            const double phase = 2.0 * (std::conj(eta) * mu).imag();
            const cplx w = lv.chi[static_cast<size_t>(i) * (n + 1) + j];
            acc += w.real() * std::cos(phase) - w.imag() * std::sin(phase);
        }
    }
    return acc * h * h / (std::numbers::pi * std::numbers::pi);
}

double WignerQuadrature::operator()(cplx mu) {
    double previous = integrate(level(0), mu);
    for (int k = 1; k <= spec_.max_refinements; ++k) {
        const double current = integrate(level(k), mu);
        if (std::abs(current - previous) <= spec_.tol) return current;
        previous = current;
    }
    std::ostringstream os;
    os << "Wigner quadrature did not converge at mu=" << mu << " after "
       << spec_.max_refinements << " refinements";
    fail(ErrorKind::QuadratureNotConverged, os.str());
}

double wigner_numeric(const DensityMatrix& rho, cplx mu, const QuadratureSpec& spec) {
    WignerQuadrature quad(rho, spec);
    return quad(mu);
}

double completeness_constant(double theta) {
    require(std::isfinite(theta) && theta >= 0.0, ErrorKind::InvalidArgument,
            "theta must be finite and non-negative");
    const double k = std::cosh(theta) + std::sinh(theta);
    return k * k / std::numbers::pi;
}

namespace {

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

}  // namespace

Matrix resolve_identity_numeric(double theta, int d, int levels, double radius,
                                int radial_nodes, int angular_nodes) {
    require(levels >= 1 && levels <= d, ErrorKind::InvalidArgument,
            "levels must lie in [1, d]");
    require(radius > 0.0 && radial_nodes >= 2 && angular_nodes >= 2, ErrorKind::InvalidArgument,
            "invalid disk quadrature");
    const ThermalParams tp = thermal_from_theta(theta);
    const TwoModeState vac = thermal_vacuum(tp, CutoffPolicy::fixed(d, 1.0));
    const Matrix thermal = reduced_density(vac, Slot::Ordinary).entries();
    const double k = std::exp(theta);

    std::vector<double> xs, ws;
    gauss_legendre(radial_nodes, xs, ws);
    Matrix acc = Matrix::Zero(levels, levels);
    const double dphi = 2.0 * std::numbers::pi / angular_nodes;
    for (int i = 0; i < radial_nodes; ++i) {
        const double r = 0.5 * radius * (xs[i] + 1.0);
        const double wr = 0.5 * radius * ws[i] * r;
        for (int j = 0; j < angular_nodes; ++j) {
            const cplx alpha = std::polar(r, j * dphi);
            const Matrix dm = displacement_elements(k * alpha, d).topRows(levels);
            acc += (wr * dphi) * (dm * thermal * dm.adjoint());
        }
    }
    return completeness_constant(theta) * acc;
}

}  // namespace tfdcs
