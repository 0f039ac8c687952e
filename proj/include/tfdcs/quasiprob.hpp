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

// P-, Q- and Wigner distributions of the signal mode. For tilde-invariant
// thermal coherent states all three are isotropic Gaussians
//
//     G(x; mean, sigma) = exp(-|x - mean|^2 / (2 sigma^2)) / (2 pi sigma^2)
//
// on the complex plane, with d^2 mu = dRe(mu) dIm(mu).

#include <variant>

#include "tfdcs/fockspace.hpp"
#include "tfdcs/tfd_states.hpp"

namespace tfdcs {

enum class QuasiKind { P, Q, W };

const char* to_string(QuasiKind kind) noexcept;

struct GaussianQP {
    cplx mean;
    double sigma;
    QuasiKind kind;

    double evaluate(cplx x) const;
    double peak() const { return evaluate(mean); }
};

/// Zero-width limit (delta function at mean), returned where a Gaussian
/// width would vanish.
struct PointMass {
    cplx mean;
    QuasiKind kind;
};

using QuasiDistribution = std::variant<GaussianQP, PointMass>;

/// Kind-dependent mean amplitude multiplier: e^theta, (e^theta-1)/theta, 1.
double mean_factor(StateKind kind, double theta);

/// sigma = sinh(theta)/sqrt(2); PointMass at theta = 0.
QuasiDistribution p_rep(StateKind kind, cplx alpha, double theta);
/// sigma = cosh(theta)/sqrt(2).
GaussianQP q_func(StateKind kind, cplx alpha, double theta);
/// sigma = sqrt(cosh 2 theta)/2.
GaussianQP wigner(StateKind kind, cplx alpha, double theta);

/// (1/pi) <mu|rho|mu>.
double q_func_numeric(const DensityMatrix& rho, cplx mu, double tail_tol = kDefaultTailTol);

/// q_func_numeric for a state truncated to rho.dim() levels: rho is
/// zero-padded until the coherent vector at mu fits.
double q_func_truncated(const DensityMatrix& rho, cplx mu, double tail_tol = kDefaultTailTol);

struct QuadratureSpec {
    double half_width = 6.0;     // integration square [-R, R]^2 in the eta plane
    int initial_points = 64;     // intervals per axis on the first level
    double tol = 1e-8;           // successive-refinement agreement
    int max_refinements = 3;

    /// R = 6 max(1, sigma_Q sqrt 2).
    static QuadratureSpec for_sigma_q(double sigma_q);
};

/// Wigner function by two-dimensional trapezoid quadrature of
///   W(mu) = (1/pi^2) int chi(eta) exp(-eta mu* + eta* mu) d^2 eta
/// with chi(eta) = Tr[rho D(eta)]. chi is tabulated once per refinement
/// level, so repeated evaluation on a grid is cheap.
class WignerQuadrature {
  public:
    WignerQuadrature(const DensityMatrix& rho, QuadratureSpec spec);

    /// Throws QuadratureNotConverged when the finest two levels disagree.
    double operator()(cplx mu);

    int levels_used() const noexcept { return static_cast<int>(levels_.size()); }

  private:
    struct Level {
        int intervals;
        double step;
        std::vector<cplx> chi;  // (intervals+1)^2 weighted samples
    };

    const Level& level(int k);
    double integrate(const Level& lv, cplx mu) const;

    Matrix rho_;
    QuadratureSpec spec_;
    std::vector<Level> levels_;
};

double wigner_numeric(const DensityMatrix& rho, cplx mu, const QuadratureSpec& spec);

/// (1/pi)(cosh theta + sinh theta)^2 = e^{2 theta}/pi.
double completeness_constant(double theta);

/// completeness_constant(theta) * int_{|alpha| <= radius} rho(alpha) d^2 alpha,
/// restricted to Fock levels 0..levels-1, where rho(alpha) is the signal
/// reduction of the tilde-invariant U.D state. The thermal part is taken from
/// the truncated thermal vacuum at cutoff d; the displacement uses exact
/// matrix elements. Polar Gauss-Legendre x trapezoid quadrature.
Matrix resolve_identity_numeric(double theta, int d, int levels, double radius,
                                int radial_nodes = 80, int angular_nodes = 64);

}  // namespace tfdcs
