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
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tfdcs/quasiprob.hpp"

using namespace tfdcs;

namespace {

constexpr double kPi = std::numbers::pi;

// Wigner function from the displaced parity, (2/pi) Tr[rho D(mu) Pi D(mu)^dag]
double parity_wigner(const Matrix& rho, cplx mu) {
    const int d = static_cast<int>(rho.rows());
    const int wide = d + 60;
    const oracle::Mat a = oracle::lower(wide);
    const oracle::Mat disp = oracle::expm(mu * a.adjoint() - std::conj(mu) * a);
    oracle::Mat parity = oracle::Mat::Zero(wide, wide);
    for (int n = 0; n < wide; ++n) parity(n, n) = (n % 2) ? -1.0 : 1.0;
    const oracle::Mat k = (disp * parity * disp.adjoint()).topLeftCorner(d, d);
    return 2.0 / kPi * (rho * k).trace().real();
}

double husimi(const Matrix& rho, cplx mu) {
    const int d = static_cast<int>(rho.rows());
    const oracle::Vec c = oracle::coherent(mu, d + 40).head(d);
    return c.dot(rho * c).real() / kPi;
}

DensityMatrix signal_of(StateKind kind, cplx alpha, double theta, int d) {
    const TwoModeState s = build_state(kind, DisplacementParams::tilde_invariant(alpha),
                                       thermal_from_theta(theta), CutoffPolicy::fixed(d, 1e-8));
    return reduced_density(s, Slot::Ordinary);
}

DensityMatrix pure(const Vector& v) { return DensityMatrix(v * v.adjoint()); }

}  // namespace

TEST_CASE("gaussian profile") {
    const GaussianQP g{cplx(0.5, -0.2), 0.7, QuasiKind::W};
    CHECK(std::abs(g.peak() - 1.0 / (2 * kPi * 0.49)) < 1e-15);
    // d^2 mu = dRe dIm, trapezoid over +-10 sigma
    const int n = 400;
    const double r = 10 * g.sigma, h = 2 * r / n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const double w = (i == 0 || i == n ? 0.5 : 1.0) * (j == 0 || j == n ? 0.5 : 1.0);
            sum += w * g.evaluate(g.mean + cplx(-r + i * h, -r + j * h));
        }
    CHECK(std::abs(sum * h * h - 1.0) < 1e-6);
    CHECK(std::string(to_string(QuasiKind::P)) == "P");
}

TEST_CASE("closed-form distributions") {
    const cplx a(1.3, -0.4);
    for (double th : {0.1, 0.4, 0.9, 1.7}) {
        for (StateKind k : kAllKinds) {
            const auto p = std::get<GaussianQP>(p_rep(k, a, th));
            const GaussianQP q = q_func(k, a, th), w = wigner(k, a, th);
            CHECK(p.mean == q.mean);
            CHECK(q.mean == w.mean);
            CHECK(std::abs(p.mean - mean_factor(k, th) * a) < 1e-15);
            CHECK(p.sigma < w.sigma);
            CHECK(w.sigma < q.sigma);
            CHECK(std::abs(q.sigma * q.sigma - p.sigma * p.sigma - 0.5) < 1e-14);
            CHECK(std::abs(2 * w.sigma * w.sigma - p.sigma * p.sigma - q.sigma * q.sigma) < 1e-14);
            CHECK(p.kind == QuasiKind::P);
        }
    }
    CHECK(std::get<GaussianQP>(p_rep(StateKind::Double, a, 0.4)).mean == a);
    CHECK(mean_factor(StateKind::Round, 0.7) == doctest::Approx(std::exp(0.7)));

    // figure two peaks
    for (double th : {0.4, 0.6, 0.8}) {
        const auto p = std::get<GaussianQP>(p_rep(StateKind::Trotter, 2.0, th));
        CHECK(std::abs(p.peak() - 1.0 / (kPi * std::sinh(th) * std::sinh(th))) < 1e-12);
        CHECK(std::abs(p.mean.real() - 2 * std::expm1(th) / th) < 1e-14);
    }

    const QuasiDistribution delta = p_rep(StateKind::Trotter, a, 0.0);
    REQUIRE(std::holds_alternative<PointMass>(delta));
    CHECK(std::get<PointMass>(delta).mean == a);

    for (int k = 2; k <= 5; ++k) {
        const double th = std::pow(10.0, -k);
        const auto p = std::get<GaussianQP>(p_rep(StateKind::Round, a, th));
        CHECK(std::abs(p.sigma * std::sqrt(2.0) / th - 1.0) < th);
        CHECK(std::abs(p.mean - a) < 2 * th * std::abs(a));
    }

    CHECK(q_func(StateKind::Round, a, 0.0).sigma == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(wigner(StateKind::Round, a, 0.0).sigma == doctest::Approx(0.5));
}

TEST_CASE("numeric Q function") {
    const int d = 30;
    Vector vac = Vector::Zero(d);
    vac(0) = 1.0;
    const cplx nu(0.6, -0.3);
    const DensityMatrix coh = pure(coherent_vector(nu, d).amplitudes);
    for (cplx mu : {cplx(0.0), cplx(0.5, 0.5), cplx(-1.0, 0.2)}) {
        CHECK(std::abs(q_func_numeric(pure(vac), mu) - std::exp(-std::norm(mu)) / kPi) < 1e-14);
        CHECK(std::abs(q_func_numeric(coh, mu) - std::exp(-std::norm(mu - nu)) / kPi) < 1e-12);
    }

    const DensityMatrix rho = signal_of(StateKind::Round, 1.0, 0.5, 50);
    const GaussianQP q = q_func(StateKind::Round, 1.0, 0.5);
    for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j) {
            const cplx mu = q.mean + q.sigma * cplx(i, j);
            const double v = q_func_numeric(rho, mu);
            CHECK(std::abs(v - q.evaluate(mu)) < 1e-7);
            CHECK(std::abs(v - husimi(rho.entries(), mu)) < 1e-12);
        }

    CHECK_THROWS_AS(q_func_numeric(pure(vac), cplx(8.0, 0.0)), Error);
}

TEST_CASE("numeric Wigner function") {
    SUBCASE("vacuum and coherent") {
        const int d = 20;
        Vector vac = Vector::Zero(d);
        vac(0) = 1.0;
        const cplx nu(0.4, 0.3);
        WignerQuadrature wv(pure(vac), QuadratureSpec{});
        WignerQuadrature wc(pure(coherent_vector(nu, d).amplitudes), QuadratureSpec{});
        for (cplx mu : {cplx(0.0), cplx(0.3, -0.2), cplx(-0.5, 0.6)}) {
            CHECK(std::abs(wv(mu) - 2 / kPi * std::exp(-2 * std::norm(mu))) < 1e-8);
            CHECK(std::abs(wc(mu) - 2 / kPi * std::exp(-2 * std::norm(mu - nu))) < 1e-8);
        }
    }

    SUBCASE("reduced thermal coherent states") {
        const int d = 35;
        for (auto [k, a, th] : {std::tuple{StateKind::Double, 0.8, 0.4},
                                std::tuple{StateKind::Round, 0.5, 0.3}}) {
            const DensityMatrix rho = signal_of(k, a, th, d);
            const GaussianQP w = wigner(k, a, th);
            const GaussianQP q = q_func(k, a, th);
            WignerQuadrature wq(rho, QuadratureSpec::for_sigma_q(q.sigma));
            for (int i = -4; i <= 4; i += 2)
                for (int j = -4; j <= 4; j += 4) {
                    const cplx mu = w.mean + w.sigma * cplx(i, j);
                    const double v = wq(mu);
                    CHECK(std::abs(v - w.evaluate(mu)) < 1e-6);
                    if (i == 0) CHECK(std::abs(v - parity_wigner(rho.entries(), mu)) < 1e-6);
                }
            CHECK(wq.levels_used() >= 2);
        }
    }

    SUBCASE("non-convergence is reported") {
        const int d = 20;
        const DensityMatrix rho = pure(coherent_vector(cplx(0.3, 0.0), d).amplitudes);
        QuadratureSpec spec;
        spec.initial_points = 4;
        spec.max_refinements = 1;
        spec.tol = 1e-14;
        try {
            wigner_numeric(rho, 0.2, spec);
            FAIL("expected QuadratureNotConverged");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::QuadratureNotConverged);
        }
    }
}

TEST_CASE("completeness") {
    CHECK(std::abs(completeness_constant(0.0) - 1 / kPi) < 1e-16);
    CHECK(std::abs(completeness_constant(0.5) - std::exp(1.0) / kPi) < 1e-15);
    const double th = 0.3;
    const double c = std::cosh(th) + std::sinh(th);
    CHECK(std::abs(completeness_constant(th) - c * c / kPi) < 1e-15);

    const Matrix id = resolve_identity_numeric(0.3, 12, 6, 6.0);
    REQUIRE(id.rows() == 6);
    CHECK(operator_norm(id - Matrix::Identity(6, 6)) <= 1e-3);

    // at theta = 0 this is the coherent-state resolution
    const Matrix id0 = resolve_identity_numeric(0.0, 12, 6, 7.0);
    CHECK(operator_norm(id0 - Matrix::Identity(6, 6)) <= 1e-6);
}
