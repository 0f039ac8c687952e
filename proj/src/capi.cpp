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
#include "tfdcs/tfdcs.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "tfdcs/equivalence.hpp"
#include "tfdcs/observables.hpp"
#include "tfdcs/opo.hpp"
#include "tfdcs/quasiprob.hpp"
#include "tfdcs/tfd_states.hpp"
#include "tfdcs/verify.hpp"

struct tfdcs_state {
    tfdcs::TwoModeState state;
};

struct tfdcs_density {
    tfdcs::DensityMatrix rho;
};

struct tfdcs_report {
    tfdcs::VerifyReport report;
    std::string text;
    std::string json;
};

namespace {

using tfdcs::cplx;
using tfdcs::ErrorKind;

thread_local std::string last_error;

tfdcs_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return TFDCS_ERR_INVALID_ARGUMENT;
        case ErrorKind::InvalidCutoff: return TFDCS_ERR_INVALID_CUTOFF;
        case ErrorKind::DimensionMismatch: return TFDCS_ERR_DIMENSION_MISMATCH;
        case ErrorKind::CutoffTooSmall: return TFDCS_ERR_CUTOFF_TOO_SMALL;
        case ErrorKind::NonFinite: return TFDCS_ERR_NON_FINITE;
        case ErrorKind::NotHermitian: return TFDCS_ERR_NOT_HERMITIAN;
        case ErrorKind::Degenerate: return TFDCS_ERR_DEGENERATE;
        case ErrorKind::QuadratureNotConverged: return TFDCS_ERR_QUADRATURE;
    }
    return TFDCS_ERR_INTERNAL;
}

template <class F>
tfdcs_status guarded(F&& body) {
    try {
        body();
        return TFDCS_OK;
    } catch (const tfdcs::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return TFDCS_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return TFDCS_ERR_INTERNAL;
    }
}

tfdcs_status null_argument(const char* what) {
    last_error = std::string("null argument: ") + what;
    return TFDCS_ERR_INVALID_ARGUMENT;
}

cplx in(tfdcs_complex z) { return {z.re, z.im}; }
tfdcs_complex out(cplx z) { return {z.real(), z.imag()}; }

tfdcs::StateKind kind_of(tfdcs_kind k) {
    switch (k) {
        case TFDCS_ROUND: return tfdcs::StateKind::Round;
        case TFDCS_DOUBLE: return tfdcs::StateKind::Double;
        case TFDCS_TROTTER: return tfdcs::StateKind::Trotter;
    }
    tfdcs::fail(ErrorKind::InvalidArgument, "unknown state kind");
}

tfdcs::CutoffPolicy policy_of(const tfdcs_cutoff* c) {
    if (!c) return tfdcs::CutoffPolicy::adaptive();
    tfdcs::require(c->cutoff >= 0, ErrorKind::InvalidCutoff, "cutoff must be >= 0");
    tfdcs::require(c->tail_tol > 0.0, ErrorKind::InvalidArgument, "tail tolerance must be > 0");
    if (c->cutoff > 0) return tfdcs::CutoffPolicy::fixed(c->cutoff, c->tail_tol);
    return tfdcs::CutoffPolicy::adaptive(c->tail_tol, c->max_dim > 0 ? c->max_dim : 256);
}

tfdcs::PhysicalConstants constants_of(const tfdcs_constants* c) {
    tfdcs::PhysicalConstants pc;
    if (c) {
        pc.hbar = c->hbar;
        pc.lambda = c->lambda;
        pc.epsilon = c->epsilon;
    }
    pc.validate();
    return pc;
}

tfdcs::DisplacementParams displacement(tfdcs_complex a, tfdcs_complex z) {
    return tfdcs::DisplacementParams::general(in(a), in(z));
}

tfdcs::OpoParams opo_of(const tfdcs_opo& p) {
    tfdcs::OpoParams op;
    op.chi2 = p.chi2;
    op.g_s = in(p.g_s);
    op.g_i = in(p.g_i);
    op.T1 = p.t1;
    op.T2 = p.t2;
    op.N = p.n;
    op.hbar = p.hbar;
    op.validate();
    return op;
}

}  // namespace

extern "C" {

const char* tfdcs_version(void) { return "1.0.0"; }

const char* tfdcs_last_error(void) { return last_error.c_str(); }

const char* tfdcs_status_name(tfdcs_status status) {
    switch (status) {
        case TFDCS_OK: return "ok";
        case TFDCS_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TFDCS_ERR_INVALID_CUTOFF: return "invalid cutoff";
        case TFDCS_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
        case TFDCS_ERR_CUTOFF_TOO_SMALL: return "cutoff too small";
        case TFDCS_ERR_NON_FINITE: return "non-finite value";
        case TFDCS_ERR_NOT_HERMITIAN: return "not Hermitian";
        case TFDCS_ERR_DEGENERATE: return "degenerate distribution";
        case TFDCS_ERR_QUADRATURE: return "quadrature not converged";
        case TFDCS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

tfdcs_cutoff tfdcs_cutoff_default(void) {
    const tfdcs::CutoffPolicy p = tfdcs::CutoffPolicy::adaptive();
    return {0, p.tail_tol, p.max_dim};
}

tfdcs_constants tfdcs_constants_default(void) { return {1.0, 1.0, 1.0}; }

tfdcs_status tfdcs_theta_of_beta(double beta, double epsilon, double* theta) {
    if (!theta) return null_argument("theta");
    return guarded([&] { *theta = tfdcs::theta_of_beta(beta, epsilon).theta; });
}

tfdcs_status tfdcs_map_trotter_to_round(tfdcs_complex alpha, tfdcs_complex zeta, double theta,
                                        tfdcs_equivalence* result) {
    if (!result) return null_argument("out");
    return guarded([&] {
        const tfdcs::EquivalenceResult r = tfdcs::map_trotter_to_round(in(alpha), in(zeta), theta);
        *result = {out(r.alpha_prime), out(r.zeta_prime), r.phase};
    });
}

tfdcs_status tfdcs_map_double_to_round(tfdcs_complex alpha, tfdcs_complex zeta, double theta,
                                       tfdcs_complex* alpha_out, tfdcs_complex* zeta_out) {
    if (!alpha_out || !zeta_out) return null_argument("out");
    return guarded([&] {
        const tfdcs::MappedPair m = tfdcs::map_double_to_round(in(alpha), in(zeta), theta);
        *alpha_out = out(m.alpha);
        *zeta_out = out(m.zeta);
    });
}

tfdcs_status tfdcs_state_build(tfdcs_kind kind, tfdcs_complex alpha, tfdcs_complex zeta,
                               double theta, const tfdcs_cutoff* cutoff, tfdcs_state** result) {
    if (!result) return null_argument("out");
    *result = nullptr;
    return guarded([&] {
        tfdcs::TwoModeState s = tfdcs::build_state(kind_of(kind), displacement(alpha, zeta),
                                                   tfdcs::thermal_from_theta(theta),
                                                   policy_of(cutoff));
        *result = new tfdcs_state{std::move(s)};
    });
}

tfdcs_status tfdcs_state_build_trotter_finite(tfdcs_complex alpha, tfdcs_complex zeta,
                                              double theta, int slices,
                                              const tfdcs_cutoff* cutoff, tfdcs_state** result) {
    if (!result) return null_argument("out");
    *result = nullptr;
    return guarded([&] {
        tfdcs::TwoModeState s =
            tfdcs::build_trotter_finite(displacement(alpha, zeta), tfdcs::thermal_from_theta(theta),
                                        slices, policy_of(cutoff));
        *result = new tfdcs_state{std::move(s)};
    });
}

void tfdcs_state_free(tfdcs_state* state) { delete state; }

int tfdcs_state_dim(const tfdcs_state* state) {
    return state ? state->state.dim_per_mode() : 0;
}

double tfdcs_state_tail_mass(const tfdcs_state* state) {
    return state ? state->state.tail_mass() : 0.0;
}

tfdcs_status tfdcs_state_amplitudes(const tfdcs_state* state, tfdcs_complex* buffer,
                                    size_t length) {
    if (!state || !buffer) return null_argument("state/buffer");
    const tfdcs::Vector& v = state->state.amplitudes();
    if (length < static_cast<size_t>(v.size())) {
        last_error = "buffer shorter than d*d";
        return TFDCS_ERR_DIMENSION_MISMATCH;
    }
    for (Eigen::Index i = 0; i < v.size(); ++i) buffer[i] = out(v(i));
    return TFDCS_OK;
}

tfdcs_status tfdcs_state_distance(const tfdcs_state* reference, const tfdcs_state* candidate,
                                  double* result) {
    if (!reference || !candidate || !result) return null_argument("state/out");
    return guarded([&] {
        tfdcs::require(reference->state.dim_per_mode() == candidate->state.dim_per_mode(),
                       ErrorKind::DimensionMismatch, "states have different cutoffs");
        *result = tfdcs::phase_aligned_distance(reference->state.amplitudes(),
                                                candidate->state.amplitudes());
    });
}

tfdcs_status tfdcs_state_quadratures(const tfdcs_state* state, const tfdcs_constants* constants,
                                     tfdcs_moments* result) {
    if (!state || !result) return null_argument("state/out");
    return guarded([&] {
        const tfdcs::QuadratureMoments m =
            tfdcs::numeric_quadrature_moments(state->state, constants_of(constants));
        *result = {m.mean_Q, m.mean_P, m.var_Q, m.var_P};
    });
}

tfdcs_status tfdcs_state_xi_residual(const tfdcs_state* state, double theta, tfdcs_complex f,
                                     double* result) {
    if (!state || !result) return null_argument("state/out");
    return guarded([&] {
        *result = tfdcs::xi_residual(tfdcs::thermal_from_theta(theta), state->state, in(f));
    });
}

tfdcs_status tfdcs_state_signal(const tfdcs_state* state, tfdcs_density** result) {
    if (!state || !result) return null_argument("state/out");
    *result = nullptr;
    return guarded([&] {
        *result = new tfdcs_density{tfdcs::reduced_density(state->state, tfdcs::Slot::Ordinary)};
    });
}

void tfdcs_density_free(tfdcs_density* rho) { delete rho; }

int tfdcs_density_dim(const tfdcs_density* rho) { return rho ? rho->rho.dim() : 0; }

double tfdcs_density_purity(const tfdcs_density* rho) { return rho ? rho->rho.purity() : 0.0; }

double tfdcs_density_mean_number(const tfdcs_density* rho) {
    return rho ? rho->rho.mean_number() : 0.0;
}

tfdcs_status tfdcs_density_q_function(const tfdcs_density* rho, tfdcs_complex mu,
                                      double* result) {
    if (!rho || !result) return null_argument("rho/out");
    return guarded([&] { *result = tfdcs::q_func_truncated(rho->rho, in(mu)); });
}

tfdcs_status tfdcs_density_wigner(const tfdcs_density* rho, tfdcs_complex mu, double* result) {
    if (!rho || !result) return null_argument("rho/out");
    return guarded([&] {
        const double sq = std::sqrt(rho->rho.mean_number() + 0.5);
        *result = tfdcs::wigner_numeric(rho->rho, in(mu), tfdcs::QuadratureSpec::for_sigma_q(sq));
    });
}

tfdcs_status tfdcs_xi_eigenvalue(tfdcs_kind kind, tfdcs_complex alpha, tfdcs_complex zeta,
                                 double theta, tfdcs_complex* result) {
    if (!result) return null_argument("out");
    return guarded([&] {
        *result = out(tfdcs::xi_eigenvalue(kind_of(kind), displacement(alpha, zeta),
                                           tfdcs::thermal_from_theta(theta)));
    });
}

tfdcs_status tfdcs_fig1_ordinate(tfdcs_kind kind, double theta, double* result) {
    if (!result) return null_argument("out");
    return guarded([&] { *result = tfdcs::fig1_ordinate(kind_of(kind), theta); });
}

tfdcs_status tfdcs_mean_quadratures(tfdcs_kind kind, tfdcs_complex alpha, double theta,
                                    const tfdcs_constants* constants, double* mean_q,
                                    double* mean_p) {
    if (!mean_q || !mean_p) return null_argument("out");
    return guarded([&] {
        const auto [q, p] =
            tfdcs::mean_quadratures(kind_of(kind), in(alpha), theta, constants_of(constants));
        *mean_q = q;
        *mean_p = p;
    });
}

tfdcs_status tfdcs_uncertainty_product(double theta, const tfdcs_constants* constants,
                                       double* result) {
    if (!result) return null_argument("out");
    return guarded([&] { *result = tfdcs::uncertainty_product(theta, constants_of(constants)); });
}

tfdcs_status tfdcs_quasi(tfdcs_qp_kind which, tfdcs_kind kind, tfdcs_complex alpha, double theta,
                         tfdcs_gaussian* result) {
    if (!result) return null_argument("out");
    return guarded([&] {
        const tfdcs::StateKind k = kind_of(kind);
        tfdcs::QuasiDistribution dist;
        switch (which) {
            case TFDCS_QP_P: dist = tfdcs::p_rep(k, in(alpha), theta); break;
            case TFDCS_QP_Q: dist = tfdcs::q_func(k, in(alpha), theta); break;
            case TFDCS_QP_W: dist = tfdcs::wigner(k, in(alpha), theta); break;
            default: tfdcs::fail(ErrorKind::InvalidArgument, "unknown quasiprobability kind");
        }
        if (const auto* g = std::get_if<tfdcs::GaussianQP>(&dist)) {
            *result = {out(g->mean), g->sigma, 0};
        } else {
            *result = {out(std::get<tfdcs::PointMass>(dist).mean), 0.0, 1};
        }
    });
}

double tfdcs_gaussian_eval(const tfdcs_gaussian* g, tfdcs_complex x) {
    if (!g || g->point_mass || !(g->sigma > 0.0)) return 0.0;
    return tfdcs::GaussianQP{in(g->mean), g->sigma, tfdcs::QuasiKind::P}.evaluate(in(x));
}

tfdcs_status tfdcs_opo_sliced_distance(const tfdcs_opo* params, int d, double* result) {
    if (!params || !result) return null_argument("params/out");
    return guarded([&] {
        const tfdcs::OpoParams op = opo_of(*params);
        const tfdcs::Matrix diff =
            tfdcs::sliced_unitary(op, d).entries() - tfdcs::closed_unitary(op, d).entries();
        *result = tfdcs::operator_norm(diff);
    });
}

tfdcs_status tfdcs_opo_closed_state(const tfdcs_opo* params, const tfdcs_cutoff* cutoff,
                                    tfdcs_state** result) {
    if (!params || !result) return null_argument("params/out");
    *result = nullptr;
    return guarded([&] {
        *result = new tfdcs_state{tfdcs::closed_state(opo_of(*params), policy_of(cutoff))};
    });
}

tfdcs_verify_config tfdcs_verify_config_default(void) {
    const tfdcs::VerifyConfig c;
    return {c.seed, c.tail_tol, c.grid_points, c.sabotage ? 1 : 0, {1.0, 1.0, 1.0}};
}

tfdcs_status tfdcs_verify(const tfdcs_verify_config* config, tfdcs_report** result) {
    if (!config || !result) return null_argument("config/out");
    *result = nullptr;
    return guarded([&] {
        tfdcs::VerifyConfig vc;
        vc.seed = config->seed;
        vc.tail_tol = config->tail_tol;
        vc.grid_points = config->grid_points;
        vc.sabotage = config->sabotage != 0;
        vc.constants = constants_of(&config->constants);
        tfdcs::VerifyReport r = tfdcs::run_verification(vc);
        std::string text = r.text();
        std::string json = r.json();
        *result = new tfdcs_report{std::move(r), std::move(text), std::move(json)};
    });
}

void tfdcs_report_free(tfdcs_report* report) { delete report; }

int tfdcs_report_passed(const tfdcs_report* report) {
    return report && report->report.all_passed() ? 1 : 0;
}

int tfdcs_report_failures(const tfdcs_report* report) {
    return report ? report->report.failures() : 0;
}

const char* tfdcs_report_text(const tfdcs_report* report) {
    return report ? report->text.c_str() : "";
}

const char* tfdcs_report_json(const tfdcs_report* report) {
    return report ? report->json.c_str() : "";
}

}  // extern "C"
