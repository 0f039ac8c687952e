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
#include "tfdcs/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "tfdcs/equivalence.hpp"
#include "tfdcs/gaussian_oracle.hpp"
#include "tfdcs/opo.hpp"
#include "tfdcs/quasiprob.hpp"
#include "tfdcs/tfd_states.hpp"

namespace tfdcs {

void VerifyConfig::validate() const {
    require(tail_tol > 0.0 && tail_tol <= 1e-4, ErrorKind::InvalidArgument,
            "tail tolerance must lie in (0, 1e-4]");
    require(grid_points >= 1, ErrorKind::InvalidArgument, "grid_points must be >= 1");
    constants.validate();
}

bool VerifyReport::all_passed() const { return failures() == 0; }

int VerifyReport::failures() const {
    int n = 0;
    for (const auto& r : results) n += r.passed ? 0 : 1;
    return n;
}

std::string VerifyReport::text() const {
    std::ostringstream os;
    os.precision(3);
    for (const auto& r : results) {
        os << (r.passed ? "ok    " : "FAILED") << "  " << r.name << "  [" << r.params
           << "]  value=" << std::scientific << r.value << " tol=" << r.tolerance
           << std::defaultfloat << '\n';
    }
    os << results.size() - failures() << "/" << results.size() << " properties passed\n";
    return os.str();
}

std::string VerifyReport::json() const {
    nlohmann::ordered_json doc;
    doc["schema"] = "tfdcs.verify/1";
    doc["seed"] = config.seed;
    doc["sabotage"] = config.sabotage;
    doc["tail_tol"] = config.tail_tol;
    doc["grid_points"] = config.grid_points;
    doc["passed"] = all_passed();
    doc["total"] = results.size();
    doc["failed"] = failures();
    auto& props = doc["properties"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        props.push_back({{"name", r.name},
                         {"params", r.params},
                         {"value", r.value},
                         {"tolerance", r.tolerance},
                         {"passed", r.passed}});
    }
    return doc.dump(2) + "\n";
}

namespace {

struct Sample {
    cplx alpha;
    double theta;
};

std::string describe(const char* kind, cplx a, cplx z, double theta) {
    std::ostringstream os;
    os.precision(6);
    if (kind) os << "kind=" << kind << " ";
    os << "alpha=" << a.real() << (a.imag() < 0 ? "" : "+") << a.imag() << "i"
       << " zeta=" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i"
       << " theta=" << theta;
    return os.str();
}

class Collector {
  public:
    explicit Collector(VerifyReport& report) : report_(report) {}

    void upper(const std::string& name, const std::string& params, double value, double tol) {
        report_.results.push_back({name, params, value, tol, std::isfinite(value) && value <= tol});
    }
    void flag(const std::string& name, const std::string& params, double value, bool ok) {
        report_.results.push_back({name, params, value, 0.0, ok});
    }

  private:
    VerifyReport& report_;
};

EquivalenceResult trotter_map(cplx a, cplx z, double theta, bool sabotage) {
    EquivalenceResult m = map_trotter_to_round(a, z, theta);
    if (sabotage && theta > 0.0) {
        // the (1 - cosh theta) cross term with its sign flipped
        const double s = std::sinh(theta) / theta;
        const double c = (1.0 - std::cosh(theta)) / theta;
        m.alpha_prime = a * s - std::conj(z) * c;
        m.zeta_prime = z * s - std::conj(a) * c;
    }
    return m;
}

double moment_gap(const GaussianMoments& a, const GaussianMoments& b) {
    return std::max((a.mean - b.mean).cwiseAbs().maxCoeff(),
                    (a.cov - b.cov).cwiseAbs().maxCoeff());
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& config) {
    config.validate();
    VerifyReport report;
    report.config = config;
    Collector out(report);

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> modulus(0.0, 1.2), phase(0.0, 2 * std::numbers::pi),
        angle(0.05, 0.8);
    std::vector<Sample> grid;
    for (int i = 0; i < config.grid_points; ++i) {
        const double r = modulus(rng), ph = phase(rng);
        grid.push_back({std::polar(r, ph), angle(rng)});
    }
    const CutoffPolicy policy = CutoffPolicy::adaptive(config.tail_tol);
    const PhysicalConstants& pc = config.constants;

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const cplx a = grid[i].alpha;
        const double th = grid[i].theta;
        const DisplacementParams dp = DisplacementParams::tilde_invariant(a);
        const ThermalParams tp = thermal_from_theta(th, pc.epsilon);
        const std::string where = describe(nullptr, a, dp.zeta(), th);

        // equivalence maps
        const EquivalenceResult m = trotter_map(a, dp.zeta(), th, config.sabotage);
        out.flag("equivalence.tilde_phase_zero", where, m.phase, m.phase == 0.0);
        const TwoModeState trotter = build_state(StateKind::Trotter, dp, tp, policy);
        const int d = trotter.dim_per_mode();
        const TwoModeState mapped =
            build_state(StateKind::Round, DisplacementParams::general(m.alpha_prime, m.zeta_prime),
                        tp, CutoffPolicy::fixed(d, 1.0));
        out.upper("equivalence.trotter_round", where,
                  (trotter.amplitudes() - std::polar(1.0, m.phase) * mapped.amplitudes()).norm(),
                  1e-9);

        // an independent zeta exercises the phase
        const cplx zg = std::polar(modulus(rng), phase(rng));
        const EquivalenceResult mg = trotter_map(a, zg, th, config.sabotage);
        const TwoModeState tg =
            build_state(StateKind::Trotter, DisplacementParams::general(a, zg), tp, policy);
        const TwoModeState rg = build_state(
            StateKind::Round, DisplacementParams::general(mg.alpha_prime, mg.zeta_prime), tp,
            CutoffPolicy::fixed(tg.dim_per_mode(), 1.0));
        out.upper("equivalence.trotter_round_phase", describe(nullptr, a, zg, th),
                  (tg.amplitudes() - std::polar(1.0, mg.phase) * rg.amplitudes()).norm(), 1e-9);

        const MappedPair dm = map_double_to_round(a, dp.zeta(), th);
        const TwoModeState dbl = build_state(StateKind::Double, dp, tp, policy);
        const TwoModeState dbl_round =
            build_state(StateKind::Round, DisplacementParams::general(dm.alpha, dm.zeta), tp,
                        CutoffPolicy::fixed(dbl.dim_per_mode(), 1.0));
        out.upper("equivalence.double_round", where,
                  (dbl.amplitudes() - dbl_round.amplitudes()).norm(), 1e-9);

        const TwoModeState round = build_state(StateKind::Round, dp, tp, policy);
        const TwoModeState* states[] = {&round, &dbl, &trotter};
        for (int k = 0; k < 3; ++k) {
            const StateKind kind = kAllKinds[k];
            const TwoModeState& s = *states[k];
            const std::string at = describe(to_string(kind), a, dp.zeta(), th);
            out.upper("xi.eigen_residual", at,
                      xi_residual(tp, s, xi_eigenvalue(kind, dp, tp)), 1e-6);

            const QuadratureMoments qm = numeric_quadrature_moments(s, pc);
            const double closed = uncertainty_product(th, pc);
            out.upper("uncertainty.product", at, std::abs(qm.uncertainty_product() - closed), 1e-7);
            out.flag("uncertainty.heisenberg_bound", at, qm.uncertainty_product(),
                     qm.uncertainty_product() >= pc.hbar / 2 * (1.0 - 1e-12));
            const auto [mq, mp] = mean_quadratures(kind, a, th, pc);
            out.upper("observables.mean_quadratures", at,
                      std::max(std::abs(qm.mean_Q - mq), std::abs(qm.mean_P - mp)), 1e-7);

            out.upper("gaussian_oracle.moments", at,
                      moment_gap(moments_from_cf(kind, a, dp.zeta(), th), numeric_moments(s)), 1e-8);
        }
        out.upper("xi.round_eigenvalue", where,
                  std::abs(xi_eigenvalue(StateKind::Round, dp, tp) - a), 1e-12);

        // quasiprobabilities of the reduced round state
        const DensityMatrix rho = reduced_density(round, Slot::Ordinary);
        const GaussianQP q = q_func(StateKind::Round, a, th);
        double q_err = 0.0;
        for (int u = -1; u <= 1; ++u)
            for (int v = -1; v <= 1; ++v) {
                const cplx mu = q.mean + 2.0 * q.sigma * cplx(u, v);
                q_err = std::max(q_err, std::abs(q_func_truncated(rho, mu) - q.evaluate(mu)));
            }
        out.upper("quasiprob.q_function", where, q_err, 1e-6);

        const auto p = std::get<GaussianQP>(p_rep(StateKind::Round, a, th));
        const GaussianQP w = wigner(StateKind::Round, a, th);
        const double sp2 = p.sigma * p.sigma, sq2 = q.sigma * q.sigma, sw2 = w.sigma * w.sigma;
        out.upper("quasiprob.width_identities", where,
                  std::max(std::abs(sq2 - sp2 - 0.5), std::abs(2 * sw2 - sp2 - sq2)), 1e-14);

        if (i == 0) {
            WignerQuadrature wq(rho, QuadratureSpec::for_sigma_q(q.sigma));
            double w_err = 0.0;
            for (cplx off : {cplx(0.0), cplx(2.0, 0.0), cplx(-1.0, 3.0)}) {
                const cplx mu = w.mean + w.sigma * off;
                w_err = std::max(w_err, std::abs(wq(mu) - w.evaluate(mu)));
            }
            out.upper("quasiprob.wigner", where, w_err, 1e-6);
        }

        const ImproperEigenvector ie = improper_eigenvector(a, tp, policy);
        out.flag("xi.improper_tilde_violation", where, ie.tilde_violation,
                 a == cplx(0.0) ? ie.tilde_violation == 0.0 : ie.tilde_violation > 0.0);

        // OPO with gamma_s = alpha, gamma_i = alpha*
        if (i < 2) {
            OpoParams op;
            op.chi2 = 1.0;
            op.T1 = th;
            op.T2 = 1.0;
            op.g_s = a;
            op.g_i = std::conj(a);
            op.hbar = pc.hbar;
            const TwoModeState cs = closed_state(op, policy);
            const TwoModeState ts = build_state(StateKind::Trotter, dp, tp,
                                                CutoffPolicy::fixed(cs.dim_per_mode(), 1.0));
            out.upper("opo.identification", where, (cs.amplitudes() - ts.amplitudes()).norm(), 1e-9);
            const DensityMatrix sig = reduced_density(cs, Slot::Ordinary);
            out.upper("opo.signal_purity", where, std::abs(sig.purity() - 1.0 / std::cosh(2 * th)),
                      1e-6);
            const double n_closed =
                std::norm(fig1_ordinate(StateKind::Trotter, th) * a) + tp.occupancy();
            out.upper("opo.mean_photon_number", where, std::abs(sig.mean_number() - n_closed), 1e-6);
        }
    }
    return report;
}

}  // namespace tfdcs
