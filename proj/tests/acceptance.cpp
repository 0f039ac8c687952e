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
// Acceptance suite: one PASS/FAIL line per criterion. Criteria 1-4 drive the
// command-line front end; the rest use the library directly against the
// oracles in this directory.

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cf_fd.hpp"
#include "cli.hpp"
#include "oracles.hpp"
#include "product_check.hpp"
#include "tfdcs/equivalence.hpp"
#include "tfdcs/errors.hpp"
#include "tfdcs/gaussian_oracle.hpp"
#include "tfdcs/observables.hpp"
#include "tfdcs/opo.hpp"
#include "tfdcs/quasiprob.hpp"
#include "tfdcs/tfd_states.hpp"

using namespace tfdcs;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed;
    std::string detail;
};

// worst observed value against a bound
struct Worst {
    double value = 0.0;
    bool ok = true;
    void below(double v, double tol) {
        value = std::max(value, v);
        ok = ok && std::isfinite(v) && v <= tol;
    }
};

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

fs::path workdir() {
    const fs::path p = fs::temp_directory_path() / "tfdcs_acceptance";
    fs::create_directories(p);
    return p;
}

int cli(std::vector<std::string> args) {
    args.insert(args.begin(), "tfdcs");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    return tfdcs::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

struct Csv {
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> comments;
};

Csv read_csv(const fs::path& p) {
    Csv c;
    std::ifstream f(p);
    std::string line;
    std::getline(f, line);
    while (std::getline(f, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (line.rfind("# ", 0) == 0) {
            c.comments.emplace_back(cells[0].substr(2), std::stod(cells[1]));
            continue;
        }
        std::vector<double> row;
        for (const auto& s : cells) row.push_back(std::stod(s));
        c.rows.push_back(row);
    }
    return c;
}

double gauss(double x, double mean, double sigma) {
    return std::exp(-(x - mean) * (x - mean) / (2 * sigma * sigma)) / (2 * kPi * sigma * sigma);
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

DensityMatrix signal(const TwoModeState& s) { return reduced_density(s, Slot::Ordinary); }

// (|alpha|, arg alpha, theta) grid shared by several criteria
struct GridPoint {
    cplx alpha;
    double theta;
};

std::vector<GridPoint> grid3() {
    std::vector<GridPoint> g;
    for (double r : {0.0, 0.6, 1.2})
        for (double ph : {0.0, 2 * kPi / 3, 4 * kPi / 3})
            for (double th : {0.2, 0.5, 0.8}) g.push_back({std::polar(r, ph), th});
    return g;
}

const CutoffPolicy kFine = CutoffPolicy::adaptive(1e-20);

// ---------------------------------------------------------------------------

Outcome fig1() {
    const auto t0 = std::chrono::steady_clock::now();
    const fs::path p = workdir() / "fig1.csv";
    if (cli({"--out", p.string(), "fig1", "--theta-min", "0", "--theta-max", "2", "--steps", "200"}) != 0)
        return {false, "fig1 command failed"};
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const Csv c = read_csv(p);
    Worst w;
    bool order = c.rows.size() == 200;
    for (const auto& r : c.rows) {
        const double th = r[0];
        const long double lt = th;
        const double trotter = th == 0.0 ? 1.0 : static_cast<double>(std::expm1(lt) / lt);
        w.below(std::abs(r[1] - std::exp(th)), 1e-12);
        w.below(std::abs(r[2] - trotter), 1e-12);
        w.below(std::abs(r[3] - 1.0), 1e-12);
        if (th > 0) order = order && r[3] < r[2] && r[2] < r[1];
    }
    return {w.ok && order && secs < 1.0,
            fmt("max error %.2e, ordering ", w.value) + (order ? "holds" : "violated") +
                fmt(", %.3f s", secs)};
}

Outcome fig2() {
    Worst w;
    double worst_norm = 0.0;
    const double alpha = 2.0;
    const fs::path p = workdir() / "fig2.csv";
    if (cli({"--out", p.string(), "fig2", "--alpha", "2.0", "--thetas", "0.4,0.6,0.8"}) != 0)
        return {false, "fig2 command failed"};
    const Csv c = read_csv(p);
    const double thetas[] = {0.4, 0.6, 0.8};
    for (const auto& r : c.rows)
        for (int k = 0; k < 3; ++k) {
            const double th = thetas[k];
            const double ref = gauss(r[0], alpha * std::expm1(th) / th, std::sinh(th) / std::sqrt(2.0));
            w.below(std::abs(r[k + 1] - ref), 1e-10);
        }
    // radial normalization: 2 pi int_0^inf r P(mean + r) dr = 1, from a fine slice
    // through the mean
    for (double th : thetas) {
        const double mean = alpha * std::expm1(th) / th, sigma = std::sinh(th) / std::sqrt(2.0);
        const fs::path pf = workdir() / "fig2_fine.csv";
        if (cli({"--out", pf.string(), "fig2", "--alpha", "2.0", "--thetas", num(th), "--points", "20001",
                 "--mu-min", num(mean - 12 * sigma), "--mu-max", num(mean + 12 * sigma)}) != 0)
            return {false, "fig2 fine run failed"};
        const Csv f = read_csv(pf);
        const std::size_t mid = 10000;
        const double h = f.rows[1][0] - f.rows[0][0];
        double sum = 0.0;
        for (std::size_t i = mid; i < f.rows.size(); ++i) {
            const double r = f.rows[i][0] - f.rows[mid][0];
            const double wgt = (i == mid || i + 1 == f.rows.size()) ? 0.5 : 1.0;
            sum += wgt * r * f.rows[i][1];
        }
        worst_norm = std::max(worst_norm, std::abs(2 * kPi * sum * h - 1.0));
    }
    const bool ok = w.ok && c.rows.size() == 801 && worst_norm <= 1e-6;
    return {ok, fmt("max curve error %.2e, normalization error %.2e", w.value, worst_norm)};
}

Outcome fig3() {
    const fs::path p = workdir() / "fig3.csv";
    if (cli({"--out", p.string(), "fig3", "--alpha", "4.0", "--theta", "0.4"}) != 0)
        return {false, "fig3 command failed"};
    const Csv c = read_csv(p);
    const double th = 0.4, sigma = std::sinh(th) / std::sqrt(2.0);
    const double means[] = {4 * std::exp(th), 4 * std::expm1(th) / th, 4.0};
    Worst w;
    for (const auto& r : c.rows)
        for (int k = 0; k < 3; ++k) w.below(std::abs(r[k + 1] - gauss(r[0], means[k], sigma)), 1e-10);
    return {w.ok && !c.rows.empty(), fmt("max error %.2e over %g rows", w.value, static_cast<double>(c.rows.size()))};
}

Outcome convergence() {
    const auto t0 = std::chrono::steady_clock::now();
    const fs::path p = workdir() / "converge.csv";
    if (cli({"--out", p.string(), "--cutoff", "30", "converge", "--alpha", "0.8", "--zeta", "0.8",
             "--theta", "0.5", "--n-list", "16,32,64,128,256,512"}) != 0)
        return {false, "converge command failed"};
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const Csv c = read_csv(p);
    std::vector<double> ns, ds;
    for (const auto& r : c.rows) {
        ns.push_back(r[0]);
        ds.push_back(r[1]);
    }
    const double slope = oracle::loglog_slope(ns, ds);
    const bool reported = c.comments.size() == 1 && std::abs(c.comments[0].second - slope) < 1e-12;
    return {ns.size() == 6 && std::abs(slope + 1.0) <= 0.2 && reported && secs < 60.0,
            fmt("slope %.4f, %.1f s", slope, secs)};
}

Outcome equivalence_suite() {
    Worst trot, dbl;
    bool phase_zero = true;
    for (const auto& g : grid3()) {
        const cplx a = g.alpha, z = std::conj(a);
        const ThermalParams tp = thermal_from_theta(g.theta);
        const auto dp = DisplacementParams::tilde_invariant(a);
        const TwoModeState tr = build_state(StateKind::Trotter, dp, tp, kFine);
        const int d = tr.dim_per_mode();
        const EquivalenceResult m = map_trotter_to_round(a, z, g.theta);
        phase_zero = phase_zero && m.phase == 0.0;
        const TwoModeState rd = build_state(StateKind::Round, DisplacementParams::general(m.alpha_prime, m.zeta_prime),
                                            tp, CutoffPolicy::fixed(d, 1.0));
        trot.below((tr.amplitudes() - std::polar(1.0, m.phase) * rd.amplitudes()).norm(), 1e-9);

        const TwoModeState db = build_state(StateKind::Double, dp, tp, kFine);
        const MappedPair mp = map_double_to_round(a, z, g.theta);
        const TwoModeState rm = build_state(StateKind::Round, DisplacementParams::general(mp.alpha, mp.zeta), tp,
                                            CutoffPolicy::fixed(db.dim_per_mode(), 1.0));
        dbl.below((db.amplitudes() - rm.amplitudes()).norm(), 1e-9);
    }
    return {trot.ok && dbl.ok && phase_zero,
            fmt("trotter %.2e, double %.2e", trot.value, dbl.value) +
                (phase_zero ? ", phase exactly 0" : ", phase nonzero")};
}

Outcome product_identity() {
    Worst w;
    for (int N = 1; N <= 16; ++N)
        for (const auto& r : check::product_identity_sweep(cplx(0.5), cplx(0.0, 0.5), 0.2, N, std::min(8, N), 20))
            w.below(r.error, 1e-9);
    return {w.ok, fmt("max operator-norm error %.2e over n <= 8, N <= 16, d = 20", w.value)};
}

Outcome series() {
    Worst w;
    for (double t : {0.2, 0.4, 0.8}) {
        const SeriesLimits c = series_limits(t);
        const oracle::Sums b = oracle::brute_sums(t, 1000000);
        w.below(std::abs(c.c1 - b.c1), 1e-5);
        w.below(std::abs(c.c2 - b.c2), 1e-5);
        w.below(std::abs(c.c3 - b.c3), 1e-5);
    }
    return {w.ok, fmt("max |limit - partial sum| %.2e at N = 1e6", w.value)};
}

Outcome uncertainty() {
    Worst w;
    bool bound = true;
    for (const PhysicalConstants pc : {PhysicalConstants{}, PhysicalConstants{0.5, 2.0, 1.0}})
        for (const auto& g : grid3())
            for (cplx z : {std::conj(g.alpha), cplx(-0.3, 0.7)})
                for (StateKind k : kAllKinds) {
                    const TwoModeState s = build_state(k, DisplacementParams::general(g.alpha, z),
                                                       thermal_from_theta(g.theta), kFine);
                    const double prod = numeric_quadrature_moments(s, pc).uncertainty_product();
                    w.below(std::abs(prod - 0.5 * pc.hbar * std::cosh(2 * g.theta)), 1e-7);
                    bound = bound && prod >= 0.5 * pc.hbar;
                }
    return {w.ok && bound, fmt("max deviation %.2e", w.value) + (bound ? ", bound holds" : ", bound violated")};
}

Outcome xi_criterion() {
    Worst res, ev;
    double min_violation = 1e300;
    for (const auto& g : grid3()) {
        const ThermalParams tp = thermal_from_theta(g.theta);
        for (cplx z : {std::conj(g.alpha), cplx(0.4, -0.2)}) {
            const auto dp = DisplacementParams::general(g.alpha, z);
            for (StateKind k : kAllKinds) {
                const TwoModeState s = build_state(k, dp, tp, kFine);
                res.below(xi_residual(tp, s, xi_eigenvalue(k, dp, tp)), 1e-6);
            }
            ev.below(std::abs(xi_eigenvalue(StateKind::Round, dp, tp) - g.alpha), 1e-12);
        }
    }
    for (cplx f : {cplx(0.5), cplx(0.2, -0.7), cplx(-1.0, 0.3)})
        for (double th : {0.2, 0.8}) {
            const ImproperEigenvector iv = improper_eigenvector(f, thermal_from_theta(th), kFine);
            min_violation = std::min(min_violation, iv.tilde_violation);
        }
    return {res.ok && ev.ok && min_violation > 0.0,
            fmt("max residual %.2e, round eigenvalue error %.2e", res.value, ev.value) +
                fmt(", min tilde violation %.3g", min_violation)};
}

Outcome quasiprob() {
    Worst q, w, widths;
    struct Case {
        StateKind kind;
        cplx alpha;
        double theta;
    };
    for (const Case& c : {Case{StateKind::Double, 0.8, 0.4}, Case{StateKind::Trotter, cplx(0.5, 0.3), 0.6}}) {
        const TwoModeState s = build_state(c.kind, DisplacementParams::tilde_invariant(c.alpha),
                                           thermal_from_theta(c.theta), kFine);
        const DensityMatrix rho = signal(s);
        const GaussianQP gq = q_func(c.kind, c.alpha, c.theta);
        const GaussianQP gw = wigner(c.kind, c.alpha, c.theta);
        WignerQuadrature wq(rho, QuadratureSpec::for_sigma_q(gq.sigma));
        for (int i = -4; i <= 4; ++i)
            for (int j = -4; j <= 4; ++j) {
                const cplx mq = gq.mean + gq.sigma * cplx(i, j);
                q.below(std::abs(q_func_truncated(rho, mq, 1e-20) - gq.evaluate(mq)), 1e-6);
                const cplx mw = gw.mean + gw.sigma * cplx(i, j);
                w.below(std::abs(wq(mw) - gw.evaluate(mw)), 1e-6);
            }
    }
    for (double th : {0.0, 0.1, 0.4, 0.8, 1.5}) {
        const double sp = th == 0.0 ? 0.0 : std::get<GaussianQP>(p_rep(StateKind::Round, 1.0, th)).sigma;
        const double sq = q_func(StateKind::Round, 1.0, th).sigma;
        const double sw = wigner(StateKind::Round, 1.0, th).sigma;
        widths.below(std::abs(sq * sq - sp * sp - 0.5), 1e-14);
        widths.below(std::abs(2 * sw * sw - sp * sp - sq * sq), 1e-14);
    }
    // sigma_P sqrt2 / theta = sinh(theta)/theta -> 1, with error theta^2/6
    bool delta = true;
    double prev = 1e300;
    for (double th : {1e-2, 1e-3, 1e-4, 1e-5}) {
        const double r = std::get<GaussianQP>(p_rep(StateKind::Trotter, 1.0, th)).sigma * std::sqrt(2.0) / th;
        const double gap = std::abs(r - 1.0);
        delta = delta && gap <= th * th && gap <= prev;
        prev = gap;
    }
    return {q.ok && w.ok && widths.ok && delta,
            fmt("Q %.2e, W %.2e", q.value, w.value) + fmt(", widths %.1e", widths.value) +
                (delta ? ", delta limit ok" : ", delta limit off")};
}

Outcome completeness() {
    const Matrix id = resolve_identity_numeric(0.3, 12, 6, 6.0);
    const double err = operator_norm(id - Matrix::Identity(6, 6));
    return {err <= 1e-3, fmt("operator-norm deviation %.2e on 6 levels", err)};
}

Eigen::VectorXd flatten(const Eigen::Vector4d& mean, const Eigen::Matrix4d& cov) {
    Eigen::VectorXd out(14);
    int k = 0;
    for (int i = 0; i < 4; ++i) out(k++) = mean(i);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) out(k++) = cov(i, j);
    return out;
}

Outcome gaussian_oracle() {
    Worst fock, fd;
    const std::vector<std::tuple<cplx, cplx, double>> cases{
        {0.7, 0.7, 0.5}, {cplx(0.4, -0.5), cplx(0.1, 0.6), 0.3}, {cplx(-0.8, 0.2), cplx(-0.8, -0.2), 0.7}};
    for (auto [a, z, th] : cases) {
        for (StateKind k : kAllKinds) {
            const GaussianMoments m = moments_from_cf(k, a, z, th);
            const GaussianMoments n =
                numeric_moments(build_state(k, DisplacementParams::general(a, z), thermal_from_theta(th), kFine));
            fock.below((flatten(m.mean, m.cov) - flatten(n.mean, n.cov)).cwiseAbs().maxCoeff(), 1e-8);
        }
        const check::FdMoments f = check::cf_finite_differences(a, z, th, 1e-5);
        const GaussianMoments m = moments_from_cf(StateKind::Round, a, z, th);
        fd.below((flatten(m.mean, m.cov) - flatten(f.mean, f.cov)).cwiseAbs().maxCoeff(), 1e-6);
    }
    return {fock.ok && fd.ok, fmt("Fock moments %.2e, finite differences %.2e", fock.value, fd.value)};
}

Outcome opo() {
    auto params = [](double theta, cplx gs, cplx gi, int n) {
        OpoParams op;
        op.chi2 = 1.0;
        op.T1 = theta;
        op.T2 = 1.0;
        op.g_s = gs;
        op.g_i = gi;
        op.N = n;
        return op;
    };
    Worst ident, dens;
    const int d = 30;
    const OpoParams base = params(0.4, 0.8, 0.8, 1);
    const Matrix closed = closed_unitary(base, d).entries();
    {
        const TwoModeState tr = build_state(StateKind::Trotter, DisplacementParams::general(0.8, 0.8),
                                            thermal_from_theta(0.4), CutoffPolicy::fixed(d, 1.0));
        ident.below((Vector(closed.col(0)) - tr.amplitudes()).norm(), 1e-9);
    }
    const OpoParams gen = params(0.6, cplx(0.4, -0.3), cplx(-0.2, 0.5), 1);
    {
        const TwoModeState cs = closed_state(gen, kFine);
        const TwoModeState ts = build_state(StateKind::Trotter, DisplacementParams::general(gen.gamma_s(), gen.gamma_i()),
                                            thermal_from_theta(0.6), CutoffPolicy::fixed(cs.dim_per_mode(), 1.0));
        ident.below((cs.amplitudes() - ts.amplitudes()).norm(), 1e-9);
    }

    std::vector<double> ns, es;
    for (int n : {8, 16, 32, 64}) {
        OpoParams op = base;
        op.N = n;
        ns.push_back(n);
        es.push_back(oracle::spectral_norm(sliced_unitary(op, d).entries() - closed));
    }
    const double slope = oracle::loglog_slope(ns, es);

    for (const OpoParams& op : {base, gen, params(0.5, 0.0, 0.0, 1)}) {
        const DensityMatrix rho = signal_density(op, kFine);
        const double th = op.theta();
        const GaussianMoments gm = moments_from_cf(StateKind::Trotter, op.gamma_s(), op.gamma_i(), th);
        const cplx amp = cplx(gm.mean(0), gm.mean(1)) / std::sqrt(2.0);
        dens.below(std::abs(rho.purity() - 1 / std::cosh(2 * th)), 1e-6);
        dens.below(std::abs(rho.mean_number() - (std::norm(amp) + std::pow(std::sinh(th), 2))), 1e-6);
    }
    return {ident.ok && std::abs(slope + 1.0) <= 0.2 && dens.ok,
            fmt("identification %.2e, slope %.4f", ident.value, slope) + fmt(", signal moments %.2e", dens.value)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"fig1 ordinates", fig1},
        {"fig2 trotter P curves", fig2},
        {"fig3 three-kind P curves", fig3},
        {"trotter convergence slope", convergence},
        {"equivalence suite", equivalence_suite},
        {"finite-product identity", product_identity},
        {"series limits", series},
        {"uncertainty relation", uncertainty},
        {"xi eigenvector criterion", xi_criterion},
        {"quasiprobability agreement", quasiprob},
        {"completeness", completeness},
        {"gaussian oracle", gaussian_oracle},
        {"opo identification", opo},
    };
    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.passed) ++failed;
        std::printf("%s %2zu %s: %s [%.1f s]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of %zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed,
                criteria.size(), total);
    return failed == 0 && total < 300.0 ? 0 : 1;
}
