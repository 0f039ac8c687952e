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
#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tfdcs/tfdcs.h"

namespace tfdcs::cli {
namespace {

struct Failure {
    int code;
    std::string message;
};

int exit_code_of(tfdcs_status s) {
    switch (s) {
        case TFDCS_OK: return kOk;
        case TFDCS_ERR_INVALID_ARGUMENT:
        case TFDCS_ERR_INVALID_CUTOFF: return kBadArguments;
        case TFDCS_ERR_CUTOFF_TOO_SMALL:
        case TFDCS_ERR_NON_FINITE: return kNumeric;
        default: return kPropertyFailure;
    }
}

void check(tfdcs_status s) {
    if (s != TFDCS_OK) throw Failure{exit_code_of(s), tfdcs_last_error()};
}

void bad_argument(const std::string& what) { throw Failure{kBadArguments, what}; }

struct StateDeleter {
    void operator()(tfdcs_state* s) const { tfdcs_state_free(s); }
};
struct DensityDeleter {
    void operator()(tfdcs_density* d) const { tfdcs_density_free(d); }
};
struct ReportDeleter {
    void operator()(tfdcs_report* r) const { tfdcs_report_free(r); }
};
using State = std::unique_ptr<tfdcs_state, StateDeleter>;
using Density = std::unique_ptr<tfdcs_density, DensityDeleter>;
using Report = std::unique_ptr<tfdcs_report, ReportDeleter>;

struct RunConfig {
    double hbar = 1.0;
    double lambda = 1.0;
    double epsilon = 1.0;
    int cutoff = 0;  // 0 selects the adaptive cutoff
    std::optional<double> tail_tol;
    std::string out;
    std::uint64_t seed = 0;
    std::string config_file;

    tfdcs_constants constants() const { return {hbar, lambda, epsilon}; }
    double tail_or(double fallback) const { return tail_tol.value_or(fallback); }
    tfdcs_cutoff policy(double fallback_tail) const {
        tfdcs_cutoff c = tfdcs_cutoff_default();
        c.cutoff = cutoff;
        c.tail_tol = tail_or(fallback_tail);
        return c;
    }
};

constexpr double kDefaultTail = 1e-12;

std::string number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Csv {
  public:
    explicit Csv(const std::vector<std::string>& header) { row_strings(header); }
    void row(const std::vector<double>& values) {
        for (double v : values)
            if (!std::isfinite(v)) throw Failure{kNumeric, "non-finite value in output"};
        std::vector<std::string> cells;
        for (double v : values) cells.push_back(number(v));
        row_strings(cells);
    }
    void comment(const std::string& key, double value) {
        body_ << "# " << key << "," << number(value) << '\n';
    }
    std::string str() const { return body_.str(); }

  private:
    void row_strings(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) body_ << (i ? "," : "") << cells[i];
        body_ << '\n';
    }
    std::ostringstream body_;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Failure{kIoError, "cannot open " + path + " for writing"};
    f << content;
    f.flush();
    if (!f) throw Failure{kIoError, "write to " + path + " failed"};
}

tfdcs_complex cx(double re, double im = 0.0) { return {re, im}; }

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    v.back() = hi;
    return v;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

tfdcs_gaussian p_of(tfdcs_kind kind, double alpha, double theta) {
    tfdcs_gaussian g;
    check(tfdcs_quasi(TFDCS_QP_P, kind, cx(alpha), theta, &g));
    if (g.point_mass) bad_argument("theta must be > 0 for a P representation curve");
    return g;
}

// ---------------------------------------------------------------------------

struct Fig1Args {
    double theta_min = 0.0;
    double theta_max = 2.0;
    int steps = 200;
};

int cmd_fig1(const Fig1Args& a, const RunConfig& rc, std::ostream& out) {
    if (!(a.theta_min >= 0.0 && a.theta_max > a.theta_min && a.steps >= 2 &&
          std::isfinite(a.theta_max)))
        bad_argument("fig1 needs 0 <= theta-min < theta-max and steps >= 2");
    Csv csv({"theta", "round", "trotter", "double"});
    for (double th : linspace(a.theta_min, a.theta_max, a.steps)) {
        double r, t, d;
        check(tfdcs_fig1_ordinate(TFDCS_ROUND, th, &r));
        check(tfdcs_fig1_ordinate(TFDCS_TROTTER, th, &t));
        check(tfdcs_fig1_ordinate(TFDCS_DOUBLE, th, &d));
        csv.row({th, r, t, d});
    }
    const std::string path = rc.out.empty() ? "fig1.csv" : rc.out;
    write_file(path, csv.str());
    out << "wrote " << a.steps << " rows to " << path << '\n';
    return kOk;
}

struct CurveArgs {
    double alpha = 0.0;
    std::vector<double> thetas;
    int points = 801;
    std::optional<double> mu_min, mu_max;
};

int write_curves(const CurveArgs& a, const std::vector<std::pair<std::string, tfdcs_gaussian>>& curves,
                 const std::string& path, std::ostream& out) {
    if (a.points < 2) bad_argument("points must be >= 2");
    double lo = curves.front().second.mean.re, hi = lo;
    for (const auto& [name, g] : curves) {
        lo = std::min(lo, g.mean.re - 8.0 * g.sigma);
        hi = std::max(hi, g.mean.re + 8.0 * g.sigma);
    }
    lo = a.mu_min.value_or(lo);
    hi = a.mu_max.value_or(hi);
    if (!(hi > lo)) bad_argument("mu-max must exceed mu-min");
    std::vector<std::string> header{"mu"};
    for (const auto& c : curves) header.push_back(c.first);
    Csv csv(header);
    for (double mu : linspace(lo, hi, a.points)) {
        std::vector<double> row{mu};
        for (const auto& c : curves) row.push_back(tfdcs_gaussian_eval(&c.second, cx(mu)));
        csv.row(row);
    }
    write_file(path, csv.str());
    out << "wrote " << a.points << " rows to " << path << '\n';
    return kOk;
}

int cmd_fig2(CurveArgs a, const RunConfig& rc, std::ostream& out) {
    if (a.thetas.empty()) a.thetas = {0.4, 0.6, 0.8};
    std::vector<std::pair<std::string, tfdcs_gaussian>> curves;
    for (double th : a.thetas) {
        std::ostringstream name;
        name << "p_trotter_theta_" << th;
        curves.emplace_back(name.str(), p_of(TFDCS_TROTTER, a.alpha, th));
    }
    return write_curves(a, curves, rc.out.empty() ? "fig2.csv" : rc.out, out);
}

int cmd_fig3(const CurveArgs& a, double theta, const RunConfig& rc, std::ostream& out) {
    const std::vector<std::pair<std::string, tfdcs_gaussian>> curves{
        {"p_round", p_of(TFDCS_ROUND, a.alpha, theta)},
        {"p_trotter", p_of(TFDCS_TROTTER, a.alpha, theta)},
        {"p_double", p_of(TFDCS_DOUBLE, a.alpha, theta)}};
    return write_curves(a, curves, rc.out.empty() ? "fig3.csv" : rc.out, out);
}

struct ConvergeArgs {
    double alpha = 0.8, alpha_im = 0.0;
    double zeta = 0.8, zeta_im = 0.0;
    double theta = 0.5;
    std::vector<int> n_list{16, 32, 64, 128, 256, 512};
};

int cmd_converge(const ConvergeArgs& a, const RunConfig& rc, std::ostream& out) {
    if (a.n_list.empty()) bad_argument("n-list must not be empty");
    for (std::size_t i = 0; i < a.n_list.size(); ++i) {
        if (a.n_list[i] < 1) bad_argument("n-list entries must be >= 1");
        if (i && a.n_list[i] <= a.n_list[i - 1]) bad_argument("n-list must be ascending");
    }
    tfdcs_cutoff policy = rc.policy(kDefaultTail);
    if (policy.cutoff == 0) policy.cutoff = 30;
    const tfdcs_complex alpha = cx(a.alpha, a.alpha_im), zeta = cx(a.zeta, a.zeta_im);
    tfdcs_state* raw = nullptr;
    check(tfdcs_state_build(TFDCS_TROTTER, alpha, zeta, a.theta, &policy, &raw));
    const State closed(raw);
    Csv csv({"N", "distance"});
    std::vector<double> ns, ds;
    for (int n : a.n_list) {
        check(tfdcs_state_build_trotter_finite(alpha, zeta, a.theta, n, &policy, &raw));
        const State finite(raw);
        double dist = 0.0;
        check(tfdcs_state_distance(closed.get(), finite.get(), &dist));
        csv.row({static_cast<double>(n), dist});
        ns.push_back(n);
        ds.push_back(dist);
    }
    const bool fit = ns.size() >= 2 && std::all_of(ds.begin(), ds.end(), [](double d) { return d > 0.0; });
    const double slope = fit ? loglog_slope(ns, ds) : std::nan("");
    if (fit) csv.comment("slope", slope);
    const std::string path = rc.out.empty() ? "converge.csv" : rc.out;
    write_file(path, csv.str());
    out << "wrote " << ns.size() << " rows to " << path;
    if (fit) out << ", fitted slope " << slope;
    out << '\n';
    return kOk;
}

int cmd_verify(bool sabotage, int grid_points, const RunConfig& rc, std::ostream& out) {
    tfdcs_verify_config vc = tfdcs_verify_config_default();
    vc.seed = rc.seed;
    vc.sabotage = sabotage ? 1 : 0;
    vc.tail_tol = rc.tail_or(vc.tail_tol);
    vc.grid_points = grid_points;
    vc.constants = rc.constants();
    tfdcs_report* raw = nullptr;
    check(tfdcs_verify(&vc, &raw));
    const Report report(raw);
    out << tfdcs_report_text(report.get());
    const std::string path = rc.out.empty() ? "verify.json" : rc.out;
    write_file(path, tfdcs_report_json(report.get()));
    out << "summary written to " << path << '\n';
    return tfdcs_report_passed(report.get()) ? kOk : kPropertyFailure;
}

struct OpoArgs {
    double chi2 = 1.0;
    double gs = 0.8, gs_im = 0.0, gi = 0.8, gi_im = 0.0;
    double t1 = 0.4, t2 = 1.0;
    int n = 32;
    int grid = 21;
};

int cmd_opo(const OpoArgs& a, const RunConfig& rc, std::ostream& out) {
    if (a.grid < 2) bad_argument("grid must be >= 2");
    const tfdcs_opo params{a.chi2, cx(a.gs, a.gs_im), cx(a.gi, a.gi_im), a.t1, a.t2, a.n, rc.hbar};
    const int d = rc.cutoff > 0 ? rc.cutoff : 30;
    double sliced = 0.0;
    check(tfdcs_opo_sliced_distance(&params, d, &sliced));

    tfdcs_cutoff policy = rc.policy(kDefaultTail);
    policy.cutoff = 0;
    tfdcs_state* raw = nullptr;
    check(tfdcs_opo_closed_state(&params, &policy, &raw));
    const State closed(raw);
    tfdcs_density* rraw = nullptr;
    check(tfdcs_state_signal(closed.get(), &rraw));
    const Density rho(rraw);

    const double theta = a.chi2 * a.t1;
    const tfdcs_complex gamma_s = cx(a.gs * a.t2, a.gs_im * a.t2);
    const tfdcs_complex gamma_i = cx(a.gi * a.t2, a.gi_im * a.t2);
    // <a> = alpha' cosh + zeta'* sinh for the equivalent round state
    tfdcs_equivalence eq;
    check(tfdcs_map_trotter_to_round(gamma_s, gamma_i, theta, &eq));
    const double c = std::cosh(theta), s = std::sinh(theta);
    const double mre = eq.alpha_prime.re * c + eq.zeta_prime.re * s;
    const double mim = eq.alpha_prime.im * c - eq.zeta_prime.im * s;

    const double purity = tfdcs_density_purity(rho.get());
    const double photons = tfdcs_density_mean_number(rho.get());
    nlohmann::ordered_json doc;
    doc["schema"] = "tfdcs.opo/1";
    doc["theta"] = theta;
    doc["gamma_s"] = {gamma_s.re, gamma_s.im};
    doc["gamma_i"] = {gamma_i.re, gamma_i.im};
    doc["N"] = a.n;
    doc["cutoff"] = d;
    doc["signal_cutoff"] = tfdcs_density_dim(rho.get());
    doc["sliced_vs_closed_distance"] = sliced;
    doc["purity"] = purity;
    doc["purity_expected"] = 1.0 / std::cosh(2.0 * theta);
    doc["mean_photon_number"] = photons;
    doc["mean_photon_expected"] = mre * mre + mim * mim + s * s;

    const double sigma = std::cosh(theta) / std::sqrt(2.0);
    const double cr = mre, ci = mim;
    Csv csv({"re_mu", "im_mu", "q"});
    for (double y : linspace(ci - 4 * sigma, ci + 4 * sigma, a.grid))
        for (double x : linspace(cr - 4 * sigma, cr + 4 * sigma, a.grid)) {
            double q = 0.0;
            check(tfdcs_density_q_function(rho.get(), cx(x, y), &q));
            csv.row({x, y, q});
        }
    const std::string path = rc.out.empty() ? "opo.csv" : rc.out;
    const std::string json_path = std::filesystem::path(path).replace_extension(".json").string();
    write_file(path, csv.str());
    write_file(json_path, doc.dump(2) + "\n");
    out << "purity " << number(purity) << ", mean photon number " << number(photons)
        << ", sliced-vs-closed distance " << number(sliced) << '\n'
        << "wrote " << path << " and " << json_path << '\n';
    return kOk;
}

void apply_config(const std::string& path, RunConfig& rc, const CLI::App& app) {
    std::ifstream f(path);
    if (!f) throw Failure{kIoError, "cannot read config " + path};
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        bad_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) bad_argument("config must be a JSON object");
    auto given = [&](const char* flag) { return app.count(flag) > 0; };
    try {
        for (auto& [key, value] : j.items()) {
            if (key == "hbar") { if (!given("--hbar")) rc.hbar = value.get<double>(); }
            else if (key == "lambda") { if (!given("--lambda")) rc.lambda = value.get<double>(); }
            else if (key == "epsilon") { if (!given("--epsilon")) rc.epsilon = value.get<double>(); }
            else if (key == "cutoff") { if (!given("--cutoff")) rc.cutoff = value.get<int>(); }
            else if (key == "tail_tol" || key == "tail-tol") {
                if (!given("--tail-tol")) rc.tail_tol = value.get<double>();
            }
            else if (key == "out") { if (!given("--out")) rc.out = value.get<std::string>(); }
            else if (key == "seed") { if (!given("--seed")) rc.seed = value.get<std::uint64_t>(); }
            else bad_argument("config: unknown key " + key);
        }
    } catch (const nlohmann::json::exception& e) {
        bad_argument(std::string("config: ") + e.what());
    }
}

void validate(const RunConfig& rc) {
    if (!(rc.hbar > 0 && rc.lambda > 0 && rc.epsilon > 0) || !std::isfinite(rc.hbar) ||
        !std::isfinite(rc.lambda) || !std::isfinite(rc.epsilon))
        bad_argument("hbar, lambda and epsilon must be positive");
    if (rc.cutoff < 0) bad_argument("cutoff must be >= 0");
    if (rc.tail_tol && !(*rc.tail_tol > 0.0 && *rc.tail_tol <= 1e-4))
        bad_argument("tail-tol must lie in (0, 1e-4]");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Thermal coherent states in thermo field dynamics", "tfdcs"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig rc;
    double tail = 0.0;
    app.add_option("--hbar", rc.hbar, "reduced Planck constant");
    app.add_option("--lambda", rc.lambda, "m omega scale of the quadratures");
    app.add_option("--epsilon", rc.epsilon, "single-particle energy hbar omega");
    app.add_option("--cutoff", rc.cutoff, "fixed Fock cutoff per mode (0 = adaptive)");
    app.add_option("--tail-tol", tail, "adaptive cutoff tail tolerance");
    app.add_option("--out", rc.out, "output path");
    app.add_option("--seed", rc.seed, "seed of the randomized verification grid");
    app.add_option("--config", rc.config_file, "JSON file with defaults for the flags above");

    Fig1Args f1;
    auto* fig1 = app.add_subcommand("fig1", "mean-quadrature ordinates of the three kinds");
    fig1->add_option("--theta-min", f1.theta_min);
    fig1->add_option("--theta-max", f1.theta_max);
    fig1->add_option("--steps", f1.steps, "number of rows");

    CurveArgs f2;
    f2.alpha = 2.0;
    auto* fig2 = app.add_subcommand("fig2", "P representation of the trotter state");
    fig2->add_option("--alpha", f2.alpha);
    fig2->add_option("--thetas", f2.thetas)->delimiter(',');
    fig2->add_option("--points", f2.points);
    fig2->add_option("--mu-min", f2.mu_min);
    fig2->add_option("--mu-max", f2.mu_max);

    CurveArgs f3;
    f3.alpha = 4.0;
    double f3_theta = 0.4;
    auto* fig3 = app.add_subcommand("fig3", "P representation of all three kinds");
    fig3->add_option("--alpha", f3.alpha);
    fig3->add_option("--theta", f3_theta);
    fig3->add_option("--points", f3.points);
    fig3->add_option("--mu-min", f3.mu_min);
    fig3->add_option("--mu-max", f3.mu_max);

    ConvergeArgs cv;
    auto* converge = app.add_subcommand("converge", "finite trotter products against the closed form");
    converge->add_option("--alpha", cv.alpha);
    converge->add_option("--alpha-im", cv.alpha_im);
    converge->add_option("--zeta", cv.zeta);
    converge->add_option("--zeta-im", cv.zeta_im);
    converge->add_option("--theta", cv.theta);
    converge->add_option("--n-list", cv.n_list)->delimiter(',');

    bool sabotage = false;
    int grid_points = 6;
    auto* verify = app.add_subcommand("verify", "run the property suite");
    verify->add_flag("--sabotage", sabotage, "flip a sign in the equivalence map");
    verify->add_option("--grid-points", grid_points);

    OpoArgs op;
    auto* opo = app.add_subcommand("opo", "optical parametric oscillator round trips");
    opo->add_option("--chi2", op.chi2);
    opo->add_option("--gs", op.gs);
    opo->add_option("--gs-im", op.gs_im);
    opo->add_option("--gi", op.gi);
    opo->add_option("--gi-im", op.gi_im);
    opo->add_option("--t1", op.t1);
    opo->add_option("--t2", op.t2);
    opo->add_option("--n", op.n, "round trips");
    opo->add_option("--grid", op.grid, "Q-function grid points per axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }

    try {
        if (app.count("--tail-tol")) rc.tail_tol = tail;
        if (!rc.config_file.empty()) apply_config(rc.config_file, rc, app);
        validate(rc);
        if (*fig1) return cmd_fig1(f1, rc, out);
        if (*fig2) return cmd_fig2(f2, rc, out);
        if (*fig3) return cmd_fig3(f3, f3_theta, rc, out);
        if (*converge) return cmd_converge(cv, rc, out);
        if (*verify) return cmd_verify(sabotage, grid_points, rc, out);
        if (*opo) return cmd_opo(op, rc, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    }
    return kBadArguments;
}

}  // namespace tfdcs::cli
