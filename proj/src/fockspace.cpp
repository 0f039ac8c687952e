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
#include "tfdcs/fockspace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace tfdcs {

namespace {

void check_cutoff(int d) {
    if (d < 2) {
        std::ostringstream os;
        os << "Fock cutoff must be at least 2, got " << d;
        fail(ErrorKind::InvalidCutoff, os.str());
    }
}

// Largest generator norm handled by one Taylor sub-step of an exponential
// action.
constexpr double kStepNorm = 2.0;

bool all_finite(const Matrix& m) {
    return m.allFinite();
}

}  // namespace

// ---------------------------------------------------------------------------
// value types

ModeMatrix::ModeMatrix(Matrix entries) : entries_(std::move(entries)) {
    require(entries_.rows() == entries_.cols(), ErrorKind::DimensionMismatch,
            "mode matrix must be square");
    check_cutoff(static_cast<int>(entries_.rows()));
}

TwoModeOperator::TwoModeOperator(int dim_per_mode, Matrix entries)
    : d_(dim_per_mode), entries_(std::move(entries)) {
    check_cutoff(d_);
    require(entries_.rows() == static_cast<Eigen::Index>(d_) * d_ &&
                entries_.cols() == entries_.rows(),
            ErrorKind::DimensionMismatch, "two-mode operator must be d^2 x d^2");
}

TwoModeOperator TwoModeOperator::operator*(const TwoModeOperator& rhs) const {
    require(d_ == rhs.d_, ErrorKind::DimensionMismatch, "cutoff mismatch in product");
    Matrix out(entries_.rows(), rhs.entries_.cols());
    out.noalias() = entries_ * rhs.entries_;
    return TwoModeOperator(d_, std::move(out));
}

TwoModeOperator TwoModeOperator::operator+(const TwoModeOperator& rhs) const {
    require(d_ == rhs.d_, ErrorKind::DimensionMismatch, "cutoff mismatch in sum");
    return TwoModeOperator(d_, entries_ + rhs.entries_);
}

TwoModeOperator TwoModeOperator::operator-(const TwoModeOperator& rhs) const {
    require(d_ == rhs.d_, ErrorKind::DimensionMismatch, "cutoff mismatch in difference");
    return TwoModeOperator(d_, entries_ - rhs.entries_);
}

TwoModeOperator TwoModeOperator::adjoint() const {
    return TwoModeOperator(d_, entries_.adjoint());
}

Vector TwoModeOperator::apply(const Vector& v) const {
    require(v.size() == entries_.cols(), ErrorKind::DimensionMismatch,
            "vector length does not match operator");
    return entries_ * v;
}

TwoModeOperator operator*(cplx scale, const TwoModeOperator& op) {
    return TwoModeOperator(op.dim_per_mode(), scale * op.entries());
}

TwoModeState::TwoModeState(int dim_per_mode, Vector amplitudes)
    : d_(dim_per_mode), amplitudes_(std::move(amplitudes)) {
    check_cutoff(d_);
    require(amplitudes_.size() == static_cast<Eigen::Index>(d_) * d_,
            ErrorKind::DimensionMismatch, "two-mode state must have d^2 amplitudes");
    require(amplitudes_.allFinite(), ErrorKind::NonFinite, "non-finite state amplitudes");
    const double n = amplitudes_.norm();
    require(n > 0.0, ErrorKind::InvalidArgument, "zero state vector");
    amplitudes_ /= n;
    tail_mass_ = tfdcs::tail_mass(amplitudes_, d_);
}

DensityMatrix::DensityMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
    require(entries_.rows() == entries_.cols(), ErrorKind::DimensionMismatch,
            "density matrix must be square");
    check_cutoff(static_cast<int>(entries_.rows()));
    require(all_finite(entries_), ErrorKind::NonFinite, "non-finite density matrix");
    if (hermiticity_defect() > tol) {
        fail(ErrorKind::NotHermitian, "density matrix is not Hermitian within tolerance");
    }
    // Remove the sub-tolerance anti-Hermitian part so downstream eigen solvers
    // see an exactly Hermitian matrix.
    entries_ = 0.5 * (entries_ + entries_.adjoint()).eval();
    require(std::abs(trace() - 1.0) <= tol, ErrorKind::InvalidArgument,
            "density matrix must have unit trace");
}

double DensityMatrix::trace() const { return entries_.trace().real(); }

double DensityMatrix::hermiticity_defect() const {
    return max_abs(entries_ - entries_.adjoint());
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double DensityMatrix::purity() const {
    return (entries_ * entries_).trace().real();
}

double DensityMatrix::mean_number() const {
    double n = 0.0;
    for (int k = 0; k < dim(); ++k) n += k * entries_(k, k).real();
    return n;
}

DensityMatrix DensityMatrix::padded(int d) const {
    require(d >= dim(), ErrorKind::InvalidCutoff, "padding cannot shrink a density matrix");
    Matrix m = Matrix::Zero(d, d);
    m.topLeftCorner(dim(), dim()) = entries_;
    return DensityMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// ladder operators

ModeMatrix annihilation_matrix(int d) {
    check_cutoff(d);
    Matrix a = Matrix::Zero(d, d);
    for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return ModeMatrix(std::move(a));
}

ModeMatrix creation_matrix(int d) {
    return ModeMatrix(annihilation_matrix(d).entries().adjoint());
}

ModeMatrix number_matrix(int d) {
    check_cutoff(d);
    Matrix n = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) n(k, k) = static_cast<double>(k);
    return ModeMatrix(std::move(n));
}

ModeMatrix identity_matrix(int d) {
    check_cutoff(d);
    return ModeMatrix(Matrix::Identity(d, d));
}

TwoModeOperator embed(const ModeMatrix& op, Slot slot) {
    const int d = op.dim();
    const Eigen::Index big = static_cast<Eigen::Index>(d) * d;
    Matrix out = Matrix::Zero(big, big);
    const Matrix& m = op.entries();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const cplx v = m(i, j);
            if (v == cplx(0.0)) continue;
            for (int k = 0; k < d; ++k) {
                if (slot == Slot::Ordinary) {
                    out(two_mode_index(i, k, d), two_mode_index(j, k, d)) = v;
                } else {
                    out(two_mode_index(k, i, d), two_mode_index(k, j, d)) = v;
                }
            }
        }
    }
    return TwoModeOperator(d, std::move(out));
}

// ---------------------------------------------------------------------------
// matrix exponential

Matrix matrix_exp(const Matrix& m, double tol) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch,
            "matrix exponential needs a square matrix");
    require(all_finite(m), ErrorKind::NonFinite, "non-finite entries in matrix exponential");
    require(tol > 0.0, ErrorKind::InvalidArgument, "tolerance must be positive");
    const Eigen::Index n = m.rows();
    if (n == 0) return m;

    const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > 1.0) squarings = static_cast<int>(std::ceil(std::log2(norm1)));
    const Matrix a = m / std::ldexp(1.0, squarings);
    const double a_norm = norm1 / std::ldexp(1.0, squarings);

    // Truncation term ||A||^{k+1}/(k+1)! on the scaled matrix, tightened by
    // the 2^s growth of the error through the squaring phase.
    const double step_tol = tol / std::ldexp(1.0, squarings);
    int order = 1;
    double term = a_norm;
    while (order < 40) {
        term *= a_norm / (order + 1);
        if (term <= step_tol) break;
        ++order;
    }

    // Paterson-Stockmeyer evaluation of sum_k A^k / k!.
    const int block = std::max(1, static_cast<int>(std::ceil(std::sqrt(order + 1.0))));
    std::vector<Matrix> powers;
    powers.reserve(block + 1);
    powers.push_back(Matrix::Identity(n, n));
    for (int k = 1; k <= block; ++k) {
        Matrix next(n, n);
        next.noalias() = powers.back() * a;
        powers.push_back(std::move(next));
    }
    std::vector<double> coeff(order + 1);
    coeff[0] = 1.0;
    for (int k = 1; k <= order; ++k) coeff[k] = coeff[k - 1] / k;

    const int chunks = order / block;
    auto chunk_poly = [&](int j) {
        Matrix b = Matrix::Zero(n, n);
        for (int i = 0; i < block; ++i) {
            const int k = j * block + i;
            if (k > order) break;
            b += coeff[k] * powers[i];
        }
        return b;
    };
    Matrix result = chunk_poly(chunks);
    Matrix tmp(n, n);
    for (int j = chunks - 1; j >= 0; --j) {
        tmp.noalias() = result * powers[block];
        result = tmp + chunk_poly(j);
    }

    for (int s = 0; s < squarings; ++s) {
        tmp.noalias() = result * result;
        result.swap(tmp);
    }
    return result;
}

TwoModeOperator matrix_exp(const TwoModeOperator& m, double tol) {
    return TwoModeOperator(m.dim_per_mode(), matrix_exp(m.entries(), tol));
}

double operator_norm(const Matrix& m) {
    const Matrix gram = m.adjoint() * m;
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// vectors

SingleModeState coherent_vector(cplx mu, int d, double tail_tol) {
    check_cutoff(d);
    require(std::isfinite(mu.real()) && std::isfinite(mu.imag()), ErrorKind::NonFinite,
            "non-finite coherent amplitude");
    Vector c(d);
    c(0) = std::exp(-0.5 * std::norm(mu));
    for (int n = 1; n < d; ++n) c(n) = c(n - 1) * mu / std::sqrt(static_cast<double>(n));
    const double kept = c.squaredNorm();
    double top = 0.0;
    for (int n = std::max(0, d - 2); n < d; ++n) top += std::norm(c(n));
    // sum of the dropped |c_n|^2, continued until the terms are negligible
    double beyond = 0.0;
    cplx cn = c(d - 1);
    const double peak = std::norm(mu);
    for (int n = d; n < d + 1000000; ++n) {
        cn *= mu / std::sqrt(static_cast<double>(n));
        const double term = std::norm(cn);
        beyond += term;
        if (n > peak && term <= 1e-17 * beyond) break;
        if (term == 0.0) break;
    }
    const double tail = std::max(beyond, top / kept);
    if (tail > tail_tol) {
        std::ostringstream os;
        os << "cutoff d=" << d << " too small for coherent amplitude |mu|=" << std::abs(mu)
           << " (tail mass " << tail << ")";
        fail(ErrorKind::CutoffTooSmall, os.str());
    }
    c /= std::sqrt(kept);
    return SingleModeState{std::move(c), tail};
}

Matrix displacement_elements(cplx eta, int d) {
    check_cutoff(d);
    Matrix out = Matrix::Zero(d, d);
    out(0, 0) = std::exp(-0.5 * std::norm(eta));
    std::vector<double> sq(d);
    for (int k = 0; k < d; ++k) sq[k] = std::sqrt(static_cast<double>(k));
    for (int m = 1; m < d; ++m) out(m, 0) = eta / sq[m] * out(m - 1, 0);
    const cplx eta_c = std::conj(eta);
    for (int m = 0; m < d; ++m) {
        for (int n = 1; n < d; ++n) {
            cplx v = -eta_c * out(m, n - 1);
            if (m > 0) v += sq[m] * out(m - 1, n - 1);
            out(m, n) = v / sq[n];
        }
    }
    return out;
}

double tail_mass(const Vector& amplitudes, int d) {
    double tail = 0.0;
    for (int o = 0; o < d; ++o) {
        for (int t = 0; t < d; ++t) {
            if (o >= d - 2 || t >= d - 2) tail += std::norm(amplitudes(two_mode_index(o, t, d)));
        }
    }
    return tail;
}

TwoModeState vacuum_state(int d) {
    check_cutoff(d);
    Vector v = Vector::Zero(static_cast<Eigen::Index>(d) * d);
    v(0) = 1.0;
    return TwoModeState(d, std::move(v));
}

TwoModeState product_state(const SingleModeState& ordinary, const SingleModeState& tilde) {
    const int d = ordinary.dim();
    require(tilde.dim() == d, ErrorKind::DimensionMismatch, "product state cutoff mismatch");
    Vector v(static_cast<Eigen::Index>(d) * d);
    for (int o = 0; o < d; ++o)
        for (int t = 0; t < d; ++t)
            v(two_mode_index(o, t, d)) = ordinary.amplitudes(o) * tilde.amplitudes(t);
    return TwoModeState(d, std::move(v));
}

DensityMatrix partial_trace(const TwoModeOperator& rho, Slot keep, double tol) {
    const int d = rho.dim_per_mode();
    const Matrix& r = rho.entries();
    require(all_finite(r), ErrorKind::NonFinite, "non-finite density operator");
    if (max_abs(r - r.adjoint()) > tol) {
        fail(ErrorKind::NotHermitian, "partial trace input is not Hermitian within tolerance");
    }
    Matrix out = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < d; ++k) {
                if (keep == Slot::Ordinary) {
                    s += r(two_mode_index(i, k, d), two_mode_index(j, k, d));
                } else {
                    s += r(two_mode_index(k, i, d), two_mode_index(k, j, d));
                }
            }
            out(i, j) = s;
        }
    }
    return DensityMatrix(std::move(out), tol);
}

DensityMatrix reduced_density(const TwoModeState& psi, Slot keep) {
    const int d = psi.dim_per_mode();
    // Column-major map: psi_map(t, o) = amplitude(o, t).
    Eigen::Map<const Matrix> psi_map(psi.amplitudes().data(), d, d);
    Matrix out(d, d);
    if (keep == Slot::Ordinary) {
        // rho(o, o') = sum_t psi(o,t) conj(psi(o',t))
        out.noalias() = psi_map.transpose() * psi_map.conjugate();
    } else {
        // rho(t, t') = sum_o psi(o,t) conj(psi(o,t'))
        out.noalias() = psi_map * psi_map.adjoint();
    }
    return DensityMatrix(std::move(out));
}

TwoModeOperator projector(const TwoModeState& psi) {
    return TwoModeOperator(psi.dim_per_mode(), psi.amplitudes() * psi.amplitudes().adjoint());
}

double phase_aligned_distance(const Vector& reference, const Vector& candidate) {
    require(reference.size() == candidate.size(), ErrorKind::DimensionMismatch,
            "phase-aligned distance needs equal lengths");
    const cplx overlap = reference.dot(candidate);  // <reference|candidate>
    const double mag = std::abs(overlap);
    const cplx phase = mag > 0.0 ? std::conj(overlap) / mag : cplx(1.0);
    return (candidate * phase - reference).norm();
}

double fidelity(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "fidelity needs equal lengths");
    return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

// ---------------------------------------------------------------------------
// matrix-free generators

Vector apply_lower(const Vector& v, int d, Slot slot) {
    Vector out = Vector::Zero(v.size());
    for (int o = 0; o < d; ++o) {
        for (int t = 0; t < d; ++t) {
            if (slot == Slot::Ordinary) {
                if (o + 1 < d)
                    out(two_mode_index(o, t, d)) =
                        std::sqrt(static_cast<double>(o + 1)) * v(two_mode_index(o + 1, t, d));
            } else if (t + 1 < d) {
                out(two_mode_index(o, t, d)) =
                    std::sqrt(static_cast<double>(t + 1)) * v(two_mode_index(o, t + 1, d));
            }
        }
    }
    return out;
}

Vector apply_raise(const Vector& v, int d, Slot slot) {
    Vector out = Vector::Zero(v.size());
    for (int o = 0; o < d; ++o) {
        for (int t = 0; t < d; ++t) {
            if (slot == Slot::Ordinary) {
                if (o > 0)
                    out(two_mode_index(o, t, d)) =
                        std::sqrt(static_cast<double>(o)) * v(two_mode_index(o - 1, t, d));
            } else if (t > 0) {
                out(two_mode_index(o, t, d)) =
                    std::sqrt(static_cast<double>(t)) * v(two_mode_index(o, t - 1, d));
            }
        }
    }
    return out;
}

Vector LadderGenerator::apply(const Vector& v, int d) const {
    require(v.size() == static_cast<Eigen::Index>(d) * d, ErrorKind::DimensionMismatch,
            "generator applied to vector of wrong length");
    // Column-major view: element (t, o) holds the amplitude of |o, t~>, so
    // ordinary ladders shift columns and tilde ladders shift rows.
    using MatMap = Eigen::Map<const Matrix>;
    Vector out = Vector::Zero(v.size());
    const MatMap in(v.data(), d, d);
    Eigen::Map<Matrix> res(out.data(), d, d);
    const int m = d - 1;
    const Eigen::ArrayXd s = Eigen::ArrayXd::LinSpaced(m, 1.0, m).sqrt();
    const auto rows = s.matrix().asDiagonal();

    if (alpha != 0.0) {
        res.rightCols(m).noalias() += alpha * (in.leftCols(m) * rows);
        res.leftCols(m).noalias() -= std::conj(alpha) * (in.rightCols(m) * rows);
    }
    if (zeta != 0.0) {
        res.bottomRows(m).noalias() += zeta * (rows * in.topRows(m));
        res.topRows(m).noalias() -= std::conj(zeta) * (rows * in.bottomRows(m));
    }
    if (pair != 0.0) {
        res.bottomRightCorner(m, m).noalias() += pair * (rows * in.topLeftCorner(m, m) * rows);
        res.topLeftCorner(m, m).noalias() -=
            std::conj(pair) * (rows * in.bottomRightCorner(m, m) * rows);
    }
    return out;
}

TwoModeOperator LadderGenerator::dense(int d) const {
    const TwoModeOperator a = embed(annihilation_matrix(d), Slot::Ordinary);
    const TwoModeOperator at = embed(annihilation_matrix(d), Slot::Tilde);
    const TwoModeOperator ad = a.adjoint();
    const TwoModeOperator atd = at.adjoint();
    return pair * (ad * atd) - std::conj(pair) * (a * at) + alpha * ad -
           std::conj(alpha) * a + zeta * atd - std::conj(zeta) * at;
}

double LadderGenerator::norm_bound(int d) const {
    const double top = static_cast<double>(d - 1);
    return 2.0 * std::abs(pair) * top +
           2.0 * (std::abs(alpha) + std::abs(zeta)) * std::sqrt(top);
}

Vector expm_apply(const LadderGenerator& x, const Vector& v, int d, double tol) {
    require(std::isfinite(std::abs(x.pair)) && std::isfinite(std::abs(x.alpha)) &&
                std::isfinite(std::abs(x.zeta)),
            ErrorKind::NonFinite, "non-finite generator coefficients");
    const double bound = x.norm_bound(d);
    const int steps = std::max(1, static_cast<int>(std::ceil(bound / kStepNorm)));
    const LadderGenerator step = x.scaled(1.0 / steps);
    Vector w = v;
    for (int s = 0; s < steps; ++s) {
        Vector term = w;
        Vector sum = w;
        const double ref = w.norm();
        for (int k = 1; k < 60; ++k) {
            term = step.apply(term, d) / static_cast<double>(k);
            sum += term;
            if (term.norm() <= tol * 1e-2 * ref) break;
        }
        w.swap(sum);
    }
    return w;
}

namespace {

template <class Op>
Vector taylor_action(const Op& m, double norm1, const Vector& v, double tol) {
    const int steps = std::max(1, static_cast<int>(std::ceil(norm1 / kStepNorm)));
    const double inv = 1.0 / static_cast<double>(steps);
    Vector w = v;
    Vector term(v.size()), next(v.size());
    for (int s = 0; s < steps; ++s) {
        term = w;
        Vector sum = w;
        const double ref = w.norm();
        for (int k = 1; k < 60; ++k) {
            next.noalias() = m * term;
            term = next * (inv / static_cast<double>(k));
            sum += term;
            if (term.norm() <= tol * 1e-2 * ref) break;
        }
        w.swap(sum);
    }
    return w;
}

}  // namespace

Vector expm_apply(const Matrix& m, const Vector& v, double tol) {
    require(m.rows() == m.cols() && m.cols() == v.size(), ErrorKind::DimensionMismatch,
            "dense exponential action: size mismatch");
    require(all_finite(m), ErrorKind::NonFinite, "non-finite entries in exponential action");
    return taylor_action(m, m.cwiseAbs().colwise().sum().maxCoeff(), v, tol);
}

Vector expm_apply(const SparseMatrix& m, const Vector& v, double tol) {
    require(m.rows() == m.cols() && m.cols() == v.size(), ErrorKind::DimensionMismatch,
            "sparse exponential action: size mismatch");
    double norm1 = 0.0;
    for (int k = 0; k < m.outerSize(); ++k) {
        double col = 0.0;
        for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
            require(std::isfinite(it.value().real()) && std::isfinite(it.value().imag()),
                    ErrorKind::NonFinite, "non-finite entries in exponential action");
            col += std::abs(it.value());
        }
        norm1 = std::max(norm1, col);
    }
    return taylor_action(m, norm1, v, tol);
}

// ---------------------------------------------------------------------------
// cutoff policy

int initial_cutoff(double displacement, double theta) {
    const double sh = std::sinh(theta);
    const double m = std::abs(displacement);
    return std::max(2, static_cast<int>(std::ceil((m + 3.0) * (m + 3.0) + 10.0 * sh * sh)));
}

TwoModeState build_with_cutoff(const CutoffPolicy& policy, double displacement,
                               double theta,
                               const std::function<TwoModeState(int)>& build) {
    auto too_small = [](int d, double tail) {
        std::ostringstream os;
        os << "cutoff d=" << d << " too small: tail mass " << tail;
        fail(ErrorKind::CutoffTooSmall, os.str());
    };
    if (policy.is_fixed()) {
        TwoModeState s = build(policy.fixed_dim);
        if (s.tail_mass() > policy.tail_tol) too_small(policy.fixed_dim, s.tail_mass());
        return s;
    }
    int d = std::min(initial_cutoff(displacement, theta), policy.max_dim);
    while (true) {
        TwoModeState s = build(d);
        if (s.tail_mass() < policy.tail_tol) return s;
        if (d >= policy.max_dim) too_small(d, s.tail_mass());
        d = std::min(2 * d, policy.max_dim);
    }
}

}  // namespace tfdcs
