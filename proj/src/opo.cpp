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
#include "tfdcs/opo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tfdcs {

void OpoParams::validate() const {
    require(std::isfinite(chi2), ErrorKind::InvalidArgument, "chi2 must be finite");
    require(std::isfinite(std::abs(g_s)) && std::isfinite(std::abs(g_i)),
            ErrorKind::InvalidArgument, "drive amplitudes must be finite");
    require(std::isfinite(T1) && T1 >= 0.0 && std::isfinite(T2) && T2 >= 0.0,
            ErrorKind::InvalidArgument, "T1 and T2 must be finite and non-negative");
    require(N >= 1, ErrorKind::InvalidArgument, "number of round trips must be >= 1");
    require(std::isfinite(hbar) && hbar > 0.0, ErrorKind::InvalidArgument, "hbar must be > 0");
}

namespace {

// a_s^dag a_i^dag and the drive terms as sparse two-mode matrices
SparseMatrix interaction_sparse(double chi2, int d, double hbar) {
    require(d >= 2, ErrorKind::InvalidArgument, "cutoff must be >= 2");
    std::vector<Eigen::Triplet<cplx>> entries;
    const cplx c(0.0, hbar * chi2);
    for (int o = 0; o + 1 < d; ++o)
        for (int t = 0; t + 1 < d; ++t) {
            const double amp = std::sqrt((o + 1.0) * (t + 1.0));
            const int lo = two_mode_index(o, t, d), hi = two_mode_index(o + 1, t + 1, d);
            entries.emplace_back(hi, lo, c * amp);
            entries.emplace_back(lo, hi, -c * amp);
        }
    SparseMatrix h(d * d, d * d);
    h.setFromTriplets(entries.begin(), entries.end());
    return h;
}

SparseMatrix drive_sparse(cplx g_s, cplx g_i, int d, double hbar) {
    require(d >= 2, ErrorKind::InvalidArgument, "cutoff must be >= 2");
    std::vector<Eigen::Triplet<cplx>> entries;
    const cplx ih(0.0, hbar);
    for (int o = 0; o < d; ++o)
        for (int t = 0; t < d; ++t) {
            const int here = two_mode_index(o, t, d);
            if (o + 1 < d) {
                const double amp = std::sqrt(o + 1.0);
                const int up = two_mode_index(o + 1, t, d);
                entries.emplace_back(up, here, ih * g_s * amp);
                entries.emplace_back(here, up, -ih * std::conj(g_s) * amp);
            }
            if (t + 1 < d) {
                const double amp = std::sqrt(t + 1.0);
                const int up = two_mode_index(o, t + 1, d);
                entries.emplace_back(up, here, ih * g_i * amp);
                entries.emplace_back(here, up, -ih * std::conj(g_i) * amp);
            }
        }
    SparseMatrix h(d * d, d * d);
    h.setFromTriplets(entries.begin(), entries.end());
    return h;
}

}  // namespace

TwoModeOperator h_interaction(double chi2, int d, double hbar) {
    return TwoModeOperator(d, Matrix(interaction_sparse(chi2, d, hbar)));
}

TwoModeOperator h_drive(cplx g_s, cplx g_i, int d, double hbar) {
    return TwoModeOperator(d, Matrix(drive_sparse(g_s, g_i, d, hbar)));
}

namespace {

// -i t H / hbar
Matrix evolution_exponent(const TwoModeOperator& h, double t, double hbar) {
    return cplx(0.0, -t / hbar) * h.entries();
}

Matrix matrix_power(Matrix base, int n) {
    Matrix result = Matrix::Identity(base.rows(), base.cols());
    Matrix tmp(base.rows(), base.cols());
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            if (first) {
                result = base;
                first = false;
            } else {
                tmp.noalias() = result * base;
                result.swap(tmp);
            }
        }
        n >>= 1;
        if (n > 0) {
            tmp.noalias() = base * base;
            base.swap(tmp);
        }
    }
    return result;
}

}  // namespace

TwoModeOperator sliced_unitary(const OpoParams& op, int d, SliceOrder order, double tol) {
    op.validate();
    const Matrix crystal =
        matrix_exp(evolution_exponent(h_interaction(op.chi2, d, op.hbar), op.crystal_slice(),
                                      op.hbar),
                   tol);
    const Matrix resonator = matrix_exp(
        evolution_exponent(h_drive(op.g_s, op.g_i, d, op.hbar), op.resonator_slice(), op.hbar),
        tol);
    const Matrix round_trip =
        order == SliceOrder::InteractionFirst ? Matrix(crystal * resonator)
                                              : Matrix(resonator * crystal);
    return TwoModeOperator(d, matrix_power(round_trip, op.N));
}

TwoModeOperator closed_unitary(const OpoParams& op, int d, double tol) {
    op.validate();
    const Matrix exponent =
        evolution_exponent(h_interaction(op.chi2, d, op.hbar), op.T1, op.hbar) +
        evolution_exponent(h_drive(op.g_s, op.g_i, d, op.hbar), op.T2, op.hbar);
    return TwoModeOperator(d, matrix_exp(exponent, tol));
}

TwoModeState closed_state(const OpoParams& op, const CutoffPolicy& policy) {
    op.validate();
    // Mean amplitudes of the combined-exponential state are bounded by
    // (|gamma_s| + |gamma_i|) e^theta.
    const double scale = (std::abs(op.gamma_s()) + std::abs(op.gamma_i())) *
                         std::exp(std::abs(op.theta()));
    return build_with_cutoff(policy, scale, op.theta(), [&](int d) {
        const SparseMatrix exponent =
            cplx(0.0, -op.T1 / op.hbar) * interaction_sparse(op.chi2, d, op.hbar) +
            cplx(0.0, -op.T2 / op.hbar) * drive_sparse(op.g_s, op.g_i, d, op.hbar);
        return TwoModeState(d, expm_apply(exponent, vacuum_state(d).amplitudes()));
    });
}

DensityMatrix signal_density(const OpoParams& op, const CutoffPolicy& policy) {
    return reduced_density(closed_state(op, policy), Slot::Ordinary);
}

}  // namespace tfdcs
