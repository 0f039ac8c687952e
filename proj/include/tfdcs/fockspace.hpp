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

// Truncated bosonic Fock space for one mode and for the ordinary (signal) x
// tilde (idler) pair.
//
// Two-mode index ordering, fixed everywhere in the library:
//
//     index(n_ordinary, n_tilde) = n_ordinary * d + n_tilde
//
// so the ordinary mode is the slow index and the tilde mode the fast one.

#include <complex>
#include <functional>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "tfdcs/errors.hpp"

namespace tfdcs {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<cplx>;

inline constexpr double kDefaultExpTol = 1e-12;
inline constexpr double kDefaultTailTol = 1e-8;

enum class Slot { Ordinary, Tilde };

inline int two_mode_index(int n_ordinary, int n_tilde, int d) noexcept {
    return n_ordinary * d + n_tilde;
}

/// Single-mode operator on levels 0..d-1.
class ModeMatrix {
  public:
    explicit ModeMatrix(Matrix entries);

    int dim() const noexcept { return static_cast<int>(entries_.rows()); }
    const Matrix& entries() const noexcept { return entries_; }

  private:
    Matrix entries_;
};

/// Operator on the d^2-dimensional two-mode space.
class TwoModeOperator {
  public:
    TwoModeOperator(int dim_per_mode, Matrix entries);

    int dim_per_mode() const noexcept { return d_; }
    const Matrix& entries() const noexcept { return entries_; }

    TwoModeOperator operator*(const TwoModeOperator& rhs) const;
    TwoModeOperator operator+(const TwoModeOperator& rhs) const;
    TwoModeOperator operator-(const TwoModeOperator& rhs) const;
    TwoModeOperator adjoint() const;
    Vector apply(const Vector& v) const;

  private:
    int d_;
    Matrix entries_;
};

TwoModeOperator operator*(cplx scale, const TwoModeOperator& op);

/// Normalized single-mode vector.
struct SingleModeState {
    Vector amplitudes;
    double tail_mass = 0.0;

    int dim() const noexcept { return static_cast<int>(amplitudes.size()); }
};

/// Normalized two-mode vector. tail_mass is the population sitting in the top
/// two levels of either mode, the proxy for truncation error.
class TwoModeState {
  public:
    /// Normalizes the amplitudes; throws on a zero or non-finite vector.
    TwoModeState(int dim_per_mode, Vector amplitudes);

    int dim_per_mode() const noexcept { return d_; }
    const Vector& amplitudes() const noexcept { return amplitudes_; }
    double tail_mass() const noexcept { return tail_mass_; }

    cplx amplitude(int n_ordinary, int n_tilde) const {
        return amplitudes_(two_mode_index(n_ordinary, n_tilde, d_));
    }

  private:
    int d_;
    Vector amplitudes_;
    double tail_mass_;
};

/// Hermitian, unit-trace, positive semidefinite single-mode operator.
class DensityMatrix {
  public:
    /// Validates the invariants; throws NotHermitian / InvalidArgument.
    explicit DensityMatrix(Matrix entries, double tol = 1e-10);

    int dim() const noexcept { return static_cast<int>(entries_.rows()); }
    const Matrix& entries() const noexcept { return entries_; }

    double trace() const;
    double hermiticity_defect() const;
    double min_eigenvalue() const;
    double purity() const;
    double mean_number() const;
    /// Embeds the matrix in a larger zero-padded Fock space.
    DensityMatrix padded(int d) const;

  private:
    Matrix entries_;
};

ModeMatrix annihilation_matrix(int d);
ModeMatrix creation_matrix(int d);
ModeMatrix number_matrix(int d);
ModeMatrix identity_matrix(int d);

/// op (x) I for Slot::Ordinary, I (x) op for Slot::Tilde.
TwoModeOperator embed(const ModeMatrix& op, Slot slot);

/// exp(m) by scaling and squaring of a Taylor polynomial whose order and
/// scaling are picked from the 1-norm.
Matrix matrix_exp(const Matrix& m, double tol = kDefaultExpTol);
TwoModeOperator matrix_exp(const TwoModeOperator& m, double tol = kDefaultExpTol);

/// Largest singular value.
double operator_norm(const Matrix& m);
/// max_ij |m_ij|
double max_abs(const Matrix& m);

/// Coherent amplitudes e^{-|mu|^2/2} mu^n / sqrt(n!), renormalized. Throws
/// CutoffTooSmall when the pre-normalization mass missing from the top of
/// the truncated space or sitting in its top two levels exceeds tail_tol.
SingleModeState coherent_vector(cplx mu, int d, double tail_tol = kDefaultTailTol);

/// Exact matrix elements <m|D(eta)|n>, 0 <= m,n < d, of the untruncated
/// displacement operator D(eta) = exp(eta a^dagger - conj(eta) a).
Matrix displacement_elements(cplx eta, int d);

double tail_mass(const Vector& amplitudes, int d);

TwoModeState vacuum_state(int d);
TwoModeState product_state(const SingleModeState& ordinary, const SingleModeState& tilde);

DensityMatrix partial_trace(const TwoModeOperator& rho, Slot keep, double tol = 1e-10);
/// Reduced state of a pure two-mode vector without forming |psi><psi|.
DensityMatrix reduced_density(const TwoModeState& psi, Slot keep);

/// Outer product |psi><psi| as a two-mode operator.
TwoModeOperator projector(const TwoModeState& psi);

/// ||candidate * e^{i phi} - reference|| minimized over the global phase phi.
double phase_aligned_distance(const Vector& reference, const Vector& candidate);
double fidelity(const Vector& a, const Vector& b);

/// Anti-Hermitian generator, applied without forming the matrix:
///
///   X = pair a^dag atil^dag - conj(pair) a atil
///     + alpha a^dag - conj(alpha) a + zeta atil^dag - conj(zeta) atil
///
/// The thermalizing operator U(theta) = exp(i theta G) is pair = theta, the
/// displacement D(alpha, zeta) has pair = 0.
struct LadderGenerator {
    cplx pair{0.0, 0.0};
    cplx alpha{0.0, 0.0};
    cplx zeta{0.0, 0.0};

    LadderGenerator scaled(double s) const { return {pair * s, alpha * s, zeta * s}; }

    Vector apply(const Vector& v, int d) const;
    TwoModeOperator dense(int d) const;
    /// Upper bound on the 2-norm of the truncated generator.
    double norm_bound(int d) const;
};

/// exp(X) v by sub-stepped Taylor series on the vector.
Vector expm_apply(const LadderGenerator& x, const Vector& v, int d,
                  double tol = kDefaultExpTol);

/// exp(m) v for a dense matrix, sub-stepped from the 1-norm of m.
Vector expm_apply(const Matrix& m, const Vector& v, double tol = kDefaultExpTol);
Vector expm_apply(const SparseMatrix& m, const Vector& v, double tol = kDefaultExpTol);

/// Matrix-free ladder actions on two-mode vectors.
Vector apply_lower(const Vector& v, int d, Slot slot);
Vector apply_raise(const Vector& v, int d, Slot slot);

/// Cutoff used for a state: either a fixed d, or the adaptive rule that
/// starts at ceil((m + 3)^2 + 10 sinh^2 theta) and doubles until the tail mass
/// falls below tail_tol.
struct CutoffPolicy {
    int fixed_dim = 0;            // > 0 selects a fixed cutoff
    double tail_tol = kDefaultTailTol;
    int max_dim = 256;

    static CutoffPolicy fixed(int d, double tail_tol = kDefaultTailTol) {
        return CutoffPolicy{d, tail_tol, d};
    }
    static CutoffPolicy adaptive(double tail_tol = kDefaultTailTol, int max_dim = 256) {
        return CutoffPolicy{0, tail_tol, max_dim};
    }
    bool is_fixed() const noexcept { return fixed_dim > 0; }
};

int initial_cutoff(double displacement, double theta);

/// Builds with `build(d)` under the policy. Fixed policies build once and
/// throw CutoffTooSmall if the tail exceeds the tolerance.
TwoModeState build_with_cutoff(const CutoffPolicy& policy, double displacement,
                               double theta,
                               const std::function<TwoModeState(int)>& build);

}  // namespace tfdcs
