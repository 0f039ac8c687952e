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

// Parameter maps tying the three thermal coherent state families together.

#include <complex>

namespace tfdcs {

using cplx = std::complex<double>;

struct EquivalenceResult {
    cplx alpha_prime;
    cplx zeta_prime;
    /// Real phase Theta; the combined-exponential state equals
    /// e^{i Theta} U D(alpha', zeta') |0,0~>.
    double phase;
};

/// Trotter-kind parameters (alpha, zeta, theta) to the U.D form.
EquivalenceResult map_trotter_to_round(cplx alpha, cplx zeta, double theta);

struct MappedPair {
    cplx alpha;
    cplx zeta;
};

/// D.U parameters to the U.D form (exact, no phase). Passing -theta inverts
/// the map.
MappedPair map_double_to_round(cplx alpha, cplx zeta, double theta);

/// [U(theta/N) D(alpha/N, zeta/N)]^n = e^{i phase} U(squeeze_angle) D(alpha_n, zeta_n)
struct ProductDecomposition {
    double phase;
    double squeeze_angle;
    cplx alpha_n;
    cplx zeta_n;
};

ProductDecomposition finite_product_decomposition(cplx alpha, cplx zeta, double theta,
                                                  long long slices, long long n);

/// N -> infinity limits of the sums in the finite-product identity:
///   c1 = (e^t - 2t - e^-t) / (2 t^2),  c2 = sinh t / t,  c3 = -(1 - cosh t) / t.
struct SeriesLimits {
    double c1;
    double c2;
    double c3;
};

SeriesLimits series_limits(double theta);

/// The finite-N partial sums whose limits series_limits returns:
///   (1/N^2) sum_{m=1}^{N-1} (N-m) sinh(m t/N),
///   (1/N) sum_{m=0}^{N-1} cosh(m t/N),  (1/N) sum_{m=0}^{N-1} sinh(m t/N).
/// Compensated summation.
SeriesLimits series_partial_sums(double theta, long long slices);

}  // namespace tfdcs
