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

// Optical parametric oscillator round-trip model. The signal mode sits in the
// ordinary slot and the idler in the tilde slot; this is a structural
// relabeling only.
//
//   H_I  = i hbar chi2 (a_s^dag a_i^dag - a_s a_i)
//   H_II = i hbar (g_s a_s^dag - g_s* a_s) + i hbar (g_i a_i^dag - g_i* a_i)
//
// One round trip spends T1/N in the crystal and T2/N in the resonators.

#include "tfdcs/fockspace.hpp"

namespace tfdcs {

struct OpoParams {
    double chi2 = 0.0;
    cplx g_s{0.0, 0.0};
    cplx g_i{0.0, 0.0};
    double T1 = 0.0;
    double T2 = 0.0;
    int N = 1;
    double hbar = 1.0;

    void validate() const;

    double theta() const { return chi2 * T1; }
    cplx gamma_s() const { return g_s * T2; }
    cplx gamma_i() const { return g_i * T2; }
    double total_time() const { return T1 + T2; }
    double crystal_slice() const { return T1 / N; }    // Delta tau_1
    double resonator_slice() const { return T2 / N; }  // Delta tau_2
};

enum class SliceOrder { InteractionFirst, DriveFirst };

TwoModeOperator h_interaction(double chi2, int d, double hbar = 1.0);
TwoModeOperator h_drive(cplx g_s, cplx g_i, int d, double hbar = 1.0);

/// (exp[-i T1 H_I / (hbar N)] exp[-i T2 H_II / (hbar N)])^N, or the factors
/// swapped for SliceOrder::DriveFirst.
TwoModeOperator sliced_unitary(const OpoParams& op, int d,
                               SliceOrder order = SliceOrder::InteractionFirst,
                               double tol = kDefaultExpTol);

/// exp[-i (T1 H_I + T2 H_II) / hbar].
TwoModeOperator closed_unitary(const OpoParams& op, int d, double tol = kDefaultExpTol);

/// closed_unitary |0,0~>, evaluated as the action of the exponential of the
/// dense Hamiltonian sum on the vacuum (no full unitary is formed).
TwoModeState closed_state(const OpoParams& op, const CutoffPolicy& policy);

/// Tr_idler |psi><psi| for psi = closed_state.
DensityMatrix signal_density(const OpoParams& op, const CutoffPolicy& policy);
inline DensityMatrix signal_density(const OpoParams& op, int d) {
    return signal_density(op, CutoffPolicy::fixed(d));
}

}  // namespace tfdcs
