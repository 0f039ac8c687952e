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

// Hyperbolic quotients that appear in the parameter maps. Each has a
// removable singularity at theta = 0 and switches to its Taylor series near
// it.

#include <cmath>

namespace tfdcs {

inline constexpr double kSeriesSwitch = 1e-4;

/// sinh(theta) / theta
inline double sinh_over(double theta) {
    if (std::abs(theta) < kSeriesSwitch) {
        const double t2 = theta * theta;
        return 1.0 + t2 / 6.0 * (1.0 + t2 / 20.0 * (1.0 + t2 / 42.0));
    }
    return std::sinh(theta) / theta;
}

/// (1 - cosh(theta)) / theta
inline double one_minus_cosh_over(double theta) {
    if (std::abs(theta) < kSeriesSwitch) {
        const double t2 = theta * theta;
        return -theta / 2.0 * (1.0 + t2 / 12.0 * (1.0 + t2 / 30.0 * (1.0 + t2 / 56.0)));
    }
    const double h = std::sinh(0.5 * theta);
    return -2.0 * h * h / theta;
}

/// (e^theta - 1) / theta
inline double expm1_over(double theta) {
    if (theta == 0.0) return 1.0;
    return std::expm1(theta) / theta;
}

/// (e^theta - 2 theta - e^-theta) / (2 theta^2) = (sinh theta - theta) / theta^2.
/// The direct form cancels to ~theta^3/6, so the series is used up to 1e-2.
inline double phase_coefficient(double theta) {
    if (std::abs(theta) < 1e-2) {
        const double t2 = theta * theta;
        return theta / 6.0 *
               (1.0 + t2 / 20.0 * (1.0 + t2 / 42.0 * (1.0 + t2 / 72.0 * (1.0 + t2 / 110.0))));
    }
    return (std::sinh(theta) - theta) / (theta * theta);
}

}  // namespace tfdcs
