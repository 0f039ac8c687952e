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
#include "tfdcs/equivalence.hpp"

#include <cmath>
#include <sstream>

#include "tfdcs/errors.hpp"
#include "tfdcs/hyperbolic.hpp"

namespace tfdcs {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void check_theta(double theta) {
    require(std::isfinite(theta) && theta >= 0.0, ErrorKind::InvalidArgument,
            "theta must be finite and non-negative");
}

// (alpha zeta - conj(alpha) conj(zeta)) / i = 2 Im(alpha zeta)
double pair_phase_factor(cplx alpha, cplx zeta) {
    // exact zero under tilde invariance, whatever the contraction of a*b - b*a
    if (zeta == std::conj(alpha)) return 0.0;
    return 2.0 * (alpha * zeta).imag();
}

}  // namespace

EquivalenceResult map_trotter_to_round(cplx alpha, cplx zeta, double theta) {
    check_theta(theta);
    const double s = sinh_over(theta);
    const double c = one_minus_cosh_over(theta);
    EquivalenceResult r;
    r.alpha_prime = alpha * s + std::conj(zeta) * c;
    r.zeta_prime = zeta * s + std::conj(alpha) * c;
    r.phase = phase_coefficient(theta) * pair_phase_factor(alpha, zeta);
    return r;
}

MappedPair map_double_to_round(cplx alpha, cplx zeta, double theta) {
    require(std::isfinite(theta), ErrorKind::InvalidArgument, "theta must be finite");
    const double c = std::cosh(theta);
    const double s = std::sinh(theta);
    return MappedPair{alpha * c - std::conj(zeta) * s, zeta * c - std::conj(alpha) * s};
}

ProductDecomposition finite_product_decomposition(cplx alpha, cplx zeta, double theta,
                                                  long long slices, long long n) {
    check_theta(theta);
    if (slices < 1 || n < 1 || n > slices) {
        std::ostringstream os;
        os << "product index n=" << n << " must satisfy 1 <= n <= N=" << slices;
        fail(ErrorKind::InvalidArgument, os.str());
    }
    const double step = theta / static_cast<double>(slices);
    CompensatedSum phase_sum, cosh_sum, sinh_sum;
    for (long long m = 0; m < n; ++m) {
        const double x = static_cast<double>(m) * step;
        cosh_sum.add(std::cosh(x));
        sinh_sum.add(std::sinh(x));
        if (m >= 1) phase_sum.add(static_cast<double>(n - m) * std::sinh(x));
    }
    const double inv = 1.0 / static_cast<double>(slices);
    ProductDecomposition r;
    r.phase = inv * inv * phase_sum.value() * pair_phase_factor(alpha, zeta);
    r.squeeze_angle = static_cast<double>(n) * step;
    r.alpha_n = alpha * inv * cosh_sum.value() - std::conj(zeta) * inv * sinh_sum.value();
    r.zeta_n = zeta * inv * cosh_sum.value() - std::conj(alpha) * inv * sinh_sum.value();
    return r;
}

SeriesLimits series_limits(double theta) {
    check_theta(theta);
    return SeriesLimits{phase_coefficient(theta), sinh_over(theta), -one_minus_cosh_over(theta)};
}

SeriesLimits series_partial_sums(double theta, long long slices) {
    check_theta(theta);
    require(slices >= 1, ErrorKind::InvalidArgument, "need at least one slice");
    const double step = theta / static_cast<double>(slices);
    CompensatedSum s1, s2, s3;
    for (long long m = 0; m < slices; ++m) {
        const double x = static_cast<double>(m) * step;
        const double sh = std::sinh(x);
        s2.add(std::cosh(x));
        s3.add(sh);
        if (m >= 1) s1.add(static_cast<double>(slices - m) * sh);
    }
    const double inv = 1.0 / static_cast<double>(slices);
    return SeriesLimits{inv * inv * s1.value(), inv * s2.value(), inv * s3.value()};
}

}  // namespace tfdcs
