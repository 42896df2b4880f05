// Copyright 2026 The mzqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mzqfi/shorthand.hpp"

#include <algorithm>
#include <cmath>

#include "mzqfi/errors.hpp"

namespace mzqfi {

double ShorthandCoeffs::scale() const {
    return std::max({1.0, v_plus + v_cov, a_coeff});
}

double ShorthandCoeffs::eps_zero() const {
    return 1e-12 * scale();
}

namespace {

void check_integrity(const ShorthandCoeffs &s, const JointMoments &j) {
    const double vals[] = {s.v_plus, s.v_minus, s.v_cov, s.a_coeff, s.s_plus, s.s_minus, s.p_coeff};
    for (double v : vals) {
        if (!std::isfinite(v)) {
            fail(ErrorCode::Integrity, "shorthand coefficient is not finite");
        }
    }
    double tol = 1e-10 * s.scale();
    if (j.var_n0 < -tol || j.var_n1 < -tol) {
        fail(ErrorCode::Integrity, "negative photon-number variance in moments");
    }
    // A is four times a variance, so a negative value means corrupted moments.
    if (s.a_coeff < -tol) {
        fail(ErrorCode::Integrity, "shorthand A is negative");
    }
    if (s.v_plus + s.v_cov < -tol) {
        fail(ErrorCode::Integrity, "total photon-number variance is negative");
    }
}

}  // namespace

ShorthandCoeffs shorthand_from_moments(const JointMoments &j, bool separable) {
    ShorthandCoeffs s;
    s.v_plus = j.var_n0 + j.var_n1;
    s.v_minus = j.var_n0 - j.var_n1;

    if (separable) {
        const ModeMoments &m0 = j.port0;
        const ModeMoments &m1 = j.port1;
        s.v_cov = 0;
        cplx a0c = std::conj(m0.mean_a);
        double pair = m0.mean_n * m1.mean_n - std::norm(m0.mean_a) * std::norm(m1.mean_a);
        double re = std::real(std::conj(m0.mean_a2) * m1.mean_a2 - a0c * a0c * m1.mean_a * m1.mean_a);
        s.a_coeff = 4 * (m0.mean_n + m1.mean_n + 2 * (pair - re));
        double first = 4 * std::imag(m0.cov_an * m1.mean_a);
        double second = 4 * std::imag(m0.mean_a * m1.cov_an);
        s.s_plus = first + second;
        s.s_minus = first - second;
        s.p_coeff = 4 * std::imag(a0c * m1.mean_a);
    } else {
        cplx c = j.cross_a0d_a1;
        double n0n1 = j.cov_n0n1 + j.mean_n0 * j.mean_n1;
        s.v_cov = 2 * j.cov_n0n1;
        s.a_coeff = 4 * (j.mean_n0 + j.mean_n1 + 2 * (n0n1 - std::norm(c) - std::real(j.cross_a0d2_a12 - c * c)));
        double first = 4 * std::imag(j.cross_a0d_n0_a1 - j.mean_n0 * c);
        double second = 4 * std::imag(j.cross_a0_a1d_n1 - j.mean_n1 * std::conj(c));
        s.s_plus = first + second;
        s.s_minus = first - second;
        s.p_coeff = 4 * std::imag(c);
    }
    check_integrity(s, j);
    return s;
}

ShorthandCoeffs shorthand_for(const InputStateSpec &spec) {
    return shorthand_from_moments(joint_moments(spec), spec.is_separable());
}

}  // namespace mzqfi
