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

#ifndef MZQFI_SHORTHAND_HPP
#define MZQFI_SHORTHAND_HPP

#include "mzqfi/state_catalog.hpp"

namespace mzqfi {

/// The seven state-dependent scalars through which every Fisher quantity is
/// written.
struct ShorthandCoeffs {
    double v_plus = 0;
    double v_minus = 0;
    double v_cov = 0;
    double a_coeff = 0;
    double s_plus = 0;
    double s_minus = 0;
    double p_coeff = 0;

    /// max(1, V+ + Vcov, A). Zero tests throughout the library are relative
    /// to this.
    double scale() const;
    /// 1e-12 * scale().
    double eps_zero() const;
};

/// With separable = true the single-mode port moments feed the product form;
/// otherwise the joint cross moments are used directly.
ShorthandCoeffs shorthand_from_moments(const JointMoments &j, bool separable);

/// Convenience: joint_moments followed by shorthand_from_moments.
ShorthandCoeffs shorthand_for(const InputStateSpec &spec);

}  // namespace mzqfi

#endif
