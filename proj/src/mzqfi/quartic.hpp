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

#ifndef MZQFI_QUARTIC_HPP
#define MZQFI_QUARTIC_HPP

#include <vector>

#include "mzqfi/fisher_core.hpp"

namespace mzqfi {

/// a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0.
struct QuarticCoeffs {
    double a4 = 0;
    double a3 = 0;
    double a2 = 0;
    double a1 = 0;
    double a0 = 0;

    double eval(double x) const;
    double max_abs() const;
};

/// Real roots in [-1, 1], ascending and deduplicated. Leading coefficients
/// that vanish relative to the largest one drop the degree. Throws
/// AllCoeffsZero when every coefficient is zero.
std::vector<double> solve_quartic(const QuarticCoeffs &q);

/// Stationarity condition of the five-term asymmetric form, written in
/// chi = |TR| after squaring away the sqrt(1 - 4 chi^2) factor.
QuarticCoeffs asym_quartic(const CoeffBundle &b);

}  // namespace mzqfi

#endif
