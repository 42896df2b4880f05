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

#ifndef MZQFI_OPTIMIZER_HPP
#define MZQFI_OPTIMIZER_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mzqfi/fisher_core.hpp"

namespace mzqfi {

struct OptimizationReport {
    QfiKind qfi = QfiKind::TwoParam;
    // Constant QFI: t_opt is NaN and every t attains f_max.
    bool irrelevant = false;
    double t_opt = 0;
    double f_max = 0;
    // "<Family>.<Branch>", e.g. "TwoParam.C1posC2zero" or "Asym.GeneralQuartic".
    std::string case_label;
    // (t, F(t)) for every point examined, analytic candidates first.
    std::vector<std::pair<double, double>> candidates;
    CoeffBundle bundle;
};

OptimizationReport optimize_2p(const ShorthandCoeffs &sh);
OptimizationReport optimize_ii(const ShorthandCoeffs &sh);
OptimizationReport optimize_i(const ShorthandCoeffs &sh);
OptimizationReport optimize_i_upper(const ShorthandCoeffs &sh);
OptimizationReport optimize(const ShorthandCoeffs &sh, QfiKind kind);

struct GridResult {
    double t_best = 0;
    double f_best = 0;
    // False when every t within the f_best level set (tolerance
    // 1e-8 * max(1, f_best)) does not fit inside a window of width 2e-3,
    // meaning the maximizer is not resolved at that tolerance.
    bool unique = true;
};

/// Uniform scan of `points` values over [0, 1] (endpoints included) followed
/// by a bounded Brent refinement around the best cell.
GridResult grid_verify(const ShorthandCoeffs &sh, QfiKind kind, std::size_t points);

}  // namespace mzqfi

#endif
