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

#ifndef MZQFI_FIGURES_HPP
#define MZQFI_FIGURES_HPP

#include <string>
#include <vector>

#include "mzqfi/scenario.hpp"

namespace mzqfi {

inline constexpr int kFirstFigure = 4;
inline constexpr int kLastFigure = 13;

struct FigureCurve {
    std::string label;
    ScenarioConfig config;
};

struct OutputFile {
    std::string name;
    std::string content;
};

/// The curves of one data figure, each as a full scenario (501 points over
/// [0, 1], QFIs 2p, i and ii).
std::vector<FigureCurve> figure_curves(int id);

/// One CSV per curve ("figNN_<label>.csv") plus "figNN_optima.csv" with the
/// analytic optimum of every curve and QFI.
std::vector<OutputFile> run_figure(int id);

}  // namespace mzqfi

#endif
