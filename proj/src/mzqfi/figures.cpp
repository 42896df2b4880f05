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

#include "mzqfi/figures.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "mzqfi/errors.hpp"

namespace mzqfi {

namespace {

constexpr double pi = std::numbers::pi;

FigureCurve curve(int id, std::string label, const InputStateSpec &state) {
    FigureCurve c;
    c.label = std::move(label);
    c.config.name = "fig" + std::to_string(id) + "/" + c.label;
    c.config.state = state;
    return c;
}

// Squeezed-coherent light in port 1 with the given 2 theta_alpha - phi and
// port 0 empty.
InputStateSpec sqzcoh_vacuum(double pmc) {
    return InputStateSpec::separable(PortState::vacuum(), PortState::squeezed_coherent(10, 0, 0.6, -pmc));
}

// |alpha| = 1e3, z = 0.6 in port 1 and squeezed-coherent beta with r = 1 in
// port 0, under one of the named phase-matching presets.
InputStateSpec sqzcoh_pair(double beta, const char *preset) {
    InputStateSpec s = InputStateSpec::separable(PortState::squeezed_coherent(beta, 0, 1, 0),
                                                 PortState::squeezed_coherent(1e3, 0, 0.6, 0));
    return apply_phases_to_spec(s, pmc_preset(preset));
}

InputStateSpec sqzcoh_sqzvac(double z) {
    return InputStateSpec::separable(PortState::squeezed_vacuum(1, 0), PortState::squeezed_coherent(1e3, 0, z, pi));
}

std::string two_digit(int id) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02d", id);
    return buf;
}

}  // namespace

std::vector<FigureCurve> figure_curves(int id) {
    std::vector<FigureCurve> out;
    switch (id) {
        case 4: {
            double r = 1.9;
            out.push_back(curve(id, "coh_sqzvac",
                                InputStateSpec::separable(PortState::squeezed_vacuum(r, 0),
                                                          PortState::coherent(std::sinh(2 * r) / std::sqrt(2.0), 0))));
            break;
        }
        case 5:
            out.push_back(curve(id, "pmc_0", sqzcoh_vacuum(0)));
            out.push_back(curve(id, "pmc_0.15pi", sqzcoh_vacuum(0.15 * pi)));
            break;
        case 6:
            out.push_back(curve(id, "pmc_0.3pi", sqzcoh_vacuum(0.3 * pi)));
            out.push_back(curve(id, "pmc_0.5pi", sqzcoh_vacuum(0.5 * pi)));
            break;
        case 7:
            out.push_back(curve(id, "z_0.1", sqzcoh_sqzvac(0.1)));
            out.push_back(curve(id, "z_0.6", sqzcoh_sqzvac(0.6)));
            break;
        case 8:
            out.push_back(curve(id, "beta_20", sqzcoh_pair(20, "PMC1")));
            out.push_back(curve(id, "beta_500", sqzcoh_pair(500, "PMC1")));
            break;
        case 9:
            out.push_back(curve(id, "beta_20", sqzcoh_pair(20, "PMC2")));
            out.push_back(curve(id, "beta_250", sqzcoh_pair(250, "PMC2")));
            break;
        case 10:
            out.push_back(curve(id, "beta_0", sqzcoh_sqzvac(0.6)));
            out.push_back(curve(id, "beta_20", sqzcoh_pair(20, "PMC3")));
            out.push_back(curve(id, "beta_250", sqzcoh_pair(250, "PMC3")));
            break;
        case 11:
            for (int n = 0; n <= 2; n++) {
                out.push_back(curve(id, "fock_" + std::to_string(n),
                                    InputStateSpec::separable(PortState::fock(n), PortState::coherent(1e3, 0))));
            }
            break;
        case 12:
            out.push_back(
                curve(id, "coh_fock1", InputStateSpec::separable(PortState::fock(1), PortState::coherent(1e3, 0))));
            out.push_back(curve(id, "coh_sqzvac_r0.88",
                                InputStateSpec::separable(PortState::squeezed_vacuum(0.88, 0),
                                                          PortState::coherent(1e3, 0))));
            break;
        case 13:
            out.push_back(curve(id, "tmsv_r2", InputStateSpec::tmsv(2, 0)));
            out.push_back(curve(id, "coh_sqzvac_r2",
                                InputStateSpec::separable(PortState::squeezed_vacuum(2, 0),
                                                          PortState::coherent(std::sinh(2.0), 0))));
            break;
        default:
            fail(ErrorCode::InvalidArgument, "figure id must be between 4 and 13");
    }
    return out;
}

std::vector<OutputFile> run_figure(int id) {
    std::vector<FigureCurve> curves = figure_curves(id);
    std::string prefix = "fig" + two_digit(id) + "_";
    std::vector<OutputFile> files;
    std::ostringstream optima;
    optima << "# mzqfi figure " << id << " optima\n";
    optima << "curve,qfi,case_label,t_opt,f_max\n";
    for (const FigureCurve &c : curves) {
        files.push_back({prefix + c.label + ".csv", sweep_csv(c.config, run_sweep(c.config))});
        ShorthandCoeffs sh = shorthand_for(c.config.state);
        for (QfiKind kind : c.config.qfis) {
            OptimizationReport r = optimize(sh, kind);
            optima << c.label << "," << qfi_kind_name(kind) << "," << r.case_label << "," << format_number(r.t_opt)
                   << "," << format_number(r.f_max) << "\n";
        }
    }
    files.push_back({prefix + "optima.csv", optima.str()});
    return files;
}

}  // namespace mzqfi
