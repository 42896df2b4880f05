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

#ifndef MZQFI_SCENARIO_HPP
#define MZQFI_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mzqfi/fisher_core.hpp"
#include "mzqfi/optimizer.hpp"
#include "mzqfi/state_catalog.hpp"

namespace mzqfi {

inline constexpr int kSchemaVersion = 1;

struct SweepSpec {
    double t_min = 0;
    double t_max = 1;
    int points = 501;
};

struct OracleSpec {
    int cutoff = 0;  // 0 selects suggest_cutoff
    std::vector<double> t_values;
};

struct ScenarioConfig {
    std::string name;
    InputStateSpec state = InputStateSpec::separable(PortState::vacuum(), PortState::vacuum());
    SweepSpec sweep;
    std::vector<QfiKind> qfis{QfiKind::TwoParam, QfiKind::Asym, QfiKind::Sym};
    std::int64_t repetitions = 1;
    std::optional<OracleSpec> oracle;
};

/// Parses the JSON scenario format. Every problem is reported as a Config
/// error whose message starts with the offending field path.
ScenarioConfig parse_config(const std::string &json_text);
/// Canonical JSON for a config: radians, defaults filled in, sorted keys.
std::string resolved_config_json(const ScenarioConfig &config);

/// Phase presets as (theta_alpha, theta_beta, theta, phi) in radians.
struct PhaseAssignment {
    std::optional<double> theta_alpha;
    std::optional<double> theta_beta;
    std::optional<double> theta;
    std::optional<double> phi;
};
PhaseAssignment pmc_preset(const std::string &name);
/// theta_alpha / phi go to port 1, theta_beta / theta to port 0 (or the
/// two-mode squeezing phase). Ports without the matching parameter ignore it.
InputStateSpec apply_phases_to_spec(const InputStateSpec &spec, const PhaseAssignment &phases);

struct SweepRow {
    double t = 0;
    std::vector<double> f;     // one per selected QFI
    std::vector<double> qcrb;  // +inf where the QFI vanishes
};

struct SweepTable {
    std::vector<QfiKind> qfis;
    std::vector<SweepRow> rows;
};

SweepTable run_sweep(const ScenarioConfig &config);
std::string sweep_csv(const ScenarioConfig &config, const SweepTable &table);

struct OptimizeEntry {
    OptimizationReport report;
    double qcrb = 0;
    std::optional<GridResult> grid;
};

struct OracleCheckRow {
    double t = 0;
    FisherMatrix analytic;
    FisherMatrix oracle;
    double max_rel_dev = 0;
};

struct OptimizeResult {
    std::vector<OptimizeEntry> entries;
    std::vector<OracleCheckRow> oracle_rows;
    int oracle_cutoff = 0;
};

OptimizeResult run_optimize(const ScenarioConfig &config);
std::string optimize_csv(const ScenarioConfig &config, const OptimizeResult &result);
/// Empty string when the config has no oracle block.
std::string oracle_check_csv(const ScenarioConfig &config, const OptimizeResult &result);

/// CSV number formatting shared by every table: 17 significant digits,
/// "inf" / "nan" for non-finite values.
std::string format_number(double v);

}  // namespace mzqfi

#endif
