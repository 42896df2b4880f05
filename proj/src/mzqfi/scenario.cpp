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

#include "mzqfi/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mzqfi/errors.hpp"
#include "mzqfi/fock_oracle.hpp"

namespace mzqfi {

using json = nlohmann::json;

namespace {

[[noreturn]] void config_fail(const std::string &path, const std::string &what) {
    fail(ErrorCode::Config, path + ": " + what);
}

// Thin path-tracking view over a JSON object.
class Node {
   public:
    Node(const json &value, std::string path) : value_(value), path_(std::move(path)) {
    }

    const std::string &path() const {
        return path_;
    }
    const json &raw() const {
        return value_;
    }

    void require_object() const {
        if (!value_.is_object()) {
            config_fail(path_, "expected an object");
        }
    }

    void allow_only(std::initializer_list<const char *> keys) const {
        require_object();
        std::set<std::string> ok(keys.begin(), keys.end());
        for (const auto &item : value_.items()) {
            if (!ok.count(item.key())) {
                config_fail(child_path(item.key()), "unknown field");
            }
        }
    }

    bool has(const char *key) const {
        return value_.is_object() && value_.contains(key);
    }

    Node child(const char *key) const {
        if (!has(key)) {
            config_fail(child_path(key), "missing required field");
        }
        return Node(value_.at(key), child_path(key));
    }

    double number(const char *key) const {
        Node n = child(key);
        if (!n.value_.is_number()) {
            config_fail(n.path_, "expected a number");
        }
        double v = n.value_.get<double>();
        if (!std::isfinite(v)) {
            config_fail(n.path_, "expected a finite number");
        }
        return v;
    }

    double number_or(const char *key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }

    std::int64_t integer(const char *key) const {
        Node n = child(key);
        if (!n.value_.is_number_integer()) {
            config_fail(n.path_, "expected an integer");
        }
        return n.value_.get<std::int64_t>();
    }

    std::string string(const char *key) const {
        Node n = child(key);
        if (!n.value_.is_string()) {
            config_fail(n.path_, "expected a string");
        }
        return n.value_.get<std::string>();
    }

   private:
    std::string child_path(const std::string &key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    const json &value_;
    std::string path_;
};

struct Units {
    double factor = 1;
    double angle(double v) const {
        return v * factor;
    }
};

PortState parse_port(const Node &n, const Units &u) {
    n.require_object();
    std::string type = n.string("type");
    try {
        if (type == "vacuum") {
            n.allow_only({"type"});
            return PortState::vacuum();
        }
        if (type == "coherent") {
            n.allow_only({"type", "amplitude", "amplitude_phase"});
            return PortState::coherent(n.number("amplitude"), u.angle(n.number_or("amplitude_phase", 0)));
        }
        if (type == "fock") {
            n.allow_only({"type", "n"});
            std::int64_t k = n.integer("n");
            if (k < 0 || k > 1000000) {
                config_fail(n.path() + ".n", "photon count must be a non-negative integer");
            }
            return PortState::fock(static_cast<int>(k));
        }
        if (type == "squeezed_vacuum") {
            n.allow_only({"type", "squeeze", "squeeze_phase"});
            return PortState::squeezed_vacuum(n.number("squeeze"), u.angle(n.number_or("squeeze_phase", 0)));
        }
        if (type == "squeezed_coherent") {
            n.allow_only({"type", "amplitude", "amplitude_phase", "squeeze", "squeeze_phase"});
            return PortState::squeezed_coherent(n.number("amplitude"), u.angle(n.number_or("amplitude_phase", 0)),
                                                n.number("squeeze"), u.angle(n.number_or("squeeze_phase", 0)));
        }
    } catch (const Error &e) {
        if (e.code() == ErrorCode::Config) {
            throw;
        }
        config_fail(n.path(), e.what());
    }
    config_fail(n.path() + ".type",
                "unknown port type '" + type +
                    "' (expected vacuum, coherent, fock, squeezed_vacuum or squeezed_coherent)");
}

InputStateSpec parse_state(const Node &n, const Units &u) {
    n.require_object();
    std::string kind = n.string("kind");
    if (kind == "separable") {
        n.allow_only({"kind", "port0", "port1"});
        return InputStateSpec::separable(parse_port(n.child("port0"), u), parse_port(n.child("port1"), u));
    }
    if (kind == "tmsv") {
        n.allow_only({"kind", "squeeze", "squeeze_phase"});
        double r = n.number("squeeze");
        if (r < 0) {
            config_fail(n.path() + ".squeeze", "must be non-negative");
        }
        return InputStateSpec::tmsv(r, u.angle(n.number_or("squeeze_phase", 0)));
    }
    config_fail(n.path() + ".kind", "unknown state kind '" + kind + "' (expected separable or tmsv)");
}

PhaseAssignment parse_pmc(const Node &n, const Units &u) {
    n.allow_only({"preset", "theta_alpha", "theta_beta", "theta", "phi"});
    PhaseAssignment p;
    if (n.has("preset")) {
        std::string name = n.string("preset");
        try {
            p = pmc_preset(name);
        } catch (const Error &e) {
            config_fail(n.path() + ".preset", e.what());
        }
    }
    if (n.has("theta_alpha")) {
        p.theta_alpha = u.angle(n.number("theta_alpha"));
    }
    if (n.has("theta_beta")) {
        p.theta_beta = u.angle(n.number("theta_beta"));
    }
    if (n.has("theta")) {
        p.theta = u.angle(n.number("theta"));
    }
    if (n.has("phi")) {
        p.phi = u.angle(n.number("phi"));
    }
    return p;
}

json port_json(const PortState &p) {
    switch (p.kind) {
        case PortKind::Vacuum:
            return {{"type", "vacuum"}};
        case PortKind::Coherent:
            return {{"type", "coherent"}, {"amplitude", p.amp.magnitude}, {"amplitude_phase", p.amp.phase}};
        case PortKind::Fock:
            return {{"type", "fock"}, {"n", p.fock_n}};
        case PortKind::SqueezedVacuum:
            return {{"type", "squeezed_vacuum"}, {"squeeze", p.squeeze.factor}, {"squeeze_phase", p.squeeze.phase}};
        case PortKind::SqueezedCoherent:
            return {{"type", "squeezed_coherent"},
                    {"amplitude", p.amp.magnitude},
                    {"amplitude_phase", p.amp.phase},
                    {"squeeze", p.squeeze.factor},
                    {"squeeze_phase", p.squeeze.phase}};
    }
    return {};
}

}  // namespace

PhaseAssignment pmc_preset(const std::string &name) {
    constexpr double pi = std::numbers::pi;
    PhaseAssignment p;
    p.theta_alpha = 0;
    p.theta = 0;
    if (name == "PMC1") {
        // 2 theta_a - theta = 0, 2 theta_a - phi = pi, theta_a - theta_b = 0
        p.phi = pi;
        p.theta_beta = 0;
    } else if (name == "PMC2") {
        // 2 theta_a - theta = 0, 2 theta_a - phi = 0, theta_a - theta_b = 0
        p.phi = 0;
        p.theta_beta = 0;
    } else if (name == "PMC3") {
        // 2 theta_a - theta = 0, 2 theta_a - phi = pi, theta_a - theta_b = pi/2
        p.phi = pi;
        p.theta_beta = -pi / 2;
    } else {
        fail(ErrorCode::Config, "unknown PMC preset '" + name + "' (expected PMC1, PMC2 or PMC3)");
    }
    return p;
}

InputStateSpec apply_phases_to_spec(const InputStateSpec &spec, const PhaseAssignment &phases) {
    if (const auto *t = std::get_if<TmsvSpec>(&spec.body)) {
        return InputStateSpec::tmsv(t->squeeze.factor, phases.theta.value_or(t->squeeze.phase));
    }
    SeparableSpec s = std::get<SeparableSpec>(spec.body);
    auto set_amp = [](PortState &p, const std::optional<double> &v) {
        if (v && (p.kind == PortKind::Coherent || p.kind == PortKind::SqueezedCoherent)) {
            p.amp = ComplexAmp(p.amp.magnitude, *v);
        }
    };
    auto set_sq = [](PortState &p, const std::optional<double> &v) {
        if (v && (p.kind == PortKind::SqueezedVacuum || p.kind == PortKind::SqueezedCoherent)) {
            p.squeeze = SqueezeParam(p.squeeze.factor, *v);
        }
    };
    set_amp(s.port1, phases.theta_alpha);
    set_sq(s.port1, phases.phi);
    set_amp(s.port0, phases.theta_beta);
    set_sq(s.port0, phases.theta);
    return InputStateSpec{s};
}

ScenarioConfig parse_config(const std::string &json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        fail(ErrorCode::Config, std::string("config: invalid JSON: ") + e.what());
    }
    Node root(doc, "");
    if (!doc.is_object()) {
        config_fail("config", "expected a JSON object at top level");
    }
    root.allow_only({"schema_version", "name", "units", "state", "pmc", "sweep", "qfis", "repetitions", "oracle"});
    std::int64_t version = root.integer("schema_version");
    if (version != kSchemaVersion) {
        config_fail("schema_version", "unsupported version " + std::to_string(version) + " (expected 1)");
    }

    ScenarioConfig c;
    if (root.has("name")) {
        c.name = root.string("name");
    }
    Units units;
    if (root.has("units")) {
        std::string u = root.string("units");
        if (u == "pi") {
            units.factor = std::numbers::pi;
        } else if (u != "rad") {
            config_fail("units", "expected \"pi\" or \"rad\"");
        }
    }
    c.state = parse_state(root.child("state"), units);
    if (root.has("pmc")) {
        c.state = apply_phases_to_spec(c.state, parse_pmc(root.child("pmc"), units));
    }

    if (root.has("sweep")) {
        Node s = root.child("sweep");
        s.allow_only({"t_min", "t_max", "points"});
        c.sweep.t_min = s.number_or("t_min", 0);
        c.sweep.t_max = s.number_or("t_max", 1);
        if (s.has("points")) {
            std::int64_t p = s.integer("points");
            if (p < 2 || p > 10000000) {
                config_fail("sweep.points", "must be between 2 and 10000000");
            }
            c.sweep.points = static_cast<int>(p);
        }
        if (!(0 <= c.sweep.t_min && c.sweep.t_min <= c.sweep.t_max && c.sweep.t_max <= 1)) {
            config_fail("sweep", "need 0 <= t_min <= t_max <= 1");
        }
    }

    if (root.has("qfis")) {
        Node q = root.child("qfis");
        if (!q.raw().is_array() || q.raw().empty()) {
            config_fail("qfis", "expected a non-empty array of \"2p\", \"i\", \"i_upper\", \"ii\"");
        }
        c.qfis.clear();
        for (std::size_t k = 0; k < q.raw().size(); k++) {
            const json &item = q.raw()[k];
            std::string path = "qfis[" + std::to_string(k) + "]";
            if (!item.is_string()) {
                config_fail(path, "expected a string");
            }
            QfiKind kind;
            try {
                kind = parse_qfi_kind(item.get<std::string>());
            } catch (const Error &e) {
                config_fail(path, e.what());
            }
            if (std::find(c.qfis.begin(), c.qfis.end(), kind) != c.qfis.end()) {
                config_fail(path, "duplicate QFI selector");
            }
            c.qfis.push_back(kind);
        }
    }

    if (root.has("repetitions")) {
        c.repetitions = root.integer("repetitions");
        if (c.repetitions < 1) {
            config_fail("repetitions", "must be a positive integer");
        }
    }

    if (root.has("oracle")) {
        Node o = root.child("oracle");
        o.allow_only({"cutoff", "t_values"});
        OracleSpec spec;
        if (o.has("cutoff")) {
            std::int64_t cut = o.integer("cutoff");
            if (cut < 0 || cut > 200) {
                config_fail("oracle.cutoff", "must be between 0 (automatic) and 200");
            }
            spec.cutoff = static_cast<int>(cut);
        }
        if (o.has("t_values")) {
            Node tv = o.child("t_values");
            if (!tv.raw().is_array()) {
                config_fail("oracle.t_values", "expected an array of numbers");
            }
            for (std::size_t k = 0; k < tv.raw().size(); k++) {
                const json &item = tv.raw()[k];
                std::string path = "oracle.t_values[" + std::to_string(k) + "]";
                if (!item.is_number()) {
                    config_fail(path, "expected a number");
                }
                double t = item.get<double>();
                if (!(t >= 0 && t <= 1)) {
                    config_fail(path, "must lie in [0, 1]");
                }
                spec.t_values.push_back(t);
            }
        }
        c.oracle = spec;
    }
    return c;
}

std::string resolved_config_json(const ScenarioConfig &c) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["units"] = "rad";
    if (!c.name.empty()) {
        j["name"] = c.name;
    }
    if (const auto *s = std::get_if<SeparableSpec>(&c.state.body)) {
        j["state"] = {{"kind", "separable"}, {"port0", port_json(s->port0)}, {"port1", port_json(s->port1)}};
    } else {
        const auto &t = std::get<TmsvSpec>(c.state.body);
        j["state"] = {{"kind", "tmsv"}, {"squeeze", t.squeeze.factor}, {"squeeze_phase", t.squeeze.phase}};
    }
    j["sweep"] = {{"t_min", c.sweep.t_min}, {"t_max", c.sweep.t_max}, {"points", c.sweep.points}};
    json q = json::array();
    for (QfiKind k : c.qfis) {
        q.push_back(qfi_kind_name(k));
    }
    j["qfis"] = q;
    j["repetitions"] = c.repetitions;
    if (c.oracle) {
        j["oracle"] = {{"cutoff", c.oracle->cutoff}, {"t_values", c.oracle->t_values}};
    }
    return j.dump();
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (v == 0) {
        return "0";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

double safe_qcrb(double f, std::int64_t reps) {
    return f > 0 ? qcrb(f, reps) : std::numeric_limits<double>::infinity();
}

double pick(const QfiBreakdown &q, QfiKind k) {
    switch (k) {
        case QfiKind::TwoParam:
            return q.f_2p;
        case QfiKind::Asym:
            return q.f_i;
        case QfiKind::AsymUpper:
            return q.f_i_upper;
        case QfiKind::Sym:
            return q.f_ii;
    }
    return 0;
}

void metadata(std::ostringstream &out, const char *what, const ScenarioConfig &c) {
    out << "# mzqfi " << what << "\n";
    if (!c.name.empty()) {
        out << "# name: " << c.name << "\n";
    }
    out << "# state: " << c.state.describe() << "\n";
    out << "# config: " << resolved_config_json(c) << "\n";
}

}  // namespace

SweepTable run_sweep(const ScenarioConfig &c) {
    ShorthandCoeffs sh = shorthand_for(c.state);
    SweepTable table;
    table.qfis = c.qfis;
    int n = c.sweep.points;
    for (int k = 0; k < n; k++) {
        double t = k + 1 == n ? c.sweep.t_max : c.sweep.t_min + (c.sweep.t_max - c.sweep.t_min) * k / (n - 1);
        QfiBreakdown q = qfi_all(sh, t);
        SweepRow row;
        row.t = t;
        for (QfiKind kind : c.qfis) {
            double f = pick(q, kind);
            row.f.push_back(f);
            row.qcrb.push_back(safe_qcrb(f, c.repetitions));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string sweep_csv(const ScenarioConfig &c, const SweepTable &table) {
    std::ostringstream out;
    metadata(out, "sweep", c);
    out << "t";
    for (QfiKind k : table.qfis) {
        out << ",f_" << qfi_kind_name(k);
    }
    for (QfiKind k : table.qfis) {
        out << ",qcrb_" << qfi_kind_name(k);
    }
    out << "\n";
    for (const SweepRow &r : table.rows) {
        out << format_number(r.t);
        for (double f : r.f) {
            out << "," << format_number(f);
        }
        for (double q : r.qcrb) {
            out << "," << format_number(q);
        }
        out << "\n";
    }
    return out.str();
}

OptimizeResult run_optimize(const ScenarioConfig &c) {
    ShorthandCoeffs sh = shorthand_for(c.state);
    OptimizeResult res;
    for (QfiKind kind : c.qfis) {
        OptimizeEntry e;
        e.report = optimize(sh, kind);
        e.qcrb = safe_qcrb(e.report.f_max, c.repetitions);
        if (c.oracle) {
            e.grid = grid_verify(sh, kind, 100001);
        }
        res.entries.push_back(std::move(e));
    }
    if (c.oracle && !c.oracle->t_values.empty()) {
        res.oracle_cutoff = c.oracle->cutoff > 0 ? c.oracle->cutoff : suggest_cutoff(c.state);
        FockVector in = build_state(c.state, res.oracle_cutoff);
        for (double t : c.oracle->t_values) {
            OracleCheckRow row;
            row.t = t;
            row.analytic = fisher_matrix(sh, t);
            row.oracle = oracle_fisher(apply_bs_t(in, t));
            double ref = std::max({1.0, std::abs(row.analytic.f_ss), std::abs(row.analytic.f_dd)});
            row.max_rel_dev = std::max({std::abs(row.analytic.f_ss - row.oracle.f_ss),
                                        std::abs(row.analytic.f_dd - row.oracle.f_dd),
                                        std::abs(row.analytic.f_sd - row.oracle.f_sd)}) /
                              ref;
            res.oracle_rows.push_back(row);
        }
    }
    return res;
}

std::string optimize_csv(const ScenarioConfig &c, const OptimizeResult &res) {
    std::ostringstream out;
    metadata(out, "optimize", c);
    out << "qfi,case_label,t_opt,f_max,qcrb";
    bool grid = c.oracle.has_value();
    if (grid) {
        out << ",grid_t_best,grid_f_best,grid_rel_delta_f,grid_delta_t,grid_unique";
    }
    out << "\n";
    for (const OptimizeEntry &e : res.entries) {
        const OptimizationReport &r = e.report;
        out << qfi_kind_name(r.qfi) << "," << r.case_label << "," << format_number(r.t_opt) << ","
            << format_number(r.f_max) << "," << format_number(e.qcrb);
        if (grid && e.grid) {
            double df = std::abs(r.f_max - e.grid->f_best) / std::max(1.0, std::abs(r.f_max));
            double dt = r.irrelevant ? 0.0 : std::abs(r.t_opt - e.grid->t_best);
            out << "," << format_number(e.grid->t_best) << "," << format_number(e.grid->f_best) << ","
                << format_number(df) << "," << format_number(dt) << "," << (e.grid->unique ? 1 : 0);
        }
        out << "\n";
    }
    return out.str();
}

std::string oracle_check_csv(const ScenarioConfig &c, const OptimizeResult &res) {
    if (!c.oracle) {
        return "";
    }
    std::ostringstream out;
    metadata(out, "oracle check", c);
    out << "# cutoff: " << res.oracle_cutoff << "\n";
    out << "t,f_ss,f_dd,f_sd,oracle_f_ss,oracle_f_dd,oracle_f_sd,max_rel_dev\n";
    for (const OracleCheckRow &r : res.oracle_rows) {
        out << format_number(r.t) << "," << format_number(r.analytic.f_ss) << "," << format_number(r.analytic.f_dd)
            << "," << format_number(r.analytic.f_sd) << "," << format_number(r.oracle.f_ss) << ","
            << format_number(r.oracle.f_dd) << "," << format_number(r.oracle.f_sd) << ","
            << format_number(r.max_rel_dev) << "\n";
    }
    return out.str();
}

}  // namespace mzqfi
