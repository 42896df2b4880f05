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

#include "mzqfi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "mzqfi/fisher_core.hpp"
#include "mzqfi/fock_oracle.hpp"
#include "mzqfi/optimizer.hpp"
#include "mzqfi/scenario.hpp"
#include "mzqfi/shorthand.hpp"

namespace mzqfi {

namespace {

constexpr double pi = std::numbers::pi;

using PS = PortState;

NamedState sep(std::string name, const PortState &p0, const PortState &p1) {
    return {std::move(name), InputStateSpec::separable(p0, p1)};
}

double rel(double a, double b, double ref) {
    return std::abs(a - b) / std::max(1.0, ref);
}

struct Tracker {
    CheckResult r;
    Tracker(std::string name, double tol) {
        r.name = std::move(name);
        r.tolerance = tol;
    }
    void see(double dev, const std::string &where) {
        if (dev > r.observed || std::isnan(dev)) {
            r.observed = dev;
            if (!(dev <= r.tolerance)) {
                r.detail = where;
            }
        }
        if (!(dev <= r.tolerance)) {
            r.passed = false;
        }
    }
};

std::string fmt(double v) {
    return format_number(v);
}

}  // namespace

std::vector<NamedState> small_parameter_suite() {
    return {
        sep("vac|coh", PS::vacuum(), PS::coherent(1.2, 0.4)),
        sep("coh|coh", PS::coherent(1.0, 0), PS::coherent(1.0, 0.9)),
        sep("sqzvac|coh", PS::squeezed_vacuum(0.5, 0.3), PS::coherent(1.2, 0.4)),
        sep("coh|sqzcoh", PS::coherent(0.7, 1.1), PS::squeezed_coherent(0.9, -0.5, 0.4, 1.0)),
        sep("sqzcoh|sqzcoh", PS::squeezed_coherent(1.5, 0.2, 0.8, -0.7), PS::squeezed_coherent(2.0, -1.3, 0.6, 2.1)),
        sep("fock2|fock1", PS::fock(2), PS::fock(1)),
        sep("vac|fock1", PS::vacuum(), PS::fock(1)),
        sep("fock3|coh", PS::fock(3), PS::coherent(1.5, 0.3)),
        sep("sqzvac|sqzvac", PS::squeezed_vacuum(1.0, 0), PS::squeezed_vacuum(0.7, 1.5)),
        {"tmsv(0.6)", InputStateSpec::tmsv(0.6, 0.5)},
        {"tmsv(1.0)", InputStateSpec::tmsv(1.0, -0.8)},
        sep("fock4|sqzvac", PS::fock(4), PS::squeezed_vacuum(0.5, 0.2)),
        sep("sqzcoh|sqzcoh pmc3", PS::squeezed_coherent(2.0, -pi / 2, 0.9, 0), PS::squeezed_coherent(2.0, 0, 0.5, pi)),
        sep("vac|sqzcoh", PS::vacuum(), PS::squeezed_coherent(2.0, 0.3, 1.0, 0.2)),
    };
}

InputStateSpec random_catalog_state(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> amp(0.0, 3.0);
    std::uniform_real_distribution<double> sq(0.0, 1.2);
    std::uniform_real_distribution<double> ph(-pi, pi);
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<int> photons(0, 5);
    std::uniform_int_distribution<int> pick(0, 9);
    if (pick(rng) == 0) {
        return InputStateSpec::tmsv(sq(rng), ph(rng));
    }
    auto port = [&]() {
        switch (kind(rng)) {
            case 0:
                return PS::vacuum();
            case 1: {
                double a = amp(rng);
                return PS::coherent(a, ph(rng));
            }
            case 2:
                return PS::fock(photons(rng));
            case 3: {
                double r = sq(rng);
                return PS::squeezed_vacuum(r, ph(rng));
            }
            default: {
                double a = amp(rng);
                double ta = ph(rng);
                double r = sq(rng);
                return PS::squeezed_coherent(a, ta, r, ph(rng));
            }
        }
    };
    PortState p0 = port();
    PortState p1 = port();
    return InputStateSpec::separable(p0, p1);
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

std::string VerifyReport::text() const {
    std::ostringstream out;
    for (const CheckResult &c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " max_dev=" << fmt(c.observed)
            << " tol=" << fmt(c.tolerance);
        if (!c.detail.empty()) {
            out << " at " << c.detail;
        }
        out << "\n";
    }
    out << (passed() ? "verification passed" : "verification FAILED") << "\n";
    return out.str();
}

std::string VerifyReport::json() const {
    nlohmann::json j;
    j["passed"] = passed();
    j["checks"] = nlohmann::json::array();
    for (const CheckResult &c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"passed", c.passed},
                               {"max_deviation", c.observed},
                               {"tolerance", c.tolerance},
                               {"detail", c.detail}});
    }
    return j.dump(2);
}

VerifyReport run_verify(const VerifyOptions &options) {
    bool full = options.level == VerifyLevel::Full;
    VerifyReport report;
    std::vector<NamedState> suite = small_parameter_suite();
    if (!full) {
        suite.resize(6);
    }
    const double sqrt_half = std::numbers::sqrt2 / 2;
    std::vector<double> ts = full ? std::vector<double>{0, 0.2, 0.4, sqrt_half, 0.8, 1}
                                  : std::vector<double>{0.4, sqrt_half, 0.8};

    // Analytic Fisher elements against the truncated Fock-space oracle.
    Tracker ss("oracle_f_ss", 1e-8), dd("oracle_f_dd", 1e-8), sd("oracle_f_sd", 1e-8);
    Tracker mom("oracle_moments", 1e-8);
    for (const NamedState &s : suite) {
        ShorthandCoeffs sh = shorthand_for(s.spec);
        if (options.flip_s_plus) {
            sh.s_plus = -sh.s_plus;
        }
        FockVector in = build_state(s.spec, suggest_cutoff(s.spec));
        for (double t : ts) {
            FisherMatrix a = fisher_matrix(sh, t);
            FisherMatrix o = oracle_fisher(apply_bs_t(in, t));
            double ref = std::max(std::abs(a.f_ss), std::abs(a.f_dd));
            std::string where = s.name + " t=" + fmt(t);
            ss.see(rel(a.f_ss, o.f_ss, ref), where);
            dd.see(rel(a.f_dd, o.f_dd, ref), where);
            sd.see(rel(a.f_sd, o.f_sd, ref), where);
        }
        JointMoments ja = joint_moments(s.spec);
        JointMoments jo = oracle_moments(in);
        auto cm = [&](cplx x, cplx y, const char *field) {
            mom.see(std::abs(x - y) / std::max(1.0, std::abs(x)), s.name + " " + field);
        };
        cm(ja.mean_n0, jo.mean_n0, "mean_n0");
        cm(ja.mean_n1, jo.mean_n1, "mean_n1");
        cm(ja.var_n0, jo.var_n0, "var_n0");
        cm(ja.var_n1, jo.var_n1, "var_n1");
        cm(ja.cov_n0n1, jo.cov_n0n1, "cov_n0n1");
        cm(ja.cross_a0d_a1, jo.cross_a0d_a1, "cross_a0d_a1");
        cm(ja.cross_a0d2_a12, jo.cross_a0d2_a12, "cross_a0d2_a12");
        cm(ja.cross_a0d_n0_a1, jo.cross_a0d_n0_a1, "cross_a0d_n0_a1");
        cm(ja.cross_a0_a1d_n1, jo.cross_a0_a1d_n1, "cross_a0_a1d_n1");
    }
    for (Tracker *t : {&ss, &dd, &sd, &mom}) {
        report.checks.push_back(t->r);
    }

    // Algebraic identities and orderings on random states.
    std::mt19937_64 rng(20260415);
    int n_random = full ? 100 : 20;
    Tracker id_i("identity_f_i", 1e-12), id_up("identity_f_i_upper", 1e-12);
    Tracker ord_i("ordering_f_i_ge_f_2p", 1e-10), ord_ii("ordering_f_ii_ge_f_2p", 1e-10);
    for (int k = 0; k < n_random; k++) {
        InputStateSpec spec = random_catalog_state(rng);
        ShorthandCoeffs sh = shorthand_for(spec);
        double scale = sh.scale();
        // The coefficient polynomials are an independent algebraic route to
        // F^(i) and F^(i)_upper.
        CoeffBundle poly_i = coeff_bundle(sh, QfiKind::Asym);
        CoeffBundle poly_up = coeff_bundle(sh, QfiKind::AsymUpper);
        for (int m = 0; m <= 20; m++) {
            double t = m / 20.0;
            QfiBreakdown q = qfi_all(sh, t);
            const FisherMatrix &f = q.matrix;
            std::string where = spec.describe() + " t=" + fmt(t);
            id_i.see(std::abs(poly_i.eval(t) - (f.f_ss + f.f_dd - 2 * f.f_sd)) / scale, where);
            id_up.see(std::abs(poly_up.eval(t) - (f.f_ss + f.f_dd + 2 * f.f_sd)) / scale, where);
            ord_i.see(std::max(0.0, q.f_2p - q.f_i) / scale, where);
            ord_ii.see(std::max(0.0, q.f_2p - q.f_ii) / scale, where);
        }
    }
    for (Tracker *t : {&id_i, &id_up, &ord_i, &ord_ii}) {
        report.checks.push_back(t->r);
    }

    // Analytic optimum against a dense scan.
    Tracker opt_f("optimizer_vs_grid_f", 1e-8), opt_t("optimizer_vs_grid_t", 1e-3);
    int n_opt = full ? 50 : 8;
    std::size_t points = full ? 100001 : 10001;
    for (int k = 0; k < n_opt; k++) {
        InputStateSpec spec = random_catalog_state(rng);
        ShorthandCoeffs sh = shorthand_for(spec);
        for (QfiKind kind : {QfiKind::TwoParam, QfiKind::Asym, QfiKind::Sym}) {
            OptimizationReport r = optimize(sh, kind);
            GridResult g = grid_verify(sh, kind, points);
            std::string where = spec.describe() + " qfi=" + qfi_kind_name(kind);
            opt_f.see(std::max(0.0, g.f_best - r.f_max) / std::max(1.0, std::abs(r.f_max)), where);
            if (g.unique && !r.irrelevant) {
                opt_t.see(std::abs(g.t_best - r.t_opt), where);
            }
        }
    }
    report.checks.push_back(opt_f.r);
    report.checks.push_back(opt_t.r);

    // The second beam splitter leaves the Fisher matrix untouched.
    Tracker bs2("bs2_invariance", 1e-5), bs2_oracle("bs2_matches_oracle", 1e-5);
    std::vector<NamedState> bs2_states = {
        sep("coh|vac", PS::vacuum(), PS::coherent(1.0, 0)),
        sep("sqzvac|coh", PS::squeezed_vacuum(0.5, 0.3), PS::coherent(1.2, 0.4)),
        {"tmsv(0.6)", InputStateSpec::tmsv(0.6, 0.5)},
    };
    if (!full) {
        bs2_states.resize(1);
    }
    for (const NamedState &s : bs2_states) {
        double t = 0.8;
        Bs2Result b = bs2_invariance_check(s.spec, t, {0.0, 0.5, 1.0}, 0.3, -0.2);
        bs2.see(b.max_deviation, s.name);
        FisherMatrix o = oracle_fisher(apply_bs_t(build_state(s.spec, suggest_cutoff(s.spec)), t));
        const FisherMatrix &m = b.matrices.back();
        double ref = std::max(std::abs(o.f_ss), std::abs(o.f_dd));
        bs2_oracle.see(std::max({rel(m.f_ss, o.f_ss, ref), rel(m.f_dd, o.f_dd, ref), rel(m.f_sd, o.f_sd, ref)}),
                       s.name);
    }
    report.checks.push_back(bs2.r);
    report.checks.push_back(bs2_oracle.r);
    return report;
}

}  // namespace mzqfi
