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

#include "mzqfi/optimizer.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "mzqfi/errors.hpp"
#include "mzqfi/quartic.hpp"

namespace mzqfi {

namespace {

constexpr double kBalanced = std::numbers::sqrt2 / 2;

// t from the contrast u = |T|^2 - |R|^2.
double t_from_contrast(double u) {
    return std::sqrt(std::clamp((1 + u) / 2, 0.0, 1.0));
}

struct Plan {
    std::string branch;
    std::vector<double> analytic;
    bool irrelevant = false;
    // Interior candidates that come from a formula rather than a fixed point
    // get a short Brent polish on the directly evaluated QFI.
    bool polish = false;
};

std::pair<double, double> brent_max(const ShorthandCoeffs &sh, QfiKind kind, double lo, double hi) {
    auto neg = [&](double t) { return -qfi_value(sh, kind, t); };
    auto r = boost::math::tools::brent_find_minima(neg, lo, hi, std::numeric_limits<double>::digits / 2);
    return {r.first, -r.second};
}

OptimizationReport finish(const ShorthandCoeffs &sh, QfiKind kind, const CoeffBundle &bundle, const char *family,
                          const Plan &plan) {
    OptimizationReport rep;
    rep.qfi = kind;
    rep.bundle = bundle;
    rep.case_label = std::string(family) + "." + plan.branch;
    rep.irrelevant = plan.irrelevant;

    for (double t : plan.analytic) {
        double f = qfi_value(sh, kind, t);
        if (plan.polish && t > 0 && t < 1) {
            auto [tp, fp] = brent_max(sh, kind, std::max(0.0, t - 1e-3), std::min(1.0, t + 1e-3));
            if (fp > f) {
                rep.candidates.emplace_back(tp, fp);
            }
        }
        rep.candidates.emplace_back(t, f);
    }
    for (double t : {0.0, kBalanced, 1.0}) {
        rep.candidates.emplace_back(t, qfi_value(sh, kind, t));
    }

    double best = -std::numeric_limits<double>::infinity();
    for (const auto &c : rep.candidates) {
        best = std::max(best, c.second);
    }
    // First candidate within rounding of the maximum wins, so analytic points
    // keep priority over the fixed fallbacks on ties.
    double tol = 1e-12 * std::max(1.0, std::abs(best));
    for (const auto &c : rep.candidates) {
        if (c.second >= best - tol) {
            rep.t_opt = c.first;
            rep.f_max = c.second;
            break;
        }
    }
    if (rep.irrelevant) {
        rep.t_opt = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

Plan three_term_plan(const CoeffBundle &b, double eps) {
    double c1 = b.c[1];
    double c2 = b.c[2];
    bool z1 = std::abs(c1) <= eps;
    bool z2 = std::abs(c2) <= eps;
    Plan p;
    if (z1 && z2) {
        p.branch = "Irrelevant";
        p.irrelevant = true;
    } else if (z2) {
        if (c1 > 0) {
            p.branch = "C1posC2zero";
            p.analytic = {kBalanced};
        } else {
            p.branch = "C1negC2zero";
            p.analytic = {0.0, 1.0};
        }
    } else {
        p.branch = "C2nonzero";
        double r = std::hypot(c1, 2 * c2);
        double cos_psi = std::copysign(std::sqrt(std::max(0.0, 0.5 - c1 / (2 * r))), c2);
        p.analytic = {t_from_contrast(cos_psi)};
        p.polish = true;
    }
    return p;
}

Plan five_term_plan(const CoeffBundle &b, double eps) {
    const auto &c = b.c;
    bool z1 = std::abs(c[1]) <= eps;
    bool z2 = std::abs(c[2]) <= eps;
    bool z3 = std::abs(c[3]) <= eps;
    bool z4 = std::abs(c[4]) <= eps;
    Plan p;
    if (z2 && z4) {
        if (z3) {
            if (z1) {
                p.branch = "Irrelevant";
                p.irrelevant = true;
            } else if (c[1] > 0) {
                p.branch = "Balanced";
                p.analytic = {kBalanced};
            } else {
                p.branch = "DegenerateT01";
                p.analytic = {0.0, 1.0};
            }
            return p;
        }
        // F = c0 + c1 (1 - u^2)/4 + c3 u in the contrast u.
        bool cond1 = c[1] >= 2 * c[3];
        bool cond0 = c[1] >= -2 * c[3];
        if (cond1 && cond0) {
            p.branch = "Interior";
            p.analytic = {t_from_contrast(2 * c[3] / c[1])};
            p.polish = true;
        } else if (cond1) {
            p.branch = "DegenerateT0";
            p.analytic = {0.0};
        } else if (cond0) {
            p.branch = "DegenerateT1";
            p.analytic = {1.0};
        } else {
            p.branch = c[3] > 0 ? "DegenerateT1" : "DegenerateT0";
            p.analytic = {c[3] > 0 ? 1.0 : 0.0};
        }
        return p;
    }
    if (z1 && z2) {
        // F = c0 + c3 cos(psi) + (c4 / 2) sin(psi), psi in [0, pi].
        if (c[4] > 0) {
            p.branch = "C4pos";
            p.analytic = {t_from_contrast(2 * c[3] / std::hypot(2 * c[3], c[4]))};
            p.polish = true;
        } else {
            p.branch = "C4neg";
            if (z3) {
                p.analytic = {0.0, 1.0};
            } else {
                p.analytic = {c[3] > 0 ? 1.0 : 0.0};
            }
        }
        return p;
    }
    p.branch = "GeneralQuartic";
    p.polish = true;
    for (double chi : solve_quartic(asym_quartic(b))) {
        if (chi < -1e-12 || chi > 0.5 + 1e-9) {
            continue;
        }
        chi = std::clamp(chi, 0.0, 0.5);
        double root = std::sqrt(std::max(0.0, 1 - 4 * chi * chi));
        p.analytic.push_back(t_from_contrast(root));
        p.analytic.push_back(t_from_contrast(-root));
    }
    return p;
}

}  // namespace

OptimizationReport optimize_2p(const ShorthandCoeffs &sh) {
    CoeffBundle b = two_param_bundle(sh);
    return finish(sh, QfiKind::TwoParam, b, "TwoParam", three_term_plan(b, sh.eps_zero()));
}

OptimizationReport optimize_ii(const ShorthandCoeffs &sh) {
    CoeffBundle b = coeff_bundle(sh, QfiKind::Sym);
    return finish(sh, QfiKind::Sym, b, "Sym", three_term_plan(b, sh.eps_zero()));
}

OptimizationReport optimize_i(const ShorthandCoeffs &sh) {
    CoeffBundle b = coeff_bundle(sh, QfiKind::Asym);
    return finish(sh, QfiKind::Asym, b, "Asym", five_term_plan(b, sh.eps_zero()));
}

OptimizationReport optimize_i_upper(const ShorthandCoeffs &sh) {
    CoeffBundle b = coeff_bundle(sh, QfiKind::AsymUpper);
    return finish(sh, QfiKind::AsymUpper, b, "AsymUpper", five_term_plan(b, sh.eps_zero()));
}

OptimizationReport optimize(const ShorthandCoeffs &sh, QfiKind kind) {
    switch (kind) {
        case QfiKind::TwoParam:
            return optimize_2p(sh);
        case QfiKind::Asym:
            return optimize_i(sh);
        case QfiKind::AsymUpper:
            return optimize_i_upper(sh);
        case QfiKind::Sym:
            return optimize_ii(sh);
    }
    fail(ErrorCode::InvalidArgument, "unknown QFI kind");
}

GridResult grid_verify(const ShorthandCoeffs &sh, QfiKind kind, std::size_t points) {
    if (points < 1000) {
        fail(ErrorCode::InvalidArgument, "grid_verify needs at least 1000 points");
    }
    std::vector<double> f(points);
    double step = 1.0 / static_cast<double>(points - 1);
    std::size_t best = 0;
    for (std::size_t k = 0; k < points; k++) {
        double t = k + 1 == points ? 1.0 : static_cast<double>(k) * step;
        f[k] = qfi_value(sh, kind, t);
        if (f[k] > f[best]) {
            best = k;
        }
    }
    GridResult g;
    g.t_best = best + 1 == points ? 1.0 : static_cast<double>(best) * step;
    g.f_best = f[best];

    double lo = best == 0 ? 0.0 : static_cast<double>(best - 1) * step;
    double hi = best + 1 >= points ? 1.0 : std::min(1.0, static_cast<double>(best + 1) * step);
    auto [tr, fr] = brent_max(sh, kind, lo, hi);
    if (fr > g.f_best) {
        g.t_best = tr;
        g.f_best = fr;
    }

    double level = g.f_best - 1e-8 * std::max(1.0, std::abs(g.f_best));
    double t_lo = 1;
    double t_hi = 0;
    for (std::size_t k = 0; k < points; k++) {
        if (f[k] >= level) {
            double t = static_cast<double>(k) * step;
            t_lo = std::min(t_lo, t);
            t_hi = std::max(t_hi, t);
        }
    }
    g.unique = t_hi - t_lo <= 2e-3;
    return g;
}

}  // namespace mzqfi
