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

#include "mzqfi/fisher_core.hpp"

#include <cmath>

#include "mzqfi/errors.hpp"

namespace mzqfi {

namespace {

void check_t(double t) {
    if (!(t >= 0 && t <= 1)) {
        fail(ErrorCode::InvalidArgument, "transmission t must lie in [0, 1]");
    }
}

}  // namespace

double tr_abs(double t) {
    check_t(t);
    return t * std::sqrt((1 - t) * (1 + t));
}

double t_contrast(double t) {
    check_t(t);
    return 2 * t * t - 1;
}

const char *qfi_kind_name(QfiKind kind) {
    switch (kind) {
        case QfiKind::TwoParam:
            return "2p";
        case QfiKind::Asym:
            return "i";
        case QfiKind::AsymUpper:
            return "i_upper";
        case QfiKind::Sym:
            return "ii";
    }
    return "?";
}

QfiKind parse_qfi_kind(const std::string &name) {
    if (name == "2p") {
        return QfiKind::TwoParam;
    }
    if (name == "i") {
        return QfiKind::Asym;
    }
    if (name == "i_upper") {
        return QfiKind::AsymUpper;
    }
    if (name == "ii") {
        return QfiKind::Sym;
    }
    fail(ErrorCode::InvalidArgument, "unknown QFI selector '" + name + "' (expected 2p, i, i_upper or ii)");
}

FisherMatrix fisher_matrix(const ShorthandCoeffs &sh, double t) {
    double x = tr_abs(t);
    double d = t_contrast(t);
    double w = sh.v_plus - sh.v_cov;
    FisherMatrix m;
    m.f_ss = sh.v_plus + sh.v_cov;
    m.f_dd = w + x * x * (sh.a_coeff - 4 * w) - 2 * x * d * sh.s_plus;
    m.f_sd = d * sh.v_minus - x * (sh.s_minus + sh.p_coeff);
    if (m.f_dd < -1e-10 * sh.scale()) {
        fail(ErrorCode::Integrity, "F_dd is negative");
    }
    return m;
}

QfiBreakdown qfi_all(const ShorthandCoeffs &sh, double t) {
    QfiBreakdown q;
    q.matrix = fisher_matrix(sh, t);
    const FisherMatrix &m = q.matrix;
    double scale = sh.scale();
    if (m.f_ss * m.f_dd - m.f_sd * m.f_sd < -1e-9 * scale * scale) {
        fail(ErrorCode::Integrity, "Fisher matrix is not positive semidefinite");
    }
    // A vanishing F_ss forces F_sd = 0 by semidefiniteness, leaving F_dd.
    q.f_2p = m.f_ss > sh.eps_zero() ? m.f_dd - m.f_sd * m.f_sd / m.f_ss : m.f_dd;
    q.f_i = m.f_ss + m.f_dd - 2 * m.f_sd;
    q.f_i_upper = m.f_ss + m.f_dd + 2 * m.f_sd;
    q.f_ii = m.f_dd;
    return q;
}

double qfi_value(const ShorthandCoeffs &sh, QfiKind kind, double t) {
    QfiBreakdown q = qfi_all(sh, t);
    switch (kind) {
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

double CoeffBundle::eval(double t) const {
    double x = tr_abs(t);
    double d = t_contrast(t);
    double f = c[0] + c[1] * x * x + c[2] * x * d;
    if (five_term()) {
        f += c[3] * d + c[4] * x;
    }
    return f;
}

CoeffBundle coeff_bundle(const ShorthandCoeffs &sh, QfiKind kind) {
    CoeffBundle b;
    b.kind = kind;
    double w = sh.v_plus - sh.v_cov;
    switch (kind) {
        case QfiKind::TwoParam: {
            double fss = sh.v_plus + sh.v_cov;
            if (fss <= sh.eps_zero()) {
                fail(ErrorCode::DegenerateFss, "F_ss vanishes; two-parameter coefficients are undefined");
            }
            double ps = sh.p_coeff + sh.s_minus;
            b.c[0] = w - sh.v_minus * sh.v_minus / fss;
            b.c[1] = sh.a_coeff - 4 * w + (4 * sh.v_minus * sh.v_minus - ps * ps) / fss;
            b.c[2] = 2 * (-sh.s_plus + ps * sh.v_minus / fss);
            break;
        }
        case QfiKind::Sym:
            b.c[0] = w;
            b.c[1] = sh.a_coeff - 4 * w;
            b.c[2] = -2 * sh.s_plus;
            break;
        case QfiKind::Asym:
        case QfiKind::AsymUpper: {
            // The upper-arm variant flips the sign of the F_sd contribution.
            double sign = kind == QfiKind::Asym ? 1 : -1;
            b.c[0] = 2 * sh.v_plus;
            b.c[1] = sh.a_coeff - 4 * w;
            b.c[2] = -2 * sh.s_plus;
            b.c[3] = -2 * sign * sh.v_minus;
            b.c[4] = 2 * sign * (sh.p_coeff + sh.s_minus);
            break;
        }
    }
    return b;
}

CoeffBundle two_param_bundle(const ShorthandCoeffs &sh) {
    if (sh.v_plus + sh.v_cov > sh.eps_zero()) {
        return coeff_bundle(sh, QfiKind::TwoParam);
    }
    CoeffBundle b = coeff_bundle(sh, QfiKind::Sym);
    b.kind = QfiKind::TwoParam;
    b.fss_limit = true;
    return b;
}

double qcrb(double f, std::int64_t repetitions) {
    if (repetitions < 1) {
        fail(ErrorCode::InvalidArgument, "repetitions must be a positive integer");
    }
    if (!(f > 0) || !std::isfinite(f)) {
        fail(ErrorCode::NonPositiveFisher, "QCRB needs a positive finite Fisher information");
    }
    return 1 / std::sqrt(static_cast<double>(repetitions) * f);
}

const char *advantage_name(Advantage a) {
    switch (a) {
        case Advantage::NoneForFi:
            return "NoneForFi";
        case Advantage::NoneForFii:
            return "NoneForFii";
        case Advantage::Neither:
            return "Neither";
    }
    return "?";
}

Advantage no_advantage_classify(const ShorthandCoeffs &sh) {
    double eps = sh.eps_zero();
    bool vm_zero = std::abs(sh.v_minus) <= eps;
    bool sp_zero = std::abs(sh.s_minus + sh.p_coeff) <= eps;
    if (!vm_zero || !sp_zero) {
        return Advantage::Neither;
    }
    if (std::abs(sh.v_plus + sh.v_cov) <= eps) {
        return Advantage::NoneForFi;
    }
    return Advantage::NoneForFii;
}

}  // namespace mzqfi
