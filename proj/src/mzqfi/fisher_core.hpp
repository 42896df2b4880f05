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

#ifndef MZQFI_FISHER_CORE_HPP
#define MZQFI_FISHER_CORE_HPP

#include <array>
#include <cstdint>
#include <string>

#include "mzqfi/shorthand.hpp"

namespace mzqfi {

/// |TR| for real T = t and R = i sqrt(1 - t^2).
double tr_abs(double t);
/// |T|^2 - |R|^2.
double t_contrast(double t);

struct FisherMatrix {
    double f_ss = 0;
    double f_dd = 0;
    double f_sd = 0;
};

struct QfiBreakdown {
    double f_2p = 0;
    double f_i = 0;        // phase in the lower arm
    double f_i_upper = 0;  // phase in the upper arm
    double f_ii = 0;       // symmetric +-phi/2
    FisherMatrix matrix;
};

enum class QfiKind { TwoParam, Asym, AsymUpper, Sym };

const char *qfi_kind_name(QfiKind kind);
/// Accepts "2p", "i", "i_upper", "ii".
QfiKind parse_qfi_kind(const std::string &name);

FisherMatrix fisher_matrix(const ShorthandCoeffs &sh, double t);
QfiBreakdown qfi_all(const ShorthandCoeffs &sh, double t);
double qfi_value(const ShorthandCoeffs &sh, QfiKind kind, double t);

/// Coefficients of the closed polynomial forms in |TR| and |T|^2 - |R|^2.
///
/// Three-term kinds (TwoParam, Sym) use F = c0 + c1 x^2 + c2 x d.
/// Five-term kinds (Asym, AsymUpper) add c3 d + c4 x.
struct CoeffBundle {
    QfiKind kind = QfiKind::TwoParam;
    std::array<double, 5> c{};
    // Set when the two-parameter coefficients were replaced by the
    // vanishing-F_ss limit (F_2p = F_dd).
    bool fss_limit = false;

    bool five_term() const {
        return kind == QfiKind::Asym || kind == QfiKind::AsymUpper;
    }
    double eval(double t) const;
};

/// Throws DegenerateFss for TwoParam when F_ss vanishes at the scaled
/// tolerance; use two_param_bundle for the limit-aware variant.
CoeffBundle coeff_bundle(const ShorthandCoeffs &sh, QfiKind kind);
CoeffBundle two_param_bundle(const ShorthandCoeffs &sh);

double qcrb(double f, std::int64_t repetitions);

enum class Advantage { NoneForFi, NoneForFii, Neither };
const char *advantage_name(Advantage a);
Advantage no_advantage_classify(const ShorthandCoeffs &sh);

}  // namespace mzqfi

#endif
