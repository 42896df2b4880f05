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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "frozen.hpp"
#include "mzqfi/errors.hpp"
#include "mzqfi/fisher_core.hpp"

using namespace mzqfi;

namespace {

void expect_rows(const InputStateSpec &spec, const frozen::FisherRow (&rows)[3]) {
    ShorthandCoeffs sh = shorthand_for(spec);
    for (const auto &row : rows) {
        QfiBreakdown q = qfi_all(sh, row.t);
        EXPECT_LT(frozen::rel(q.matrix.f_ss, row.f_ss), 1e-10) << spec.describe() << " t=" << row.t;
        EXPECT_LT(frozen::rel(q.matrix.f_dd, row.f_dd), 1e-10) << spec.describe() << " t=" << row.t;
        EXPECT_LT(frozen::rel(q.matrix.f_sd, row.f_sd), 1e-10) << spec.describe() << " t=" << row.t;
        EXPECT_LT(frozen::rel(q.f_i, row.f_i), 1e-10) << spec.describe() << " t=" << row.t;
        EXPECT_LT(frozen::rel(q.f_i_upper, row.f_i_upper), 1e-10) << spec.describe() << " t=" << row.t;
    }
}

}  // namespace

TEST(FisherCore, CoherentPlusSqueezedVacuum) {
    expect_rows(frozen::coh_sqzvac(), frozen::kCohSqzvac);
}

TEST(FisherCore, SqueezedCoherentPlusCoherent) {
    expect_rows(frozen::sqzcoh_coh(), frozen::kSqzcohCoh);
}

TEST(FisherCore, TwoModeSqueezedVacuum) {
    expect_rows(frozen::tmsv_06(), frozen::kTmsv);
}

TEST(FisherCore, SinglePhoton) {
    expect_rows(frozen::fock1_vac(), frozen::kFock1);
}

TEST(FisherCore, TwoParamFallsBackWhenFssVanishes) {
    ShorthandCoeffs sh = shorthand_for(frozen::fock1_vac());
    QfiBreakdown q = qfi_all(sh, 0.4);
    EXPECT_EQ(q.f_2p, q.matrix.f_dd);
    CoeffBundle b = two_param_bundle(sh);
    EXPECT_TRUE(b.fss_limit);
    EXPECT_THROW(coeff_bundle(sh, QfiKind::TwoParam), Error);
}

TEST(FisherCore, BundlesReproduceDirectEvaluation) {
    ShorthandCoeffs sh = shorthand_for(frozen::sqzcoh_coh());
    for (QfiKind k : {QfiKind::TwoParam, QfiKind::Asym, QfiKind::AsymUpper, QfiKind::Sym}) {
        CoeffBundle b = coeff_bundle(sh, k);
        for (double t : {0.0, 0.15, 0.5, 0.8, 1.0}) {
            EXPECT_LT(frozen::rel(b.eval(t), qfi_value(sh, k, t)), 1e-12) << qfi_kind_name(k) << " t=" << t;
        }
    }
}

TEST(FisherCore, Pmc3AsymBundleMatchesFrozen) {
    CoeffBundle b = coeff_bundle(shorthand_for(frozen::pmc3_pair()), QfiKind::Asym);
    for (int i = 0; i < 5; i++) {
        EXPECT_LT(frozen::rel(b.c[i], frozen::kPmc3C[i]), 1e-12) << i;
    }
    // Brute force used a finite cutoff; agreement is at the 1e-8 level.
    EXPECT_LT(frozen::rel(b.eval(0.4), frozen::kPmc3FiT04), 1e-8);
    EXPECT_LT(frozen::rel(b.eval(0.8), frozen::kPmc3FiT08), 1e-8);
}

TEST(FisherCore, EndpointsAndValidation) {
    EXPECT_EQ(tr_abs(0), 0);
    EXPECT_EQ(tr_abs(1), 0);
    EXPECT_NEAR(tr_abs(std::sqrt(0.5)), 0.5, 1e-15);
    EXPECT_NEAR(t_contrast(std::sqrt(0.5)), 0, 1e-15);
    EXPECT_THROW(tr_abs(1.01), Error);
    EXPECT_THROW(tr_abs(-0.01), Error);
    EXPECT_THROW(fisher_matrix(ShorthandCoeffs{}, std::nan("")), Error);
}

TEST(FisherCore, QcrbValues) {
    EXPECT_LT(frozen::rel(qcrb(frozen::kTmsv2F2pMax, 1), frozen::kTmsv2Qcrb), 1e-14);
    EXPECT_NEAR(qcrb(4, 100), 0.05, 1e-16);
    EXPECT_NEAR(qcrb(1, 100), 0.1, 1e-16);
    try {
        qcrb(0, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonPositiveFisher);
    }
    EXPECT_THROW(qcrb(1, 0), Error);
    EXPECT_THROW(qcrb(-1, 1), Error);
}

TEST(FisherCore, KindNamesRoundTrip) {
    for (QfiKind k : {QfiKind::TwoParam, QfiKind::Asym, QfiKind::AsymUpper, QfiKind::Sym}) {
        EXPECT_EQ(parse_qfi_kind(qfi_kind_name(k)), k);
    }
    EXPECT_THROW(parse_qfi_kind("iii"), Error);
}

TEST(FisherCore, NoAdvantageClassification) {
    // Coherent plus squeezed vacuum with sinh 2r / sqrt 2 amplitude: F^(ii)
    // and F^(2p) coincide.
    double r = 1.9;
    ShorthandCoeffs sh = shorthand_for(InputStateSpec::separable(
        PortState::squeezed_vacuum(r, 0), PortState::coherent(std::sinh(2 * r) / std::sqrt(2.0), 0)));
    EXPECT_EQ(no_advantage_classify(sh), Advantage::NoneForFii);
    ShorthandCoeffs tm = shorthand_for(InputStateSpec::tmsv(1, 0));
    EXPECT_NE(no_advantage_classify(tm), Advantage::Neither);
    EXPECT_EQ(no_advantage_classify(shorthand_for(frozen::pmc3_pair())), Advantage::Neither);
}

TEST(FisherCore, NegativeFddIsIntegrityError) {
    ShorthandCoeffs sh;
    sh.v_plus = 1;
    sh.v_cov = 3;  // w = V+ - Vcov < 0
    try {
        fisher_matrix(sh, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Integrity);
    }
}
