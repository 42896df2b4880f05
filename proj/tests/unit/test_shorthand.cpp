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

#include "frozen.hpp"
#include "mzqfi/errors.hpp"
#include "mzqfi/shorthand.hpp"

using namespace mzqfi;

TEST(Shorthand, Pmc3PairMatchesFrozenValues) {
    ShorthandCoeffs sh = shorthand_for(frozen::pmc3_pair());
    EXPECT_LT(frozen::rel(sh.v_plus, frozen::kPmc3Vp), 1e-13);
    EXPECT_LT(frozen::rel(sh.v_minus, frozen::kPmc3Vm), 1e-13);
    EXPECT_LT(frozen::rel(sh.a_coeff, frozen::kPmc3A), 1e-13);
    EXPECT_LT(frozen::rel(sh.s_plus, frozen::kPmc3Sp), 1e-13);
    EXPECT_LT(frozen::rel(sh.s_minus, frozen::kPmc3Sm), 1e-13);
    EXPECT_LT(frozen::rel(sh.p_coeff, frozen::kPmc3P), 1e-13);
    EXPECT_EQ(sh.v_cov, 0);
}

TEST(Shorthand, VacuumIsAllZero) {
    ShorthandCoeffs sh = shorthand_for(InputStateSpec::separable(PortState::vacuum(), PortState::vacuum()));
    EXPECT_EQ(sh.v_plus, 0);
    EXPECT_EQ(sh.a_coeff, 0);
    EXPECT_EQ(sh.scale(), 1);
}

TEST(Shorthand, TwinFock) {
    ShorthandCoeffs sh = shorthand_for(InputStateSpec::separable(PortState::fock(2), PortState::fock(3)));
    EXPECT_EQ(sh.v_plus, 0);
    EXPECT_EQ(sh.s_plus, 0);
    EXPECT_EQ(sh.p_coeff, 0);
    // A = 4 (n + m + 2 n m)
    EXPECT_NEAR(sh.a_coeff, 4 * (2 + 3 + 12), 1e-12);
}

TEST(Shorthand, TmsvHasOnlyVarianceTerms) {
    double r = 0.6;
    ShorthandCoeffs sh = shorthand_for(InputStateSpec::tmsv(r, 0.5));
    double var = std::pow(std::sinh(r) * std::cosh(r), 2);
    EXPECT_NEAR(sh.v_plus, 2 * var, 1e-13);
    EXPECT_NEAR(sh.v_cov, 2 * var, 1e-13);
    EXPECT_EQ(sh.v_minus, 0);
    EXPECT_EQ(sh.s_plus, 0);
    EXPECT_EQ(sh.s_minus, 0);
    EXPECT_EQ(sh.p_coeff, 0);
}

TEST(Shorthand, IntegrityRejectsNonFiniteMoments) {
    JointMoments j;
    j.var_n0 = std::nan("");
    EXPECT_THROW(shorthand_from_moments(j, true), Error);
    JointMoments k;
    k.var_n1 = -1;
    try {
        shorthand_from_moments(k, true);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Integrity);
    }
}

TEST(Shorthand, ScaleAndEps) {
    ShorthandCoeffs sh;
    sh.v_plus = 40;
    sh.v_cov = 10;
    sh.a_coeff = 30;
    EXPECT_EQ(sh.scale(), 50);
    EXPECT_DOUBLE_EQ(sh.eps_zero(), 50e-12);
}
