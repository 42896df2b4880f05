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

#include <algorithm>
#include <cmath>

#include "frozen.hpp"
#include "mzqfi/errors.hpp"
#include "mzqfi/quartic.hpp"

using namespace mzqfi;

TEST(Quartic, KnownRoots) {
    // (x - 0.5)(x + 0.25)(x - 0.9)(x + 2) expanded.
    QuarticCoeffs q{1, 0.85, -2.2, 0.3125, 0.225};
    std::vector<double> r = solve_quartic(q);
    ASSERT_EQ(r.size(), 3u);
    std::sort(r.begin(), r.end());
    EXPECT_NEAR(r[0], -0.25, 1e-12);
    EXPECT_NEAR(r[1], 0.5, 1e-12);
    EXPECT_NEAR(r[2], 0.9, 1e-12);
}

TEST(Quartic, DoubleRoot) {
    // (x - 0.3)^2 (x^2 + 1)
    QuarticCoeffs q{1, -0.6, 1.09, -0.6, 0.09};
    std::vector<double> r = solve_quartic(q);
    ASSERT_GE(r.size(), 1u);
    for (double x : r) {
        EXPECT_NEAR(x, 0.3, 1e-6);
    }
}

TEST(Quartic, DegreeCascade) {
    std::vector<double> r = solve_quartic({0, 0, 1, 0, -0.25});
    std::sort(r.begin(), r.end());
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(r[0], -0.5, 1e-14);
    EXPECT_NEAR(r[1], 0.5, 1e-14);
    std::vector<double> lin = solve_quartic({0, 0, 0, 2, -1});
    ASSERT_EQ(lin.size(), 1u);
    EXPECT_NEAR(lin[0], 0.5, 1e-15);
    EXPECT_TRUE(solve_quartic({0, 0, 0, 0, 3}).empty());
}

TEST(Quartic, AllZeroThrows) {
    try {
        solve_quartic({0, 0, 0, 0, 0});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::AllCoeffsZero);
    }
}

TEST(Quartic, Pmc3Coefficients) {
    CoeffBundle b = coeff_bundle(shorthand_for(frozen::pmc3_pair()), QfiKind::Asym);
    QuarticCoeffs q = asym_quartic(b);
    double got[5] = {q.a4, q.a3, q.a2, q.a1, q.a0};
    for (int i = 0; i < 5; i++) {
        EXPECT_LT(std::abs(got[i] - frozen::kPmc3Quartic[i]) / frozen::kPmc3Quartic[0], 1e-12) << i;
    }
    std::vector<double> r = solve_quartic(q);
    std::sort(r.begin(), r.end());
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(r[0], frozen::kPmc3Roots[0], 1e-8);
    EXPECT_NEAR(r[1], frozen::kPmc3Roots[1], 1e-8);
}

TEST(Quartic, RootsOutsideRangeDropped) {
    // (x - 3)(x + 4)(x^2 + 1)
    QuarticCoeffs q{1, 1, -11, 1, -12};
    EXPECT_TRUE(solve_quartic(q).empty());
}
