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

// Reference values produced independently by tests/oracles/derive_values.py
// (dense matrix exponentials and mpmath). Do not regenerate from this library.

#ifndef MZQFI_TESTS_FROZEN_HPP
#define MZQFI_TESTS_FROZEN_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mzqfi/state_catalog.hpp"

namespace frozen {

inline double rel(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

struct FisherRow {
    double t, f_ss, f_dd, f_sd, f_i, f_i_upper;
};

inline const double kT1 = 0.3;
inline const double kT2 = 0.70710678118654746;
inline const double kT3 = 0.9;

// coherent 1.2 e^{0.4i} in port 1, squeezed vacuum (0.5, 0.3) in port 0.
inline mzqfi::InputStateSpec coh_sqzvac() {
    return mzqfi::InputStateSpec::separable(mzqfi::PortState::squeezed_vacuum(0.5, 0.3),
                                            mzqfi::PortState::coherent(1.2, 0.4));
}
inline const FisherRow kCohSqzvac[] = {
    {kT1, 2.13054892277091, 2.73600333965732, 0.614549883327856, 3.63745249577251, 6.09565202908394},
    {kT2, 2.13054892277091, 3.97870037846813, 0, 6.10924930123903, 6.10924930123904},
    {kT3, 2.13054892277091, 3.26827095889812, -0.464659667882038, 6.3281392174331, 4.46950054590495},
};

// squeezed coherent (0.9 e^{-0.5i}, z=0.4, phi=1.0) in port 1, coherent
// 0.7 e^{1.1i} in port 0.
inline mzqfi::InputStateSpec sqzcoh_coh() {
    return mzqfi::InputStateSpec::separable(mzqfi::PortState::coherent(0.7, 1.1),
                                            mzqfi::PortState::squeezed_coherent(0.9, -0.5, 0.4, 1.0));
}
inline const FisherRow kSqzcohCoh[] = {
    {kT1, 2.26705024526048, 2.51532469323739, 2.02258300545455, 0.737208927588766, 8.82754094940696},
    {kT2, 2.26705024526049, 1.79174852066877, 1.68983830923451, 0.679122147460242, 7.43847538439826},
    {kT3, 2.26705024526048, 1.55573942478003, 0.527879043696333, 2.76703158264784, 4.87854775743318},
};

inline mzqfi::InputStateSpec tmsv_06() {
    return mzqfi::InputStateSpec::tmsv(0.6, 0.5);
}
inline const FisherRow kTmsv[] = {
    {kT1, 2.27847358348275, 0.746427945948949, 0, 3.0249015294317, 3.0249015294317},
    {kT2, 2.27847358348275, 2.27847358348275, 0, 4.55694716696551, 4.55694716696551},
    {kT3, 2.27847358348275, 1.40262833799198, 0, 3.68110192147474, 3.68110192147474},
};

// |1> in port 1, vacuum in port 0.
inline mzqfi::InputStateSpec fock1_vac() {
    return mzqfi::InputStateSpec::separable(mzqfi::PortState::vacuum(), mzqfi::PortState::fock(1));
}
inline const FisherRow kFock1[] = {
    {kT1, 0, 0.3276, 0, 0.3276, 0.3276},
    {kT2, 0, 1, 0, 1, 1},
    {kT3, 0, 0.6156, 0, 0.6156, 0.6156},
};

// Squeezed coherent |alpha| = 10, z = 0.6, phi = 0.
inline const double kSqzcohMeanN = 100.40532778366219;
inline const double kSqzcohVarN = 31.258657982961586;

inline const double kTmsv2MeanN = 13.154116418008243;
inline const double kTmsv2Cov = 186.18489515652226;
inline const double kTmsv2F2pMax = 744.73958062608904;
inline const double kTmsv2Qcrb = 0.036643570325865606;
inline const double kTmsv08Cov = 1.4108307750679822;

inline const double kFig5Pmc0T2 = 0.72603155056532361;
inline const double kFig5Pmc0Fmax = 145.79487163158365;
inline const double kFig5Pmc015T2 = 0.95271118020788417;
inline const double kFig5Pmc015Fmax = 191.31455666386453;

// PMC3 squeezed-coherent pair: port 1 (3, z=0.5, phi=pi), port 0
// (2 e^{-i pi/2}, r=0.9, theta=0).
inline mzqfi::InputStateSpec pmc3_pair() {
    return mzqfi::InputStateSpec::separable(mzqfi::PortState::squeezed_coherent(2, -std::numbers::pi / 2, 0.9, 0),
                                            mzqfi::PortState::squeezed_coherent(3, 0, 0.5, std::numbers::pi));
}
inline const double kPmc3Vp = 53.68187000731976;
inline const double kPmc3Vm = 3.3716992495151317;
inline const double kPmc3A = 275.7852748079331;
inline const double kPmc3Sp = 39.976387631446805;
inline const double kPmc3Sm = 81.21515151446388;
inline const double kPmc3P = 24;
inline const double kPmc3C[5] = {107.36374001463952, 61.057794778654056, -79.95277526289361, -6.743398499030263,
                                 210.43030302892777};
inline const double kPmc3Quartic[5] = {468765.4302749972, 240080.38330167456, 60659.86693570374,
                                       -55706.86842780983, -37888.4661606076};
inline const double kPmc3Roots[2] = {-0.47240116, 0.47790366};
// Brute force (cutoff 100) F^(i) at t = 0.4 and 0.8.
inline const double kPmc3FiT04 = 217.23203755379348;
inline const double kPmc3FiT08 = 209.80419640596358;
inline const double kPmc3ArgmaxT = 0.594141;
inline const double kPmc3Fmax = 235.09019851589431;

}  // namespace frozen

#endif
