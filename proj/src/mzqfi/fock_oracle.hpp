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

#ifndef MZQFI_FOCK_ORACLE_HPP
#define MZQFI_FOCK_ORACLE_HPP

#include <Eigen/Dense>
#include <vector>

#include "mzqfi/fisher_core.hpp"
#include "mzqfi/state_catalog.hpp"

namespace mzqfi {

/// Truncated two-mode state. amp(n0, n1) holds the amplitude of |n0, n1>.
///
/// Mode 0 is input port 0 before any beam splitter. After apply_bs, mode 0
/// is the upper arm (phase phi1) and mode 1 the lower arm (phase phi2).
struct FockVector {
    int cutoff = 0;
    Eigen::MatrixXcd amp;
    double truncated_norm = 0;
    // Set when truncated_norm < 1 - 1e-10.
    bool truncation_warning = false;

    double norm() const {
        return amp.squaredNorm();
    }
};

/// Fock amplitudes <n|psi> for n = 0..cutoff of a single catalog port.
Eigen::VectorXcd port_amplitudes(const PortState &state, int cutoff);

/// Starts from max(20, ceil(mean + 8 sigma + 10)) per mode and grows until the
/// (1+n)^4-weighted tail beyond the cutoff is below 1e-16 of the total. Capped
/// at 200.
int suggest_cutoff(const InputStateSpec &spec);

/// Throws CutoffTooSmall when truncated_norm < 0.99.
FockVector build_state(const InputStateSpec &spec, int cutoff);

/// exp(i theta Jx), applied one fixed-N sector at a time. The result's cutoff
/// is the largest occupied total photon number, so no amplitude is lost.
FockVector apply_bs(const FockVector &state, double theta);
/// apply_bs with theta = 2 arccos t.
FockVector apply_bs_t(const FockVector &state, double t);

/// Multiplies amp(n0, n1) by exp(-i (phi1 n0 + phi2 n1)).
FockVector apply_phases(const FockVector &state, double phi1, double phi2);

/// Fisher matrix elements of the state right after the first beam splitter,
/// from exact number-operator statistics (normalized by the truncated norm).
FisherMatrix oracle_fisher(const FockVector &after_bs);
/// All four QFIs from the same statistics.
QfiBreakdown oracle_qfi(const FockVector &after_bs);

JointMoments oracle_moments(const FockVector &state);
/// Throws CutoffTooSmall when truncated_norm < 1 - 1e-10.
JointMoments oracle_moments(const InputStateSpec &spec, int cutoff);

struct Bs2Result {
    std::vector<double> t_primes;
    std::vector<FisherMatrix> matrices;
    // Largest |a - b| / max(1, |a|, |b|) over Fisher elements of every pair of
    // second-splitter settings.
    double max_deviation = 0;
};

/// Full interferometer Fisher matrix from central differences (step 1e-5) of
/// the output state in (phi_s, phi_d), repeated for each second-splitter
/// transmission. cutoff <= 0 picks suggest_cutoff.
Bs2Result bs2_invariance_check(const InputStateSpec &spec, double t, const std::vector<double> &t_primes, double phi1,
                               double phi2, int cutoff = 0);

}  // namespace mzqfi

#endif
