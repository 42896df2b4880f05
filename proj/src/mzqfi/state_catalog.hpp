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

#ifndef MZQFI_STATE_CATALOG_HPP
#define MZQFI_STATE_CATALOG_HPP

#include <complex>
#include <string>
#include <variant>

namespace mzqfi {

using cplx = std::complex<double>;

/// Maps an angle into (-pi, pi].
double normalize_angle(double radians);

struct ComplexAmp {
    double magnitude = 0;
    double phase = 0;

    ComplexAmp() = default;
    ComplexAmp(double magnitude, double phase);
    cplx value() const;
};

struct SqueezeParam {
    double factor = 0;
    double phase = 0;

    SqueezeParam() = default;
    SqueezeParam(double factor, double phase);
};

enum class PortKind { Vacuum, Coherent, Fock, SqueezedVacuum, SqueezedCoherent };

struct PortState {
    PortKind kind = PortKind::Vacuum;
    ComplexAmp amp;
    SqueezeParam squeeze;
    int fock_n = 0;

    static PortState vacuum();
    static PortState coherent(double magnitude, double phase);
    static PortState fock(int n);
    static PortState squeezed_vacuum(double r, double phase);
    static PortState squeezed_coherent(double magnitude, double amp_phase, double r, double squeeze_phase);

    std::string describe() const;
};

struct SeparableSpec {
    PortState port0;
    PortState port1;
};

struct TmsvSpec {
    SqueezeParam squeeze;
};

struct InputStateSpec {
    std::variant<SeparableSpec, TmsvSpec> body;

    static InputStateSpec separable(const PortState &port0, const PortState &port1);
    static InputStateSpec tmsv(double r, double phase);

    bool is_separable() const {
        return std::holds_alternative<SeparableSpec>(body);
    }
    std::string describe() const;
};

struct ModeMoments {
    cplx mean_a{};
    cplx mean_a2{};
    double mean_n = 0;
    double var_n = 0;
    cplx cov_an{};  // <a^dag n> - <a^dag><n>
};

struct JointMoments {
    double mean_n0 = 0;
    double mean_n1 = 0;
    double var_n0 = 0;
    double var_n1 = 0;
    double cov_n0n1 = 0;
    cplx cross_a0d_a1{};       // <a0^dag a1>
    cplx cross_a0d2_a12{};     // <a0^dag^2 a1^2>
    cplx cross_a0d_n0_a1{};    // <a0^dag n0 a1>
    cplx cross_a0_a1d_n1{};    // <a0 a1^dag n1>
    // Marginal single-mode moments. Exact for separable states; for entangled
    // states they are the reduced-state moments and are not used by the
    // Fisher algebra.
    ModeMoments port0;
    ModeMoments port1;
};

ModeMoments mode_moments(const PortState &state);
JointMoments joint_moments(const InputStateSpec &spec);

}  // namespace mzqfi

#endif
