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

#include "mzqfi/state_catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mzqfi/errors.hpp"

namespace mzqfi {

double normalize_angle(double radians) {
    if (!std::isfinite(radians)) {
        fail(ErrorCode::InvalidArgument, "angle must be finite");
    }
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::fmod(radians, two_pi);
    if (r <= -std::numbers::pi) {
        r += two_pi;
    } else if (r > std::numbers::pi) {
        r -= two_pi;
    }
    return r;
}

ComplexAmp::ComplexAmp(double magnitude, double phase) : magnitude(magnitude), phase(normalize_angle(phase)) {
    if (!(magnitude >= 0) || !std::isfinite(magnitude)) {
        fail(ErrorCode::InvalidArgument, "amplitude magnitude must be a finite non-negative number");
    }
}

cplx ComplexAmp::value() const {
    return std::polar(magnitude, phase);
}

SqueezeParam::SqueezeParam(double factor, double phase) : factor(factor), phase(normalize_angle(phase)) {
    if (!(factor >= 0) || !std::isfinite(factor)) {
        fail(ErrorCode::InvalidArgument, "squeeze factor must be a finite non-negative number");
    }
}

PortState PortState::vacuum() {
    return PortState{};
}

PortState PortState::coherent(double magnitude, double phase) {
    PortState s;
    s.kind = PortKind::Coherent;
    s.amp = ComplexAmp(magnitude, phase);
    return s;
}

PortState PortState::fock(int n) {
    if (n < 0) {
        fail(ErrorCode::InvalidArgument, "Fock photon count must be non-negative");
    }
    PortState s;
    s.kind = PortKind::Fock;
    s.fock_n = n;
    return s;
}

PortState PortState::squeezed_vacuum(double r, double phase) {
    PortState s;
    s.kind = PortKind::SqueezedVacuum;
    s.squeeze = SqueezeParam(r, phase);
    return s;
}

PortState PortState::squeezed_coherent(double magnitude, double amp_phase, double r, double squeeze_phase) {
    PortState s;
    s.kind = PortKind::SqueezedCoherent;
    s.amp = ComplexAmp(magnitude, amp_phase);
    s.squeeze = SqueezeParam(r, squeeze_phase);
    return s;
}

std::string PortState::describe() const {
    std::ostringstream out;
    out.precision(17);
    switch (kind) {
        case PortKind::Vacuum:
            out << "vacuum";
            break;
        case PortKind::Coherent:
            out << "coherent(|a|=" << amp.magnitude << ",arg=" << amp.phase << ")";
            break;
        case PortKind::Fock:
            out << "fock(n=" << fock_n << ")";
            break;
        case PortKind::SqueezedVacuum:
            out << "squeezed_vacuum(r=" << squeeze.factor << ",arg=" << squeeze.phase << ")";
            break;
        case PortKind::SqueezedCoherent:
            out << "squeezed_coherent(|a|=" << amp.magnitude << ",arg=" << amp.phase << ",r=" << squeeze.factor
                << ",sarg=" << squeeze.phase << ")";
            break;
    }
    return out.str();
}

InputStateSpec InputStateSpec::separable(const PortState &port0, const PortState &port1) {
    return InputStateSpec{SeparableSpec{port0, port1}};
}

InputStateSpec InputStateSpec::tmsv(double r, double phase) {
    return InputStateSpec{TmsvSpec{SqueezeParam(r, phase)}};
}

std::string InputStateSpec::describe() const {
    if (const auto *s = std::get_if<SeparableSpec>(&body)) {
        return "port0=" + s->port0.describe() + " port1=" + s->port1.describe();
    }
    const auto &t = std::get<TmsvSpec>(body);
    std::ostringstream out;
    out.precision(17);
    out << "tmsv(r=" << t.squeeze.factor << ",arg=" << t.squeeze.phase << ")";
    return out.str();
}

ModeMoments mode_moments(const PortState &state) {
    ModeMoments m;
    switch (state.kind) {
        case PortKind::Vacuum:
            return m;
        case PortKind::Fock:
            m.mean_n = state.fock_n;
            return m;
        default:
            break;
    }
    // Coherent and squeezed vacuum are the z = 0 and alpha = 0 members of the
    // squeezed-coherent family D(alpha) S(z e^{i phi}) |0>.
    cplx alpha = 0;
    double z = 0;
    double phi = 0;
    if (state.kind != PortKind::SqueezedVacuum) {
        alpha = state.amp.value();
    }
    if (state.kind != PortKind::Coherent) {
        z = state.squeeze.factor;
        phi = state.squeeze.phase;
    }
    double a2 = std::norm(alpha);
    double sh = std::sinh(z);
    double sh2z = std::sinh(2 * z);
    double ch2z = std::cosh(2 * z);
    cplx e_phi = std::polar(1.0, phi);

    m.mean_a = alpha;
    m.mean_a2 = alpha * alpha - 0.5 * sh2z * e_phi;
    m.mean_n = a2 + sh * sh;
    m.var_n = a2 * (ch2z - sh2z * std::cos(2 * state.amp.phase - phi)) + 0.5 * sh2z * sh2z;
    m.cov_an = std::conj(alpha) * (sh * sh) - 0.5 * alpha * sh2z * std::conj(e_phi);
    return m;
}

namespace {

// <a^dag n> for a single mode.
cplx raised_n(const ModeMoments &m) {
    return m.cov_an + std::conj(m.mean_a) * m.mean_n;
}

}  // namespace

JointMoments joint_moments(const InputStateSpec &spec) {
    JointMoments j;
    if (const auto *s = std::get_if<SeparableSpec>(&spec.body)) {
        ModeMoments m0 = mode_moments(s->port0);
        ModeMoments m1 = mode_moments(s->port1);
        j.port0 = m0;
        j.port1 = m1;
        j.mean_n0 = m0.mean_n;
        j.mean_n1 = m1.mean_n;
        j.var_n0 = m0.var_n;
        j.var_n1 = m1.var_n;
        j.cov_n0n1 = 0;
        j.cross_a0d_a1 = std::conj(m0.mean_a) * m1.mean_a;
        j.cross_a0d2_a12 = std::conj(m0.mean_a2) * m1.mean_a2;
        j.cross_a0d_n0_a1 = raised_n(m0) * m1.mean_a;
        j.cross_a0_a1d_n1 = m0.mean_a * raised_n(m1);
        return j;
    }

    // Two-mode squeezed vacuum: every moment that changes n0 - n1 vanishes,
    // and each marginal is thermal with mean sinh^2 r.
    const auto &t = std::get<TmsvSpec>(spec.body);
    double r = t.squeeze.factor;
    double sh2 = std::sinh(r) * std::sinh(r);
    double v = 0.25 * std::sinh(2 * r) * std::sinh(2 * r);
    j.mean_n0 = j.mean_n1 = sh2;
    j.var_n0 = j.var_n1 = v;
    j.cov_n0n1 = v;
    j.port0.mean_n = j.port1.mean_n = sh2;
    j.port0.var_n = j.port1.var_n = v;
    return j;
}

}  // namespace mzqfi
