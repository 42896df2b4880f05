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

#include "mzqfi/fock_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <vector>

#include "mzqfi/errors.hpp"

namespace mzqfi {

namespace {

constexpr int kMaxCutoff = 200;

// Squeezed-coherent amplitudes from the three-term recurrence of
// D(alpha) S(z e^{i phi}) |0>; coherent and squeezed vacuum are special cases.
Eigen::VectorXcd squeezed_coherent_amplitudes(cplx alpha, double z, double phi, int cutoff) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff + 1);
    double ch = std::cosh(z);
    double sh = std::sinh(z);
    double th = std::tanh(z);
    cplx e = std::polar(1.0, phi);
    cplx ac = std::conj(alpha);
    c[0] = std::exp(-0.5 * std::norm(alpha) - 0.5 * ac * ac * e * th) / std::sqrt(ch);
    cplx gamma = alpha * ch + ac * e * sh;
    for (int n = 0; n < cutoff; n++) {
        cplx prev = n > 0 ? c[n - 1] : cplx(0);
        c[n + 1] = (gamma * c[n] - e * sh * std::sqrt(double(n)) * prev) / (ch * std::sqrt(double(n + 1)));
    }
    return c;
}

Eigen::VectorXd tail_probe(const InputStateSpec &spec, int which) {
    Eigen::VectorXd p(kMaxCutoff + 1);
    if (const auto *s = std::get_if<SeparableSpec>(&spec.body)) {
        const PortState &port = which == 0 ? s->port0 : s->port1;
        if (port.kind == PortKind::Fock && port.fock_n > kMaxCutoff) {
            fail(ErrorCode::CutoffTooSmall, "Fock photon count exceeds the oracle cutoff limit");
        }
        p = port_amplitudes(port, kMaxCutoff).cwiseAbs2();
    } else {
        double r = std::get<TmsvSpec>(spec.body).squeeze.factor;
        double th2 = std::tanh(r) * std::tanh(r);
        double v = 1 / (std::cosh(r) * std::cosh(r));
        for (int n = 0; n <= kMaxCutoff; n++) {
            p[n] = v;
            v *= th2;
        }
    }
    return p;
}

FockVector make_vector(Eigen::MatrixXcd amp) {
    FockVector v;
    v.cutoff = static_cast<int>(amp.rows()) - 1;
    v.amp = std::move(amp);
    v.truncated_norm = v.norm();
    v.truncation_warning = v.truncated_norm < 1 - 1e-10;
    return v;
}

cplx inner(const Eigen::MatrixXcd &x, const Eigen::MatrixXcd &y) {
    return (x.conjugate().cwiseProduct(y)).sum();
}

// a_mode applied to the whole grid; the grid keeps its shape.
Eigen::MatrixXcd lower(const Eigen::MatrixXcd &psi, int mode) {
    Eigen::Index c = psi.rows() - 1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(psi.rows(), psi.cols());
    for (Eigen::Index i = 0; i < c; i++) {
        double s = std::sqrt(double(i + 1));
        if (mode == 0) {
            out.row(i) = s * psi.row(i + 1);
        } else {
            out.col(i) = s * psi.col(i + 1);
        }
    }
    return out;
}

// n_mode applied to the grid.
Eigen::MatrixXcd number(const Eigen::MatrixXcd &psi, int mode) {
    Eigen::MatrixXcd out = psi;
    for (Eigen::Index i = 0; i < psi.rows(); i++) {
        if (mode == 0) {
            out.row(i) *= double(i);
        } else {
            out.col(i) *= double(i);
        }
    }
    return out;
}

}  // namespace

Eigen::VectorXcd port_amplitudes(const PortState &state, int cutoff) {
    if (cutoff < 0) {
        fail(ErrorCode::InvalidArgument, "cutoff must be non-negative");
    }
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff + 1);
    switch (state.kind) {
        case PortKind::Vacuum:
            c[0] = 1;
            return c;
        case PortKind::Fock:
            if (state.fock_n <= cutoff) {
                c[state.fock_n] = 1;
            }
            return c;
        case PortKind::Coherent:
            return squeezed_coherent_amplitudes(state.amp.value(), 0, 0, cutoff);
        case PortKind::SqueezedVacuum:
            return squeezed_coherent_amplitudes(0, state.squeeze.factor, state.squeeze.phase, cutoff);
        case PortKind::SqueezedCoherent:
            return squeezed_coherent_amplitudes(state.amp.value(), state.squeeze.factor, state.squeeze.phase, cutoff);
    }
    return c;
}

int suggest_cutoff(const InputStateSpec &spec) {
    JointMoments j = joint_moments(spec);
    int best = 1;
    for (int which = 0; which < 2; which++) {
        double mean = which == 0 ? j.mean_n0 : j.mean_n1;
        double var = which == 0 ? j.var_n0 : j.var_n1;
        int start = std::max(20, static_cast<int>(std::ceil(mean + 8 * std::sqrt(std::max(0.0, var)) + 10)));
        start = std::min(start, kMaxCutoff);
        Eigen::VectorXd p = tail_probe(spec, which);
        Eigen::VectorXd w(p.size());
        for (Eigen::Index n = 0; n < p.size(); n++) {
            w[n] = p[n] * std::pow(1.0 + double(n), 4);
        }
        double total = w.sum();
        int c = start;
        while (c < kMaxCutoff && w.tail(kMaxCutoff - c).sum() > 1e-16 * total) {
            c++;
        }
        best = std::max(best, c);
    }
    return best;
}

FockVector build_state(const InputStateSpec &spec, int cutoff) {
    if (cutoff < 1) {
        fail(ErrorCode::InvalidArgument, "cutoff must be at least 1");
    }
    Eigen::MatrixXcd amp;
    if (const auto *s = std::get_if<SeparableSpec>(&spec.body)) {
        amp = port_amplitudes(s->port0, cutoff) * port_amplitudes(s->port1, cutoff).transpose();
    } else {
        const auto &t = std::get<TmsvSpec>(spec.body);
        amp = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
        cplx ratio = -std::polar(std::tanh(t.squeeze.factor), t.squeeze.phase);
        cplx v = 1 / std::cosh(t.squeeze.factor);
        for (int n = 0; n <= cutoff; n++) {
            amp(n, n) = v;
            v *= ratio;
        }
    }
    FockVector out = make_vector(std::move(amp));
    if (out.truncated_norm < 0.99) {
        fail(ErrorCode::CutoffTooSmall, "truncated norm below 0.99; raise the cutoff");
    }
    return out;
}

namespace {

// Eigensystem of Jx restricted to the N-photon sector, basis |k, N - k>
// ordered by k = n0. Independent of the mixing angle, so it is computed once
// per N and shared.
struct Sector {
    Eigen::MatrixXd vecs;
    Eigen::VectorXd vals;
};

const Sector &jx_sector(int total) {
    static std::mutex mu;
    static std::vector<std::unique_ptr<Sector>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(cache.size()) <= total) {
        cache.resize(total + 1);
    }
    if (!cache[total]) {
        Eigen::VectorXd diag = Eigen::VectorXd::Zero(total + 1);
        Eigen::VectorXd sub(total);
        for (int k = 0; k < total; k++) {
            sub[k] = 0.5 * std::sqrt(double(k + 1) * double(total - k));
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        cache[total] = std::make_unique<Sector>(Sector{solver.eigenvectors(), solver.eigenvalues()});
    }
    return *cache[total];
}

}  // namespace

FockVector apply_bs(const FockVector &state, double theta) {
    int c = state.cutoff;
    int top = 0;
    for (int n0 = 0; n0 <= c; n0++) {
        for (int n1 = 0; n1 <= c; n1++) {
            if (state.amp(n0, n1) != cplx(0)) {
                top = std::max(top, n0 + n1);
            }
        }
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(top + 1, top + 1);
    for (int total = 0; total <= top; total++) {
        Eigen::VectorXd re = Eigen::VectorXd::Zero(total + 1), im = Eigen::VectorXd::Zero(total + 1);
        bool any = false;
        for (int k = 0; k <= total; k++) {
            if (k <= c && total - k <= c) {
                cplx a = state.amp(k, total - k);
                re[k] = a.real();
                im[k] = a.imag();
                any = any || a != cplx(0);
            }
        }
        if (!any) {
            continue;
        }
        Eigen::VectorXcd v(total + 1);
        if (total == 0) {
            v[0] = cplx(re[0], im[0]);
        } else {
            const Sector &sec = jx_sector(total);
            Eigen::VectorXd cr = sec.vecs.transpose() * re, ci = sec.vecs.transpose() * im;
            for (int k = 0; k <= total; k++) {
                cplx z = cplx(cr[k], ci[k]) * std::polar(1.0, theta * sec.vals[k]);
                cr[k] = z.real();
                ci[k] = z.imag();
            }
            Eigen::VectorXd vr = sec.vecs * cr, vi = sec.vecs * ci;
            for (int k = 0; k <= total; k++) {
                v[k] = cplx(vr[k], vi[k]);
            }
        }
        for (int k = 0; k <= total; k++) {
            out(k, total - k) = v[k];
        }
    }
    FockVector r = make_vector(std::move(out));
    r.truncated_norm = state.truncated_norm;
    r.truncation_warning = state.truncation_warning;
    return r;
}

FockVector apply_bs_t(const FockVector &state, double t) {
    if (!(t >= 0 && t <= 1)) {
        fail(ErrorCode::InvalidArgument, "transmission t must lie in [0, 1]");
    }
    return apply_bs(state, 2 * std::acos(t));
}

FockVector apply_phases(const FockVector &state, double phi1, double phi2) {
    FockVector out = state;
    for (int n0 = 0; n0 <= state.cutoff; n0++) {
        for (int n1 = 0; n1 <= state.cutoff; n1++) {
            out.amp(n0, n1) *= std::polar(1.0, -(phi1 * n0 + phi2 * n1));
        }
    }
    return out;
}

QfiBreakdown oracle_qfi(const FockVector &after_bs) {
    double norm = after_bs.norm();
    double m0 = 0, m1 = 0, m00 = 0, m11 = 0, m01 = 0;
    for (int n0 = 0; n0 <= after_bs.cutoff; n0++) {
        for (int n1 = 0; n1 <= after_bs.cutoff; n1++) {
            double p = std::norm(after_bs.amp(n0, n1)) / norm;
            m0 += p * n0;
            m1 += p * n1;
            m00 += p * n0 * n0;
            m11 += p * n1 * n1;
            m01 += p * n0 * n1;
        }
    }
    double v0 = m00 - m0 * m0;
    double v1 = m11 - m1 * m1;
    double cov = m01 - m0 * m1;
    QfiBreakdown q;
    q.matrix.f_ss = v0 + v1 + 2 * cov;
    q.matrix.f_dd = v0 + v1 - 2 * cov;
    q.matrix.f_sd = v0 - v1;
    q.f_i = 4 * v1;
    q.f_i_upper = 4 * v0;
    q.f_ii = q.matrix.f_dd;
    q.f_2p = q.matrix.f_ss > 1e-12 * std::max(1.0, q.matrix.f_ss)
                 ? q.matrix.f_dd - q.matrix.f_sd * q.matrix.f_sd / q.matrix.f_ss
                 : q.matrix.f_dd;
    return q;
}

FisherMatrix oracle_fisher(const FockVector &after_bs) {
    return oracle_qfi(after_bs).matrix;
}

JointMoments oracle_moments(const FockVector &state) {
    const Eigen::MatrixXcd &psi = state.amp;
    double norm = state.norm();
    auto ev = [&](const Eigen::MatrixXcd &x, const Eigen::MatrixXcd &y) { return inner(x, y) / norm; };

    Eigen::MatrixXcd a0 = lower(psi, 0);
    Eigen::MatrixXcd a1 = lower(psi, 1);
    Eigen::MatrixXcd n0 = number(psi, 0);
    Eigen::MatrixXcd n1 = number(psi, 1);

    JointMoments j;
    j.mean_n0 = ev(psi, n0).real();
    j.mean_n1 = ev(psi, n1).real();
    j.var_n0 = ev(n0, n0).real() - j.mean_n0 * j.mean_n0;
    j.var_n1 = ev(n1, n1).real() - j.mean_n1 * j.mean_n1;
    j.cov_n0n1 = ev(n0, n1).real() - j.mean_n0 * j.mean_n1;
    j.cross_a0d_a1 = ev(a0, a1);
    j.cross_a0d2_a12 = ev(lower(a0, 0), lower(a1, 1));
    j.cross_a0d_n0_a1 = ev(a0, number(a1, 0));
    j.cross_a0_a1d_n1 = ev(a1, lower(n1, 0));

    auto port = [&](const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &n, int mode, double mean_n, double var_n) {
        ModeMoments m;
        m.mean_a = ev(psi, a);
        m.mean_a2 = ev(psi, lower(a, mode));
        m.mean_n = mean_n;
        m.var_n = var_n;
        m.cov_an = ev(a, n) - std::conj(m.mean_a) * mean_n;
        return m;
    };
    j.port0 = port(a0, n0, 0, j.mean_n0, j.var_n0);
    j.port1 = port(a1, n1, 1, j.mean_n1, j.var_n1);
    return j;
}

JointMoments oracle_moments(const InputStateSpec &spec, int cutoff) {
    FockVector v = build_state(spec, cutoff);
    if (v.truncation_warning) {
        fail(ErrorCode::CutoffTooSmall, "truncated norm below 1 - 1e-10; raise the cutoff");
    }
    return oracle_moments(v);
}

namespace {

Eigen::MatrixXcd interferometer_output(const FockVector &after_bs1, double phi_s, double phi_d, double theta2) {
    FockVector v = apply_phases(after_bs1, 0.5 * (phi_s + phi_d), 0.5 * (phi_s - phi_d));
    v = apply_bs(v, theta2);
    return v.amp / std::sqrt(v.norm());
}

}  // namespace

Bs2Result bs2_invariance_check(const InputStateSpec &spec, double t, const std::vector<double> &t_primes, double phi1,
                               double phi2, int cutoff) {
    if (t_primes.empty()) {
        fail(ErrorCode::InvalidArgument, "bs2 check needs at least one second-splitter transmission");
    }
    FockVector in = build_state(spec, cutoff > 0 ? cutoff : suggest_cutoff(spec));
    FockVector after = apply_bs_t(in, t);
    double phi_s = phi1 + phi2;
    double phi_d = phi1 - phi2;
    constexpr double h = 1e-5;

    Bs2Result res;
    res.t_primes = t_primes;
    for (double tp : t_primes) {
        if (!(tp >= 0 && tp <= 1)) {
            fail(ErrorCode::InvalidArgument, "second-splitter transmission must lie in [0, 1]");
        }
        double theta2 = 2 * std::acos(tp);
        Eigen::MatrixXcd psi = interferometer_output(after, phi_s, phi_d, theta2);
        Eigen::MatrixXcd ds = (interferometer_output(after, phi_s + h, phi_d, theta2) -
                               interferometer_output(after, phi_s - h, phi_d, theta2)) /
                              (2 * h);
        Eigen::MatrixXcd dd = (interferometer_output(after, phi_s, phi_d + h, theta2) -
                               interferometer_output(after, phi_s, phi_d - h, theta2)) /
                              (2 * h);
        auto element = [&](const Eigen::MatrixXcd &x, const Eigen::MatrixXcd &y) {
            return 4 * std::real(inner(x, y) - inner(x, psi) * inner(psi, y));
        };
        res.matrices.push_back({element(ds, ds), element(dd, dd), element(ds, dd)});
    }
    for (std::size_t i = 0; i < res.matrices.size(); i++) {
        for (std::size_t k = i + 1; k < res.matrices.size(); k++) {
            const FisherMatrix &a = res.matrices[i];
            const FisherMatrix &b = res.matrices[k];
            const std::pair<double, double> pairs[] = {{a.f_ss, b.f_ss}, {a.f_dd, b.f_dd}, {a.f_sd, b.f_sd}};
            for (auto [x, y] : pairs) {
                double dev = std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
                res.max_deviation = std::max(res.max_deviation, dev);
            }
        }
    }
    return res;
}

}  // namespace mzqfi
